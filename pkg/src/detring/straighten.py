"""Rewriting substituted polynomials as combinations of standard bitableaux.

The loop peels the leading monomial, decodes it to the unique standard
bitableau with that closed form, and subtracts the bitableau's substituted
image (which is monic with exactly that leading monomial).  The leading
monomial strictly drops each round, so the loop terminates; what remains at
zero is the standard expansion.  Polynomials in the kernel of the substitution
straighten to the empty combination.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import InternalCheckError, NotInSemigroupError
from .generic_point import SubstitutionMap, decode_standard, eval_bitableau, phi
from .poly import Poly


@dataclass(frozen=True)
class StandardCombination:
    """Coefficients and standard bitableaux, largest leading monomial first."""

    params: object
    terms: tuple  # ((coefficient, Bitableau), ...)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def is_zero(self):
        return not self.terms

    def evaluate(self, side, subst=None):
        """Reassemble the combination as a polynomial on the chosen side."""
        if subst is None:
            subst = SubstitutionMap(self.params)
        space = subst.x_space if side == "X" else subst.yz_space
        acc = Poly.zero(space)
        for coef, bitab in self.terms:
            acc = acc + coef * eval_bitableau(bitab, self.params, side, subst)
        return acc

    def as_pairs(self):
        """JSON-ready list of (coefficient string, bitableau string) pairs."""
        from .poly import format_coefficient

        return [
            {"coeff": format_coefficient(c), "bitableau": str(b)} for c, b in self.terms
        ]


def straighten(f, params, subst=None):
    """Standard expansion of an x-space polynomial modulo the kernel.

    Returns a StandardCombination; iteration count per homogeneous component
    is bounded by the number of standard bitableaux of that degree.
    """
    if subst is None:
        subst = SubstitutionMap(params)
    g = phi(f, subst)
    components = {}
    for exps, coef in g.terms.items():
        d, _ = subst.yz_space.bidegree(exps)
        components.setdefault(d, {})[exps] = coef
    result = []
    for d in sorted(components, reverse=True):
        comp = components[d]
        while comp:
            lead = kernels.leading_monomial(comp)
            lam = comp[lead]
            try:
                bitab = decode_standard(lead, params)
            except NotInSemigroupError as exc:
                raise InternalCheckError(
                    f"leading monomial of a substituted polynomial failed to decode: {exc}"
                ) from exc
            image = eval_bitableau(bitab, params, "YZ", subst)
            kernels.poly_addmul(comp, -lam, image.terms)
            if lead in comp:
                raise InternalCheckError("leading term failed to cancel during straightening")
            result.append((lam, bitab))
    return StandardCombination(params, tuple(result))


def is_in_ideal(f, params, subst=None):
    """Membership in the kernel of the substitution (the minor ideal)."""
    if subst is None:
        subst = SubstitutionMap(params)
    return phi(f, subst).is_zero()
