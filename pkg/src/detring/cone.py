"""The monomial semigroup of the initial algebra and its defining cone.

Exponent vectors live on the y/z space (rank-indexed tuples); the y block is
an m x r array "alpha", the z block an r x n array "beta".  The cone is cut
out by five families:

  (1) equations: alpha vanishes above its diagonal, beta below (alpha[i,j]=0
      for j>i, beta[u,v]=0 for u>v);
  (2) inequalities coupling adjacent alpha columns: for j=2..r, k=j..m,
      sum(alpha[i][j-1], i=j-1..k-1) - sum(alpha[i][j], i=j..k) >= 0;
  (3) the mirror family for beta rows: for u=2..r, w=u..n,
      sum(beta[u-1][t], t=u-1..w-1) - sum(beta[u][t], t=u..w) >= 0;
  (4) nonnegativity of the strictly-below-diagonal alpha entries, the
      strictly-right-of-diagonal beta entries, and of alpha[r,r], beta[r,r];
  (5) coupling ladder on the per-column defects s_j = sum_i alpha[i][j]
      - sum_v beta[j][v]: consecutive defects agree (s_j = s_{j+1} for
      j=1..r-1) and the last one vanishes (s_r = 0), which together force
      every s_j = 0.

The "Etilde" variant drops exactly the last coupling equation, so its
defects are merely constant across columns.  Integer points of the
cone match the semigroup generated by the closed-form generator monomials;
``semigroup_vs_cone`` verifies that up to a degree bound, and
``conic_equality_check`` runs the shifted-cone comparison that certifies
Cohen-Macaulayness of symbolic powers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import ceil, lcm

from . import kernels
from .errors import ParameterError
from .poly import YZSpace

VARIANTS = ("E", "Etilde")


def _check_variant(variant):
    if variant not in VARIANTS:
        raise ParameterError(f"variant must be one of {VARIANTS}, got {variant!r}")


@dataclass(frozen=True)
class ConeSystem:
    """Structured linear description; functionals are ((position, coef), ...)."""

    params: object
    variant: str
    zero_positions: tuple
    alpha_inequalities: tuple
    beta_inequalities: tuple
    nonneg_positions: tuple
    couplings: tuple

    @property
    def equations(self):
        zero = tuple(((p, 1),) for p in self.zero_positions)
        return zero + self.couplings

    @property
    def inequalities(self):
        nonneg = tuple(((p, 1),) for p in self.nonneg_positions)
        return self.alpha_inequalities + self.beta_inequalities + nonneg

    def space(self):
        p = self.params
        return YZSpace(p.m, p.r, p.n)


def build_system(params, variant="E"):
    _check_variant(variant)
    m, n, r = params.m, params.n, params.r
    yz = YZSpace(m, r, n)
    zero = []
    for i in range(1, m + 1):
        for j in range(i + 1, r + 1):
            zero.append(yz.y(i, j))
    for u in range(1, r + 1):
        for v in range(1, min(u - 1, n) + 1):
            zero.append(yz.z(u, v))
    alpha_ineqs = []
    for j in range(2, r + 1):
        for k in range(j, m + 1):
            f = [(yz.y(i, j - 1), 1) for i in range(j - 1, k)]
            f += [(yz.y(i, j), -1) for i in range(j, k + 1)]
            alpha_ineqs.append(tuple(f))
    beta_ineqs = []
    for u in range(2, r + 1):
        for w in range(u, n + 1):
            f = [(yz.z(u - 1, t), 1) for t in range(u - 1, w)]
            f += [(yz.z(u, t), -1) for t in range(u, w + 1)]
            beta_ineqs.append(tuple(f))
    nonneg = []
    for j in range(1, r + 1):
        for i in range(j + 1, m + 1):
            nonneg.append(yz.y(i, j))
    for u in range(1, r + 1):
        for v in range(u + 1, n + 1):
            nonneg.append(yz.z(u, v))
    nonneg.append(yz.y(r, r))
    nonneg.append(yz.z(r, r))
    defect = []
    for j in range(1, r + 1):
        f = [(yz.y(i, j), 1) for i in range(1, m + 1)]
        f += [(yz.z(j, v), -1) for v in range(1, n + 1)]
        defect.append(f)
    couplings = []
    for j in range(r - 1):
        f = defect[j] + [(p, -c) for p, c in defect[j + 1]]
        couplings.append(tuple(f))
    if variant == "E":
        couplings.append(tuple(defect[r - 1]))
    return ConeSystem(
        params,
        variant,
        tuple(zero),
        tuple(alpha_ineqs),
        tuple(beta_ineqs),
        tuple(sorted(set(nonneg))),
        tuple(couplings),
    )


def cone_membership(v, system):
    """Exact membership of a rational vector in the cone."""
    yz = system.space()
    if len(v) != yz.nvars:
        raise ParameterError(f"vector of length {len(v)} on a space with {yz.nvars} variables")
    return kernels.system_holds(system.equations, system.inequalities, v)


def exponent_arrays(params, vec):
    """Render a y/z vector as nested alpha (m x r) and beta (r x n) lists."""
    yz = YZSpace(params.m, params.r, params.n)

    def show(x):
        f = Fraction(x)
        return int(f) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"

    alpha = [[show(vec[yz.y(i, j)]) for j in range(1, params.r + 1)] for i in range(1, params.m + 1)]
    beta = [[show(vec[yz.z(u, v)]) for v in range(1, params.n + 1)] for u in range(1, params.r + 1)]
    return {"alpha": alpha, "beta": beta}


def generators_semigroup(params, variant="E"):
    """Closed-form generator monomials of the semigroup, as exponent tuples.

    Variant E: for each size t <= r and strictly increasing row/column choices,
    the monomial prod_j y[a_j, j] * z[j, b_j].  Variant Etilde: the same mixed
    monomials for t < r, plus the pure products prod_j y[a_j, j] and
    prod_j z[j, b_j] of full length r.
    """
    _check_variant(variant)
    m, n, r = params.m, params.n, params.r
    yz = YZSpace(m, r, n)
    gens = []
    top = r if variant == "E" else r - 1
    for t in range(1, top + 1):
        for rows in combinations(range(1, m + 1), t):
            for cols in combinations(range(1, n + 1), t):
                e = [0] * yz.nvars
                for j, (a, b) in enumerate(zip(rows, cols), start=1):
                    e[yz.y(a, j)] += 1
                    e[yz.z(j, b)] += 1
                gens.append(tuple(e))
    if variant == "Etilde":
        for rows in combinations(range(1, m + 1), r):
            e = [0] * yz.nvars
            for j, a in enumerate(rows, start=1):
                e[yz.y(a, j)] += 1
            gens.append(tuple(e))
        for cols in combinations(range(1, n + 1), r):
            e = [0] * yz.nvars
            for j, b in enumerate(cols, start=1):
                e[yz.z(j, b)] += 1
            gens.append(tuple(e))
    return gens


def generators_D(params):
    """Generators of the initial algebra's monomial semigroup (variant E)."""
    return generators_semigroup(params, "E")


def semigroup_points(gens, bound):
    """All sums of generators with total degree <= bound (the zero included)."""
    if bound < 0:
        raise ParameterError(f"degree bound must be nonnegative, got {bound}")
    if not gens:
        raise ParameterError("at least one generator is required")
    zero = (0,) * len(gens[0])
    seen = {zero}
    stack = [zero]
    degs = [sum(g) for g in gens]
    while stack:
        p = stack.pop()
        dp = sum(p)
        for g, dg in zip(gens, degs):
            if dp + dg > bound:
                continue
            q = tuple(x + y for x, y in zip(p, g))
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return seen


def _bounded_assignments(k, bound):
    """All k-tuples of nonnegative integers with sum <= bound."""
    if k == 0:
        yield ()
        return
    for v in range(bound + 1):
        for rest in _bounded_assignments(k - 1, bound - v):
            yield (v,) + rest


def _half_points(params, side, max_total, exact_total=None):
    """Nonnegative one-sided cone points with their coupling signature.

    side 'alpha': vectors supported on the lower y triangle satisfying the
    alpha inequalities, signature = column sums.  side 'beta': mirror on z,
    signature = row sums.  Returned vectors are full-length tuples.
    """
    m, n, r = params.m, params.n, params.r
    yz = YZSpace(m, r, n)
    sysE = build_system(params, "E")
    if side == "alpha":
        free = [(yz.y(i, j), j) for j in range(1, r + 1) for i in range(j, m + 1)]
        ineqs = sysE.alpha_inequalities
    elif side == "beta":
        free = [(yz.z(u, v), u) for u in range(1, r + 1) for v in range(u, n + 1)]
        ineqs = sysE.beta_inequalities
    else:
        raise ParameterError(f"side must be 'alpha' or 'beta', got {side!r}")
    out = []
    for values in _bounded_assignments(len(free), max_total):
        if exact_total is not None and sum(values) != exact_total:
            continue
        vec = [0] * yz.nvars
        sig = [0] * r
        for (pos, grp), val in zip(free, values):
            vec[pos] = val
            sig[grp - 1] += val
        if kernels.system_holds((), ineqs, vec):
            out.append((tuple(vec), tuple(sig)))
    return out


def lattice_points(params, variant="E", bound=None, y_degree=None):
    """Integer cone points, sorted: total degree <= bound, or exact y-degree.

    The two halves are enumerated independently and joined on the coupling
    signature; variant E requires equal signatures, Etilde only that they
    decrease in the same steps (a common shift remains free).
    """
    _check_variant(variant)
    yc = YZSpace(params.m, params.r, params.n).y_count
    results = []
    if variant == "E":
        if y_degree is not None:
            half_bound = y_degree
            exact = y_degree
        elif bound is not None:
            half_bound = bound // 2
            exact = None
        else:
            raise ParameterError("either bound or y_degree is required")
        alphas = _half_points(params, "alpha", half_bound, exact)
        betas = _half_points(params, "beta", half_bound, exact)
        by_sig = {}
        for vec, sig in betas:
            by_sig.setdefault(sig, []).append(vec)
        for avec, asig in alphas:
            for bvec in by_sig.get(asig, ()):
                results.append(avec[:yc] + bvec[yc:])
    else:
        if bound is None:
            raise ParameterError("a degree bound is required for the Etilde variant")
        if y_degree is not None:
            raise ParameterError("y_degree slicing is only supported for variant E")
        r = params.r
        alphas = _half_points(params, "alpha", bound)
        betas = _half_points(params, "beta", bound)

        def steps(sig):
            return tuple(sig[i] - sig[i + 1] for i in range(r - 1))

        by_steps = {}
        for vec, sig in betas:
            by_steps.setdefault(steps(sig), []).append(vec)
        for avec, asig in alphas:
            da = sum(avec)
            for bvec in by_steps.get(steps(asig), ()):
                if da + sum(bvec) <= bound:
                    results.append(avec[:yc] + bvec[yc:])
    results.sort()
    return results


@dataclass(frozen=True)
class SemigroupConeReport:
    params: object
    variant: str
    bound: int
    degree_counts: tuple  # ((degree, semigroup_count, lattice_count), ...)
    equal: bool
    power_test_ok: bool
    first_mismatch: object

    @property
    def ok(self):
        return self.equal and self.power_test_ok

    def to_dict(self):
        p = self.params
        return {
            "m": p.m,
            "n": p.n,
            "r": p.r,
            "variant": self.variant,
            "degree_bound": self.bound,
            "degree_counts": [
                {"degree": d, "semigroup": s, "lattice": l} for d, s, l in self.degree_counts
            ],
            "equal": self.equal,
            "power_test_ok": self.power_test_ok,
            "ok": self.ok,
            "first_mismatch": self.first_mismatch,
        }


def semigroup_vs_cone(params, variant="E", bound=6):
    """Compare semigroup points with cone lattice points up to a degree bound.

    Also runs the saturation probe: any computed point all of whose entries
    are divisible by k in {2, 3} must have its k-th root in the semigroup.
    """
    _check_variant(variant)
    gens = generators_semigroup(params, variant)
    sg = semigroup_points(gens, bound)
    lat = lattice_points(params, variant, bound=bound)
    latset = set(lat)
    counts = []
    for d in range(bound + 1):
        counts.append(
            (d, sum(1 for v in sg if sum(v) == d), sum(1 for v in latset if sum(v) == d))
        )
    equal = sg == latset
    power_ok = True
    for u in sorted(sg):
        for k in (2, 3):
            if any(e % k for e in u):
                continue
            root = tuple(e // k for e in u)
            if root not in sg:
                power_ok = False
                break
        if not power_ok:
            break
    first = None
    if not equal:
        diff = sorted(sg.symmetric_difference(latset))
        v = diff[0]
        first = {
            "vector": exponent_arrays(params, v),
            "side": "semigroup-only" if v in sg else "lattice-only",
        }
    return SemigroupConeReport(params, variant, bound, tuple(counts), equal, power_ok, first)


def witness_vector(params, t, eps):
    """The shifted-cone witness: diagonal t-eps, a trail of -(t-eps)/(m-r)."""
    params.require_proper_rank()
    eps = Fraction(eps)
    if not (0 < eps < 1):
        raise ParameterError(f"eps must satisfy 0 < eps < 1, got {eps}")
    if not isinstance(t, int) or t < 1:
        raise ParameterError(f"t must be a positive integer, got {t!r}")
    m, r = params.m, params.r
    yz = YZSpace(m, r, params.n)
    val = t - eps
    neg = -val / (m - r)
    vec = [Fraction(0)] * yz.nvars
    for j in range(1, r + 1):
        vec[yz.y(j, j)] = val
        for i in range(j + 1, m - r + j + 1):
            vec[yz.y(i, j)] = neg
    return tuple(vec)


def _conic_candidates(params, t, eps, bound, w):
    """Finite superset of the shifted-side points of total degree <= bound."""
    m, r = params.m, params.r
    yz = YZSpace(m, r, params.n)
    yc = yz.y_count
    betas = _half_points(params, "beta", bound // 2)
    col_free = {j: list(range(j, m + 1)) for j in range(1, r + 1)}
    lows = {
        j: [0 if i == j else ceil(w[yz.y(i, j)]) for i in col_free[j]] for j in col_free
    }
    for bvec, sig in betas:
        per_column = []
        feasible = True
        for j in range(1, r + 1):
            s = sig[j - 1]
            lo = lows[j]
            slack = s - sum(lo)
            if slack < 0:
                feasible = False
                break
            choices = []
            for extra in _bounded_assignments(len(lo), slack):
                if sum(extra) != slack:
                    continue
                choices.append(tuple(l + x for l, x in zip(lo, extra)))
            per_column.append(choices)
        if not feasible:
            continue
        for combo in product(*per_column):
            yvec = [0] * yc
            for j, column in enumerate(combo, start=1):
                for i, val in zip(col_free[j], column):
                    yvec[yz.y(i, j)] = val
            yield tuple(yvec) + bvec[yc:]


@dataclass(frozen=True)
class ConicCheckReport:
    params: object
    t: int
    eps: Fraction
    bound: int
    ideal_side_count: int
    shifted_side_count: int
    equal: bool
    expected_equal: bool
    first_counterexample: object
    witness: dict

    @property
    def consistent(self):
        return self.equal == self.expected_equal

    def to_dict(self):
        p = self.params
        return {
            "m": p.m,
            "n": p.n,
            "r": p.r,
            "t": self.t,
            "eps": f"{self.eps.numerator}/{self.eps.denominator}",
            "degree_bound": self.bound,
            "ideal_side_count": self.ideal_side_count,
            "shifted_side_count": self.shifted_side_count,
            "equal": self.equal,
            "expected_equal": self.expected_equal,
            "consistent": self.consistent,
            "first_counterexample": self.first_counterexample,
            "witness": self.witness,
        }


def conic_equality_check(params, t, eps=Fraction(1, 2), bound=6):
    """Compare the filtered cone with the witness-shifted cone, exactly.

    Side A: integer cone points of degree <= bound with alpha[r,r] >= t.
    Side B: integer solutions of the cone's equations whose difference from
    the witness satisfies every cone inequality.  The two agree precisely when
    the t-th symbolic power is Cohen-Macaulay (t <= m - r); the report records
    whether the computed outcome matches that expectation.
    """
    params.require_proper_rank()
    eps = Fraction(eps)
    w = witness_vector(params, t, eps)
    sysE = build_system(params, "E")
    yz = sysE.space()
    rr = yz.y(params.r, params.r)
    side_a = {v for v in lattice_points(params, "E", bound=bound) if v[rr] >= t}
    scale = lcm(*(Fraction(x).denominator for x in w))
    w_scaled = tuple(int(Fraction(x) * scale) for x in w)
    ineqs = sysE.inequalities
    side_b = set()
    for v in _conic_candidates(params, t, eps, bound, w):
        diff = tuple(scale * a - b for a, b in zip(v, w_scaled))
        if kernels.system_holds((), ineqs, diff):
            side_b.add(v)
    equal = side_a == side_b
    expected = t <= params.m - params.r
    first = None
    if not equal:
        diff = sorted(side_a.symmetric_difference(side_b))
        v = diff[0]
        first = {
            "vector": exponent_arrays(params, v),
            "side": "ideal-only" if v in side_a else "shifted-only",
        }
    return ConicCheckReport(
        params,
        t,
        eps,
        bound,
        len(side_a),
        len(side_b),
        equal,
        expected,
        first,
        exponent_arrays(params, w),
    )
