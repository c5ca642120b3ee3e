"""
Sigma-conjugacy classes of the loop group, in their combinatorial form.

A class [b] is stored as the pair (Newton point, component class): the
dominant rational cocharacter nu and the image kappa in the fundamental group
Lambda_G.  This pair is a complete invariant.  Each class lives over a unique
standard parabolic P = MN ("home"): the one whose Levi is the centralizer of
nu, i.e. nu is strictly positive on the simple roots outside M.  A class is
basic when its home parabolic is all of G.

Standard representatives are the length-zero elements of the Levi's extended
affine Weyl group: for [b] over P = MN, the unique x in Omega_M with
eta_M(x) equal to the class's Lambda_M-datum.  Fundamental representatives
are finite-Weyl conjugates of these that are fundamental P'-alcoves; one
always exists and makes the double coset IxI lie in a single class, which is
what drives the superset method.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .affine import AffineWeyl
from .alcoves import is_fundamental_p_alcove, newton_vector, pair_two_rho
from .roots import RootDatum, semistandard_parabolics, standard_parabolic
from .snf import integer_kernel, solve_integer


@dataclass(frozen=True)
class SigmaConjClass:
    newton: tuple          # dominant rational cocharacter, canonical form
    kappa: tuple           # Lambda_G normal form
    home_simple: frozenset  # simple roots of the home Levi
    lambda_m: tuple        # Lambda_M normal form determining the class over M

    def key(self) -> str:
        nu = ",".join(str(v) for v in self.newton)
        ka = ",".join(str(v) for v in self.kappa)
        return f"nu=[{nu}];kappa=[{ka}]"


def newton_point(ctx: AffineWeyl, xid: int):
    """Dominant Newton point of x = eps^lambda w: dominize the w-average of lambda."""
    return ctx.datum.dominant(newton_vector(ctx, xid))


def home_parabolic_of(datum: RootDatum, nu) -> frozenset:
    """Simple roots vanishing on nu (the Levi of the home parabolic)."""
    return frozenset(ri for ri in datum.simple_idx if datum.pairing_frac(ri, nu) == 0)


def is_basic(datum: RootDatum, c: SigmaConjClass) -> bool:
    return c.home_simple == frozenset(datum.simple_idx)


def levi_classes_with_newton(datum: RootDatum, m_root_idxs, nu):
    """
    Representative cocharacters lam, one per class [b'] of the Levi M with
    root set m_root_idxs whose M-Newton point equals nu (as a W_M-orbit).

    The classes live over the centralizer Levi M_1 of nu inside M; they are
    the integer solutions of  average over W_{M_1} of lam == nu, taken modulo
    the coroot lattice of M_1.  Returns a set of integer tuples.
    """
    nu = datum.coweight_nf_frac(nu)
    m1_roots = frozenset(i for i in m_root_idxs if datum.pairing_frac(i, nu) == 0)
    wm1 = sorted(datum.reflection_subgroup(m1_roots))
    d = datum.d
    n = len(wm1)
    cols = []
    for j in range(d):
        e = tuple(1 if t == j else 0 for t in range(d))
        acc = [0] * d
        for w in wm1:
            img = datum.weyl.apply(w, e)
            acc = [a + b for a, b in zip(acc, img)]
        cols.append(acc)  # n * average(e_j)
    denom = n
    for v in nu:
        q = Fraction(v).denominator
        denom = denom * q // _gcd(denom, q)
    scale = denom // n
    mat = [[cols[j][t] * scale for t in range(d)] for j in range(d)]
    target_vecs = []
    if datum.central is None:
        target_vecs.append([int(Fraction(v) * denom) for v in nu])
    else:
        # targets are defined mod the central line; find the integral shifts
        base = [Fraction(v) * denom for v in nu]
        step = Fraction(denom, datum.d)
        for k in range(-2 * datum.d, 2 * datum.d + 1):
            cand = [b + k * step * c for b, c in zip(base, datum.central)]
            if all(v.denominator == 1 for v in cand):
                target_vecs.append([int(v) for v in cand])
    sols = []
    for tv in target_vecs:
        s = solve_integer(mat, tv)
        if s is not None:
            sols.append(s)
    if not sols:
        return set()
    ker = integer_kernel(mat)
    lat_m1 = datum.levi_lattice_quotient(frozenset(m1_roots))
    out = {}
    for s in sols:
        # the fiber is s + ker; mod the coroot lattice of M_1 it is finite,
        # so a small combination scan covers every class
        for shift in _small_combos(ker, 3, datum.d):
            lam = tuple(a + b for a, b in zip(s, shift))
            out.setdefault(lat_m1.normal_form(lam), lam)
    return set(out.values())


def _small_combos(basis, radius, d):
    if not basis:
        yield (0,) * d
        return
    ranges = [range(-radius, radius + 1)] * len(basis)
    for coeffs in itertools.product(*ranges):
        yield tuple(sum(c * b[t] for c, b in zip(coeffs, basis)) for t in range(d))


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


_classify_cache: dict[tuple, SigmaConjClass] = {}


def classify(ctx: AffineWeyl, xid: int) -> SigmaConjClass:
    """The sigma-conjugacy class of x, as (Newton point, kappa) plus home data."""
    datum = ctx.datum
    nu = newton_point(ctx, xid)
    kappa = datum.lambda_g.normal_form(ctx.translation(xid))
    key = (id(datum), nu, kappa)
    got = _classify_cache.get(key)
    if got is not None:
        return got
    home = home_parabolic_of(datum, nu)
    p = standard_parabolic(datum, home)
    cands = levi_classes_with_newton(datum, p.r_m, nu)
    matches = {p.lattice.normal_form(lam) for lam in cands
               if datum.lambda_g.normal_form(lam) == kappa}
    assert len(matches) == 1, (nu, kappa, matches)
    got = SigmaConjClass(nu, kappa, home, next(iter(matches)))
    _classify_cache[key] = got
    return got


def class_from_invariants(datum: RootDatum, nu, kappa) -> SigmaConjClass:
    nu = datum.coweight_nf_frac(nu)
    assert datum.is_dominant(nu), "Newton point must be dominant"
    home = home_parabolic_of(datum, nu)
    p = standard_parabolic(datum, home)
    cands = levi_classes_with_newton(datum, p.r_m, nu)
    matches = {p.lattice.normal_form(lam) for lam in cands
               if datum.lambda_g.normal_form(lam) == tuple(kappa)}
    if len(matches) != 1:
        raise ValueError(f"no class with these invariants: nu={nu}, kappa={kappa}")
    return SigmaConjClass(nu, tuple(kappa), home, next(iter(matches)))


def standard_representative(ctx: AffineWeyl, c: SigmaConjClass) -> int:
    """The length-zero element of W~_M representing the class."""
    p = standard_parabolic(ctx.datum, c.home_simple)
    x = ctx.omega_element(p, c.lambda_m)
    return x


def fundamental_representative(ctx: AffineWeyl, c: SigmaConjClass):
    """
    (x0, P') with x0 a fundamental P'-alcove representing the class, found by
    scanning finite-Weyl conjugates of the standard representative.  Existence
    is a theorem; exhaustion of the search signals a bug.
    """
    datum = ctx.datum
    b = standard_representative(ctx, c)
    paras = semistandard_parabolics(datum)
    W = datum.weyl
    for u in sorted(W.elements(), key=lambda w: W.length[w]):
        g = ctx.intern((0,) * datum.d, u)
        x = ctx.conj(g, b)
        wpart = ctx.finite(x)
        for p in paras:
            if wpart in p.w_m and is_fundamental_p_alcove(ctx, x, p):
                return x, p
    raise AssertionError("no fundamental representative found; this contradicts "
                         "the existence theorem and indicates a bug")


def defect(ctx: AffineWeyl, c: SigmaConjClass) -> int:
    """
    Rank of X_*(A) minus the dimension of the fixed space of the finite part
    of the standard representative.  Agrees with the F-rank recipe for GL_n
    (blockwise cycles) and vanishes on translation classes.
    """
    datum = ctx.datum
    x = standard_representative(ctx, c)
    w = ctx.finite(x)
    W = datum.weyl
    d = datum.d
    m = [[Fraction(W.mats[w][i][j]) for j in range(d)] for i in range(d)]
    for i in range(d):
        m[i][i] -= 1
    fixdim = d - _rank_frac(m)
    rank = d - (1 if datum.central is not None else 0)
    if datum.central is not None:
        fixdim -= 1  # the central line is always fixed
    return rank - fixdim


def _rank_frac(m):
    m = [row[:] for row in m]
    n = len(m)
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, n) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][col]
        m[rank] = [x / pv for x in m[rank]]
        for i in range(n):
            if i != rank and m[i][col] != 0:
                cc = m[i][col]
                m[i] = [x - cc * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def enumerate_classes(ctx: AffineWeyl, bound: int):
    """
    All classes with <2 rho, nu> <= bound, each once, ordered by
    (<2 rho, nu>, key).  Per standard parabolic P = MN, the classes over P
    are the Lambda_M-values whose averaged vector is strictly positive on the
    simple roots outside M; these are scanned through the normal forms of
    Lambda_M with free coordinates in a window sized by the bound.
    """
    datum = ctx.datum
    out = {}
    box = bound + 2
    subsets = [frozenset()]
    for ri in datum.simple_idx:
        subsets = subsets + [s | {ri} for s in subsets]
    for home in subsets:
        p = standard_parabolic(datum, home)
        lat = p.lattice
        wm = sorted(p.w_m)
        outside = [ri for ri in datum.simple_idx if ri not in home]
        ranges = []
        for m in lat.moduli:
            if m == 1:
                ranges.append([0])
            elif m == 0:
                ranges.append(range(-box, box + 1))
            else:
                ranges.append(range(m))
        for nf in itertools.product(*ranges):
            lam = lat.lift(nf)
            acc = [0] * datum.d
            for w in wm:
                img = datum.weyl.apply(w, lam)
                acc = [a + b for a, b in zip(acc, img)]
            nu = datum.coweight_nf_frac(tuple(Fraction(a, len(wm)) for a in acc))
            if any(datum.pairing_frac(ri, nu) <= 0 for ri in outside):
                continue
            tw = pair_two_rho(datum, nu)
            if tw > bound:
                continue
            kappa = datum.lambda_g.normal_form(lam)
            c = SigmaConjClass(nu, kappa, home, lat.normal_form(lam))
            out.setdefault(c.key(), c)
    res = sorted(out.values(), key=lambda c: (pair_two_rho(datum, c.newton), c.key()))
    return res


def slope_dominance_holds(datum: RootDatum, mu, nu) -> bool:
    """Is mu - nu a nonnegative rational combination of positive coroots?"""
    diff = tuple(Fraction(a) - Fraction(b) for a, b in zip(mu, nu))
    return datum.in_positive_coroot_cone(diff)


def grassmannian_nonempty(ctx: AffineWeyl, mu, c: SigmaConjClass) -> bool:
    """
    Non-emptiness in the affine Grassmannian: kappa agreement plus the
    dominance inequality between mu and the Newton point.
    """
    datum = ctx.datum
    mu = tuple(mu)
    assert datum.is_dominant(mu), "mu must be dominant"
    if datum.lambda_g.normal_form(mu) != c.kappa:
        return False
    return slope_dominance_holds(datum, datum.coweight_nf_frac(mu), c.newton)


def grassmannian_dim_basic(ctx: AffineWeyl, mu, c: SigmaConjClass) -> Fraction:
    """dim = <rho, mu> - def/2 for basic classes (reference value)."""
    datum = ctx.datum
    if not is_basic(datum, c):
        raise ValueError("dimension formula needs a basic class")
    val = pair_two_rho(datum, datum.coweight_nf_frac(mu)) / 2 \
        - Fraction(defect(ctx, c), 2)
    assert (2 * val).denominator == 1
    return val


def basic_class_of_component(ctx: AffineWeyl, kappa) -> SigmaConjClass:
    """The unique basic class with the given kappa."""
    datum = ctx.datum
    p = standard_parabolic(datum, frozenset(datum.simple_idx))
    x = ctx.omega_element(p, datum.lambda_g.normal_form(datum.lambda_g.lift(tuple(kappa))))
    return classify(ctx, x)
