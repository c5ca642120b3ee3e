"""
Emptiness and dimension of affine Deligne-Lusztig varieties X_x(b), by orbit
intersections in the affine flag variety.

The computational primitive is the dimension table of the intersections of
the Iwahori orbit of x.a with the orbits of a twisted group J = w^{-1} I_P w,
for the standard parabolic P = MN housing the class of b.  These tables are
computed by walking a reduced word of x through the apartment and folding:
for each wall crossed, the J-orbit structure marks one side of the wall as
the "fold side" (the side the building branches retract onto); a crossing
into the fold side costs one dimension, while a crossing out of it is free
but may instead fold back at cost one.  Concretely the fold side of the wall
{beta = j} is the upper side iff the affine root group of (beta, j) lies in
J, which reduces to integer comparisons against the profile

    m_J(beta) = -inf               if w beta lies in R_N,
              = +inf               if w beta lies in -R_N,
              = k(beta, w^{-1}.a)  if w beta lies in R_M.

For P = G these tables coincide with q-degrees of Hecke structure constants,
and that identity is both the calibration that fixes the folding convention
and a standing cross-check (the two routes stay independent).

The stratum dimension for a class with standard representative b over P is

    dim(X_x(b) cap I_P w.a) = table[w^{-1} b w] - <rho, nu + nu_dom>,

and dim X_x(b) is the sup over w.  Emptiness certificates come first: the
component map, and the Levi obstruction (for every semistandard P with x.a a
P-alcove, eta_M(x) must be an eta_M-value of a class over M whose Newton
point is W-conjugate to that of b).  The sup over w is swept in length
shells up to a cutoff, with the honest outcome "empty up to cutoff" when
nothing is found.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .affine import AffineWeyl
from .alcoves import is_p_alcove, newton_vector, pair_two_rho
from .hecke import Hecke, poly_deg
from .roots import SemistdParabolic, semistandard_parabolics, standard_parabolic
from .sigma import (SigmaConjClass, fundamental_representative, is_basic,
                    levi_classes_with_newton, standard_representative)

INF = 10 ** 9


# ---------------------------------------------------------------------------
# orientations and folding walks

def conj_parabolic(p: SemistdParabolic, v: int) -> SemistdParabolic:
    """The parabolic v P v^{-1} (v a finite Weyl element)."""
    datum = p.datum
    return SemistdParabolic(datum, datum.weyl.mul(v, p.u), p.levi_simple)


def orientation_profile(ctx: AffineWeyl, p: SemistdParabolic, wid: int):
    """
    m_J over all roots for J = w^{-1} (I_M N) w: list indexed by root index,
    entries in Z or +-INF.
    """
    datum = ctx.datum
    W = datum.weyl
    winv = ctx.inv(wid)
    wfin = ctx.finite(wid)
    out = [0] * len(datum.roots)
    for i in range(len(datum.roots)):
        img = W.root_act[wfin][i]
        if img in p.r_n:
            out[i] = -INF
        elif img in p.r_nbar:
            out[i] = INF
        else:
            out[i] = ctx.k_alpha(i, winv)
    return out


def fold_step(ctx: AffineWeyl, frontier: dict, gen: int, profile) -> dict:
    """One letter of the folding walk; merges by max dimension."""
    out: dict[int, int] = {}
    g = ctx.gens[gen]
    mul = ctx.mul
    wall = ctx.wall_data
    for c, d in frontier.items():
        beta, j, c_upper = wall(c, gen)
        cs = mul(c, g)
        fold_upper = j >= profile[beta]
        if c_upper != fold_upper:
            # crossing into the fold side: forced, costs one
            if out.get(cs, -1) < d + 1:
                out[cs] = d + 1
        else:
            # crossing out of the fold side: free, or fold back at cost one
            if out.get(cs, -1) < d:
                out[cs] = d
            if out.get(c, -1) < d + 1:
                out[c] = d + 1
    return out


def orbit_dim_table(ctx: AffineWeyl, xid: int, p: SemistdParabolic, wid: int,
                    orientation: str = "periodic") -> dict:
    """
    entries[y] = dim( I.a_x  cap  (w^{-1} I_P w).a_y ), as a dict on element
    ids.  orientation "periodic" is the table above; "at-infinity" restricts
    to y in the twisted Levi's affine Weyl group and subtracts its internal
    length, modelling N'-orbits in place of I_{P'}-orbits.
    """
    profile = orientation_profile(ctx, p, wid)
    word, tau = ctx.reduced_word(xid)
    frontier = {ctx.identity: 0}
    for i in word:
        frontier = fold_step(ctx, frontier, i, profile)
    if tau != ctx.identity:
        frontier = {ctx.mul(c, tau): d for c, d in frontier.items()}
    if orientation == "periodic":
        return frontier
    if orientation != "at-infinity":
        raise ValueError("orientation must be 'periodic' or 'at-infinity'")
    pprime = conj_parabolic(p, ctx.datum.weyl.inv[ctx.finite(wid)])
    out = {}
    for y, d in frontier.items():
        if ctx.finite(y) in pprime.w_m:
            out[y] = d - ctx.length_levi(y, pprime)
    return out


# ---------------------------------------------------------------------------
# certificates (the Levi obstruction) and results

@dataclass
class Certificate:
    kind: str                 # "component" | "levi-obstruction"
    parabolic_key: tuple | None = None
    detail: str = ""

    def to_json(self):
        return {"kind": self.kind, "parabolic": self.parabolic_key, "detail": self.detail}


@dataclass
class AdlvResult:
    status: str               # "nonempty" | "empty-certified" | "empty-up-to-cutoff"
    dim: int | None = None
    witness_w: int | None = None
    cutoff: int | None = None
    certificates: list = field(default_factory=list)

    @property
    def nonempty(self):
        return self.status == "nonempty"

    def to_json(self, ctx):
        return {
            "status": self.status,
            "dim": self.dim,
            "witness_w": ctx.format(self.witness_w) if self.witness_w is not None else None,
            "cutoff": self.cutoff,
            "certificates": [c.to_json() for c in self.certificates],
        }


_target_cache: dict = {}


def levi_eta_targets(ctx: AffineWeyl, p: SemistdParabolic, cls: SigmaConjClass,
                     kappa_filter: bool):
    """
    The admissible eta_M-values for classes over M whose Newton point is
    W-conjugate to that of cls; with kappa_filter, only classes in the same
    component of the full group are kept (the basic-case refinement).
    """
    key = (id(ctx.datum), p.key(), cls.key(), kappa_filter)
    got = _target_cache.get(key)
    if got is not None:
        return got
    datum = ctx.datum
    W = datum.weyl
    orbit = {}
    for w in W.elements():
        nu = datum.coweight_nf_frac(W.apply_frac(w, cls.newton))
        orbit[nu] = None
    targets = set()
    for nu in orbit:
        for lam in levi_classes_with_newton(datum, p.r_m, nu):
            if kappa_filter and datum.lambda_g.normal_form(lam) != cls.kappa:
                continue
            targets.add(p.lattice.normal_form(lam))
    _target_cache[key] = targets
    return targets


def necessary_condition(ctx: AffineWeyl, xid: int, cls: SigmaConjClass):
    """
    The non-emptiness obstruction (a theorem): returns None when the test
    passes, else a Certificate.  Checks the component map, then, for every
    semistandard P = MN with x.a a P-alcove, membership of eta_M(x) in the
    eta_M-values allowed by the Newton point of the class.
    """
    datum = ctx.datum
    if ctx.omega_class(xid) != cls.kappa:
        return Certificate("component", None, "kappa(x) != kappa(b)")
    for p in semistandard_parabolics(datum):
        if p.is_full:
            continue
        if not is_p_alcove(ctx, xid, p).verdict:
            continue
        targets = levi_eta_targets(ctx, p, cls, kappa_filter=False)
        if p.eta_m(ctx.translation(xid)) not in targets:
            return Certificate("levi-obstruction", p.key(),
                               "eta_M(x) not an eta_M-value over the Newton orbit")
    return None


def predict_levi(ctx: AffineWeyl, xid: int, cls: SigmaConjClass):
    """
    The P-alcove prediction for basic classes: empty iff some semistandard
    P = MN with x.a a P-alcove violates the component condition relative to M.
    The "empty" direction is a theorem; "nonempty" is the conjectural one.
    Returns ("empty", certificate) or ("nonempty-predicted", None).
    """
    datum = ctx.datum
    if not is_basic(datum, cls):
        raise ValueError("the P-alcove prediction applies to basic classes")
    if ctx.omega_class(xid) != cls.kappa:
        return "empty", Certificate("component", None, "kappa(x) != kappa(b)")
    for p in semistandard_parabolics(datum):
        if p.is_full:
            continue
        if not is_p_alcove(ctx, xid, p).verdict:
            continue
        targets = levi_eta_targets(ctx, p, cls, kappa_filter=True)
        if not targets:
            return "empty", Certificate("levi-obstruction", p.key(),
                                        "class does not meet the Levi")
        if p.eta_m(ctx.translation(xid)) not in targets:
            return "empty", Certificate("levi-obstruction", p.key(),
                                        "eta_M mismatch with the class over M")
    return "nonempty-predicted", None


def emptiness_certificate(ctx: AffineWeyl, xid: int, cls: SigmaConjClass):
    """
    The strongest theorem-level emptiness certificate available: the general
    Newton-orbit obstruction, sharpened for basic classes to the component
    condition relative to each Levi (both directions are proved facts, so a
    certificate is never contradicted by a larger sweep).
    """
    cert = necessary_condition(ctx, xid, cls)
    if cert is None and is_basic(ctx.datum, cls):
        status, cert2 = predict_levi(ctx, xid, cls)
        if status == "empty":
            return cert2
    return cert


def predict_shrunken(ctx: AffineWeyl, xid: int, cls: SigmaConjClass):
    """
    The shrunken-chamber rule for basic classes: non-empty iff the component
    matches and eta_2^{-1} eta_1 eta_2 has full support, with dimension
    (ell(x) + ell(eta_2^{-1} eta_1 eta_2) - defect)/2.
    Returns ("empty", None) or ("nonempty", dim).
    """
    from .alcoves import conjugated_finite_part, has_full_support, is_shrunken
    from .sigma import defect
    datum = ctx.datum
    if not is_basic(datum, cls):
        raise ValueError("the shrunken rule applies to basic classes")
    if not is_shrunken(ctx, xid):
        raise ValueError("x must lie in the shrunken chambers")
    if ctx.omega_class(xid) != cls.kappa:
        return "empty", None
    u = conjugated_finite_part(ctx, xid)
    if not has_full_support(datum, u):
        return "empty", None
    num = ctx.length(xid) + datum.weyl.length[u] - defect(ctx, cls)
    assert num % 2 == 0, "parity failure in the shrunken dimension formula"
    return "nonempty", num // 2


# ---------------------------------------------------------------------------
# the sweep over w

def coxeter_number(datum) -> int:
    return len(datum.roots) // max(1, datum.weyl.rank)


def default_cutoff(ctx: AffineWeyl, xid: int, cls: SigmaConjClass) -> int:
    nu_dom = ctx.datum.dominant(cls.newton)
    extra = pair_two_rho(ctx.datum, nu_dom)
    assert extra.denominator in (1, 2)
    return ctx.length(xid) + int(extra) + 2 * coxeter_number(ctx.datum)


def affine_ball(ctx: AffineWeyl, max_len: int):
    """All elements of the affine Weyl group (no omega part) of length <= max_len."""
    seen = {ctx.identity: 0}
    frontier = [ctx.identity]
    while frontier:
        new = []
        for u in frontier:
            for g in ctx.gens:
                v = ctx.mul(u, g)
                if v not in seen:
                    ln = ctx.length(v)
                    if ln <= max_len:
                        seen[v] = ln
                        new.append(v)
        frontier = new
    return seen


def omega_window(ctx: AffineWeyl, cls: SigmaConjClass | None, xids) -> list:
    """
    The omega parts to sweep: all of Omega_G when the fundamental group is
    finite, else a window of the free coordinates sized by the inputs.
    """
    datum = ctx.datum
    lat = datum.lambda_g
    p_full = standard_parabolic(datum, frozenset(datum.simple_idx))
    if lat.order() is not None:
        return [ctx.omega_element(p_full, cls_) for cls_ in lat.elements()]
    spread = 2
    for x in xids:
        spread = max(spread, max(abs(v) for v in ctx.translation(x)) + 2)
    vals = []
    ranges = []
    for m in lat.moduli:
        if m == 1:
            ranges.append([0])
        elif m == 0:
            ranges.append(range(-spread, spread + 1))
        else:
            ranges.append(range(m))
    import itertools
    for nf in itertools.product(*ranges):
        vals.append(ctx.omega_element(p_full, nf))
    return vals


def sweep_elements(ctx: AffineWeyl, max_len: int, omegas) -> list:
    """All w = u * tau, ell(u) <= max_len, sorted by (length, text)."""
    ball = affine_ball(ctx, max_len)
    out = []
    for u in ball:
        for tau in omegas:
            w = ctx.mul(u, tau)
            out.append(w)
    out = sorted(set(out), key=lambda w: (ctx.length(w), ctx.format(w)))
    return out


def class_data(ctx: AffineWeyl, cls: SigmaConjClass):
    """(standard rep, home parabolic, correction <rho, nu + nu_dom>)."""
    datum = ctx.datum
    p = standard_parabolic(datum, cls.home_simple)
    b = standard_representative(ctx, cls)
    nu = newton_vector(ctx, b)
    nu_dom = datum.dominant(nu)
    corr2 = pair_two_rho(datum, nu) + pair_two_rho(datum, nu_dom)
    assert corr2.denominator == 1
    return b, p, Fraction(corr2, 2)


def dim_stratum(ctx: AffineWeyl, xid: int, cls: SigmaConjClass, wid: int,
                table: dict | None = None):
    """
    dim(X_x(b) cap I_P w.a), or None when the stratum is empty.  Fractional
    results on a non-empty stratum violate the theory and raise.
    """
    b, p, corr = class_data(ctx, cls)
    if table is None:
        table = orbit_dim_table(ctx, xid, p, wid, "periodic")
    btilde = ctx.mul(ctx.mul(ctx.inv(wid), b), wid)
    got = table.get(btilde)
    if got is None:
        return None
    val = Fraction(got) - corr
    if val.denominator != 1 or val < 0:
        raise ArithmeticError(
            f"stratum dimension {val} is not a nonnegative integer")
    return int(val)


def solve(ctx: AffineWeyl, xid: int, cls: SigmaConjClass,
          cutoff: int | None = None, stop_at_first: bool = False) -> AdlvResult:
    """
    Decide X_x(b): certificates first (sound emptiness), then the sweep over
    w in length shells up to the cutoff, reporting the best stratum found.
    With stop_at_first the sweep ends at the first non-empty stratum; the
    reported dimension is then only a lower bound (the status is exact).
    """
    if cutoff is None:
        cutoff = default_cutoff(ctx, xid, cls)
    cert = emptiness_certificate(ctx, xid, cls)
    if cert is not None:
        return AdlvResult("empty-certified", certificates=[cert], cutoff=cutoff)
    b, p, corr = class_data(ctx, cls)
    best = None
    best_w = None
    omegas = omega_window(ctx, cls, [xid, b])
    for w in sweep_elements(ctx, cutoff, omegas):
        table = orbit_dim_table(ctx, xid, p, w, "periodic")
        btilde = ctx.mul(ctx.mul(ctx.inv(w), b), w)
        got = table.get(btilde)
        if got is None:
            continue
        val = Fraction(got) - corr
        if val.denominator != 1 or val < 0:
            raise ArithmeticError(f"stratum dimension {val} at w={ctx.format(w)}")
        if best is None or int(val) > best:
            best, best_w = int(val), w
            if stop_at_first:
                break
    if best is None:
        return AdlvResult("empty-up-to-cutoff", cutoff=cutoff)
    return AdlvResult("nonempty", dim=best, witness_w=best_w, cutoff=cutoff)


# ---------------------------------------------------------------------------
# batched surveys (shared folding frontiers across all x per w)

def survey_batch(ctx: AffineWeyl, cls: SigmaConjClass, xids, cutoff: int):
    """
    solve() for many x at once.  Returns {x: AdlvResult}.  Certificates are
    evaluated per x; the w-sweep shares the folding frontiers across all x
    with a breadth-first walk over reduced-word prefixes.
    """
    datum = ctx.datum
    results: dict[int, AdlvResult] = {}
    pending_words = {}
    for x in xids:
        cert = emptiness_certificate(ctx, x, cls)
        if cert is not None:
            results[x] = AdlvResult("empty-certified", certificates=[cert],
                                    cutoff=cutoff)
        else:
            word, tau = ctx.reduced_word(x)
            pending_words[x] = (word, tau)
    if not pending_words:
        return results
    b, p, corr = class_data(ctx, cls)
    # prefix tree over the canonical reduced words of the pending x, deduped
    # by element: parent[u] = (previous prefix, generator)
    parents: dict[int, tuple | None] = {ctx.identity: None}
    need = {}
    for x, (word, tau) in pending_words.items():
        cur = ctx.identity
        for gi in word:
            nxt = ctx.mul(cur, ctx.gens[gi])
            if nxt not in parents:
                parents[nxt] = (cur, gi)
            cur = nxt
        need.setdefault(cur, []).append((x, tau))
    order = sorted(parents, key=lambda u: ctx.length(u))
    best: dict[int, tuple] = {x: (None, None) for x in pending_words}
    omegas = omega_window(ctx, cls, list(pending_words) + [b])
    for w in sweep_elements(ctx, cutoff, omegas):
        profile = orientation_profile(ctx, p, w)
        btilde = ctx.mul(ctx.mul(ctx.inv(w), b), w)
        frontiers = {ctx.identity: {ctx.identity: 0}}
        for u in order:
            if u == ctx.identity:
                continue
            par, gi = parents[u]
            frontiers[u] = fold_step(ctx, frontiers[par], gi, profile)
        for u, xs in need.items():
            for x, tau in xs:
                key = ctx.mul(btilde, ctx.inv(tau))
                got = frontiers[u].get(key)
                if got is None:
                    continue
                val = Fraction(got) - corr
                if val.denominator != 1 or val < 0:
                    raise ArithmeticError(f"stratum dimension {val}")
                cur = best[x]
                if cur[0] is None or int(val) > cur[0]:
                    best[x] = (int(val), w)
    for x in pending_words:
        dim, w = best[x]
        if dim is None:
            results[x] = AdlvResult("empty-up-to-cutoff", cutoff=cutoff)
        else:
            results[x] = AdlvResult("nonempty", dim=dim, witness_w=w, cutoff=cutoff)
    return results


# ---------------------------------------------------------------------------
# the superset method

def superset(ctx: AffineWeyl, cls: SigmaConjClass, cutoff: int):
    """
    {x : IxI contained in I y^{-1} I b0 I y I for some y with ell(y) <= cutoff},
    for a fundamental-alcove representative b0 of the class.  This is exactly
    the non-emptiness locus of X_x(b0), monotonically approximated in cutoff.
    """
    b0, _p0 = fundamental_representative(ctx, cls)
    H = Hecke(ctx)
    base = H.t(b0)
    out = set(H.support(base))
    # BFS over y: Q_{ys} = T_s Q_y T_s when the lengths grow
    qs = {ctx.identity: base}
    frontier = [ctx.identity]
    omegas = omega_window(ctx, cls, [b0])
    while frontier:
        new = []
        for y in frontier:
            q = qs[y]
            for gi, g in enumerate(ctx.gens):
                ys = ctx.mul(y, g)
                if ctx.length(ys) != ctx.length(y) + 1 or ys in qs or \
                        ctx.length(ys) > cutoff:
                    continue
                qq = _left_mul_gen(ctx, H, q, g)
                qq = H.mul_gen(qq, g)
                qs[ys] = qq
                new.append(ys)
                out |= H.support(qq)
        frontier = new
    # omega parts of y contribute conjugated supports
    full = set()
    for tau in omegas:
        ti = ctx.inv(tau)
        for z in out:
            full.add(ctx.mul(ctx.mul(ti, z), tau))
    return full


def _left_mul_gen(ctx: AffineWeyl, H: Hecke, h: dict, g: int) -> dict:
    from .hecke import poly_q, poly_qm1
    out: dict[int, int] = {}
    for u, c in h.items():
        su = ctx.mul(g, u)
        if ctx.length(su) > ctx.length(u):
            out[su] = out.get(su, 0) + c
        else:
            out[u] = out.get(u, 0) + poly_qm1(c)
            out[su] = out.get(su, 0) + poly_q(c)
    return out


# ---------------------------------------------------------------------------
# reduction to the basic case over a Levi

def minimal_coset_reps(datum, p: SemistdParabolic):
    """Minimal length representatives of W_M \\ W."""
    W = datum.weyl
    reps = []
    for w in W.elements():
        if all(W.length[W.mul(m, w)] >= W.length[w] for m in p.w_m):
            reps.append(w)
    return reps


def levi_affine_generators(ctx: AffineWeyl, p: SemistdParabolic):
    """
    Elements of length one in the affine Weyl group of the Levi: affine
    reflections s_{beta,k} for beta in R_M, with small k.
    """
    datum = ctx.datum
    gens = []
    npos = datum.nposroots
    for i in sorted(p.r_m):
        if i >= npos:
            continue
        for k in range(-2, 4):
            refl = ctx.intern(tuple(k * v for v in datum.coroots[i]),
                              ctx._reflection_index(i))
            if ctx.length_levi(refl, p) == 1 and refl not in gens:
                gens.append(refl)
    return gens


def solve_levi_basic(ctx: AffineWeyl, p: SemistdParabolic, yid: int, bid: int,
                     cutoff: int):
    """
    Non-emptiness and dimension of the Levi variety X^M_y(b) for b of length
    zero in W~_M (basic over M), via the Hecke degrees of W~_M.
    Returns (status, dim) with status in {"nonempty", "empty-up-to-cutoff",
    "empty-certified"}.
    """
    if not p.r_m:
        # torus: X^A_y(b) is a point when y = b, else empty
        if yid == bid:
            return "nonempty", 0
        return "empty-certified", None
    assert ctx.length_levi(bid, p) == 0, "representative must be basic over the Levi"
    if p.eta_m(ctx.translation(yid)) != p.eta_m(ctx.translation(bid)):
        return "empty-certified", None
    gens = levi_affine_generators(ctx, p)
    lenf = lambda u: ctx.length_levi(u, p)
    H = Hecke(ctx, gens=gens, length=lenf)
    # affine ball of the Levi, then all components of its omega group within
    # a translation window sized by the inputs
    ball = {ctx.identity}
    frontier = [ctx.identity]
    while frontier:
        new = []
        for v in frontier:
            for g in gens:
                u = ctx.mul(v, g)
                if u not in ball and lenf(u) == lenf(v) + 1 and lenf(u) <= cutoff:
                    ball.add(u)
                    new.append(u)
        frontier = new
    spread = 2 + max(max(abs(t) for t in ctx.translation(yid)),
                     max(abs(t) for t in ctx.translation(bid)))
    lat = p.lattice
    import itertools
    ranges = []
    for m in lat.moduli:
        if m == 1:
            ranges.append([0])
        elif m == 0:
            ranges.append(range(-spread, spread + 1))
        else:
            ranges.append(range(m))
    omegas = [ctx.omega_element(p, nf) for nf in itertools.product(*ranges)]
    best = None
    binv = ctx.inv(bid)
    for u in ball:
        for om in omegas:
            v = ctx.mul(u, om)
            # C^M(y, v^{-1} b^{-1}, v^{-1})
            arg = ctx.mul(ctx.inv(v), binv)
            prod = H.mul_basis(H.t(yid), arg)
            c = prod.get(ctx.inv(v), 0)
            if c:
                d = poly_deg(c)
                if best is None or d > best:
                    best = d
    if best is None:
        return "empty-up-to-cutoff", None
    return "nonempty", best


def reduce_to_basic(ctx: AffineWeyl, xid: int, cls: SigmaConjClass,
                    cutoff: int | None = None) -> AdlvResult:
    """
    dim X_x(b) through the Levi recursion: strata over pairs (w, y) with w a
    minimal coset representative and y in the twisted Levi's affine Weyl
    group meeting the Iwahori orbit of x at infinity.
    """
    datum = ctx.datum
    if cutoff is None:
        cutoff = default_cutoff(ctx, xid, cls)
    if cls.home_simple == frozenset(datum.simple_idx):
        return solve(ctx, xid, cls, cutoff)
    b, p, corr = class_data(ctx, cls)
    best = None
    best_w = None
    for wfin in minimal_coset_reps(datum, p):
        w = ctx.intern((0,) * datum.d, wfin)
        table = orbit_dim_table(ctx, xid, p, w, "at-infinity")
        if not table:
            continue
        pprime = conj_parabolic(p, datum.weyl.inv[wfin])
        btilde = ctx.conj(ctx.inv(w), b)
        assert ctx.length_levi(btilde, pprime) == 0
        for y, dinf in sorted(table.items()):
            status, dm = solve_levi_basic(ctx, pprime, y, btilde, cutoff)
            if status != "nonempty":
                continue
            val = Fraction(dinf + dm) - corr
            if val.denominator != 1:
                raise ArithmeticError("fractional dimension in the Levi recursion")
            if val < 0:
                continue
            if best is None or int(val) > best:
                best, best_w = int(val), w
    if best is None:
        return AdlvResult("empty-up-to-cutoff", cutoff=cutoff)
    return AdlvResult("nonempty", dim=best, witness_w=best_w, cutoff=cutoff)
