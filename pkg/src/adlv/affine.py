"""
The extended affine Weyl group W~ = X_*(A) x| W and its alcove model.

Elements are pairs x = (lambda, w): the translation part lambda (a cocharacter
in canonical form) and the finite part w (a Weyl-group index).  Composition is
(lam, w)(mu, v) = (lam + w mu, w v).  Elements are interned per context, so an
element is just an int id; the hot paths (length, alcove coordinates, folding
walks) run on small-integer arithmetic only.

Conventions.  The base alcove "a" is the alcove in the dominant chamber whose
closure contains the origin; the Iwahori subgroup is its fixer, i.e. the
preimage of the *opposite* Borel.  The alcove coordinate of a root alpha at
the alcove x.a is

    k(alpha, x.a) = <alpha, lambda> + [w^{-1} alpha > 0],

the unique integer k with k-1 < <alpha, p> < k for interior points p of x.a.
In particular k(alpha, a) = 1 for alpha > 0 and = 0 for alpha < 0, and
k(alpha, .) + k(-alpha, .) = 1.

Length is the number of affine root hyperplanes separating a from x.a:
ell(x) = sum over positive roots of |k(alpha, x.a) - k(alpha, a)|.  Reduced
words use the affine generators s_1..s_r (finite simple reflections) and s_0
(the reflection in the wall {theta = 1} for the highest root theta), followed
by a length-zero element.
"""

from __future__ import annotations

from fractions import Fraction

from .roots import RootDatum, SemistdParabolic


class AffineWeyl:
    """Interning context for elements of W~ over a fixed root datum.

    All operations are pure; the interning and memo tables are the only
    mutable state and are only ever extended (insert-if-absent under the
    interpreter lock), so contexts are safe to share between threads and
    cheap to fork into worker processes.
    """

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self._elts: list[tuple[tuple[int, ...], int]] = []
        self._index: dict[tuple[tuple[int, ...], int], int] = {}
        self._len: dict[int, int] = {}
        self._word: dict[int, tuple[tuple[int, ...], int]] = {}
        self._wall: dict[tuple[int, int], tuple[int, int, bool]] = {}
        self._bruhat: dict[tuple[int, int], bool] = {}
        self.identity = self.intern((0,) * datum.d, 0)
        # affine generators: index 0 = affine node, 1..r = finite simples
        gens = [self.intern(datum.coroots[datum.theta_idx],
                            self._reflection_index(datum.theta_idx))]
        for ri in datum.simple_idx:
            gens.append(self.intern((0,) * datum.d, self._reflection_index(ri)))
        self.gens = tuple(gens)
        for i, g in enumerate(self.gens):
            assert self.length(g) == 1, f"affine generator s{i} must have length 1"
        self._omega: dict[frozenset, dict] = {}

    # -- interning ------------------------------------------------------------

    def _reflection_index(self, root_idx: int) -> int:
        return self.datum.reflection_index(root_idx)

    def intern(self, lam, w: int) -> int:
        key = (self.datum.coweight_nf(lam), w)
        got = self._index.get(key)
        if got is None:
            got = len(self._elts)
            self._elts.append(key)
            self._index[key] = got
        return got

    def translation(self, xid: int) -> tuple[int, ...]:
        return self._elts[xid][0]

    def finite(self, xid: int) -> int:
        return self._elts[xid][1]

    def from_translation(self, lam) -> int:
        return self.intern(lam, 0)

    # -- group operations ------------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        la, wa = self._elts[a]
        lb, wb = self._elts[b]
        W = self.datum.weyl
        lw = W.apply(wa, lb)
        return self.intern(tuple(x + y for x, y in zip(la, lw)), W.mul(wa, wb))

    def inv(self, a: int) -> int:
        la, wa = self._elts[a]
        W = self.datum.weyl
        wi = W.inv[wa]
        return self.intern(tuple(-x for x in W.apply(wi, la)), wi)

    def mul_many(self, *xs) -> int:
        out = self.identity
        for x in xs:
            out = self.mul(out, x)
        return out

    def conj(self, g: int, x: int) -> int:
        """g x g^{-1}."""
        return self.mul(self.mul(g, x), self.inv(g))

    # -- alcove coordinates ----------------------------------------------------

    def k_alpha(self, root_idx: int, xid: int) -> int:
        lam, w = self._elts[xid]
        datum = self.datum
        W = datum.weyl
        npos = datum.nposroots
        img = W.root_act[W.inv[w]][root_idx if root_idx < npos else root_idx - npos]
        pos = img < npos
        if root_idx >= npos:
            pos = not pos
        return datum.pairing(root_idx, lam) + (1 if pos else 0)

    def k_profile(self, xid: int):
        return tuple(self.k_alpha(i, xid) for i in range(len(self.datum.roots)))

    def length(self, xid: int) -> int:
        got = self._len.get(xid)
        if got is None:
            datum = self.datum
            npos = datum.nposroots
            got = sum(abs(self.k_alpha(i, xid) - 1) for i in range(npos))
            self._len[xid] = got
        return got

    def length_levi(self, xid: int, p: SemistdParabolic) -> int:
        """Length of x inside the affine Weyl group of the Levi of p."""
        npos = self.datum.nposroots
        tot = 0
        for i in p.r_m:
            if i < npos:
                tot += abs(self.k_alpha(i, xid) - 1)
        return tot

    # -- reduced words -----------------------------------------------------------

    def reduced_word(self, xid: int) -> tuple[tuple[int, ...], int]:
        """(word, tau): x = s_{i_1} ... s_{i_r} tau with ell(tau) = 0."""
        got = self._word.get(xid)
        if got is not None:
            return got
        word = []
        cur = xid
        n = self.length(cur)
        while n > 0:
            for i, g in enumerate(self.gens):
                nxt = self.mul(g, cur)
                ln = self.length(nxt)
                if ln < n:
                    word.append(i)
                    cur, n = nxt, ln
                    break
            else:
                raise AssertionError("no descent found")
        got = (tuple(word), cur)
        self._word[xid] = got
        return got

    def from_word(self, word, tau: int | None = None) -> int:
        out = self.identity
        for i in word:
            out = self.mul(out, self.gens[i])
        if tau is not None:
            out = self.mul(out, tau)
        return out

    def omega_class(self, xid: int):
        """eta_G(x): the connected component of x in the loop group."""
        return self.datum.lambda_g.normal_form(self.translation(xid))

    def eta_levi(self, xid: int, p: SemistdParabolic):
        """eta_M(x) for x in W~_M; rejects x outside W~_M."""
        if self.finite(xid) not in p.w_m:
            raise ValueError("element is not in the extended affine Weyl group of the Levi")
        return p.eta_m(self.translation(xid))

    # -- Omega (length-zero) subgroups -------------------------------------------

    def omega_of_levi(self, p: SemistdParabolic) -> dict:
        """
        The group Omega_M of length-zero elements of W~_M (length in the
        M-affine sense), as a map eta_M-value -> element id.  For infinite
        Lambda_M the map is filled lazily by ``omega_element``.
        """
        key = p.levi_key()
        got = self._omega.get(key)
        if got is None:
            got = {}
            self._omega[key] = got
        return got

    def omega_element(self, p: SemistdParabolic, cls) -> int:
        """The unique x in Omega_M with eta_M(x) = cls."""
        table = self.omega_of_levi(p)
        got = table.get(cls)
        if got is not None:
            return got
        datum = self.datum
        W = datum.weyl
        lam0 = self._reduce_mod_levi_coroots(p, p.lattice.lift(cls))
        # search lam0 + (coroot lattice of M)-ball, all finite parts in W_M
        coroots_m = [datum.coroots[i] for i in sorted(p.r_m) if i < datum.nposroots]
        for radius in range(0, 6):
            for shift in _ball(coroots_m, radius, datum.d):
                lam = tuple(a + b for a, b in zip(lam0, shift))
                for w in sorted(p.w_m):
                    x = self.intern(lam, w)
                    if self.length_levi(x, p) == 0 and p.eta_m(self.translation(x)) == cls:
                        table[cls] = x
                        return x
        raise AssertionError("Omega_M element not found (search bound too small)")

    def _reduce_mod_levi_coroots(self, p: SemistdParabolic, lam):
        """Shift lam by Levi coroots so its Levi-simple-root pairings are small."""
        datum = self.datum
        simples = sorted(i for i in p.r_m
                         if i < datum.nposroots and self._is_levi_simple(p, i))
        if not simples:
            return tuple(lam)
        n = len(simples)
        cartan = [[Fraction(datum.pairing(si, datum.coroots[sj]))
                   for sj in simples] for si in simples]
        rhs = [Fraction(datum.pairing(si, lam)) for si in simples]
        coeffs = _solve_square(cartan, rhs)
        out = list(lam)
        for c, sj in zip(coeffs, simples):
            k = int(round(float(c)))
            cr = datum.coroots[sj]
            out = [a - k * b for a, b in zip(out, cr)]
        return tuple(out)

    def _is_levi_simple(self, p: SemistdParabolic, root_idx: int) -> bool:
        """Is this positive root of M not a sum of two positive roots of M?"""
        datum = self.datum
        pos_m = [i for i in p.r_m if i < datum.nposroots]
        target = datum.roots[root_idx]
        for a in pos_m:
            for b in pos_m:
                if tuple(x + y for x, y in zip(datum.roots[a], datum.roots[b])) \
                        == target:
                    return False
        return True

    def omega_g_elements(self):
        """All of Omega_G for finite Lambda_G, as {eta_G value: element id}."""
        from .roots import standard_parabolic
        p_full = standard_parabolic(self.datum, frozenset(self.datum.simple_idx))
        lam = self.datum.lambda_g
        if lam.order() is None:
            raise ValueError("Omega_G is infinite for this datum")
        return {cls: self.omega_element(p_full, cls) for cls in lam.elements()}

    # -- Bruhat order ------------------------------------------------------------

    def bruhat_leq(self, xid: int, yid: int) -> bool:
        """Subword criterion; elements in different components are incomparable."""
        if self.omega_class(xid) != self.omega_class(yid):
            return False
        key = (xid, yid)
        got = self._bruhat.get(key)
        if got is not None:
            return got
        lx, ly = self.length(xid), self.length(yid)
        if lx > ly:
            res = False
        elif xid == yid:
            res = True
        else:
            word, tau = self.reduced_word(yid)
            cur = self.mul(xid, self.inv(tau))
            for i in word:
                nxt = self.mul(self.gens[i], cur)
                if self.length(nxt) < self.length(cur):
                    cur = nxt
            res = cur == self.identity
        self._bruhat[key] = res
        return res

    # -- folding walls -------------------------------------------------------------

    def wall_data(self, cid: int, gen: int) -> tuple[int, int, bool]:
        """
        For the step c -> c * s_gen: the wall between the two alcoves as a pair
        (root index beta of a positive root, level j), plus whether c.a lies on
        the upper side {beta > j}.
        """
        key = (cid, gen)
        got = self._wall.get(key)
        if got is not None:
            return got
        datum = self.datum
        npos = datum.nposroots
        lam, u = self._elts[cid]
        if gen == 0:
            base_root, base_level = datum.theta_idx, 1
        else:
            base_root, base_level = datum.simple_idx[gen - 1], 0
        beta = datum.weyl.root_act[u][base_root]
        j = base_level
        if beta >= npos:
            beta -= npos
            j = -j
        j += datum.pairing(beta, lam)
        kc = self.k_alpha(beta, cid)
        upper = kc == j + 1
        assert upper or kc == j, "step must cross the computed wall"
        got = (beta, j, upper)
        self._wall[key] = got
        return got

    # -- text form -------------------------------------------------------------------

    def format(self, xid: int) -> str:
        lam, w = self._elts[xid]
        parts = []
        if any(lam):
            parts.append("t[" + ",".join(str(v) for v in lam) + "]")
        if w != 0:
            parts.extend("s%d" % (i + 1) for i in self.datum.weyl.words[w])
        if not parts:
            return "e"
        return "*".join(parts)

    def parse(self, text: str) -> int:
        datum = self.datum
        out = self.identity
        toks = [t for t in text.replace("*", " ").replace("·", " ").split() if t]
        for tok in toks:
            if tok == "e":
                continue
            if tok.startswith("t[") and tok.endswith("]"):
                lam = tuple(int(v) for v in tok[2:-1].split(","))
                if len(lam) != datum.d:
                    raise ValueError(f"translation needs {datum.d} coordinates")
                out = self.mul(out, self.intern(lam, 0))
            elif tok.startswith("o[") and tok.endswith("]"):
                cls = tuple(int(v) for v in tok[2:-1].split(","))
                from .roots import standard_parabolic
                p = standard_parabolic(datum, frozenset(datum.simple_idx))
                out = self.mul(out, self.omega_element(p, cls))
            elif tok.startswith("tau"):
                k = int(tok.split("^")[1]) if "^" in tok else 1
                gen_cls = self._cyclic_omega_generator()
                lam_g = datum.lambda_g
                cls = lam_g.zero()
                step = gen_cls if k >= 0 else lam_g.neg(gen_cls)
                for _ in range(abs(k)):
                    cls = lam_g.add(cls, step)
                from .roots import standard_parabolic
                p = standard_parabolic(datum, frozenset(datum.simple_idx))
                out = self.mul(out, self.omega_element(p, cls))
            elif tok.startswith("s"):
                i = int(tok[1:])
                if not 0 <= i <= len(self.gens) - 1:
                    raise ValueError(f"bad generator {tok}")
                out = self.mul(out, self.gens[i])
            else:
                raise ValueError(f"cannot parse token {tok!r}")
        return out

    def _cyclic_omega_generator(self):
        lam = self.datum.lambda_g
        nz = [i for i, m in enumerate(lam.moduli) if m != 1]
        if len(nz) != 1:
            raise ValueError("tau shorthand needs cyclic Lambda_G")
        return tuple(1 if i == nz[0] else 0 for i in range(lam.d))


def _solve_square(mat, rhs):
    """Exact solve of a small square rational system."""
    n = len(mat)
    a = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(i for i in range(col, n) if a[i][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                c = a[i][col]
                a[i] = [x - c * y for x, y in zip(a[i], a[col])]
    return [a[i][n] for i in range(n)]


def _ball(basis, radius, d):
    """All integer combinations of basis vectors with |coefficients| <= radius."""
    def rec(i, acc):
        if i == len(basis):
            yield tuple(acc)
            return
        for c in range(-radius, radius + 1):
            yield from rec(i + 1, [a + c * b for a, b in zip(acc, basis[i])])
    yield from rec(0, [0] * d)


_context_cache: dict[int, AffineWeyl] = {}


def affine_context(datum: RootDatum) -> AffineWeyl:
    got = _context_cache.get(id(datum))
    if got is None:
        got = AffineWeyl(datum)
        _context_cache[id(datum)] = got
    return got
