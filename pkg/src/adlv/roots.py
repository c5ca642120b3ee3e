"""
Root data for split reductive groups, with exact integer arithmetic.

A ``RootDatum`` fixes once and for all:

  * a coordinate lattice Z^d carrying the cocharacters X_*(A), possibly
    modulo a central vector (type A adjoint lattices are realized as
    Z^n / Z(1,..,1), so cocharacters keep their familiar n-tuple form);
  * the roots as integer covectors and the coroots as integer vectors,
    enumerated in a fixed order;
  * the finite Weyl group W as integer matrices, fully indexed, with
    precomputed action tables on roots and generators;
  * the quotients Lambda_M = X_*(A) / (coroot lattice of M) for Levi
    subgroups M, via Smith normal form.

Supported Cartan types: A1-A4, B2, B3, C2, C3, D4, G2, and GL_n (n <= 5).

Lattice variants.  ``GL`` is the full lattice Z^n.  For the other types the
variant labels ``SL``, ``sc``, ``simply-connected``, ``adjoint`` and ``PGL``
all select the *adjoint* coweight lattice, which carries the full group Omega
of length-zero elements (for type A this is Z^n mod the diagonal, so e.g. the
A2 datum has fundamental group Z/3).  The bare coroot lattice, with trivial
fundamental group, is available as variant ``coroot``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .snf import LatticeQuotient

WEYL_ORDERS = {"A": lambda n: _fact(n + 1), "B": lambda n: 2 ** n * _fact(n),
               "C": lambda n: 2 ** n * _fact(n), "D": lambda n: 2 ** (n - 1) * _fact(n),
               "G": lambda n: 12}


def _fact(n):
    r = 1
    for i in range(2, n + 1):
        r *= i
    return r


def cartan_matrix(ctype: str, rank: int):
    """Cartan matrix a[i][j] = <alpha_i, alpha_j^vee> (Bourbaki numbering)."""
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i in range(rank - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    if ctype == "B" and rank >= 2:
        a[rank - 2][rank - 1] = -2
    elif ctype == "C" and rank >= 2:
        a[rank - 1][rank - 2] = -2
    elif ctype == "D":
        if rank < 3:
            raise ValueError("D needs rank >= 3")
        a[rank - 2][rank - 1] = a[rank - 1][rank - 2] = 0
        a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1
        a[rank - 2][rank - 3] = a[rank - 3][rank - 2] = -1
    elif ctype == "G":
        if rank != 2:
            raise ValueError("G2 only")
        a = [[2, -1], [-3, 2]]
    elif ctype != "A":
        raise ValueError(f"unsupported type {ctype}")
    return a


class WeylGroup:
    """Finite Weyl group, fully enumerated and indexed.

    Elements are indices into ``self.mats`` (integer matrices acting on
    coweight column vectors).  Tables:

      * ``root_act[w][r]``: index of w(beta_r) among the roots
      * ``lmul[i][w]`` / ``rmul[w][i]``: products s_i * w and w * s_i
      * ``inv[w]``, ``length[w]``
    """

    def __init__(self, d, roots, coroots, simple_idx, nf):
        self.d = d
        self.simple_idx = simple_idx
        r = len(simple_idx)
        self.rank = r
        gens = []
        for i in simple_idx:
            al, av = roots[i], coroots[i]
            gens.append(tuple(tuple((1 if a == b else 0) - av[a] * al[b] for b in range(d))
                              for a in range(d)))
        ident = tuple(tuple(1 if a == b else 0 for b in range(d)) for a in range(d))
        mats = [ident]
        index = {self._key(ident, roots, coroots, nf): 0}
        frontier = [0]
        words = {0: ()}
        while frontier:
            new = []
            for w in frontier:
                for gi, g in enumerate(gens):
                    m = self._matmul(g, mats[w])
                    k = self._key(m, roots, coroots, nf)
                    if k not in index:
                        index[k] = len(mats)
                        words[len(mats)] = (gi,) + words[w]
                        mats.append(m)
                        new.append(index[k])
            frontier = new
        self.mats = mats
        self._index = index
        self._roots = roots
        self._coroots = coroots
        self._nf = nf
        self.n = len(mats)
        self.words = words  # reduced words (as tuples of simple indices 0..r-1)
        coroot_index = {tuple(c): i for i, c in enumerate(coroots)}
        self.root_act = [tuple(coroot_index[self.apply(w, coroots[i])] for i in range(len(roots)))
                         for w in range(self.n)]
        self.lmul = [[self._index[self._key(self._matmul(gens[i], mats[w]), roots, coroots, nf)]
                      for w in range(self.n)] for i in range(r)]
        self.rmul = [[self._index[self._key(self._matmul(mats[w], gens[i]), roots, coroots, nf)]
                      for i in range(r)] for w in range(self.n)]
        self.inv = [0] * self.n
        for w in range(self.n):
            # words[w] = (i1..ik) with w = s_{i1}...s_{ik}; inverse is reversed
            v = 0
            for i in words[w]:
                v = self.lmul[i][v]
            self.inv[w] = v
        npos = len(roots) // 2
        self.length = [sum(1 for i in range(npos) if self.root_act[w][i] >= npos)
                       for w in range(self.n)]
        self._mul_cache: dict[tuple[int, int], int] = {}
        self.w0 = max(range(self.n), key=lambda w: self.length[w])

    @staticmethod
    def _matmul(a, b):
        n = len(a)
        return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(n)) for j in range(n))
                     for i in range(n))

    def _key(self, m, roots, coroots, nf):
        # matrices may differ by the central quotient; key by action on coroots
        return tuple(nf(tuple(sum(m[a][b] * c[b] for b in range(self.d)) for a in range(self.d)))
                     for c in coroots)

    def apply(self, w: int, vec):
        m = self.mats[w]
        return tuple(sum(m[a][b] * vec[b] for b in range(self.d)) for a in range(self.d))

    def apply_frac(self, w: int, vec):
        m = self.mats[w]
        return tuple(sum(Fraction(m[a][b]) * vec[b] for b in range(self.d)) for a in range(self.d))

    def mul(self, a: int, b: int) -> int:
        key = (a, b)
        got = self._mul_cache.get(key)
        if got is None:
            v = b
            for i in reversed(self.words[a]):
                v = self.lmul[i][v]
            self._mul_cache[key] = got = v
        return got

    def order_of(self, w: int) -> int:
        n, v = 1, w
        while v != 0:
            v = self.mul(v, w)
            n += 1
        return n

    def elements(self):
        return range(self.n)


@dataclass(frozen=True)
class DatumSpec:
    ctype: str
    rank: int
    variant: str


class RootDatum:
    """Immutable root datum; see module docstring for the conventions."""

    def __init__(self, ctype: str, rank: int, variant: str):
        ctype = ctype.upper()
        variant = _canonical_variant(ctype, variant)
        self.spec = DatumSpec(ctype, rank, variant)
        if ctype == "GL":
            self._build_type_a(rank, gl=True)
        elif ctype == "A":
            self._build_type_a(rank + 1, gl=False)
        elif ctype in ("B", "C", "D", "G"):
            self._build_from_cartan(ctype, rank, variant)
        else:
            raise ValueError(f"unsupported Cartan type {ctype!r}")
        self._check_support(ctype, rank)
        self.nposroots = len(self.roots) // 2
        self.weyl = WeylGroup(self.d, self.roots, self.coroots,
                              self.simple_idx, self.coweight_nf)
        expected = WEYL_ORDERS[("A" if ctype == "GL" else ctype)](
            rank - 1 if ctype == "GL" else rank)
        assert self.weyl.n == expected, (self.spec, self.weyl.n, expected)
        self.two_rho = tuple(sum(self.roots[i][j] for i in range(self.nposroots))
                             for j in range(self.d))
        self._lambda_cache: dict[frozenset, LatticeQuotient] = {}
        self.lambda_g = self.levi_lattice_quotient(frozenset(range(len(self.roots))))
        self.theta_idx = self._highest_root()
        self._sanity_checks()

    # -- construction -------------------------------------------------------

    def _build_type_a(self, n, gl):
        self.d = n
        roots = []
        for i in range(n):
            for j in range(n):
                if i != j:
                    v = [0] * n
                    v[i], v[j] = 1, -1
                    roots.append(tuple(v))
        pos = [r for r in roots if r.index(1) < r.index(-1)]
        neg = [tuple(-x for x in r) for r in pos]
        self.roots = pos + neg
        self.coroots = list(self.roots)  # self-dual in these coordinates
        self.simple_idx = [self.roots.index(tuple([0] * i + [1, -1] + [0] * (n - i - 2)))
                           for i in range(n - 1)]
        if gl:
            self.central = None
        else:
            self.central = tuple([1] * n)

    def _build_from_cartan(self, ctype, rank, variant):
        a = cartan_matrix(ctype, rank)
        self.d = rank
        if variant == "coroot":
            # basis = simple coroots: coroot_j = e_j, root_i = row i of Cartan
            simple_roots = [tuple(a[i]) for i in range(rank)]
            simple_coroots = [tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank)]
        else:
            # adjoint: basis = fundamental coweights: root_i = e_i,
            # coroot_j = column j of Cartan
            simple_roots = [tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank)]
            simple_coroots = [tuple(a[i][j] for i in range(rank)) for j in range(rank)]
        self.central = None
        roots = list(simple_roots)
        coroots = list(simple_coroots)
        seen = set(roots)
        frontier = list(range(rank))
        while frontier:
            new = []
            for ri in frontier:
                for si in range(rank):
                    al, av = simple_roots[si], simple_coroots[si]
                    b, bv = roots[ri], coroots[ri]
                    c = sum(b[t] * av[t] for t in range(rank))
                    nb = tuple(b[t] - c * al[t] for t in range(rank))
                    if nb not in seen:
                        seen.add(nb)
                        cv = sum(al[t] * bv[t] for t in range(rank))
                        roots.append(nb)
                        coroots.append(tuple(bv[t] - cv * av[t] for t in range(rank)))
                        new.append(len(roots) - 1)
            frontier = new
        pos, neg, posv, negv = [], [], [], []
        for r, c in zip(roots, coroots):
            coeffs = self._alpha_coords(r, simple_roots)
            if all(x >= 0 for x in coeffs):
                pos.append(r)
                posv.append(c)
            else:
                neg.append(r)
                negv.append(c)
        order = sorted(range(len(pos)), key=lambda i: pos[i])
        self.roots = [pos[i] for i in order] + [tuple(-x for x in pos[i]) for i in order]
        self.coroots = [posv[i] for i in order] + [tuple(-x for x in posv[i]) for i in order]
        self.simple_idx = [self.roots.index(tuple(s)) for s in simple_roots]

    @staticmethod
    def _alpha_coords(r, simple_roots):
        # solve r = sum c_i alpha_i over Q (simple roots are a basis)
        n = len(simple_roots)
        m = [[Fraction(simple_roots[j][t]) for j in range(n)] + [Fraction(r[t])]
             for t in range(n)]
        for col in range(n):
            piv = next(i for i in range(col, n) if m[i][col] != 0)
            m[col], m[piv] = m[piv], m[col]
            pv = m[col][col]
            m[col] = [x / pv for x in m[col]]
            for i in range(n):
                if i != col and m[i][col] != 0:
                    c = m[i][col]
                    m[i] = [x - c * y for x, y in zip(m[i], m[col])]
        return [m[i][n] for i in range(n)]

    def _check_support(self, ctype, rank):
        ok = {("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3),
              ("C", 2), ("C", 3), ("D", 4), ("G", 2),
              ("GL", 2), ("GL", 3), ("GL", 4), ("GL", 5)}
        if (ctype, rank) not in ok:
            raise ValueError(f"unsupported type/rank {ctype}{rank}")

    def _highest_root(self):
        heights = []
        simple_roots = [self.roots[i] for i in self.simple_idx]
        for i in range(self.nposroots):
            heights.append(sum(self._alpha_coords(self.roots[i], simple_roots)))
        return max(range(self.nposroots), key=lambda i: heights[i])

    def _sanity_checks(self):
        counts = {"A": lambda n: n * (n + 1), "B": lambda n: 2 * n * n,
                  "C": lambda n: 2 * n * n, "D": lambda n: 2 * n * (n - 1),
                  "G": lambda n: 12}
        ct = "A" if self.spec.ctype == "GL" else self.spec.ctype
        rk = self.spec.rank - 1 if self.spec.ctype == "GL" else self.spec.rank
        assert len(self.roots) == counts[ct](rk), (self.spec, len(self.roots))
        for i, (r, c) in enumerate(zip(self.roots, self.coroots)):
            assert self.pairing(i, c) == 2, "pairing <alpha, alpha^vee> must be 2"
        # 2rho pairs evenly with coroots (rho integral on coroots)
        for c in self.coroots:
            assert sum(self.two_rho[j] * c[j] for j in range(self.d)) % 2 == 0
        p = self.base_point()
        for i in range(len(self.roots)):
            v = self.pairing_frac(i, p)
            assert v.denominator != 1, "base point must be generic"
            if i < self.nposroots:
                assert 0 < v < 1, "base point must lie in the base alcove"

    # -- basic operations ----------------------------------------------------

    def coweight_nf(self, vec):
        """Canonical representative of a cocharacter (mod the central line)."""
        if self.central is None:
            return tuple(vec)
        s = sum(vec)
        n = self.d
        k = s // n
        return tuple(x - k for x in vec)

    def coweight_nf_frac(self, vec):
        if self.central is None:
            return tuple(Fraction(x) for x in vec)
        s = sum(Fraction(x) for x in vec)
        n = self.d
        return tuple(Fraction(x) - s / n for x in vec)

    def pairing(self, root_idx: int, vec) -> int:
        r = self.roots[root_idx]
        return sum(r[j] * vec[j] for j in range(self.d))

    def pairing_frac(self, root_idx: int, vec) -> Fraction:
        r = self.roots[root_idx]
        return sum(Fraction(r[j]) * vec[j] for j in range(self.d))

    def pairing_cov(self, cov, vec):
        return sum(Fraction(cov[j]) * vec[j] for j in range(self.d))

    def base_point(self):
        """A generic interior point of the base alcove, as exact fractions."""
        got = getattr(self, "_base_point", None)
        if got is not None:
            return got
        got = self._base_point_compute()
        self._base_point = got
        return got

    def _base_point_compute(self):
        if self.spec.ctype in ("A", "GL"):
            n = self.d
            return tuple(Fraction(n - 1 - i, n) for i in range(n))
        simple_roots = [self.roots[i] for i in self.simple_idx]
        theta_coeffs = self._alpha_coords(self.roots[self.theta_idx], simple_roots)
        r = self.d
        fw = self._fundamental_coweights()
        p = [Fraction(0)] * r
        for i in range(r):
            for j in range(r):
                p[j] += fw[i][j] / theta_coeffs[i]
        return tuple(x / (r + 1) for x in p)

    def _fundamental_coweights(self):
        """Rational vectors omega_i with <alpha_j, omega_i> = delta_ij."""
        r = len(self.simple_idx)
        out = []
        for i in range(r):
            m = [[Fraction(self.roots[self.simple_idx[j]][t]) for t in range(self.d)]
                 for j in range(r)]
            rhs = [Fraction(1 if j == i else 0) for j in range(r)]
            out.append(self._solve_frac(m, rhs))
        return out

    def _solve_frac(self, m, rhs):
        # least-norm-ish solve of m x = rhs (rows m, d unknowns); for our data
        # the system is consistent; free directions are set to 0 after
        # eliminating, using column pivots.
        rows, d = len(m), self.d
        a = [row[:] + [rhs[i]] for i, row in enumerate(m)]
        pivots = []
        rr = 0
        for col in range(d):
            piv = next((i for i in range(rr, rows) if a[i][col] != 0), None)
            if piv is None:
                continue
            a[rr], a[piv] = a[piv], a[rr]
            pv = a[rr][col]
            a[rr] = [x / pv for x in a[rr]]
            for i in range(rows):
                if i != rr and a[i][col] != 0:
                    c = a[i][col]
                    a[i] = [x - c * y for x, y in zip(a[i], a[rr])]
            pivots.append(col)
            rr += 1
            if rr == rows:
                break
        x = [Fraction(0)] * d
        for k, col in enumerate(pivots):
            x[col] = a[k][d]
        return tuple(x)

    # -- lattices ------------------------------------------------------------

    def levi_lattice_quotient(self, levi_root_idxs: frozenset) -> LatticeQuotient:
        """Lambda_M = X_*(A) / (Z-span of the coroots of M + central line)."""
        key = frozenset(levi_root_idxs)
        got = self._lambda_cache.get(key)
        if got is None:
            rels = [list(self.coroots[i]) for i in sorted(key)]
            if self.central is not None:
                rels.append(list(self.central))
            if not rels:
                rels = [[0] * self.d]
            got = LatticeQuotient(self.d, rels)
            self._lambda_cache[key] = got
        return got

    def eta_finite(self, vec, levi_root_idxs=None):
        """Image of a cocharacter in Lambda_M (M = G when no roots given)."""
        lat = self.lambda_g if levi_root_idxs is None \
            else self.levi_lattice_quotient(levi_root_idxs)
        return lat.normal_form(vec)

    def dominant(self, vec):
        """The dominant representative of a rational coweight, canonical form."""
        v = list(self.coweight_nf_frac(vec))
        moved = True
        while moved:
            moved = False
            for i, ri in enumerate(self.simple_idx):
                if self.pairing_frac(ri, v) < 0:
                    c = self.pairing_frac(ri, v)
                    cr = self.coroots[ri]
                    v = [x - c * cr[j] for j, x in enumerate(v)]
                    moved = True
        return self.coweight_nf_frac(v)

    def is_dominant(self, vec) -> bool:
        return all(self.pairing_frac(ri, vec) >= 0 for ri in self.simple_idx)

    def in_positive_coroot_cone(self, vec) -> bool:
        """Is vec a nonnegative rational combination of the simple coroots?"""
        if self.central is not None:
            vec = self.coweight_nf_frac(vec)
        coeffs = self._coroot_coords(vec)
        if coeffs is None:
            return False
        return all(c >= 0 for c in coeffs)

    def _coroot_coords(self, vec):
        """Coordinates of vec in the simple-coroot basis (None if outside span)."""
        r = len(self.simple_idx)
        cols = [self.coroots[ri] for ri in self.simple_idx]
        a = [[Fraction(cols[j][t]) for j in range(r)] + [Fraction(vec[t])]
             for t in range(self.d)]
        rr = 0
        pivots = []
        for col in range(r):
            piv = next((i for i in range(rr, self.d) if a[i][col] != 0), None)
            if piv is None:
                continue
            a[rr], a[piv] = a[piv], a[rr]
            pv = a[rr][col]
            a[rr] = [x / pv for x in a[rr]]
            for i in range(self.d):
                if i != rr and a[i][col] != 0:
                    c = a[i][col]
                    a[i] = [x - c * y for x, y in zip(a[i], a[rr])]
            pivots.append(col)
            rr += 1
        coeffs = [Fraction(0)] * r
        for k, col in enumerate(pivots):
            coeffs[col] = a[k][r]
        # verify (handles the central quotient: compare normal forms)
        chk = [sum(coeffs[j] * cols[j][t] for j in range(r)) for t in range(self.d)]
        if self.coweight_nf_frac(chk) != self.coweight_nf_frac(vec):
            return None
        return coeffs

    def reflection_index(self, root_idx: int) -> int:
        """Index in W of the reflection in the given root."""
        got = getattr(self, "_refl_cache", None)
        if got is None:
            got = self._refl_cache = {}
        if root_idx in got:
            return got[root_idx]
        W = self.weyl
        bv = self.coroots[root_idx]
        want = tuple(
            self.coweight_nf(tuple(c[t] - self.pairing(root_idx, c) * bv[t]
                                   for t in range(self.d)))
            for c in self.coroots)
        for w in W.elements():
            if tuple(self.coweight_nf(W.apply(w, c)) for c in self.coroots) == want:
                got[root_idx] = w
                return w
        raise AssertionError("reflection not found")

    def reflection_subgroup(self, root_idxs) -> frozenset:
        """The subgroup of W generated by the reflections in the given roots."""
        gens = [self.reflection_index(i) for i in root_idxs]
        seen = {0}
        frontier = [0]
        while frontier:
            new = []
            for w in frontier:
                for g in gens:
                    v = self.weyl.mul(g, w)
                    if v not in seen:
                        seen.add(v)
                        new.append(v)
            frontier = new
        return frozenset(seen)

    def json_descriptor(self) -> dict:
        return {"type": self.spec.ctype, "rank": self.spec.rank,
                "variant": self.spec.variant}


def _canonical_variant(ctype, variant):
    v = (variant or "").replace("_", "-").lower()
    if ctype == "GL":
        if v in ("", "gl"):
            return "GL"
        raise ValueError("GL_n supports only the GL variant")
    if v in ("", "sl", "sc", "simply-connected", "adjoint", "pgl", "ad"):
        return "adjoint"
    if v in ("coroot", "qv"):
        return "coroot"
    raise ValueError(f"unknown lattice variant {variant!r}")


_datum_cache: dict[DatumSpec, RootDatum] = {}


def build_root_datum(ctype: str, rank: int, variant: str = "") -> RootDatum:
    """Build (and cache) the root datum for a supported type/rank/variant."""
    ct = ctype.upper()
    spec = DatumSpec(ct, rank, _canonical_variant(ct, variant))
    got = _datum_cache.get(spec)
    if got is None:
        got = RootDatum(ct, rank, variant)
        _datum_cache[spec] = got
    return got


class SemistdParabolic:
    """
    A semistandard parabolic P = MN, encoded by (conjugator u, subset J of the
    simple roots): P = u P_J u^{-1} with P_J standard.  u is normalized to the
    minimal-length representative of its coset u W_J.

    Carries the root sets R_M, R_N, the Weyl subgroup W_M, the half sum of
    R_N, and the lattice quotient Lambda_M.
    """

    def __init__(self, datum: RootDatum, u: int, levi_simple: frozenset):
        self.datum = datum
        W = datum.weyl
        self.levi_simple = frozenset(levi_simple)
        # normalize u to minimal length in u W_J
        u0 = u
        moved = True
        while moved:
            moved = False
            for i_pos, ri in enumerate(datum.simple_idx):
                if ri in self.levi_simple:
                    cand = W.rmul[u0][i_pos]
                    if W.length[cand] < W.length[u0]:
                        u0 = cand
                        moved = True
        self.u = u0
        pos_j = [datum.simple_idx.index(ri) for ri in sorted(self.levi_simple)]
        wm = {0}
        frontier = [0]
        while frontier:
            new = []
            for w in frontier:
                for i in pos_j:
                    v = W.lmul[i][w]
                    if v not in wm:
                        wm.add(v)
                        new.append(v)
            frontier = new
        self.wm_std = frozenset(wm)
        uinv = W.inv[self.u]
        self.w_m = frozenset(W.mul(W.mul(self.u, w), uinv) for w in self.wm_std)
        npos = datum.nposroots
        std_m_roots = set()
        for i in range(len(datum.roots)):
            base = i if i < npos else i - npos
            # roots of the standard Levi M_J: support inside J
            if self._in_span(base, self.levi_simple):
                std_m_roots.add(i)
        act = W.root_act[self.u]
        self.r_m = frozenset(act[i] for i in std_m_roots)
        std_n = [i for i in range(npos) if i not in std_m_roots]
        self.r_n = frozenset(act[i] for i in std_n)
        self.r_nbar = frozenset(j + npos if j < npos else j - npos for j in self.r_n)
        self.two_rho_n = tuple(sum(datum.roots[i][t] for i in self.r_n)
                               for t in range(datum.d))
        self.lattice = datum.levi_lattice_quotient(self.r_m)

    def _in_span(self, pos_root_idx, levi_simple):
        datum = self.datum
        simple_roots = [datum.roots[i] for i in datum.simple_idx]
        coeffs = datum._alpha_coords(datum.roots[pos_root_idx], simple_roots)
        for c, ri in zip(coeffs, datum.simple_idx):
            if c != 0 and ri not in levi_simple:
                return False
        return True

    @property
    def is_standard(self):
        return self.u == 0

    @property
    def is_full(self):
        return len(self.levi_simple) == len(self.datum.simple_idx)

    def eta_m(self, vec):
        return self.lattice.normal_form(vec)

    def key(self):
        return (self.u, tuple(sorted(self.levi_simple)))

    def levi_key(self):
        return self.r_m

    def __repr__(self):
        return f"Parabolic(u=w{self.u}, J={sorted(self.levi_simple)})"


def semistandard_parabolics(datum: RootDatum):
    """All semistandard parabolics, one per (min-coset rep, J) pair."""
    out = []
    seen = set()
    W = datum.weyl
    subsets = [frozenset()]
    for ri in datum.simple_idx:
        subsets = subsets + [s | {ri} for s in subsets]
    for J in subsets:
        for u in W.elements():
            p = SemistdParabolic(datum, u, J)
            if p.key() not in seen:
                seen.add(p.key())
                out.append(p)
    out.sort(key=lambda p: (-len(p.levi_simple), p.u, tuple(sorted(p.levi_simple))))
    return out


def semistandard_levis(datum: RootDatum):
    """Distinct semistandard Levis, as {R_M root-index set: [parabolics]}."""
    levis: dict[frozenset, list] = {}
    for p in semistandard_parabolics(datum):
        levis.setdefault(p.levi_key(), []).append(p)
    return levis


def standard_parabolic(datum: RootDatum, levi_simple) -> SemistdParabolic:
    return SemistdParabolic(datum, 0, frozenset(levi_simple))
