"""
The affine Iwahori-Hecke algebra over Z[q], in the standard basis T_x.

Multiplication is the usual one: T_x T_y = T_{xy} when lengths add, and the
quadratic relation T_s^2 = (q-1) T_s + q T_e for the affine simple
reflections; length-zero elements act by permuting the basis, T_x T_tau =
T_{x tau}.

Polynomial representation.  Every coefficient arising from standard-basis
products is a nonnegative combination of powers of (q-1) -- each elementary
step multiplies by q = (q-1) + 1 or by (q-1).  Polynomials are therefore
packed into single Python ints, base 2**PBITS digits = coefficients in the
basis {(q-1)^i}: addition is integer addition, multiplication by (q-1) is a
shift, and deg_q equals the top digit index.  Digits stay far below 2**PBITS
for every product length this package can reach (coefficient sums grow by at
most a factor of 3 per letter).

Structure constants C(x, y, z) are defined by T_x T_y = sum_z C(x,y,z) T_z;
their q-degrees are the dimensions the folding engine computes by walking
galleries, which makes the two modules independent oracles for each other.
"""

from __future__ import annotations

from .affine import AffineWeyl

PBITS = 96
_LOW = (1 << PBITS) - 1

POLY_ONE = 1


def poly_qm1(v: int) -> int:
    """Multiply by (q-1)."""
    return v << PBITS


def poly_q(v: int) -> int:
    """Multiply by q = (q-1) + 1."""
    return (v << PBITS) + v


def poly_deg(v: int) -> int:
    """Degree in q (= degree in q-1); only for v != 0."""
    return (v.bit_length() - 1) // PBITS


def poly_qm1_coeffs(v: int) -> list[int]:
    """Coefficients in the (q-1)-power basis, low degree first."""
    out = []
    while v:
        out.append(v & _LOW)
        v >>= PBITS
    return out or [0]


def poly_q_coeffs(v: int) -> list[int]:
    """Coefficients in the q-power basis, low degree first."""
    cs = poly_qm1_coeffs(v)
    n = len(cs)
    out = [0] * n
    # (q-1)^i = sum_j binom(i,j) (-1)^{i-j} q^j
    binom = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        binom[i][0] = 1
        for j in range(1, i + 1):
            binom[i][j] = binom[i - 1][j - 1] + (binom[i - 1][j] if j <= i - 1 else 0)
    for i, c in enumerate(cs):
        for j in range(i + 1):
            out[j] += c * binom[i][j] * (-1) ** (i - j)
    return out


def poly_eval(v: int, q: int) -> int:
    total = 0
    for i, c in enumerate(poly_qm1_coeffs(v)):
        total += c * (q - 1) ** i
    return total


def poly_str(v: int) -> str:
    cs = poly_q_coeffs(v)
    terms = []
    for i, c in enumerate(cs):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            base = "q" if i == 1 else f"q^{i}"
            terms.append(base if c == 1 else f"{c}*{base}")
    return " + ".join(reversed(terms)).replace("+ -", "- ") or "0"


class Hecke:
    """Hecke algebra bound to an affine Weyl context.

    Elements are dicts {element id: packed polynomial}.  A ``length`` override
    and generator list can be supplied to realize the Hecke algebra of a Levi
    subgroup on the same element set.
    """

    def __init__(self, ctx: AffineWeyl, gens=None, length=None):
        self.ctx = ctx
        self.gens = tuple(gens) if gens is not None else ctx.gens
        self._len = length if length is not None else ctx.length

    def unit(self, xid=None) -> dict:
        if xid is None:
            xid = self.ctx.identity
        return {xid: POLY_ONE}

    def mul_gen(self, h: dict, g: int) -> dict:
        """h * T_s for a generator element s (must have length 1)."""
        ctx = self.ctx
        ln = self._len
        out: dict[int, int] = {}
        for u, c in h.items():
            us = ctx.mul(u, g)
            if ln(us) > ln(u):
                out[us] = out.get(us, 0) + c
            else:
                out[u] = out.get(u, 0) + poly_qm1(c)
                out[us] = out.get(us, 0) + poly_q(c)
        return out

    def mul_omega(self, h: dict, tau: int) -> dict:
        if tau == self.ctx.identity:
            return dict(h)
        ctx = self.ctx
        return {ctx.mul(u, tau): c for u, c in h.items()}

    def mul_basis(self, h: dict, yid: int, word=None, tau=None) -> dict:
        """h * T_y, with y given directly or by a reduced word and omega part."""
        if word is None:
            word, tau = self.reduced(yid)
        out = h
        for i in word:
            out = self.mul_gen(out, self.gens[i])
        if tau is not None and tau != self.ctx.identity:
            out = self.mul_omega(out, tau)
        return out

    def reduced(self, yid: int):
        if self.gens == self.ctx.gens:
            return self.ctx.reduced_word(yid)
        # Levi context: peel descents with the supplied generators
        word = []
        cur = yid
        n = self._len(cur)
        while n > 0:
            for i, g in enumerate(self.gens):
                nxt = self.ctx.mul(g, cur)
                ln = self._len(nxt)
                if ln < n:
                    word.append(i)
                    cur, n = nxt, ln
                    break
            else:
                raise AssertionError("no descent in Levi context")
        return tuple(word), cur

    def mul(self, h1: dict, h2: dict) -> dict:
        out: dict[int, int] = {}
        for y, c in h2.items():
            word, tau = self.reduced(y)
            part = self.mul_basis({u: v * c for u, v in h1.items()} if c != POLY_ONE
                                  else dict(h1), y, word, tau)
            for u, v in part.items():
                out[u] = out.get(u, 0) + v
        return {u: v for u, v in out.items() if v}

    def t(self, xid: int) -> dict:
        return {xid: POLY_ONE}

    def product_of(self, xids) -> dict:
        out = self.unit()
        for x in xids:
            out = self.mul_basis(out, x)
        return out

    def structure_constant(self, xid: int, yid: int, zid: int) -> int:
        """C(x, y, z) as a packed polynomial (0 if absent)."""
        prod = self.mul_basis(self.t(xid), yid)
        return prod.get(zid, 0)

    def structure_deg(self, xid: int, yid: int, zid: int):
        """deg_q C(x, y, z), or None when the constant vanishes."""
        c = self.structure_constant(xid, yid, zid)
        return poly_deg(c) if c else None

    def support(self, h: dict):
        return {u for u, c in h.items() if c}

    def coset_product_support(self, xids):
        """Support of T_{x_1} ... T_{x_r}: the double cosets in the product set."""
        return self.support(self.product_of(xids))

    def specialize(self, h: dict, q: int) -> dict:
        return {u: poly_eval(c, q) for u, c in h.items() if poly_eval(c, q) != 0}
