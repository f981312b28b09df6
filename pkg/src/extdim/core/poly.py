"""Univariate polynomials over an exact field, as coefficient lists (constant first)."""
from __future__ import annotations

from fractions import Fraction

import sympy

from .field import QQ, PrimeField


def trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def add(F, p, q):
    n = max(len(p), len(q))
    z = F.zero
    return trim([(p[i] if i < len(p) else z) + (q[i] if i < len(q) else z) for i in range(n)])


def sub(F, p, q):
    return add(F, p, [-c for c in q])


def mul(F, p, q):
    if not p or not q:
        return []
    out = [F.zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] = out[i + j] + a * b
    return trim(out)


def power(F, p, k):
    out = [F.one]
    for _ in range(k):
        out = mul(F, out, p)
    return out


def divmod_(F, p, q):
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = trim(p)
    quo = [F.zero] * max(len(r) - len(q) + 1, 0)
    lead_inv = 1 / q[-1]
    while len(r) >= len(q) and r:
        c = r[-1] * lead_inv
        k = len(r) - len(q)
        quo[k] = c
        for i, b in enumerate(q):
            r[i + k] = r[i + k] - c * b
        r = trim(r)
    return trim(quo), r


def egcd(F, a, b):
    """``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    r0, r1 = trim(a), trim(b)
    s0, s1 = [F.one], []
    t0, t1 = [], [F.one]
    while r1:
        qt, r = divmod_(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(F, s0, mul(F, qt, s1))
        t0, t1 = t1, sub(F, t0, mul(F, qt, t1))
    if not r0:
        return [], s0, t0
    inv = 1 / r0[-1]
    return ([c * inv for c in r0], [c * inv for c in s0], [c * inv for c in t0])


def _to_sympy(F, p):
    x = sympy.Symbol("x")
    if F.char == 0:
        coeffs = [sympy.Rational(int(c.numerator), int(c.denominator)) for c in reversed(p)]
        return sympy.Poly(coeffs, x, domain=sympy.QQ)
    return sympy.Poly([int(c) for c in reversed(p)], x, modulus=F.char)


def _from_sympy(F, sp):
    out = []
    for c in reversed(sp.all_coeffs()):
        if F.char == 0:
            c = sympy.Rational(c)
            out.append(F(Fraction(int(c.p), int(c.q))))
        else:
            out.append(F(int(c) % F.char))
    return trim(out)


def factor(F, p):
    """Distinct monic irreducible factors with multiplicities, as ``[(g, e), ...]``."""
    p = trim(p)
    if len(p) <= 1:
        return []
    _, facs = _to_sympy(F, p).factor_list()
    out = []
    for g, e in facs:
        gg = _from_sympy(F, g)
        inv = 1 / gg[-1]
        out.append(([c * inv for c in gg], e))
    return out


def krylov_minpoly(F, one, mulx, is_zero_vec, dim):
    """Minimal polynomial of the operator ``mulx`` acting from ``one``.

    ``one`` is a coordinate vector; powers are produced by ``mulx``.  The
    result is monic, constant coefficient first.
    """
    from .linalg import rref_rows

    powers = [list(one)]
    while True:
        nxt = mulx(powers[-1])
        k = len(powers)
        # find a dependency of nxt on the previous powers
        # columns: previous powers then nxt; solve sum c_i p_i = nxt
        rows = [[powers[i][r] for i in range(k)] + [nxt[r]] for r in range(dim)]
        R, piv = rref_rows(rows, k + 1)
        if k not in piv:
            coeffs = [F.zero] * k
            for row, pc in zip(R, piv):
                coeffs[pc] = row[k]
            return [-c for c in coeffs] + [F.one]
        powers.append(nxt)
        if len(powers) > dim + 1:
            raise RuntimeError("minimal polynomial search did not terminate")
