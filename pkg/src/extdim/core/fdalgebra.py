"""Finite-dimensional algebras given by structure constants.

Used for endomorphism algebras (of modules and of complexes) and for the
trivial extension.  Elements are dense coordinate lists.  The product is
``mul(x, y)``; for endomorphism algebras it is composition ``x o y`` (apply
``y`` first).

Idempotent splitting follows the usual chop strategy: search for an element
whose minimal polynomial has coprime factors and split with the Bezout
idempotent.  Locality of a corner ``eAe`` is certified without trace forms:
every basis element must have a single eigenvalue ``lambda`` in the field and
the differences ``b - lambda e`` must span a nilpotent ideal of codimension one.
This works in every characteristic.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from . import poly
from .linalg import rref_rows, coordinates_in


class NonsplitError(RuntimeError):
    """Raised when idempotent lifting fails because End/rad is not split."""


@dataclass
class IdempotentReport:
    idempotents: list
    nonsplit: list  # flags per idempotent: True when eAe/rad is a nonsplit division algebra
    seed: int


class FDAlgebra:
    def __init__(self, F, dim, table, one, names=None):
        """``table[(i, j)]`` is a sparse dict ``{k: c}`` for ``b_i * b_j``."""
        self.F = F
        self.dim = dim
        self.table = table
        self.one = list(one)
        self.names = names

    # -- arithmetic -----------------------------------------------------------
    def zero_vec(self):
        return [self.F.zero] * self.dim

    def basis_vec(self, i):
        v = self.zero_vec()
        v[i] = self.F.one
        return v

    def mul(self, x, y):
        out = self.zero_vec()
        xs = [(i, a) for i, a in enumerate(x) if a]
        ys = [(j, b) for j, b in enumerate(y) if b]
        tab = self.table
        for i, a in xs:
            for j, b in ys:
                t = tab.get((i, j))
                if t:
                    ab = a * b
                    for k, c in t.items():
                        out[k] = out[k] + ab * c
        return out

    def add(self, x, y):
        return [a + b for a, b in zip(x, y)]

    def sub(self, x, y):
        return [a - b for a, b in zip(x, y)]

    def scale(self, c, x):
        return [c * a for a in x]

    def is_zero(self, x):
        return not any(x)

    def eval_poly(self, p, y, e):
        """``p(y)`` inside the corner with unit ``e``."""
        res = self.zero_vec()
        for c in reversed(p):
            res = self.add(self.mul(res, y), self.scale(c, e))
        return res

    def minpoly(self, y, e=None):
        e = self.one if e is None else e
        return poly.krylov_minpoly(self.F, e, lambda v: self.mul(y, v), None, self.dim)

    def is_nilpotent(self, y):
        p = y
        for _ in range(self.dim + 1):
            if self.is_zero(p):
                return True
            p = self.mul(p, y)
        return self.is_zero(p)

    # -- structure checks -----------------------------------------------------
    def is_associative(self):
        for i, j, k in itertools.product(range(self.dim), repeat=3):
            bi, bj, bk = self.basis_vec(i), self.basis_vec(j), self.basis_vec(k)
            if self.mul(self.mul(bi, bj), bk) != self.mul(bi, self.mul(bj, bk)):
                return False
        return True

    def is_unit(self, e):
        for i in range(self.dim):
            b = self.basis_vec(i)
            if self.mul(e, b) != b or self.mul(b, e) != b:
                return False
        return True

    def span(self, vectors):
        rows, piv = rref_rows([list(v) for v in vectors], self.dim)
        return rows[:len(piv)], piv

    def corner_basis(self, e, f):
        rows, _ = self.span(self.mul(self.mul(e, self.basis_vec(i)), f) for i in range(self.dim))
        return rows

    # -- idempotents ----------------------------------------------------------
    def _split_with(self, y, e):
        m = self.minpoly(y, e)
        facs = poly.factor(self.F, m)
        if len(facs) < 2:
            return None, facs
        g, k = facs[0]
        u = poly.power(self.F, g, k)
        v, r = poly.divmod_(self.F, m, u)
        assert not r
        _, s, t = poly.egcd(self.F, u, v)
        idem = self.eval_poly(poly.mul(self.F, t, v), y, e)
        return (idem, self.sub(e, idem)), facs

    def corner_locality(self, e, rng, trials=48):
        """``("local", None)``, ``("nonsplit", None)`` or ``("split", (e1, e2))``."""
        basis = self.corner_basis(e, e)
        if len(basis) == 1:
            return "local", None
        N = []
        irreducible_seen = False
        for z in basis:
            sp, facs = self._split_with(z, e)
            if sp is not None:
                return "split", sp
            g, _ = facs[0]
            if len(g) == 2:
                N.append(self.sub(z, self.scale(-g[0], e)))
            else:
                irreducible_seen = True
        if not irreducible_seen and self._is_codim_one_nilpotent_ideal(N, len(basis)):
            return "local", None
        for z in self._random_elements(basis, rng, trials):
            sp, _ = self._split_with(z, e)
            if sp is not None:
                return "split", sp
        if irreducible_seen:
            return "nonsplit", None
        raise RuntimeError("locality of a corner algebra could not be decided")

    def _random_elements(self, basis, rng, trials):
        F = self.F
        if F.is_finite and F.char ** len(basis) <= 4096:
            for coeffs in itertools.product(range(F.char), repeat=len(basis)):
                if any(coeffs):
                    yield self._combo(basis, [F(c) for c in coeffs])
            return
        for t in range(trials):
            if t < trials // 2:
                coeffs = [F(rng.randint(0, 1)) for _ in basis]
            else:
                coeffs = [F.random(rng) for _ in basis]
            yield self._combo(basis, coeffs)

    def _combo(self, basis, coeffs):
        out = self.zero_vec()
        for c, b in zip(coeffs, basis):
            if c:
                out = self.add(out, self.scale(c, b))
        return out

    def _is_codim_one_nilpotent_ideal(self, N, corner_dim):
        rows, piv = self.span(N)
        if len(piv) != corner_dim - 1:
            return False
        cur = rows
        for _ in range(self.dim + 1):
            prods = [self.mul(a, b) for a in cur for b in rows]
            nxt, npiv = self.span(prods)
            if not npiv:
                return True
            # closure N*N inside N
            for v in nxt:
                if coordinates_in(self.F, rows, piv, v) is None:
                    return False
            if len(npiv) >= len(cur):
                return False
            cur = nxt
        return False

    def primitive_idempotents(self, seed=0, start=None) -> IdempotentReport:
        """A complete set of primitive orthogonal idempotents summing to one."""
        rng = random.Random(seed)
        work = list(start) if start is not None else [self.one]
        done, flags = [], []
        while work:
            e = work.pop()
            kind, sp = self.corner_locality(e, rng)
            if kind == "split":
                work.extend(sp)
            else:
                done.append(e)
                flags.append(kind == "nonsplit")
        return IdempotentReport(done, flags, seed)

    def idempotents_equivalent(self, e, f):
        """``eA ~= fA``: some ``x`` in eAf and ``y`` in fAe with ``xy`` not nilpotent."""
        X = self.corner_basis(e, f)
        Y = self.corner_basis(f, e)
        for x in X:
            for y in Y:
                if not self.is_nilpotent(self.mul(x, y)):
                    return True
        return False

    def eigenvalue(self, z, e):
        """The unique eigenvalue of ``z`` in a split local corner with unit ``e``."""
        facs = poly.factor(self.F, self.minpoly(z, e))
        if len(facs) != 1 or len(facs[0][0]) != 2:
            raise NonsplitError("element of a corner algebra without a unique eigenvalue in the field")
        return -facs[0][0][0]

    def radical_basis(self, idems):
        """Basis of rad(A) for pairwise non-isomorphic, split-local primitive idempotents summing to 1."""
        vecs = []
        for i, e in enumerate(idems):
            for j, f in enumerate(idems):
                piece = self.corner_basis(e, f)
                if i != j:
                    vecs.extend(piece)
                else:
                    vecs.extend(self.sub(z, self.scale(self.eigenvalue(z, e), e)) for z in piece)
        rows, _ = self.span(vecs)
        return rows

    def center_dim(self):
        from .linalg import nullspace_rows
        rows = []
        n = self.dim
        cols = []
        for j in range(n):
            bj = self.basis_vec(j)
            for i in range(n):
                bi = self.basis_vec(i)
                cols.append(self.sub(self.mul(bj, bi), self.mul(bi, bj)))
        # x = sum x_j b_j commutes with every b_i
        for i in range(n):
            for k in range(n):
                rows.append([cols[j * n + i][k] for j in range(n)])
        return len(nullspace_rows(self.F, rows, n))
