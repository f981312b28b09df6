"""Bounded complexes of projectives and the homotopy category.

Cohomological grading: ``d^n: X^n -> X^{n+1}``.  Each differential is a
:class:`~extdim.modules.rep.PMat`, so an entry for ``P(s) -> P(t)`` is an element
of ``e_t A e_s`` acting by left multiplication on ``P(s) = e_s A``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

import networkx as nx

from .core.algebra import Path, PathAlgebra
from .core.fdalgebra import FDAlgebra
from .core.linalg import CoordinateSolver, Matrix, nullspace_rows, rref_rows
from .core.linalg import span_basis as _span
from .core.quiver import Arrow, Quiver
from .modules.rep import PMat, Rep, _acc, hom_pullback_matrix


def span_basis(F, vectors, dim):
    return _span(F, vectors, dim)[0] if vectors else []


# -- PMat helpers --------------------------------------------------------------------------
def pmat_zero(A, src, tgt) -> PMat:
    return PMat(A, list(src), list(tgt))


def pmat_dim(A, src, tgt) -> int:
    return sum(len(A.between(t, s)) for t in tgt for s in src)


def pmat_from_coords(A, src, tgt, vec) -> PMat:
    out = PMat(A, src, tgt)
    o = 0
    for t, lt in enumerate(tgt):
        for s, ls in enumerate(src):
            paths = A.between(lt, ls)
            out.entries[t][s] = {k: c for k, c in zip(paths, vec[o:o + len(paths)]) if c}
            o += len(paths)
    return out


def pmat_equal(f: PMat, g: PMat) -> bool:
    return (f - g).is_zero()


def pmat_block(A, rows, cols, blocks) -> PMat:
    """Assemble ``blocks[i][j]`` (PMat or None) into one matrix."""
    src = [l for c in cols for l in c]
    tgt = [l for r in rows for l in r]
    out = PMat(A, src, tgt)
    ro = 0
    for i, r in enumerate(rows):
        co = 0
        for j, c in enumerate(cols):
            b = blocks[i][j]
            if b is not None:
                for t in range(len(r)):
                    for s in range(len(c)):
                        out.entries[ro + t][co + s] = dict(b.entries[t][s])
            co += len(c)
        ro += len(r)
    return out


def scalar_part(f: PMat) -> Matrix:
    """Coefficients of the trivial paths: ``f`` modulo the radical."""
    A = f.A
    F = A.F
    m = Matrix(F, len(f.tgt), len(f.src))
    for t, lt in enumerate(f.tgt):
        for s, ls in enumerate(f.src):
            if lt == ls:
                m.rows[t][s] = f.entries[t][s].get(A.e[lt], F.zero)
    return m


def pmat_from_scalar(A, src, tgt, m: Matrix) -> PMat:
    out = PMat(A, src, tgt)
    for t, lt in enumerate(tgt):
        for s, ls in enumerate(src):
            c = m.rows[t][s]
            if c:
                if lt != ls:
                    raise ValueError("scalar entry between different vertices")
                out.entries[t][s] = {A.e[lt]: c}
    return out


def pmat_inverse(f: PMat) -> PMat:
    """Inverse of an isomorphism between sums of indecomposable projectives."""
    A = f.A
    D = scalar_part(f)
    if not D.is_invertible():
        raise ValueError("map is not invertible")
    Dinv = pmat_from_scalar(A, f.tgt, f.src, D.inverse())
    N = Dinv @ (f - pmat_from_scalar(A, f.src, f.tgt, D))
    one = PMat.identity(A, f.src)
    acc, term = one, one
    for _ in range(A.nilpotency + 1):
        term = -(N @ term)
        if term.is_zero():
            break
        acc = acc + term
    return acc @ Dinv


# -- complexes ------------------------------------------------------------------------------
@dataclass
class ProjComplex:
    """``terms[n]`` lists vertex labels of ``X^n``; ``diffs[n]`` is ``d^n``."""

    A: PathAlgebra
    terms: dict
    diffs: dict = field(default_factory=dict)
    names: list | None = None

    def __post_init__(self):
        self.terms = {n: list(v) for n, v in self.terms.items() if v}
        d = {}
        for n in self.terms:
            if n + 1 in self.terms:
                m = self.diffs.get(n)
                d[n] = m if m is not None else pmat_zero(self.A, self.terms[n], self.terms[n + 1])
        self.diffs = d

    def term(self, n):
        return self.terms.get(n, [])

    def d(self, n) -> PMat:
        m = self.diffs.get(n)
        return m if m is not None else pmat_zero(self.A, self.term(n), self.term(n + 1))

    @property
    def degrees(self):
        return sorted(self.terms)

    @property
    def lo(self):
        return min(self.terms) if self.terms else 0

    @property
    def hi(self):
        return max(self.terms) if self.terms else -1

    def is_zero(self):
        return not self.terms

    def is_complex(self) -> bool:
        return all((self.d(n + 1) @ self.d(n)).is_zero() for n in self.terms)

    def is_radical(self) -> bool:
        return all(m.is_radical() for m in self.diffs.values())

    @property
    def span(self) -> int:
        return self.hi - self.lo + 1 if self.terms else 0

    def shift(self, k: int) -> "ProjComplex":
        """``X[k]^n = X^{n+k}`` with differential ``(-1)^k d``."""
        terms = {n - k: v for n, v in self.terms.items()}
        diffs = {n - k: -m if k % 2 else m for n, m in self.diffs.items()}
        return ProjComplex(self.A, terms, diffs, self.names)

    def __repr__(self):
        parts = [f"{n}:{'+'.join(self.terms[n])}" for n in self.degrees]
        return f"ProjComplex({', '.join(parts)})"

    # -- serialisation ------------------------------------------------------------------
    def to_json(self) -> dict:
        A = self.A
        F = A.F
        return {
            "degrees": [self.lo, self.hi],
            "terms": {str(n): v for n, v in self.terms.items()},
            "diffs": {str(n): [[[F.to_str(c) for c in self._entry_coords(m, t, s)]
                                 for s in range(len(m.src))] for t in range(len(m.tgt))]
                      for n, m in self.diffs.items()},
            "names": self.names,
        }

    def _entry_coords(self, m, t, s):
        A = self.A
        e = m.entries[t][s]
        return [e.get(k, A.F.zero) for k in A.between(m.tgt[t], m.src[s])]

    @classmethod
    def from_json(cls, A, data) -> "ProjComplex":
        terms = {int(n): list(v) for n, v in data["terms"].items()}
        diffs = {}
        for n, rows in (data.get("diffs") or {}).items():
            n = int(n)
            m = PMat(A, terms.get(n, []), terms.get(n + 1, []))
            for t, row in enumerate(rows):
                for s, coords in enumerate(row):
                    paths = A.between(m.tgt[t], m.src[s])
                    if len(coords) != len(paths):
                        raise ValueError(f"d^{n}[{t}][{s}]: expected {len(paths)} coordinates, got {len(coords)}")
                    m.entries[t][s] = {k: A.F(c) for k, c in zip(paths, coords) if A.F(c)}
            diffs[n] = m
        X = cls(A, terms, diffs, data.get("names"))
        if not X.is_complex():
            raise ValueError("d o d != 0")
        return X


def stalk(A, labels, degree: int = 0) -> ProjComplex:
    return ProjComplex(A, {degree: list(labels)})


def regular_stalk(A, degree: int = 0) -> ProjComplex:
    return stalk(A, A.vertices, degree)


def direct_sum_complexes(Xs) -> tuple:
    """``(S, inclusions, projections)`` as chain maps."""
    A = Xs[0].A
    degs = sorted({n for X in Xs for n in X.terms})
    terms = {n: [l for X in Xs for l in X.term(n)] for n in degs}
    diffs = {}
    for n in degs:
        if n + 1 in terms:
            blocks = [[X.d(n) if i == j else None for j, X in enumerate(Xs)] for i, X in enumerate(Xs)]
            diffs[n] = pmat_block(A, [X.term(n + 1) for X in Xs], [X.term(n) for X in Xs], blocks)
    S = ProjComplex(A, terms, diffs)
    incs, projs = [], []
    for i, X in enumerate(Xs):
        ic, pc = {}, {}
        for n in degs:
            cols = [Y.term(n) for Y in Xs]
            idm = PMat.identity(A, X.term(n))
            ic[n] = pmat_block(A, cols, [X.term(n)], [[idm if j == i else None] for j in range(len(Xs))])
            pc[n] = pmat_block(A, [X.term(n)], cols, [[idm if j == i else None for j in range(len(Xs))]])
        incs.append(ChainMap(X, S, ic))
        projs.append(ChainMap(S, X, pc))
    return S, incs, projs


# -- chain maps ------------------------------------------------------------------------------
@dataclass
class ChainMap:
    """Degree-preserving family ``f^n: X^n -> Y^n`` (the components of ``X -> Y[0]``)."""

    src: ProjComplex
    tgt: ProjComplex
    comps: dict

    def c(self, n) -> PMat:
        m = self.comps.get(n)
        return m if m is not None else pmat_zero(self.src.A, self.src.term(n), self.tgt.term(n))

    def __matmul__(self, other: "ChainMap") -> "ChainMap":
        degs = set(self.src.terms) | set(other.src.terms)
        return ChainMap(other.src, self.tgt, {n: self.c(n) @ other.c(n) for n in degs})

    def __add__(self, other):
        degs = set(self.src.terms) | set(self.tgt.terms)
        return ChainMap(self.src, self.tgt, {n: self.c(n) + other.c(n) for n in degs})

    def __sub__(self, other):
        degs = set(self.src.terms) | set(self.tgt.terms)
        return ChainMap(self.src, self.tgt, {n: self.c(n) - other.c(n) for n in degs})

    def scale(self, c):
        return ChainMap(self.src, self.tgt, {n: m.scale(c) for n, m in self.comps.items()})

    def is_chain_map(self) -> bool:
        X, Y = self.src, self.tgt
        degs = set(X.terms) | set(Y.terms)
        return all(pmat_equal(Y.d(n) @ self.c(n), self.c(n + 1) @ X.d(n)) for n in degs)

    def is_zero(self):
        return all(self.c(n).is_zero() for n in self.src.terms)


def identity_chain(X: ProjComplex) -> ChainMap:
    return ChainMap(X, X, {n: PMat.identity(X.A, v) for n, v in X.terms.items()})


# -- the Hom complex ----------------------------------------------------------------------------
class HomComplex:
    """``Hom(X, Y)^m = prod_n Hom(X^n, Y^{n+m})`` with ``D f = d_Y f - (-1)^m f d_X``."""

    def __init__(self, X: ProjComplex, Y: ProjComplex):
        if X.A is not Y.A:
            raise ValueError("complexes over different algebras")
        self.X, self.Y = X, Y
        self.A = X.A
        self._blocks = {}
        self._D = {}

    def blocks(self, m):
        b = self._blocks.get(m)
        if b is None:
            b, o = [], 0
            for n in self.X.degrees:
                src, tgt = self.X.term(n), self.Y.term(n + m)
                k = pmat_dim(self.A, src, tgt)
                if k:
                    b.append((n, o, k))
                    o += k
            self._blocks[m] = (b, o)
            b = (b, o)
        return b

    def dim(self, m):
        return self.blocks(m)[1]

    def to_maps(self, m, vec) -> dict:
        out = {}
        for n, o, k in self.blocks(m)[0]:
            out[n] = pmat_from_coords(self.A, self.X.term(n), self.Y.term(n + m), vec[o:o + k])
        return out

    def from_maps(self, m, maps) -> list:
        F = self.A.F
        vec = [F.zero] * self.dim(m)
        for n, o, k in self.blocks(m)[0]:
            f = maps.get(n)
            if f is not None:
                vec[o:o + k] = f.coords()
        return vec

    def apply_D(self, m, maps) -> dict:
        X, Y = self.X, self.Y
        sign = -self.A.F.one if m % 2 else self.A.F.one
        out = {}
        for n in X.degrees:
            src, tgt = X.term(n), Y.term(n + m + 1)
            if not src or not tgt:
                continue
            acc = pmat_zero(self.A, src, tgt)
            f = maps.get(n)
            if f is not None and Y.term(n + m + 1):
                acc = acc + Y.d(n + m) @ f
            g = maps.get(n + 1)
            if g is not None and X.term(n + 1):
                acc = acc - (g @ X.d(n)).scale(sign)
            out[n] = acc
        return out

    def D(self, m) -> Matrix:
        """Matrix of ``D: Hom^m -> Hom^{m+1}`` acting on column vectors."""
        M = self._D.get(m)
        if M is None:
            F = self.A.F
            n_in, n_out = self.dim(m), self.dim(m + 1)
            cols = []
            for i in range(n_in):
                e = [F.zero] * n_in
                e[i] = F.one
                cols.append(self.from_maps(m + 1, self.apply_D(m, self.to_maps(m, e))))
            M = Matrix.from_columns(F, cols, n_out) if cols else Matrix(F, n_out, 0)
            self._D[m] = M
        return M


@dataclass
class HomK:
    """``Hom_K(X, Y[m])``: cocycle classes modulo coboundaries."""

    cx: HomComplex
    m: int
    classes: list
    boundary: list
    _solver: CoordinateSolver = None

    @property
    def dim(self):
        return len(self.classes)

    def coords(self, vec):
        if self._solver is None:
            self._solver = CoordinateSolver(self.cx.A.F, self.classes + self.boundary, self.cx.dim(self.m))
        c = self._solver.coords(vec)
        if c is None:
            raise ValueError("not a cocycle")
        return c[:len(self.classes)]

    def coords_of(self, f: ChainMap):
        return self.coords(self.cx.from_maps(self.m, f.comps))

    def chain_map(self, vec) -> ChainMap:
        if self.m != 0:
            raise ValueError("chain maps are degree 0; use maps() for shifted classes")
        return ChainMap(self.cx.X, self.cx.Y, self.cx.to_maps(0, vec))

    def basis_map(self, i) -> ChainMap:
        return self.chain_map(self.classes[i])

    def combo(self, coeffs) -> ChainMap:
        F = self.cx.A.F
        vec = [F.zero] * self.cx.dim(self.m)
        for c, v in zip(coeffs, self.classes):
            if c:
                vec = [a + c * b for a, b in zip(vec, v)]
        return self.chain_map(vec)

    def is_null(self, f: ChainMap) -> bool:
        return not any(self.coords_of(f))


def hom_homotopy(X: ProjComplex, Y: ProjComplex, k: int = 0, cx: HomComplex | None = None) -> HomK:
    """Chain maps ``X -> Y[k]`` modulo homotopy, as cohomology of the Hom complex."""
    cx = cx or HomComplex(X, Y)
    F = X.A.F
    n = cx.dim(k)
    Dk = cx.D(k)
    Z = nullspace_rows(F, Dk.rows, n) if n else []
    Dprev = cx.D(k - 1)
    bd = Dprev.column_space() if cx.dim(k - 1) and n else []
    cur = [list(b) for b in bd]
    base = len(rref_rows([list(x) for x in cur], n)[1]) if cur else 0
    classes = []
    for z in Z:
        trial = cur + [list(z)]
        r = len(rref_rows([list(x) for x in trial], n)[1])
        if r > base:
            cur, base = trial, r
            classes.append(list(z))
    return HomK(cx, k, classes, [list(b) for b in bd])


def hom_to_module(X: ProjComplex, M: Rep, j: int = 0) -> int:
    """``dim Hom_K(X, M[j])`` for a module ``M`` (so ``M`` sits in degree ``-j``)."""
    F = M.F
    n = -j

    def H(deg):
        return sum(M.dims[l] for l in X.term(deg))

    dim_n = H(n)
    if dim_n == 0:
        return 0
    # Hom(X^{n}, M) -> Hom(X^{n-1}, M) and Hom(X^{n+1}, M) -> Hom(X^n, M)
    out_rank = hom_pullback_matrix(M, X.d(n - 1)).rank() if H(n - 1) else 0
    in_rank = hom_pullback_matrix(M, X.d(n)).rank() if H(n + 1) else 0
    return dim_n - out_rank - in_rank


def is_homotopy_zero(X: ProjComplex) -> bool:
    return radical_normal_form(X).is_zero()


# -- radical normal form -----------------------------------------------------------------------
def _find_unit(X: ProjComplex):
    A = X.A
    for n in X.degrees:
        m = X.diffs.get(n)
        if m is None:
            continue
        for t, lt in enumerate(m.tgt):
            for s, ls in enumerate(m.src):
                if lt == ls and m.entries[t][s].get(A.e[lt]):
                    return n, t, s
    return None


def _identity_except(A, labels, drop):
    keep = [i for i in range(len(labels)) if i != drop]
    proj = PMat(A, labels, [labels[i] for i in keep])
    inc = PMat(A, [labels[i] for i in keep], labels)
    for r, i in enumerate(keep):
        proj.entries[r][i] = {A.e[labels[i]]: A.F.one}
        inc.entries[i][r] = {A.e[labels[i]]: A.F.one}
    return keep, proj, inc


@dataclass
class RNF:
    complex: ProjComplex
    to_rnf: ChainMap      # X -> X'
    from_rnf: ChainMap    # X' -> X


def radical_normal_form(X: ProjComplex, track: bool = False):
    """Strip contractible summands ``P --iso--> P`` by Gaussian elimination.

    With ``track=True`` returns an :class:`RNF` holding mutually inverse homotopy
    equivalences.
    """
    A = X.A
    cur = X
    phi = identity_chain(X) if track else None
    psi = identity_chain(X) if track else None
    while True:
        hit = _find_unit(cur)
        if hit is None:
            break
        n, t, s = hit
        d = cur.d(n)
        Ln, Ln1 = cur.term(n), cur.term(n + 1)
        keep_n, pr_n, in_n = _identity_except(A, Ln, s)
        keep_n1, pr_n1, in_n1 = _identity_except(A, Ln1, t)
        xinv = PMat(A, [Ln1[t]], [Ln[s]])
        xinv.entries[0][0] = A.inverse_local(d.entries[t][s])
        gamma = d.submatrix([t], keep_n)
        delta = d.submatrix(keep_n1, [s])
        eps = d.submatrix(keep_n1, keep_n)
        new_d = eps - delta @ xinv @ gamma
        terms = dict(cur.terms)
        terms[n] = [Ln[i] for i in keep_n]
        terms[n + 1] = [Ln1[i] for i in keep_n1]
        diffs = dict(cur.diffs)
        diffs[n] = new_d
        if n - 1 in cur.diffs:
            diffs[n - 1] = pr_n @ cur.d(n - 1)
        if n + 1 in cur.diffs:
            diffs[n + 1] = cur.d(n + 1) @ in_n1
        nxt = ProjComplex(A, terms, diffs, cur.names)
        if track:
            # phi^{n+1} = (-delta x^{-1} | 1), psi^n = (-x^{-1} gamma ; 1)
            sel_t = PMat(A, Ln1, [Ln1[t]])
            sel_t.entries[0][t] = {A.e[Ln1[t]]: A.F.one}
            inc_s = PMat(A, [Ln[s]], Ln)
            inc_s.entries[s][0] = {A.e[Ln[s]]: A.F.one}
            f = {m: PMat.identity(A, v) for m, v in cur.terms.items()}
            g = {m: PMat.identity(A, v) for m, v in cur.terms.items()}
            f[n] = pr_n
            f[n + 1] = pr_n1 - delta @ xinv @ sel_t
            g[n] = in_n - inc_s @ xinv @ gamma
            g[n + 1] = in_n1
            for m in list(f):
                if not nxt.term(m):
                    f[m] = pmat_zero(A, cur.term(m), [])
                    g[m] = pmat_zero(A, [], cur.term(m))
            phi = ChainMap(cur, nxt, f) @ phi
            psi = psi @ ChainMap(nxt, cur, g)
        cur = nxt
    if track:
        return RNF(cur, phi, psi)
    return cur


def complex_length(X: ProjComplex) -> int:
    R = radical_normal_form(X)
    if R.is_zero():
        raise ValueError("complex is homotopic to zero")
    return R.span


def cone(f: ChainMap) -> ProjComplex:
    """``C^n = X^{n+1} + Y^n`` with ``d = [[-d_X, 0], [f, d_Y]]``."""
    X, Y = f.src, f.tgt
    A = X.A
    degs = sorted({n - 1 for n in X.terms} | set(Y.terms))
    terms = {n: X.term(n + 1) + Y.term(n) for n in degs}
    diffs = {}
    for n in degs:
        if n + 1 not in terms:
            continue
        blocks = [[-X.d(n + 1), None], [f.c(n + 1), Y.d(n)]]
        diffs[n] = pmat_block(A, [X.term(n + 2), Y.term(n + 1)], [X.term(n + 1), Y.term(n)], blocks)
    return ProjComplex(A, terms, diffs)


def cone_inclusion(f: ChainMap, C: ProjComplex) -> ChainMap:
    """``Y -> cone(f)``."""
    X, Y = f.src, f.tgt
    A = X.A
    comps = {}
    for n in Y.terms:
        comps[n] = pmat_block(A, [X.term(n + 1), Y.term(n)], [Y.term(n)],
                              [[None], [PMat.identity(A, Y.term(n))]])
    return ChainMap(Y, C, comps)


# -- endomorphism algebra and decomposition ------------------------------------------------------
class EndK(FDAlgebra):
    """``End_K(X)`` with product ``x * y = x o y``."""

    def __init__(self, X: ProjComplex):
        self.X = X
        H = hom_homotopy(X, X, 0)
        self.H = H
        n = H.dim
        maps = [H.basis_map(i) for i in range(n)]
        self.maps = maps
        table = {}
        for i in range(n):
            for j in range(n):
                c = H.coords_of(maps[i] @ maps[j])
                t = {k: x for k, x in enumerate(c) if x}
                if t:
                    table[(i, j)] = t
        one = H.coords_of(identity_chain(X)) if n else []
        super().__init__(X.A.F, n, table, one)

    def to_map(self, x) -> ChainMap:
        return self.H.combo(x)

    def from_map(self, f: ChainMap):
        return self.H.coords_of(f)


def _lift_idempotent(e: ChainMap, limit: int = 64) -> ChainMap:
    for _ in range(limit):
        e2 = e @ e
        if all(pmat_equal(e2.c(n), e.c(n)) for n in e.src.terms):
            return e
        e3 = e2 @ e
        e = e2.scale(e.src.A.F(3)) - e3.scale(e.src.A.F(2))
    raise RuntimeError("idempotent lifting did not converge")


def _extract_summand(e: ChainMap):
    """Image of an idempotent chain map on a radical complex: ``(Y, iota, pi)``."""
    X = e.src
    A = X.A
    F = A.F
    terms, iotas, pis = {}, {}, {}
    for n, labels in X.terms.items():
        en = e.c(n)
        S = scalar_part(en)
        J, I = [], []
        for lbl in dict.fromkeys(labels):
            idx = [i for i, l in enumerate(labels) if l == lbl]
            sub = Matrix.from_rows(F, [[S.rows[r][c] for c in idx] for r in idx], len(idx))
            # pivots of the column space pick J; pivots of the row space pick I
            _, cpiv = rref_rows([list(r) for r in sub.rows], len(idx))
            _, rpiv = rref_rows([list(r) for r in sub.T.rows], len(idx))
            J.extend(idx[c] for c in cpiv)
            I.extend(idx[r] for r in rpiv)
        lab = [labels[j] for j in J]
        terms[n] = lab
        incJ = PMat(A, lab, labels)
        prI = PMat(A, labels, lab)
        for r, j in enumerate(J):
            incJ.entries[j][r] = {A.e[labels[j]]: F.one}
        for r, i in enumerate(I):
            prI.entries[r][i] = {A.e[labels[i]]: F.one}
        iota = en @ incJ
        alpha = prI @ iota
        pis[n] = pmat_inverse(alpha) @ prI @ en if lab else pmat_zero(A, labels, [])
        iotas[n] = iota
    diffs = {n: pis[n + 1] @ X.d(n) @ iotas[n] for n in terms if n + 1 in terms}
    Y = ProjComplex(A, terms, diffs)
    return Y, ChainMap(Y, X, iotas), ChainMap(X, Y, pis)


@dataclass
class ComplexSummand:
    complex: ProjComplex
    inclusion: ChainMap
    projection: ChainMap
    name: str | None = None


def _components(X: ProjComplex):
    """Groups of ``(degree, index)`` linked by nonzero differential entries."""
    G = nx.Graph()
    order = []
    for n in X.degrees:
        for i in range(len(X.term(n))):
            G.add_node((n, i))
            order.append((n, i))
    for n, m in X.diffs.items():
        for t in range(len(m.tgt)):
            for s in range(len(m.src)):
                if m.entries[t][s]:
                    G.add_edge((n, s), (n + 1, t))
    comps = [sorted(c, key=order.index) for c in nx.connected_components(G)]
    comps.sort(key=lambda c: order.index(c[0]))
    return comps


def _restrict(X: ProjComplex, comp):
    A = X.A
    F = A.F
    idx = {}
    for n, i in comp:
        idx.setdefault(n, []).append(i)
    terms = {n: [X.term(n)[i] for i in v] for n, v in idx.items()}
    diffs = {n: X.d(n).submatrix(idx[n + 1], idx[n]) for n in idx if n + 1 in idx}
    Y = ProjComplex(A, terms, diffs)
    inc, pr = {}, {}
    for n, v in idx.items():
        a = PMat(A, terms[n], X.term(n))
        b = PMat(A, X.term(n), terms[n])
        for r, i in enumerate(v):
            a.entries[i][r] = {A.e[X.term(n)[i]]: F.one}
            b.entries[r][i] = {A.e[X.term(n)[i]]: F.one}
        inc[n], pr[n] = a, b
    return Y, ChainMap(Y, X, inc), ChainMap(X, Y, pr)


def decompose_complex(X: ProjComplex, seed: int = 0) -> list:
    """Indecomposable summands of a radical complex with inclusion/projection chain maps."""
    if not X.is_radical():
        raise ValueError("decompose_complex expects a radical complex")
    out = []
    names = X.names
    for ci, comp in enumerate(_components(X)):
        Y, inc, pr = _restrict(X, comp)
        E = EndK(Y)
        kind, _ = E.corner_locality(E.one, random.Random(seed))
        nm = names[ci] if names and ci < len(names) else None
        if kind != "split":
            out.append(ComplexSummand(Y, inc, pr, nm))
            continue
        rep = E.primitive_idempotents(seed=seed)
        for k, e in enumerate(rep.idempotents):
            Z, i2, p2 = _extract_summand(_lift_idempotent(E.to_map(e)))
            out.append(ComplexSummand(Z, inc @ i2, p2 @ pr, nm if nm and len(rep.idempotents) == 1 else None))
    return out


def complexes_isomorphic(X: ProjComplex, Y: ProjComplex) -> bool:
    """Homotopy equivalence of complexes, tested summand by summand."""
    RX, RY = radical_normal_form(X), radical_normal_form(Y)
    if {n: sorted(v) for n, v in RX.terms.items()} != {n: sorted(v) for n, v in RY.terms.items()}:
        return False
    if RX.is_zero():
        return True
    sx = decompose_complex(RX)
    sy = decompose_complex(RY)
    used = [False] * len(sy)
    for a in sx:
        for j, b in enumerate(sy):
            if not used[j] and indecomposable_complexes_isomorphic(a.complex, b.complex):
                used[j] = True
                break
        else:
            return False
    return all(used)


def _iso_pair(X: ProjComplex, Y: ProjComplex):
    """``(u, v)`` with ``v o u`` invertible in the local ring ``End_K(X)``, or ``None``."""
    if {n: sorted(v) for n, v in X.terms.items()} != {n: sorted(v) for n, v in Y.terms.items()}:
        return None
    H1, H2 = hom_homotopy(X, Y, 0), hom_homotopy(Y, X, 0)
    E = EndK(X)
    for i in range(H1.dim):
        u = H1.basis_map(i)
        for j in range(H2.dim):
            v = H2.basis_map(j)
            if not E.is_nilpotent(E.from_map(v @ u)):
                return u, v
    return None


def indecomposable_complexes_isomorphic(X, Y) -> bool:
    return _iso_pair(X, Y) is not None


# -- two-term silting ----------------------------------------------------------------------------
@dataclass
class SiltingReport:
    presilting: bool
    silting: bool
    tilting: bool
    summands: int
    vertices: int
    criterion: str = "two-term summand count"


def _require_two_term(X: ProjComplex):
    if X.terms and (X.lo < -1 or X.hi > 0):
        raise ValueError(f"not a two-term complex: degrees {X.lo}..{X.hi}")


def basic_summands(X: ProjComplex, seed: int = 0) -> list:
    """One summand per isomorphism class, in order of first appearance."""
    out = []
    for s in decompose_complex(radical_normal_form(X), seed):
        if not any(indecomposable_complexes_isomorphic(s.complex, t.complex) for t in out):
            out.append(s)
    return out


def is_two_term_silting(P: ProjComplex, seed: int = 0) -> SiltingReport:
    R = radical_normal_form(P)
    _require_two_term(R)
    pre = hom_homotopy(R, R, 1).dim == 0
    count = len(basic_summands(R, seed)) if not R.is_zero() else 0
    n = len(P.A.vertices)
    silt = pre and count == n
    tilt = silt and hom_homotopy(R, R, -1).dim == 0
    return SiltingReport(pre, silt, tilt, count, n)


# -- End algebra with a quiver presentation -----------------------------------------------------
@dataclass
class PresentedAlgebra:
    """``B = End_K(P)`` as structure constants plus a bound quiver presentation."""

    B: EndK
    summands: list            # ComplexSummand per vertex
    vertices: list
    idempotents: list          # in B coordinates
    arrows: list               # (label, source, target, element of B)
    algebra: PathAlgebra
    to_path: Matrix            # B coordinates -> path-basis coordinates
    from_path: Matrix

    @property
    def quiver(self):
        return self.algebra.quiver

    def element(self, x) -> dict:
        """Sparse path-algebra element for a vector in B coordinates."""
        v = self.to_path.apply(x)
        return {k: c for k, c in enumerate(v) if c}

    def summand_map(self, f: ChainMap, x: int, y: int):
        """B coordinates of a map ``T_x -> T_y`` placed into ``End_K(P)``."""
        g = self.summands[y].inclusion @ f @ self.summands[x].projection
        return self.B.from_map(g)


_NAMES = "abcdefghijklmnopqrstuvwxyz"


def end_algebra(P: ProjComplex, seed: int = 0, names=None) -> PresentedAlgebra:
    R = radical_normal_form(P)
    summ = basic_summands(R, seed)
    S, incs, projs = direct_sum_complexes([s.complex for s in summ])
    S.names = None
    B = EndK(S)
    F = B.F
    idems = []
    for k, s in enumerate(summ):
        idems.append(B.from_map(incs[k] @ projs[k]))
    if names is None:
        names = [s.name or _NAMES[k % 26] + ("" if k < 26 else str(k // 26)) for k, s in enumerate(summ)]
    pieces = [ComplexSummand(s.complex, incs[k], projs[k], names[k]) for k, s in enumerate(summ)]
    rad = B.radical_basis(idems)
    rad2 = span_basis(F, [B.mul(a, b) for a in rad for b in rad], B.dim)
    arrows = []
    for i, x in enumerate(names):
        for j, y in enumerate(names):
            # e_x rad e_y modulo e_x rad^2 e_y
            corner = span_basis(F, [B.mul(B.mul(idems[i], r), idems[j]) for r in rad], B.dim)
            corner2 = span_basis(F, [B.mul(B.mul(idems[i], r), idems[j]) for r in rad2], B.dim)
            base = list(corner2)
            count = 0
            for v in corner:
                trial = base + [v]
                if len(span_basis(F, trial, B.dim)) > len(base):
                    base = trial
                    arrows.append((f"{x}{y}" + (f"_{count}" if count else ""), x, y, v))
                    count += 1
    Q = Quiver(list(names), [Arrow(l, s, t) for l, s, t, _ in arrows])
    # evaluate paths; relations are the kernel on paths of length >= 2
    elt = {a[0]: a[3] for a in arrows}
    vidx = {x: i for i, x in enumerate(names)}
    paths = {0: [(Path(x, x, ()), idems[vidx[x]]) for x in names]}
    paths[1] = [(Path(s, t, (l,)), v) for l, s, t, v in arrows]
    L = 1
    while paths[L]:
        nxt = []
        for p, v in paths[L]:
            for a in Q.out_arrows(p.target):
                nxt.append((Path(p.source, a.target, p.arrows + (a.label,)), B.mul(v, elt[a.label])))
        L += 1
        paths[L] = nxt
        if L > B.dim + 1:
            break
    rels = []
    for x in names:
        for y in names:
            long = [(p, v) for l in range(2, L + 1) for p, v in paths.get(l, []) if p.source == x and p.target == y]
            if not long:
                continue
            K = nullspace_rows(F, [list(r) for r in Matrix.from_columns(F, [v for _, v in long], B.dim).rows],
                               len(long))
            for kv in K:
                rels.append({p: c for (p, _), c in zip(long, kv) if c})
    alg = PathAlgebra(Q, F, rels, name="End")
    if alg.dim != B.dim:
        raise AssertionError(f"presentation has dimension {alg.dim}, expected {B.dim}")
    # basis paths evaluated in B
    cols = []
    for p in alg.basis:
        v = idems[vidx[p.source]]
        for a in p.arrows:
            v = B.mul(v, elt[a])
        cols.append(v)
    from_path = Matrix.from_columns(F, cols, B.dim)
    to_path = from_path.inverse()
    return PresentedAlgebra(B, pieces, list(names), idems, arrows, alg, to_path, from_path)


# -- torsion pairs ------------------------------------------------------------------------------
@dataclass
class TorsionPairReport:
    T: list            # indices into the module list
    F: list
    neither: list
    hom0: list         # dim Hom(P, M) per module
    hom1: list         # dim Hom(P, M[1]) per module
    modules: list
    complete: bool

    @property
    def split(self):
        return self.complete and not self.neither

    @property
    def partial(self):
        return not self.complete

    def dimvecs(self, which):
        return sorted(self.modules[i].dimvec for i in getattr(self, which))


def torsion_pair(P: ProjComplex, ar) -> TorsionPairReport:
    """Classify the discovered indecomposables of ``ar`` by ``Hom(P, -)`` and ``Hom(P, -[1])``."""
    R = radical_normal_form(P)
    _require_two_term(R)
    mods = ar.modules
    T, Fc, nn, h0, h1 = [], [], [], [], []
    for i, M in enumerate(mods):
        a, b = hom_to_module(R, M, 0), hom_to_module(R, M, 1)
        h0.append(a)
        h1.append(b)
        if b == 0:
            T.append(i)
        if a == 0:
            Fc.append(i)
        if a and b:
            nn.append(i)
    return TorsionPairReport(T, Fc, nn, h0, h1, mods, ar.complete)


# -- the induced complex over B -----------------------------------------------------------------------
class ApproximationError(RuntimeError):
    pass


def _radical_maps(pres: PresentedAlgebra, y: int, x: int):
    """Basis of ``rad(T_y, T_x)`` as chain maps."""
    Ty, Tx = pres.summands[y].complex, pres.summands[x].complex
    H = hom_homotopy(Ty, Tx, 0)
    maps = [H.basis_map(i) for i in range(H.dim)]
    if x != y:
        return maps
    E = EndK(Tx)
    out = []
    for i in range(E.dim):
        z = E.basis_vec(i)
        r = E.sub(z, E.scale(E.eigenvalue(z, E.one), E.one))
        if not E.is_zero(r):
            out.append(E.to_map(r))
    return out


@dataclass
class InducedQ:
    Q: ProjComplex
    presentation: PresentedAlgebra
    approximation: list   # multiplicity of each T_x in P_1
    cone_summands: list   # vertex matched by each summand of the cone


def induced_Q(P: ProjComplex, seed: int = 0, pres: PresentedAlgebra | None = None) -> InducedQ:
    """``Q = [Hom(P, P_1) -> Hom(P, P_0)]`` from the triangle ``A -> P_1 -> P_0 -> A[1]``."""
    pres = pres or end_algebra(P, seed)
    A = P.A
    F = A.F
    Areg = regular_stalk(A)
    n = len(pres.summands)
    V = [hom_homotopy(Areg, s.complex, 0) for s in pres.summands]
    gens = []       # (x, chain map A -> T_x)
    mult = []
    for x in range(n):
        rad_img = []
        for y in range(n):
            for g in _radical_maps(pres, y, x):
                for i in range(V[y].dim):
                    rad_img.append(V[x].coords_of(g @ V[y].basis_map(i)))
        base = span_basis(F, rad_img, V[x].dim) if rad_img else []
        cnt = 0
        for i in range(V[x].dim):
            e = [F.one if k == i else F.zero for k in range(V[x].dim)]
            trial = base + [e]
            if len(span_basis(F, trial, V[x].dim)) > len(base):
                base = trial
                gens.append((x, V[x].basis_map(i)))
                cnt += 1
        mult.append(cnt)
    comps = [pres.summands[x].complex for x, _ in gens]
    P1, incs, projs = direct_sum_complexes(comps)
    fcomps = {}
    for deg in Areg.terms:
        acc = pmat_zero(A, Areg.term(deg), P1.term(deg))
        for k, (_, g) in enumerate(gens):
            acc = acc + incs[k].c(deg) @ g.c(deg)
        fcomps[deg] = acc
    f = ChainMap(Areg, P1, fcomps)
    C = cone(f)
    rn = radical_normal_form(C, track=True)
    fp = rn.to_rnf @ cone_inclusion(f, C)              # P_1 -> P_0
    parts = decompose_complex(rn.complex, seed) if not rn.complex.is_zero() else []
    matched = []
    for part in parts:
        for x, s in enumerate(pres.summands):
            pr = _iso_pair(part.complex, s.complex)
            if pr is not None:
                matched.append((x, pr[0]))
                break
        else:
            raise ApproximationError(f"cone summand {part.complex!r} is not in add(P)")
    B = pres.algebra
    src = [pres.vertices[x] for x, _ in gens]
    tgt = [pres.vertices[x] for x, _ in matched]
    d = PMat(B, src, tgt)
    for j, (x, u) in enumerate(matched):
        for k, (y, _) in enumerate(gens):
            comp = u @ parts[j].projection @ fp @ incs[k]   # T_y -> T_x
            coords = pres.summand_map(comp, y, x)
            d.entries[j][k] = pres.element(coords)
    Q = ProjComplex(B, {-1: src, 0: tgt}, {-1: d})
    return InducedQ(radical_normal_form(Q), pres, mult, [x for x, _ in matched])


# -- almost nu-stable ------------------------------------------------------------------------------
def _nu_stable(X: ProjComplex, degrees) -> bool:
    from .modules.decompose import iso_witness
    from .modules.rep import injective, projective
    A = X.A
    labels = {l for n in degrees for l in X.term(n)}
    image = set()
    for l in labels:
        I = injective(A, l)
        hit = [m for m in A.vertices if iso_witness(projective(A, m), I) is not None]
        if not hit:
            return False
        image.add(hit[0])
    return image == labels


def check_almost_nu_stable(T: ProjComplex, Tbar: ProjComplex) -> bool:
    T, Tbar = radical_normal_form(T), radical_normal_form(Tbar)
    if T.terms and T.hi > 0:
        raise ValueError("T must live in degrees [-n, 0]")
    if Tbar.terms and Tbar.lo < 0:
        raise ValueError("T-bar must live in degrees [0, n]")
    return (_nu_stable(T, [n for n in T.terms if n < 0])
            and _nu_stable(Tbar, [n for n in Tbar.terms if n > 0]))
