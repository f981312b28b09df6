"""Projective covers, minimal resolutions, Hom and Ext, syzygies and the Nakayama functor.

Hom(M, N) is computed from a minimal projective presentation
``P1 --d1--> P0 --> M``: a map is determined by the images ``n_g`` of the top
generators of ``M`` and these satisfy ``(n_g) o d1 = 0``.  The same
generator-image coordinates describe ``Hom(P_k, N)``, so Ext is the
cohomology of ``Hom(P_., N)`` with matrices from :func:`hom_pullback_matrix`.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..core.linalg import CoordinateSolver, Matrix, nullspace_rows, rref_rows
from .rep import (PMat, Rep, RepMap, SES, direct_sum, dual, dual_map, factor_through_epi_projective,
                  factor_through_mono, hom_pullback_matrix, kernel, map_from_sum, projective,
                  projective_sum, pushout, radical, top_generators, yoneda)


# -- covers and syzygies ------------------------------------------------------------
def projective_cover(M: Rep) -> RepMap:
    """Minimal epimorphism ``P(top M) -> M``."""
    c = M._cache.get("cover")
    if c is None:
        gens = top_generators(M)
        P = projective_sum(M.A, [v for v, _ in gens])
        c = yoneda(P, M, [vec for _, vec in gens])
        M._cache["cover"] = c
        M._cache["gens"] = gens
    return c


def cover_section(M: Rep) -> dict:
    """Per-vertex right inverses of the projective cover (linear, not module maps)."""
    s = M._cache.get("section")
    if s is None:
        p = projective_cover(M)
        s = {}
        for v, m in p.maps.items():
            X = m.solve(Matrix.identity(M.F, m.nrows))
            s[v] = X
        M._cache["section"] = s
    return s


def omega(M: Rep):
    """``(Omega M, inclusion into P0)`` for the minimal cover ``P0 -> M``."""
    o = M._cache.get("omega")
    if o is None:
        o = kernel(projective_cover(M))
        M._cache["omega"] = o
    return o


def injective_envelope(M: Rep) -> RepMap:
    """Minimal monomorphism ``M -> I(soc M)``, dual to the cover of ``D M``."""
    e = M._cache.get("envelope")
    if e is None:
        p = projective_cover(dual(M))
        I = dual(p.src)
        e = RepMap(M, I, {v: m.T for v, m in p.maps.items()})
        M._cache["envelope"] = e
    return e


def cosyzygy(M: Rep):
    """``(Omega^{-1} M, projection from I0)``."""
    o = M._cache.get("coomega")
    if o is None:
        K, inc = omega(dual(M))
        C = dual(K)
        env = injective_envelope(M)
        # D(inc): D(P0) -> D(K); D(P0) has the same matrices as the envelope's target
        o = (C, RepMap(env.tgt, C, {v: m.T for v, m in inc.maps.items()}))
        M._cache["coomega"] = o
    return o


def syzygy(M: Rep, n: int = 1) -> Rep:
    """``Omega^n M`` for ``n >= 0`` and the cosyzygy ``Omega^{-n}`` for negative ``n``."""
    X = M
    for _ in range(abs(n)):
        X = omega(X)[0] if n > 0 else cosyzygy(X)[0]
    return X


def is_projective(M: Rep) -> bool:
    return projective_cover(M).src.dim == M.dim


def is_injective(M: Rep) -> bool:
    return injective_envelope(M).tgt.dim == M.dim


# -- minimal projective resolution -----------------------------------------------------
class Resolution:
    """``... -> P_2 --d_2--> P_1 --d_1--> P_0 -> M``, extended lazily.

    ``labels[k]`` lists the indecomposable summands of ``P_k``; ``diffs[k]`` is
    ``d_k`` as a :class:`PMat` (``k >= 1``); ``syz[k]`` is ``Omega^k M``.
    """

    def __init__(self, M: Rep):
        self.M = M
        self.syz = [M]
        self.labels = [projective_cover(M).src.proj_labels]
        self.diffs = [None]

    def extend(self, k: int):
        while len(self.diffs) <= k:
            j = len(self.diffs)
            K, inc = omega(self.syz[j - 1])
            p = projective_cover(K)
            self.syz.append(K)
            self.labels.append(p.src.proj_labels)
            self.diffs.append(PMat.from_repmap(inc @ p) if p.src.proj_labels else
                              PMat(self.M.A, [], self.labels[j - 1]))
        return self

    def d(self, k: int) -> PMat:
        self.extend(k)
        return self.diffs[k]

    def length(self, cutoff: int):
        """Projective dimension if at most ``cutoff``, else ``None``."""
        for k in range(cutoff + 1):
            self.extend(k)
            if not self.labels[k]:
                return k - 1 if k else (0 if self.M.dim else -1)
            if k == cutoff:
                self.extend(k + 1)
                return k if not self.labels[k + 1] else None
        return None


def resolution(M: Rep) -> Resolution:
    r = M._cache.get("res")
    if r is None:
        r = Resolution(M)
        M._cache["res"] = r
    return r


# -- Hom ------------------------------------------------------------------------------
class HomSpace:
    """``Hom(M, N)``; vectors are concatenated images of the top generators of ``M``."""

    def __init__(self, M: Rep, N: Rep):
        if M.A is not N.A:
            raise ValueError("modules over different algebras")
        self.M, self.N = M, N
        res = resolution(M)
        self.labels = res.labels[0]
        D = hom_pullback_matrix(N, res.d(1))
        n = sum(N.dims[l] for l in self.labels)
        self.vecs = nullspace_rows(N.F, D.rows, n)
        _, piv = rref_rows([list(r) for r in D.rows], n)
        ps = set(piv)
        self.free = [j for j in range(n) if j not in ps]
        self._maps = {}

    @property
    def dim(self):
        return len(self.vecs)

    def coords(self, vec):
        return [vec[j] for j in self.free]

    def map_from_vec(self, vec) -> RepMap:
        P = projective_cover(self.M).src
        imgs, o = [], 0
        for l in self.labels:
            imgs.append(list(vec[o:o + self.N.dims[l]]))
            o += self.N.dims[l]
        y = yoneda(P, self.N, imgs)
        sec = cover_section(self.M)
        return RepMap(self.M, self.N, {v: y.maps[v] @ sec[v] for v in self.M.A.vertices})

    def vec_from_map(self, f: RepMap):
        projective_cover(self.M)
        out = []
        for v, g in self.M._cache["gens"]:
            out.extend(f.maps[v].apply(g))
        return out

    def basis_map(self, i) -> RepMap:
        m = self._maps.get(i)
        if m is None:
            m = self.map_from_vec(self.vecs[i])
            self._maps[i] = m
        return m

    def basis(self):
        return [self.basis_map(i) for i in range(self.dim)]

    def combo(self, coeffs) -> RepMap:
        F = self.M.F
        n = len(self.vecs[0]) if self.vecs else 0
        vec = [F.zero] * n
        for c, v in zip(coeffs, self.vecs):
            if c:
                vec = [a + c * b for a, b in zip(vec, v)]
        return self.map_from_vec(vec)


def hom_space(M: Rep, N: Rep):
    """A basis of ``Hom_A(M, N)`` as module maps."""
    return HomSpace(M, N).basis()


def hom_dim(M: Rep, N: Rep) -> int:
    return HomSpace(M, N).dim


def hom_intertwining(M: Rep, N: Rep):
    """Reference solver: the full intertwining system ``N(a) phi_s = phi_t M(a)``."""
    A, F = M.A, M.F
    verts = A.vertices
    off, o = {}, 0
    for v in verts:
        off[v] = o
        o += N.dims[v] * M.dims[v]
    n = o
    rows = []
    for a in A.quiver.arrows:
        s, t = a.source, a.target
        Na, Ma = N.mats[a.label], M.mats[a.label]
        for i in range(N.dims[t]):
            for j in range(M.dims[s]):
                row = [F.zero] * n
                # (N(a) phi_s)[i, j] - (phi_t M(a))[i, j]
                for k in range(N.dims[s]):
                    c = Na.rows[i][k]
                    if c:
                        row[off[s] + k * M.dims[s] + j] += c
                for k in range(M.dims[t]):
                    c = Ma.rows[k][j]
                    if c:
                        row[off[t] + i * M.dims[t] + k] -= c
                rows.append(row)
    sols = nullspace_rows(F, rows, n)
    out = []
    for vec in sols:
        maps = {}
        for v in verts:
            r, c = N.dims[v], M.dims[v]
            maps[v] = Matrix(F, r, c, [vec[off[v] + i * c: off[v] + (i + 1) * c] for i in range(r)])
        out.append(RepMap(M, N, maps))
    return out


# -- Ext ------------------------------------------------------------------------------
@dataclass
class ExtSpace:
    """``Ext^k(M, N)`` as cocycles ``Z`` in ``Hom(P_k, N)`` modulo coboundaries."""

    M: Rep
    N: Rep
    k: int
    classes: list  # cocycle representatives of a basis
    boundary: list  # basis of coboundaries
    _solver: CoordinateSolver = None

    @property
    def dim(self):
        return len(self.classes)

    def coords(self, cocycle):
        if self._solver is None:
            n = len(cocycle)
            self._solver = CoordinateSolver(self.M.F, self.classes + self.boundary, n)
        c = self._solver.coords(cocycle)
        if c is None:
            raise ValueError("not a cocycle")
        return c[:len(self.classes)]


def ext(M: Rep, N: Rep, k: int = 1) -> ExtSpace:
    if k < 1:
        raise ValueError("ext degree must be >= 1")
    res = resolution(M).extend(k + 1)
    F = M.F
    nk = sum(N.dims[l] for l in res.labels[k])
    Dk = hom_pullback_matrix(N, res.d(k))          # Hom(P_{k-1}, N) -> Hom(P_k, N)
    Dk1 = hom_pullback_matrix(N, res.d(k + 1))     # Hom(P_k, N) -> Hom(P_{k+1}, N)
    Z = nullspace_rows(F, Dk1.rows, nk)
    bd = Dk.column_space()
    # classes: extend the coboundary basis to a basis of Z
    cur = [list(b) for b in bd]
    base = len(rref_rows([list(x) for x in cur], nk)[1]) if cur else 0
    classes = []
    for z in Z:
        trial = cur + [list(z)]
        r = len(rref_rows([list(x) for x in trial], nk)[1])
        if r > base:
            cur, base = trial, r
            classes.append(list(z))
    return ExtSpace(M, N, k, classes, [list(b) for b in bd])


def ext_dim(M: Rep, N: Rep, k: int = 1) -> int:
    return ext(M, N, k).dim


def realize_extension(E: ExtSpace, cocycle) -> SES:
    """``0 -> N -> E -> M -> 0`` for a degree-one cocycle (pushout along ``Omega M -> N``)."""
    if E.k != 1:
        raise ValueError("only degree-one classes are realized as short exact sequences")
    M, N = E.M, E.N
    K, inc = omega(M)
    P1 = projective_cover(K).src
    imgs, o = [], 0
    for l in P1.proj_labels:
        imgs.append(list(cocycle[o:o + N.dims[l]]))
        o += N.dims[l]
    y = yoneda(P1, N, imgs)
    sec = cover_section(K)
    xi = RepMap(K, N, {v: y.maps[v] @ sec[v] for v in M.A.vertices})
    Emod, iP, iN = pushout(inc, xi)
    cov = projective_cover(M)
    # E -> M induced by (cover, 0) on P0 + N
    S, _, _ = direct_sum([cov.src, N])
    q = map_from_sum([iP, iN])
    h = map_from_sum([cov, RepMap(N, M, {})])
    pi = factor_through_epi(h, q)
    return SES(iN, pi)


def factor_through_epi(h: RepMap, q: RepMap) -> RepMap:
    """``p`` with ``p o q = h`` for a surjection ``q`` whose kernel ``h`` kills."""
    out = {}
    for v in h.A.vertices:
        R = q.maps[v].solve(Matrix.identity(h.src.F, q.maps[v].nrows))
        if R is None:
            raise ValueError("map is not surjective")
        out[v] = h.maps[v] @ R
    return RepMap(q.tgt, h.tgt, out)


def split_ses(X: Rep, Z: Rep) -> SES:
    S, inj, proj = direct_sum([X, Z])
    return SES(inj[0], proj[1])


# -- syzygy sequences -------------------------------------------------------------------
@dataclass
class SyzygySequence:
    """``0 -> Omega^{i+1} Z -> W -> Omega^i Y -> 0`` with ``W = Omega^i X + P_i``."""

    ses: SES
    i: int
    projective_labels: list  # the summands of P_i


def _pullback_step(s: SES) -> SES:
    """``0 -> Omega Z -> X + P0 -> Y -> 0`` from ``0 -> X -> Y -> Z -> 0``."""
    X, Y, Z = s.X, s.Y, s.Z
    cov = projective_cover(Z)
    K, inc = omega(Z)
    lift = factor_through_epi_projective(cov, s.pi)      # P0 -> Y with pi o lift = cov
    Wm, inj, proj = direct_sum([X, cov.src])
    right = map_from_sum([s.iota, lift], source=Wm)       # (x, p) -> iota x + lift p
    # k -> (-iota^{-1}(lift k), k)
    lk = lift @ inc
    x_part = factor_through_mono(lk, s.iota)
    left = inj[1] @ inc - inj[0] @ x_part
    return SES(left, right)


def _horseshoe_step(s: SES) -> SES:
    """``0 -> Omega X -> K -> Omega Z -> 0`` with ``K = Omega Y + projective``."""
    X, Y, Z = s.X, s.Y, s.Z
    cX = projective_cover(X)
    cZ = projective_cover(Z)
    KX, incX = omega(X)
    KZ, incZ = omega(Z)
    lift = factor_through_epi_projective(cZ, s.pi)
    S, inj, proj = direct_sum([cX.src, cZ.src])
    h = map_from_sum([s.iota @ cX, lift], source=S)
    K, incK = kernel(h)
    left = factor_through_mono(inj[0] @ incX, incK)
    right = factor_through_mono(proj[1] @ incK, incZ)
    return SES(left, right)


def syzygy_sequence(s: SES, i: int) -> SyzygySequence:
    """Horseshoe-style ``0 -> Omega^{i+1} Z -> Omega^i X + P_i -> Omega^i Y -> 0``."""
    if i < 0:
        raise ValueError("i must be >= 0")
    cur = _pullback_step(s)
    for _ in range(i):
        cur = _horseshoe_step(cur)
    from .rep import top_dimvec
    mid = top_dimvec(cur.Y)
    base = top_dimvec(syzygy(s.X, i))
    A = s.X.A
    labels = []
    for v, a, b in zip(A.vertices, mid, base):
        if a < b:
            raise AssertionError("middle term has a smaller top than Omega^i X")
        labels.extend([v] * (a - b))
    return SyzygySequence(cur, i, labels)


# -- Nakayama functor --------------------------------------------------------------------
def nakayama(P: Rep) -> Rep:
    """``nu P = D Hom_A(P, A)`` for a projective module ``P``."""
    if not is_projective(P):
        raise ValueError("nakayama expects a projective module")
    A = P.A
    F = A.F
    spaces = {v: HomSpace(P, projective(A, v)) for v in A.vertices}
    dims = {v: spaces[v].dim for v in A.vertices}
    mats = {}
    for a in A.quiver.arrows:
        # left multiplication by a: P(t) -> P(s); on Hom(P, -) it is an arrow t -> s over A^op
        L = PMat(A, [a.target], [a.source])
        L.entries[0][0] = A.arrow_element(a.label)
        Lm = L.to_repmap(projective(A, a.target), projective(A, a.source))
        hs_t, hs_s = spaces[a.target], spaces[a.source]
        cols = [hs_s.coords(hs_s.vec_from_map(Lm @ hs_t.basis_map(i))) for i in range(hs_t.dim)]
        mats[a.label] = Matrix.from_columns(F, cols, dims[a.source]) if cols else Matrix(F, dims[a.source], 0)
    H = Rep(A.opposite(), dims, mats, check=False)
    return dual(H)


# -- radical and socle series --------------------------------------------------------------
def radical_series(M: Rep):
    out = [M.dimvec]
    X = M
    while X.dim:
        X, _ = radical(X)
        out.append(X.dimvec)
    return out


def socle_series(M: Rep):
    """Dimension vectors of ``soc^1 M <= soc^2 M <= ... = M``."""
    R = radical_series(dual(M))
    return [tuple(a - b for a, b in zip(M.dimvec, r)) for r in R[1:]]


def loewy_length(M: Rep) -> int:
    return len(radical_series(M)) - 1
