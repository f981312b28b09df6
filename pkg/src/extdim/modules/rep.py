"""Finite-dimensional modules as quiver representations.

A module assigns a vector space to each vertex and, to each arrow
``a: i -> j``, a ``dim_j x dim_i`` matrix acting on column coordinates.
With paths composed left to right (``p.q`` = p then q) these are right
modules over the path algebra; the indecomposable projective ``P(i)`` is
spanned by the residue paths starting at ``i`` and has top ``S(i)``.

Maps between direct sums of indecomposable projectives are kept as
:class:`PMat`: matrices of algebra elements, the entry for ``P(i) -> P(j)``
being an element of ``e_j A e_i`` (the image of the generator ``e_i``).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..core.algebra import PathAlgebra
from ..core.linalg import CoordinateSolver, Matrix, nullspace_rows, rref_rows, span_basis


class Rep:
    """A representation of the bound quiver of ``A``.

    ``proj_labels`` is set when the module is literally ``P(l_1) + ... + P(l_r)``
    in its standard path basis (as produced by :func:`projective_sum`).
    """

    def __init__(self, A: PathAlgebra, dims: dict, mats: dict, check: bool = True, proj_labels=None):
        self.A = A
        self.F = A.F
        self.dims = {v: int(dims.get(v, 0)) for v in A.vertices}
        self.mats = {}
        for a in A.quiver.arrows:
            m = mats.get(a.label)
            shape = (self.dims[a.target], self.dims[a.source])
            if m is None:
                m = Matrix(self.F, *shape)
            elif not isinstance(m, Matrix):
                m = Matrix.from_rows(self.F, m, ncols=shape[1]) if shape[0] else Matrix(self.F, 0, shape[1])
            if m.shape != shape:
                raise ValueError(f"arrow {a.label}: matrix shape {m.shape}, expected {shape}")
            self.mats[a.label] = m
        self.proj_labels = list(proj_labels) if proj_labels is not None else None
        self._path_cache = {}
        self._cache = {}
        if check:
            bad = self.relation_violation()
            if bad is not None:
                raise ValueError(f"relation {bad} does not vanish on the representation")

    # -- basic data -----------------------------------------------------------
    @property
    def dim(self) -> int:
        return sum(self.dims.values())

    @property
    def dimvec(self) -> tuple:
        return tuple(self.dims[v] for v in self.A.vertices)

    def is_zero(self) -> bool:
        return self.dim == 0

    def offsets(self):
        out, o = {}, 0
        for v in self.A.vertices:
            out[v] = o
            o += self.dims[v]
        return out

    def _raw_path(self, arrows, source):
        m = Matrix.identity(self.F, self.dims[source])
        for lab in arrows:
            m = self.mats[lab] @ m
        return m

    def relation_violation(self):
        for r in self.A.relations:
            tot = None
            for p, c in r.items():
                m = self._raw_path(p.arrows, p.source).scale(c)
                tot = m if tot is None else tot + m
            if tot is not None and not tot.is_zero():
                return " + ".join(p.label() for p in r)
        return None

    def path_matrix(self, k: int) -> Matrix:
        """Action of the basis path with index ``k``: a map ``M_source -> M_target``."""
        m = self._path_cache.get(k)
        if m is None:
            p = self.A.basis[k]
            m = self._raw_path(p.arrows, p.source)
            self._path_cache[k] = m
        return m

    def act(self, x: dict, u, v) -> Matrix:
        """Action of ``x`` in ``e_u A e_v`` as a map ``M_u -> M_v``."""
        out = Matrix(self.F, self.dims[v], self.dims[u])
        for k, c in x.items():
            out = out + self.path_matrix(k).scale(c)
        return out

    def act_vec(self, x: dict, vec):
        out = [self.F.zero] * (self.dims[self.A.tgt[next(iter(x))]] if x else 0)
        for k, c in x.items():
            w = self.path_matrix(k).apply(vec)
            out = [a + c * b for a, b in zip(out, w)]
        return out

    def __repr__(self):
        return f"Rep{self.dimvec}"

    def to_json(self) -> dict:
        F = self.F
        return {
            "dims": {v: self.dims[v] for v in self.A.vertices},
            "arrows": {lab: [[F.to_str(x) for x in row] for row in m.rows] for lab, m in self.mats.items()},
        }

    @classmethod
    def from_json(cls, A, data):
        F = A.F
        mats = {lab: Matrix.from_rows(F, [[F(x) for x in row] for row in rows],
                                      ncols=int(data["dims"][A.quiver.arrow(lab).source]))
                if rows else None for lab, rows in data["arrows"].items()}
        return cls(A, data["dims"], {k: v for k, v in mats.items() if v is not None})


@dataclass
class RepMap:
    src: Rep
    tgt: Rep
    maps: dict  # vertex -> Matrix (tgt.dims[v] x src.dims[v])

    def __post_init__(self):
        F = self.src.F
        for v in self.src.A.vertices:
            if v not in self.maps:
                self.maps[v] = Matrix(F, self.tgt.dims[v], self.src.dims[v])

    @property
    def A(self):
        return self.src.A

    def __matmul__(self, other: "RepMap") -> "RepMap":
        """``self @ other`` is the composite ``self o other`` (apply ``other`` first)."""
        return RepMap(other.src, self.tgt, {v: self.maps[v] @ other.maps[v] for v in self.A.vertices})

    def __add__(self, other):
        return RepMap(self.src, self.tgt, {v: self.maps[v] + other.maps[v] for v in self.A.vertices})

    def __sub__(self, other):
        return RepMap(self.src, self.tgt, {v: self.maps[v] - other.maps[v] for v in self.A.vertices})

    def __neg__(self):
        return RepMap(self.src, self.tgt, {v: -m for v, m in self.maps.items()})

    def scale(self, c):
        return RepMap(self.src, self.tgt, {v: m.scale(c) for v, m in self.maps.items()})

    def is_zero(self):
        return all(m.is_zero() for m in self.maps.values())

    def rank(self):
        return {v: m.rank() for v, m in self.maps.items()}

    def is_injective(self):
        return all(m.rank() == m.ncols for m in self.maps.values())

    def is_surjective(self):
        return all(m.rank() == m.nrows for m in self.maps.values())

    def is_iso(self):
        return all(m.nrows == m.ncols and m.rank() == m.nrows for m in self.maps.values())

    def is_homomorphism(self) -> bool:
        for a in self.A.quiver.arrows:
            if self.tgt.mats[a.label] @ self.maps[a.source] != self.maps[a.target] @ self.src.mats[a.label]:
                return False
        return True

    def inverse(self) -> "RepMap":
        return RepMap(self.tgt, self.src, {v: m.inverse() for v, m in self.maps.items()})

    def flat(self):
        return [x for v in self.A.vertices for x in self.maps[v].flat()]


def identity_map(M: Rep) -> RepMap:
    return RepMap(M, M, {v: Matrix.identity(M.F, M.dims[v]) for v in M.A.vertices})


def zero_map(M: Rep, N: Rep) -> RepMap:
    return RepMap(M, N, {})


# -- standard modules ---------------------------------------------------------
def zero_rep(A) -> Rep:
    return Rep(A, {}, {}, check=False)


def simple(A, v) -> Rep:
    if v not in A.vertices:
        raise KeyError(f"unknown vertex {v!r}")
    return Rep(A, {v: 1}, {}, check=False)


def projective_sum(A, labels) -> Rep:
    """``P(l_1) + ... + P(l_r)``; at vertex ``w`` the basis is the paths from ``l_s`` to ``w``, summand by summand."""
    labels = list(labels)
    F = A.F
    dims = {w: sum(len(A.between(l, w)) for l in labels) for w in A.vertices}
    mats = {}
    for a in A.quiver.arrows:
        m = Matrix(F, dims[a.target], dims[a.source])
        arr = A.arrow_element(a.label)
        ro = co = 0
        for l in labels:
            src_paths = A.between(l, a.source)
            tgt_paths = A.between(l, a.target)
            tpos = {k: i for i, k in enumerate(tgt_paths)}
            for j, k in enumerate(src_paths):
                for kk, c in A.mul({k: F.one}, arr).items():
                    m.rows[ro + tpos[kk]][co + j] = c
            ro += len(tgt_paths)
            co += len(src_paths)
        mats[a.label] = m
    return Rep(A, dims, mats, check=False, proj_labels=labels)


def projective(A, v) -> Rep:
    if v not in A.vertices:
        raise KeyError(f"unknown vertex {v!r}")
    key = ("P", v)
    if key not in A._proj_cache:
        A._proj_cache[key] = projective_sum(A, [v])
    return A._proj_cache[key]


def injective(A, v) -> Rep:
    """``I(v) = D(P_{A^op}(v))``: dual of the paths ending at ``v``."""
    if v not in A.vertices:
        raise KeyError(f"unknown vertex {v!r}")
    key = ("I", v)
    if key not in A._inj_cache:
        A._inj_cache[key] = dual(projective(A.opposite(), v))
    return A._inj_cache[key]


def regular_module(A) -> Rep:
    return projective_sum(A, A.vertices)


def dual(M: Rep) -> Rep:
    """``D M = Hom_k(M, k)`` as a module over the opposite algebra; ``dual(dual(M)) is M``."""
    D = M._cache.get("dual")
    if D is None:
        D = Rep(M.A.opposite(), M.dims, {lab: m.T for lab, m in M.mats.items()}, check=False)
        D._cache["dual"] = M
        M._cache["dual"] = D
    return D


def dual_map(f: RepMap) -> RepMap:
    return RepMap(dual(f.tgt), dual(f.src), {v: m.T for v, m in f.maps.items()})


# -- sums ---------------------------------------------------------------------
def direct_sum(reps):
    """``(S, injections, projections)``."""
    reps = list(reps)
    if not reps:
        raise ValueError("direct_sum of an empty list; use zero_rep")
    A = reps[0].A
    F = A.F
    dims = {v: sum(M.dims[v] for M in reps) for v in A.vertices}
    mats = {a.label: Matrix.block_diag(F, [M.mats[a.label] for M in reps]) for a in A.quiver.arrows}
    labels = None
    if all(M.proj_labels is not None for M in reps):
        labels = [l for M in reps for l in M.proj_labels]
    S = Rep(A, dims, mats, check=False, proj_labels=labels)
    inj, proj = [], []
    off = {v: 0 for v in A.vertices}
    for M in reps:
        im, pm = {}, {}
        for v in A.vertices:
            d = M.dims[v]
            i = Matrix(F, dims[v], d)
            p = Matrix(F, d, dims[v])
            for t in range(d):
                i.rows[off[v] + t][t] = F.one
                p.rows[t][off[v] + t] = F.one
            im[v], pm[v] = i, p
            off[v] += d
        inj.append(RepMap(M, S, im))
        proj.append(RepMap(S, M, pm))
    return S, inj, proj


def direct_sum_maps(fs):
    """Block-diagonal map between the direct sums of sources and targets."""
    S, _, _ = direct_sum([f.src for f in fs])
    T, _, _ = direct_sum([f.tgt for f in fs])
    F = S.F
    return RepMap(S, T, {v: Matrix.block_diag(F, [f.maps[v] for f in fs]) for v in S.A.vertices})


def map_into_sum(fs, target=None):
    """``(f_1; ...; f_r): X -> Y_1 + ... + Y_r``."""
    T = target or direct_sum([f.tgt for f in fs])[0]
    X = fs[0].src
    return RepMap(X, T, {v: Matrix.vstack(X.F, X.dims[v], [f.maps[v] for f in fs]) for v in X.A.vertices})


def map_from_sum(fs, source=None):
    """``(f_1, ..., f_r): X_1 + ... + X_r -> Y``."""
    S = source or direct_sum([f.src for f in fs])[0]
    Y = fs[0].tgt
    return RepMap(S, Y, {v: Matrix.hstack(Y.F, Y.dims[v], [f.maps[v] for f in fs]) for v in Y.A.vertices})


# -- sub and quotient modules ---------------------------------------------------
def submodule(M: Rep, basis: dict):
    """Submodule spanned at each vertex by the given column vectors (must be invariant)."""
    A, F = M.A, M.F
    dims = {v: len(basis.get(v, [])) for v in A.vertices}
    solvers = {v: CoordinateSolver(F, basis.get(v, []), M.dims[v]) for v in A.vertices}
    mats = {}
    for a in A.quiver.arrows:
        cols = []
        for b in basis.get(a.source, []):
            c = solvers[a.target].coords(M.mats[a.label].apply(b))
            if c is None:
                raise ValueError("subspace family is not a submodule")
            cols.append(c)
        mats[a.label] = Matrix.from_columns(F, cols, dims[a.target]) if cols else Matrix(F, dims[a.target], 0)
    S = Rep(A, dims, mats, check=False)
    inc = RepMap(S, M, {v: Matrix.from_columns(F, basis.get(v, []), M.dims[v]) if dims[v]
                        else Matrix(F, M.dims[v], 0) for v in A.vertices})
    return S, inc


def quotient(M: Rep, sub_basis: dict):
    """``M / N`` for the submodule ``N`` spanned by ``sub_basis``; returns ``(Q, projection)``."""
    A, F = M.A, M.F
    comp, proj = {}, {}
    for v in A.vertices:
        n = M.dims[v]
        rows, piv = span_basis(F, sub_basis.get(v, []), n)
        ps = set(piv)
        free = [j for j in range(n) if j not in ps]
        comp[v] = free
        # coordinates of e_j modulo span: reduce against the RREF rows
        P = Matrix(F, len(free), n)
        fpos = {j: i for i, j in enumerate(free)}
        for j in range(n):
            if j in fpos:
                P.rows[fpos[j]][j] = F.one
            else:
                r = rows[piv.index(j)]
                # e_j = r - sum_{f free} r_f e_f  (mod span)
                for f in free:
                    if r[f]:
                        P.rows[fpos[f]][j] = -r[f]
        proj[v] = P
    dims = {v: len(comp[v]) for v in A.vertices}
    mats = {}
    for a in A.quiver.arrows:
        M_a = M.mats[a.label]
        cols = [proj[a.target].apply(M_a.column(j)) for j in comp[a.source]]
        mats[a.label] = Matrix.from_columns(F, cols, dims[a.target]) if cols else Matrix(F, dims[a.target], 0)
    Qm = Rep(A, dims, mats, check=False)
    return Qm, RepMap(M, Qm, proj)


def kernel(f: RepMap):
    return submodule(f.src, {v: m.nullspace() for v, m in f.maps.items()})


def image(f: RepMap):
    """``(Im f, inclusion into tgt, corestriction src -> Im f)``."""
    basis = {v: m.column_space() for v, m in f.maps.items()}
    I, inc = submodule(f.tgt, basis)
    co = factor_through_mono(f, inc)
    return I, inc, co


def cokernel(f: RepMap):
    return quotient(f.tgt, {v: m.column_space() for v, m in f.maps.items()})


def factor_through_mono(f: RepMap, m: RepMap) -> RepMap:
    """``g`` with ``m o g = f`` for a monomorphism ``m`` whose image contains ``im f``."""
    out = {}
    for v in f.A.vertices:
        X = m.maps[v].solve(f.maps[v])
        if X is None:
            raise ValueError("map does not factor through the monomorphism")
        out[v] = X
    return RepMap(f.src, m.src, out)


def factor_through_epi_projective(f: RepMap, e: RepMap) -> RepMap:
    """Lift ``f: P -> N`` through an epimorphism ``e: E -> N`` when ``P`` is a standard projective sum."""
    P = f.src
    if P.proj_labels is None:
        raise ValueError("source must be a standard projective sum")
    gens = []
    for s, l in enumerate(P.proj_labels):
        col = f.maps[l].column(generator_index(P, s))
        y = e.maps[l].solve(Matrix.from_columns(P.F, [col], len(col)))
        if y is None:
            raise ValueError("map is not surjective onto the image")
        gens.append(y.column(0))
    return yoneda(P, e.src, gens)


# -- projective sums and the Yoneda correspondence --------------------------------
def generator_index(P: Rep, s: int) -> int:
    """Coordinate of the generator ``e_l`` of summand ``s`` inside ``P_l``."""
    A = P.A
    l = P.proj_labels[s]
    off = 0
    for t in range(s):
        off += len(A.between(P.proj_labels[t], l))
    return off + A.between(l, l).index(A.e[l])


def yoneda(P: Rep, M: Rep, images) -> RepMap:
    """The map ``P(l_1)+...+P(l_r) -> M`` sending generator ``s`` to ``images[s]`` in ``M_{l_s}``."""
    A, F = M.A, M.F
    maps = {}
    for w in A.vertices:
        cols = []
        for l, n in zip(P.proj_labels, images):
            for k in A.between(l, w):
                cols.append(M.path_matrix(k).apply(n))
        maps[w] = Matrix.from_columns(F, cols, M.dims[w]) if cols else Matrix(F, M.dims[w], 0)
    return RepMap(P, M, maps)


@dataclass
class PMat:
    """A map ``P(src_1)+... -> P(tgt_1)+...``; ``entries[t][s]`` lies in ``e_{tgt_t} A e_{src_s}``."""

    A: PathAlgebra
    src: list
    tgt: list
    entries: list = field(default=None)

    def __post_init__(self):
        self.src = list(self.src)
        self.tgt = list(self.tgt)
        if self.entries is None:
            self.entries = [[{} for _ in self.src] for _ in self.tgt]

    @classmethod
    def identity(cls, A, labels):
        m = cls(A, labels, labels)
        for i, l in enumerate(labels):
            m.entries[i][i] = {A.e[l]: A.F.one}
        return m

    def __matmul__(self, other: "PMat") -> "PMat":
        """Composite ``self o other``: entries multiply as ``self_entry * other_entry`` in ``A``."""
        A = self.A
        out = PMat(A, other.src, self.tgt)
        for t in range(len(self.tgt)):
            row = self.entries[t]
            for s in range(len(other.src)):
                acc = {}
                for j, y in enumerate(row):
                    if y:
                        x = other.entries[j][s]
                        if x:
                            _acc(A.F, acc, A.mul(y, x))
                out.entries[t][s] = acc
        return out

    def __add__(self, other):
        out = PMat(self.A, self.src, self.tgt)
        for t in range(len(self.tgt)):
            for s in range(len(self.src)):
                acc = dict(self.entries[t][s])
                _acc(self.A.F, acc, other.entries[t][s])
                out.entries[t][s] = acc
        return out

    def scale(self, c):
        out = PMat(self.A, self.src, self.tgt)
        out.entries = [[{k: c * x for k, x in e.items()} if c else {} for e in row] for row in self.entries]
        return out

    def __neg__(self):
        return self.scale(-self.A.F.one)

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self):
        return not any(e for row in self.entries for e in row)

    def is_radical(self):
        return all(self.A.is_radical_element(e) for row in self.entries for e in row)

    def dual(self) -> "PMat":
        """``Hom_A(-, A)``: transpose and read entries in the opposite algebra."""
        A = self.A
        op = A.opposite()
        out = PMat(op, self.tgt, self.src)
        for t in range(len(self.tgt)):
            for s in range(len(self.src)):
                out.entries[s][t] = A.to_opposite(self.entries[t][s])
        return out

    def submatrix(self, rows, cols) -> "PMat":
        out = PMat(self.A, [self.src[j] for j in cols], [self.tgt[i] for i in rows])
        out.entries = [[dict(self.entries[i][j]) for j in cols] for i in rows]
        return out

    def coords(self):
        """Flat coordinates, entry by entry, in the path bases of ``e_t A e_s``."""
        A = self.A
        F = A.F
        out = []
        for t, lt in enumerate(self.tgt):
            for s, ls in enumerate(self.src):
                e = self.entries[t][s]
                out.extend(e.get(k, F.zero) for k in A.between(lt, ls))
        return out

    def to_repmap(self, P=None, Q=None) -> RepMap:
        A, F = self.A, self.A.F
        P = P or projective_sum(A, self.src)
        Q = Q or projective_sum(A, self.tgt)
        maps = {}
        for w in A.vertices:
            m = Matrix(F, Q.dims[w], P.dims[w])
            tpos, off = [], 0
            for lt in self.tgt:
                paths = A.between(lt, w)
                tpos.append((off, {k: i for i, k in enumerate(paths)}))
                off += len(paths)
            col = 0
            for s, ls in enumerate(self.src):
                for q in A.between(ls, w):
                    for t in range(len(self.tgt)):
                        x = self.entries[t][s]
                        if x:
                            o, pos = tpos[t]
                            for k, c in A.mul(x, {q: F.one}).items():
                                m.rows[o + pos[k]][col] = c
                    col += 1
            maps[w] = m
        return RepMap(P, Q, maps)

    @classmethod
    def from_repmap(cls, f: RepMap) -> "PMat":
        P, Q = f.src, f.tgt
        if P.proj_labels is None or Q.proj_labels is None:
            raise ValueError("both ends must be standard projective sums")
        A = P.A
        out = cls(A, P.proj_labels, Q.proj_labels)
        for s, ls in enumerate(P.proj_labels):
            col = f.maps[ls].column(generator_index(P, s))
            off = 0
            for t, lt in enumerate(Q.proj_labels):
                paths = A.between(lt, ls)
                out.entries[t][s] = {k: c for k, c in zip(paths, col[off:off + len(paths)]) if c}
                off += len(paths)
        return out


def _acc(F, acc, x):
    for k, c in x.items():
        nv = acc.get(k, F.zero) + c
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)


def hom_pullback_matrix(N: Rep, f: PMat) -> Matrix:
    """Matrix of ``Hom(tgt f, N) -> Hom(src f, N)``, ``xi -> xi o f``, on generator images."""
    F = N.F
    rows_off, cols_off = [], []
    o = 0
    for l in f.src:
        rows_off.append(o)
        o += N.dims[l]
    nr = o
    o = 0
    for l in f.tgt:
        cols_off.append(o)
        o += N.dims[l]
    nc = o
    D = Matrix(F, nr, nc)
    for t, lt in enumerate(f.tgt):
        for s, ls in enumerate(f.src):
            x = f.entries[t][s]
            if x:
                blk = N.act(x, lt, ls)
                for i, r in enumerate(blk.rows):
                    D.rows[rows_off[s] + i][cols_off[t]:cols_off[t] + N.dims[lt]] = [
                        a + b for a, b in zip(D.rows[rows_off[s] + i][cols_off[t]:cols_off[t] + N.dims[lt]], r)]
    return D


# -- pullbacks and pushouts -------------------------------------------------------
def pullback(f: RepMap, g: RepMap):
    """For ``f: X -> Z`` and ``g: Y -> Z``: ``(E, pX, pY)`` with ``E = {(x, y) : f x = g y}``."""
    S, inj, proj = direct_sum([f.src, g.src])
    diff = f @ proj[0] - g @ proj[1]
    E, inc = kernel(diff)
    return E, proj[0] @ inc, proj[1] @ inc


def pushout(f: RepMap, g: RepMap):
    """For ``f: X -> Y`` and ``g: X -> Z``: ``(E, iY, iZ)`` with ``E = (Y + Z) / {(f x, -g x)}``."""
    S, inj, proj = direct_sum([f.tgt, g.tgt])
    emb = inj[0] @ f - inj[1] @ g
    E, q = cokernel(emb)
    return E, q @ inj[0], q @ inj[1]


@dataclass
class SES:
    """``0 -> X --iota--> Y --pi--> Z -> 0``."""

    iota: RepMap
    pi: RepMap

    @property
    def X(self):
        return self.iota.src

    @property
    def Y(self):
        return self.iota.tgt

    @property
    def Z(self):
        return self.pi.tgt

    def is_exact(self) -> bool:
        if self.iota.tgt is not self.pi.src and self.iota.tgt.dims != self.pi.src.dims:
            return False
        if not (self.iota.is_homomorphism() and self.pi.is_homomorphism()):
            return False
        if not (self.iota.is_injective() and self.pi.is_surjective()):
            return False
        if not (self.pi @ self.iota).is_zero():
            return False
        return all(self.X.dims[v] + self.Z.dims[v] == self.Y.dims[v] for v in self.Y.A.vertices)


# -- radical and top --------------------------------------------------------------
def radical_basis(M: Rep) -> dict:
    """Per-vertex basis of ``rad M``: the sum of the images of all arrows."""
    out = {}
    F = M.F
    for v in M.A.vertices:
        vecs = []
        for a in M.A.quiver.in_arrows(v):
            vecs.extend(M.mats[a.label].columns())
        rows, _ = span_basis(F, vecs, M.dims[v])
        out[v] = rows
    return out


def radical(M: Rep):
    return submodule(M, radical_basis(M))


def top_generators(M: Rep):
    """``[(vertex, vector)]``: lifts of a basis of ``top M``."""
    rad = radical_basis(M)
    F = M.F
    gens = []
    for v in M.A.vertices:
        n = M.dims[v]
        _, piv = rref_rows([list(r) for r in rad[v]], n)
        ps = set(piv)
        for j in range(n):
            if j not in ps:
                e = [F.zero] * n
                e[j] = F.one
                gens.append((v, e))
    return gens


def socle_basis(M: Rep) -> dict:
    out = {}
    for v in M.A.vertices:
        outs = M.A.quiver.out_arrows(v)
        if not outs:
            out[v] = [[M.F.one if i == j else M.F.zero for i in range(M.dims[v])] for j in range(M.dims[v])]
            continue
        stacked = Matrix.vstack(M.F, M.dims[v], [M.mats[a.label] for a in outs])
        out[v] = stacked.nullspace()
    return out


def top_dimvec(M: Rep) -> tuple:
    cnt = {v: 0 for v in M.A.vertices}
    for v, _ in top_generators(M):
        cnt[v] += 1
    return tuple(cnt[v] for v in M.A.vertices)


def socle_dimvec(M: Rep) -> tuple:
    s = socle_basis(M)
    return tuple(len(s[v]) for v in M.A.vertices)
