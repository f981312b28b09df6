"""Bound path algebras kQ/I with an explicitly computed residue-path basis.

Composition convention: a path ``p.q`` traverses ``p`` first and then ``q``
(so ``target(p) == source(q)``), matching the convention ``fg`` = "first f,
then g" for morphisms.  Representations (modules) therefore carry, for each
arrow ``a: i -> j``, a linear map ``M_i -> M_j``; the indecomposable
projective ``P(i)`` is spanned by the residue paths starting at ``i``.
"""
from __future__ import annotations

import hashlib
import json
from collections import defaultdict
from typing import NamedTuple

from .field import Field, QQ, get_field
from .fdalgebra import FDAlgebra
from .quiver import Arrow, Quiver

MAX_PATH_LENGTH = 64


class NonAdmissibleError(ValueError):
    pass


class Path(NamedTuple):
    source: str
    target: str
    arrows: tuple

    def __len__(self):  # noqa: D105 - length of a path = number of arrows
        return len(self.arrows)

    def label(self):
        return ".".join(self.arrows) if self.arrows else f"e_{self.source}"


def concat(p: Path, q: Path):
    if p.target != q.source:
        return None
    return Path(p.source, q.target, p.arrows + q.arrows)


def reverse(p: Path) -> Path:
    return Path(p.target, p.source, tuple(reversed(p.arrows)))


def _check_relation(Q: Quiver, rel: dict) -> None:
    ends = {(p.source, p.target) for p in rel}
    if len(ends) > 1:
        raise NonAdmissibleError("relation terms are not parallel paths")
    for p in rel:
        if len(p) < 2:
            raise NonAdmissibleError(f"relation term {p.label()} has length < 2")


class PathAlgebra:
    """``kQ/I`` with basis, multiplication table and nilpotency degree.

    ``relations`` is a list of dicts ``{Path: coefficient}``.
    """

    def __init__(self, quiver: Quiver, field: Field = QQ, relations=(), name: str = ""):
        self.quiver = quiver
        self.F = get_field(field)
        self.name = name
        rels = []
        for r in relations:
            r = {p: self.F(c) for p, c in r.items() if self.F(c)}
            if r:
                _check_relation(quiver, r)
                rels.append(r)
        self.relations = rels
        self._opposite = None
        self._compute_basis()
        self._compute_table()
        self._proj_cache = {}
        self._inj_cache = {}

    # -- basis ----------------------------------------------------------------
    def _paths_by_length(self, max_len):
        Q = self.quiver
        out = {0: [Path(v, v, ()) for v in Q.vertices]}
        out[1] = [Path(a.source, a.target, (a.label,)) for a in Q.arrows]
        outgoing = defaultdict(list)
        for a in Q.arrows:
            outgoing[a.source].append(a)
        for ln in range(2, max_len):
            out[ln] = [Path(p.source, a.target, p.arrows + (a.label,))
                       for p in out[ln - 1] for a in outgoing[p.target]]
        return out

    def _compute_basis(self):
        F = self.F
        for L in range(2, MAX_PATH_LENGTH + 1):
            by_len = self._paths_by_length(L)
            cols = [p for ln in range(L) for p in by_len[ln]]
            col = {p: i for i, p in enumerate(cols)}
            ending = defaultdict(list)
            starting = defaultdict(list)
            for p in cols:
                ending[p.target].append(p)
                starting[p.source].append(p)
            piv: dict[int, dict] = {}
            for r in self.relations:
                s, t = next(iter(r)).source, next(iter(r)).target
                mn = min(len(p) for p in r)
                for u in ending[s]:
                    if len(u) + mn >= L:
                        continue
                    for v in starting[t]:
                        if len(u) + mn + len(v) >= L:
                            continue
                        vec = {}
                        for p, c in r.items():
                            w = Path(u.source, v.target, u.arrows + p.arrows + v.arrows)
                            if len(w) < L:
                                vec[col[w]] = c
                        self._insert(piv, vec)
            top = [col[p] for p in by_len[L - 1]]
            if all(c in piv for c in top):
                self._L = L
                self._cols = cols
                self._col = col
                self._piv = piv
                self.basis = [p for p in cols if col[p] not in piv and len(p) < L - 1]
                self.index = {p: i for i, p in enumerate(self.basis)}
                self.nilpotency = max(len(p) for p in self.basis) + 1
                return
        raise NonAdmissibleError(f"arrow ideal not nilpotent modulo I up to path length {MAX_PATH_LENGTH}")

    def _reduce_cols(self, vec: dict, piv: dict):
        vec = {k: v for k, v in vec.items() if v}
        while True:
            hits = [c for c in vec if c in piv]
            if not hits:
                return vec
            c = min(hits)
            f = vec[c]
            for k, x in piv[c].items():
                nv = vec.get(k, self.F.zero) - f * x
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)

    def _insert(self, piv, vec):
        vec = self._reduce_cols(vec, piv)
        if not vec:
            return
        c = min(vec)
        inv = 1 / vec[c]
        row = {k: v * inv for k, v in vec.items()}
        # keep existing pivot rows reduced against the new one
        for pc, prow in piv.items():
            f = prow.get(c)
            if f:
                for k, x in row.items():
                    nv = prow.get(k, self.F.zero) - f * x
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
        piv[c] = row

    def reduce_path(self, p: Path) -> dict:
        """Normal form of a path as a sparse vector ``{basis_index: coeff}``."""
        if len(p) >= self._L - 1:
            return {}
        if p in self.index:
            return {self.index[p]: self.F.one}
        vec = self._reduce_cols({self._col[p]: self.F.one}, self._piv)
        return {self.index[self._cols[c]]: x for c, x in vec.items()}

    def _compute_table(self):
        by_source = defaultdict(list)
        for j, q in enumerate(self.basis):
            by_source[q.source].append(j)
        table = {}
        for i, p in enumerate(self.basis):
            for j in by_source[p.target]:
                q = self.basis[j]
                w = Path(p.source, q.target, p.arrows + q.arrows)
                r = self.reduce_path(w) if len(w) < self._L else {}
                if r:
                    table[(i, j)] = r
        self.table = table
        self.src = [p.source for p in self.basis]
        self.tgt = [p.target for p in self.basis]
        self.length = [len(p) for p in self.basis]
        self.e = {v: self.index[Path(v, v, ())] for v in self.quiver.vertices}
        between = defaultdict(list)
        for i, p in enumerate(self.basis):
            between[(p.source, p.target)].append(i)
        self._between = between

    # -- basic queries --------------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def vertices(self):
        return self.quiver.vertices

    def between(self, u, v):
        """Indices of basis paths from ``u`` to ``v`` (a basis of ``e_u A e_v``)."""
        return self._between.get((u, v), [])

    def loewy_length(self) -> int:
        return self.nilpotency

    def mul(self, x: dict, y: dict) -> dict:
        out = {}
        F = self.F
        for i, a in x.items():
            for j, b in y.items():
                t = self.table.get((i, j))
                if t:
                    ab = a * b
                    for k, c in t.items():
                        nv = out.get(k, F.zero) + ab * c
                        if nv:
                            out[k] = nv
                        else:
                            out.pop(k, None)
        return out

    def path_element(self, p: Path) -> dict:
        return self.reduce_path(p)

    def arrow_element(self, label: str) -> dict:
        a = self.quiver.arrow(label)
        return self.reduce_path(Path(a.source, a.target, (label,)))

    def element(self, text: str) -> dict:
        from .dsl import parse_element
        return parse_element(self, text)

    def format_element(self, x: dict) -> str:
        if not x:
            return "0"
        parts = []
        for k in sorted(x):
            c = x[k]
            lab = self.basis[k].label()
            parts.append(lab if c == 1 else f"{self.F.to_str(c)}*{lab}")
        return " + ".join(parts)

    def is_radical_element(self, x: dict) -> bool:
        return all(self.length[k] > 0 for k in x)

    def vertex_of(self, x: dict):
        """``(u, v)`` such that ``x`` lies in ``e_u A e_v``; ``None`` for zero."""
        ends = {(self.src[k], self.tgt[k]) for k in x}
        if not ends:
            return None
        if len(ends) > 1:
            raise ValueError("element is not homogeneous with respect to the vertices")
        return ends.pop()

    def inverse_local(self, x: dict) -> dict:
        """Inverse of ``x = c e_v + n`` (n radical) in the local corner ``e_v A e_v``."""
        u, v = self.vertex_of(x)
        if u != v:
            raise ValueError("not an element of a corner e_v A e_v")
        c = x.get(self.e[v])
        if not c:
            raise ZeroDivisionError("element lies in the radical")
        cinv = 1 / c
        n = {k: -a * cinv for k, a in x.items() if k != self.e[v]}
        # (c(1 - n'))^{-1} = c^{-1} (1 + n' + n'^2 + ...)
        out = {self.e[v]: self.F.one}
        term = {self.e[v]: self.F.one}
        while True:
            term = self.mul(term, n)
            if not term:
                break
            for k, a in term.items():
                nv = out.get(k, self.F.zero) + a
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
        return {k: a * cinv for k, a in out.items()}

    # -- derived algebras -----------------------------------------------------
    def opposite(self) -> "PathAlgebra":
        if self._opposite is None:
            rels = [{reverse(p): c for p, c in r.items()} for r in self.relations]
            op = PathAlgebra(self.quiver.opposite(), self.F, rels,
                             name=(self.name + "^op") if self.name else "")
            op._opposite = self
            self._opposite = op
        return self._opposite

    def to_opposite(self, x: dict) -> dict:
        """The element ``x`` read in the opposite algebra."""
        op = self.opposite()
        out = {}
        for k, c in x.items():
            for j, d in op.reduce_path(reverse(self.basis[k])).items():
                nv = out.get(j, self.F.zero) + c * d
                if nv:
                    out[j] = nv
                else:
                    out.pop(j, None)
        return out

    def structure(self) -> FDAlgebra:
        one = [self.F.zero] * self.dim
        for v in self.vertices:
            one[self.e[v]] = self.F.one
        names = [p.label() for p in self.basis]
        return FDAlgebra(self.F, self.dim, self.table, one, names)

    def is_hereditary_presentation(self) -> bool:
        """No relations and an acyclic quiver: a hereditary path algebra."""
        return not self.relations and self.quiver.is_acyclic()

    # -- serialisation --------------------------------------------------------
    def to_json(self) -> dict:
        F = self.F
        return {
            "field": F.name,
            "vertices": list(self.vertices),
            "arrows": [[a.label, a.source, a.target] for a in self.quiver.arrows],
            "relations": [[[F.to_str(c), list(p.arrows)] for p, c in r.items()] for r in self.relations],
            "basis": [{"source": p.source, "target": p.target, "arrows": list(p.arrows)} for p in self.basis],
            "multiplication": [[i, j, [[k, F.to_str(c)] for k, c in sorted(t.items())]]
                               for (i, j), t in sorted(self.table.items())],
            "nilpotency": self.nilpotency,
        }

    def content_hash(self) -> str:
        return hashlib.sha256(json.dumps(self.to_json(), sort_keys=True).encode()).hexdigest()

    @classmethod
    def from_json(cls, data: dict) -> "PathAlgebra":
        arrows = tuple(Arrow(l, s, t) for l, s, t in data["arrows"])
        Q = Quiver(tuple(data["vertices"]), arrows)
        srcs = {a.label: a for a in arrows}
        rels = []
        for r in data.get("relations", []):
            d = {}
            for c, arr in r:
                p = Path(srcs[arr[0]].source, srcs[arr[-1]].target, tuple(arr))
                d[p] = c
            rels.append(d)
        return cls(Q, get_field(data.get("field", "Q")), rels)

    def __repr__(self):
        return f"PathAlgebra({self.name or '?'}, {self.F.name}, n={len(self.vertices)}, dim={self.dim})"


def trivial_extension(A) -> FDAlgebra:
    """``A x D(A)`` on ``A + D(A)`` with ``(a, f)(b, g) = (ab, fb + ag)``.

    Basis: ``b_0..b_{d-1}`` then the dual basis ``b*_0..b*_{d-1}``;
    ``(a g)(x) = g(x a)`` and ``(f b)(x) = f(b x)``.
    """
    S = A.structure() if isinstance(A, PathAlgebra) else A
    d = S.dim
    F = S.F
    table = {}

    def put(i, j, k, c):
        if c:
            t = table.setdefault((i, j), {})
            nv = t.get(k, F.zero) + c
            if nv:
                t[k] = nv
            else:
                t.pop(k)

    for (i, j), t in S.table.items():
        for k, c in t.items():
            put(i, j, k, c)          # b_i b_j
            put(j, d + k, d + i, c)  # b_j b*_k: coefficient c^k_{i j} on b*_i
            put(d + k, i, d + j, c)  # b*_k b_i: coefficient c^k_{i j} on b*_j
    table = {key: t for key, t in table.items() if t}
    one = list(S.one) + [F.zero] * d
    names = None
    if S.names:
        names = list(S.names) + [n + "*" for n in S.names]
    return FDAlgebra(F, 2 * d, table, one, names)


def symmetric_form_gram(T: FDAlgebra):
    """Gram matrix of ``<(a,f),(b,g)> = f(b) + g(a)`` on a trivial extension basis."""
    from .linalg import Matrix
    d = T.dim // 2
    G = Matrix(T.F, T.dim, T.dim)
    for i in range(d):
        G.rows[i][d + i] = T.F.one
        G.rows[d + i][i] = T.F.one
    return G


def check_symmetric_form(T: FDAlgebra) -> dict:
    """Symmetry, associativity ``<xy, z> = <x, yz>`` and nondegeneracy of the form."""
    G = symmetric_form_gram(T)
    n = T.dim
    symmetric = G == G.T
    nondeg = G.rank() == n

    def form(x, y):
        s = T.F.zero
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b and G.rows[i][j]:
                        s = s + a * b * G.rows[i][j]
        return s

    assoc = True
    basis = [T.basis_vec(i) for i in range(n)]
    for x in basis:
        for y in basis:
            xy = T.mul(x, y)
            for z in basis:
                if form(xy, z) != form(x, T.mul(y, z)):
                    assoc = False
                    break
            if not assoc:
                break
        if not assoc:
            break
    return {"symmetric": symmetric, "nondegenerate": nondeg, "associative_form": assoc,
            "algebra_associative": T.is_associative(), "unital": T.is_unit(T.one)}
