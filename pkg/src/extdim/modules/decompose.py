"""Endomorphism algebras, Krull-Schmidt decomposition and isomorphism tests."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..core.fdalgebra import FDAlgebra, NonsplitError
from .homology import HomSpace
from .rep import Rep, RepMap, direct_sum, image, map_from_sum


class EndAlgebra(FDAlgebra):
    """``End_A(M)`` with product ``x * y = x o y``."""

    def __init__(self, M: Rep):
        hs = HomSpace(M, M)
        self.hom = hs
        self.M = M
        F = M.F
        n = hs.dim
        gens = M._cache["gens"]
        table = {}
        maps = [hs.basis_map(i) for i in range(n)]
        # images of generators under each basis map
        gimgs = [hs.vecs[j] for j in range(n)]
        for i in range(n):
            mi = maps[i]
            for j in range(n):
                vec, o = [], 0
                for v, _ in gens:
                    d = M.dims[v]
                    vec.extend(mi.maps[v].apply(gimgs[j][o:o + d]))
                    o += d
                c = hs.coords(vec)
                t = {k: x for k, x in enumerate(c) if x}
                if t:
                    table[(i, j)] = t
        one = hs.coords(hs.vec_from_map(_identity(M)))
        super().__init__(F, n, table, one)

    def to_map(self, x) -> RepMap:
        return self.hom.combo(x)

    def from_map(self, f: RepMap):
        return self.hom.coords(self.hom.vec_from_map(f))


def _identity(M):
    from .rep import identity_map
    return identity_map(M)


def end_algebra(M: Rep) -> EndAlgebra:
    E = M._cache.get("end")
    if E is None:
        E = EndAlgebra(M)
        M._cache["end"] = E
    return E


@dataclass
class Summand:
    module: Rep
    inclusion: RepMap
    projection: RepMap
    nonsplit: bool = False


@dataclass
class Decomposition:
    """``M = sum of classes[i][0] ** multiplicity``; ``summands`` lists every piece."""

    M: Rep
    summands: list
    classes: list = field(default_factory=list)  # (representative Summand, multiplicity, [indices])
    seed: int = 0

    @property
    def multiplicities(self):
        return [(c[0].module, c[1]) for c in self.classes]


def decompose(M: Rep, seed: int = 0) -> Decomposition:
    if M.dim == 0:
        return Decomposition(M, [], [], seed)
    key = ("decomp", seed)
    if key in M._cache:
        return M._cache[key]
    E = end_algebra(M)
    rep = E.primitive_idempotents(seed=seed)
    summands = []
    for e, flag in zip(rep.idempotents, rep.nonsplit):
        f = E.to_map(e)
        S, inc, co = image(f)
        summands.append(Summand(S, inc, co, flag))
    classes = []
    for idx, e in enumerate(rep.idempotents):
        for c in classes:
            if E.idempotents_equivalent(rep.idempotents[c[2][0]], e):
                c[2].append(idx)
                c[1] += 1
                break
        else:
            classes.append([summands[idx], 1, [idx]])
    d = Decomposition(M, summands, [tuple(c) for c in classes], seed)
    M._cache[key] = d
    return d


def is_indecomposable(M: Rep, seed: int = 0) -> bool:
    if M.dim == 0:
        return False
    cached = M._cache.get("indec")
    if cached is None:
        E = end_algebra(M)
        kind, _ = E.corner_locality(E.one, random.Random(seed))
        cached = kind != "split"
        M._cache["indec"] = cached
    return cached


def _non_nilpotent_pair(M: Rep, N: Rep):
    """Maps ``f: M -> N``, ``g: N -> M`` with ``g o f`` not nilpotent, for indecomposable ``M``."""
    H1 = HomSpace(M, N)
    if H1.dim == 0:
        return None
    H2 = HomSpace(N, M)
    E = end_algebra(M)
    for i in range(H1.dim):
        f = H1.basis_map(i)
        for j in range(H2.dim):
            g = H2.basis_map(j)
            x = E.from_map(g @ f)
            if not E.is_nilpotent(x):
                return f, g
    return None


def iso_witness(M: Rep, N: Rep):
    """An isomorphism ``M -> N`` between indecomposables, or ``None``."""
    if M.dimvec != N.dimvec:
        return None
    if M.dim == 0:
        return RepMap(M, N, {})
    pr = _non_nilpotent_pair(M, N)
    if pr is None:
        return None
    f = pr[0]
    return f if f.is_iso() else None


def is_isomorphic(M: Rep, N: Rep, seed: int = 0) -> bool:
    if M.A is not N.A or M.dimvec != N.dimvec:
        return False
    if M.dim == 0:
        return True
    H = HomSpace(M, N)
    if H.dim == 0:
        return False
    rng = random.Random(seed)
    F = M.F
    for _ in range(3):
        f = H.combo([F(rng.randint(-7, 7)) if F.char == 0 else F.random(rng) for _ in range(H.dim)])
        if f.is_iso():
            return True
    if is_indecomposable(M) and is_indecomposable(N):
        return iso_witness(M, N) is not None
    dm, dn = decompose(M, seed), decompose(N, seed)
    left = [[c[0].module, c[1]] for c in dm.classes]
    for c in dn.classes:
        X, m = c[0].module, c[1]
        for entry in left:
            if entry[1] == m and iso_witness(entry[0], X) is not None:
                entry[1] = -1
                break
        else:
            return False
    return all(e[1] == -1 for e in left)


def is_summand_of(X: Rep, M: Rep, seed: int = 0) -> bool:
    """Whether ``X`` is isomorphic to a direct summand of ``M`` (Krull-Schmidt multiplicities)."""
    if X.dim == 0:
        return True
    dx, dm = decompose(X, seed), decompose(M, seed)
    avail = [[c[0].module, c[1]] for c in dm.classes]
    for c in dx.classes:
        for entry in avail:
            if iso_witness(entry[0], c[0].module) is not None:
                if entry[1] < c[1]:
                    return False
                break
        else:
            return False
    return True


def in_add(X: Rep, gens, seed: int = 0) -> bool:
    """``X`` lies in ``add`` of the given indecomposables."""
    for S in decompose(X, seed).summands:
        if not any(iso_witness(G, S.module) is not None for G in gens):
            return False
    return True


def radical_hom(f: RepMap, seed: int = 0) -> bool:
    """Whether ``f`` lies in ``rad(M, N)``: no component between summands is an isomorphism."""
    dm, dn = decompose(f.src, seed), decompose(f.tgt, seed)
    for si in dm.summands:
        for tj in dn.summands:
            if si.module.dimvec != tj.module.dimvec:
                continue
            comp = tj.projection @ f @ si.inclusion
            if comp.is_iso():
                return False
            # a non-iso component can still be part of an iso after mixing; test through End
            if iso_witness(si.module, tj.module) is not None:
                E = end_algebra(si.module)
                for g in HomSpace(tj.module, si.module).basis():
                    if not E.is_nilpotent(E.from_map(g @ comp)):
                        return False
    return True
