"""Auslander-Reiten translation, almost split sequences and knitting."""
from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass, field

from .core.fdalgebra import NonsplitError
from .core.linalg import Matrix, nullspace_rows
from .core.quiver import classify_graph
from .modules.decompose import decompose, end_algebra, is_indecomposable, iso_witness
from .modules.homology import (
    ext, is_injective, is_projective, omega, projective_cover, realize_extension, resolution,
)
from .modules.rep import (
    PMat, Rep, SES, cokernel, dual, factor_through_epi_projective, factor_through_mono,
    hom_pullback_matrix, injective, projective, radical, socle_basis, quotient,
)


# -- translation ------------------------------------------------------------------------
def transpose(M: Rep) -> Rep:
    """``Tr M = coker(P_0* -> P_1*)`` over the opposite algebra."""
    cached = M._cache.get("tr")
    if cached is not None:
        return cached
    res = resolution(M).extend(1)
    d1 = res.d(1).dual()
    T, _ = cokernel(d1.to_repmap())
    M._cache["tr"] = T
    return T


def tau(M: Rep) -> Rep:
    """``D Tr M``; zero on projectives."""
    return dual(transpose(M))


def tau_inverse(M: Rep) -> Rep:
    """``Tr D M``; zero on injectives."""
    return transpose(dual(M))


# -- almost split sequences ---------------------------------------------------------------
def _lift_to_p1(M: Rep, phi):
    """A map ``P_1 -> P_1`` covering ``phi`` on the minimal presentation of ``M``."""
    cov = projective_cover(M)
    K, inc = omega(M)
    covK = projective_cover(K)
    psi0 = factor_through_epi_projective(phi @ cov, cov)
    restr = factor_through_mono(psi0 @ inc, inc)
    psi1 = factor_through_epi_projective(restr @ covK, covK)
    return PMat.from_repmap(psi1)


def almost_split_sequence(M: Rep, seed: int = 0) -> SES:
    """``0 -> tau M -> E -> M -> 0`` for indecomposable non-projective ``M``."""
    cached = M._cache.get("ass")
    if cached is not None:
        return cached
    if M.dim == 0 or is_projective(M):
        raise ValueError("almost split sequences end in non-projective modules")
    if not is_indecomposable(M, seed):
        raise ValueError("module is decomposable")
    N = tau(M)
    E = ext(M, N, 1)
    if E.dim == 0:
        raise AssertionError("Ext^1(M, tau M) vanishes for a non-projective indecomposable")
    F = M.F
    if E.dim == 1:
        x = [F.one]
    else:
        End = end_algebra(M)
        blocks = []
        for i in range(End.dim):
            z = End.basis_vec(i)
            r = End.sub(z, End.scale(End.eigenvalue(z, End.one), End.one))
            if End.is_zero(r):
                continue
            P = hom_pullback_matrix(N, _lift_to_p1(M, End.to_map(r)))
            for cl in E.classes:
                blocks.append(E.coords(P.apply(cl)))
        # stack the action matrices: column i = class i, one row block per radical element
        rows = []
        d = E.dim
        for b in range(0, len(blocks), d):
            chunk = blocks[b:b + d]
            for j in range(d):
                rows.append([chunk[i][j] for i in range(d)])
        sol = nullspace_rows(F, rows, d) if rows else [[F.one if j == 0 else F.zero for j in range(d)]]
        if not sol:
            raise NonsplitError("no socle element found in Ext^1(M, tau M)")
        x = sol[0]
    cocycle = [F.zero] * len(E.classes[0])
    for c, cl in zip(x, E.classes):
        if c:
            cocycle = [a + c * b for a, b in zip(cocycle, cl)]
    s = realize_extension(E, cocycle)
    M._cache["ass"] = s
    return s


# -- knitting -------------------------------------------------------------------------------
@dataclass
class Budget:
    """``max_dim`` caps the summed dimension of all discovered nodes."""

    max_dim: int = 80
    max_steps: int = 512


@dataclass
class ARNode:
    id: int
    module: Rep
    projective: bool
    injective: bool
    tau: int | None = None
    tau_inv: int | None = None
    middle: list = field(default_factory=list)  # ids of the mesh ending here, with repetition


@dataclass
class ARQuiver:
    A: object
    nodes: list
    complete: bool
    reason: str = ""
    steps: int = 0

    @property
    def status(self):
        return "complete" if self.complete else "budget-exhausted"

    def __len__(self):
        return len(self.nodes)

    @property
    def dimvecs(self):
        return sorted(n.module.dimvec for n in self.nodes)

    @property
    def modules(self):
        return [n.module for n in self.nodes]

    def find(self, X: Rep):
        for n in self.nodes:
            if n.module.dimvec == X.dimvec and iso_witness(n.module, X) is not None:
                return n
        return None

    def arrows(self):
        """Irreducible maps ``(source id, target id, multiplicity)`` read off the meshes."""
        out = {}
        for n in self.nodes:
            for m in n.middle:
                out[(m, n.id)] = out.get((m, n.id), 0) + 1
        return sorted((a, b, k) for (a, b), k in out.items())

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "reason": self.reason,
            "nodes": [{
                "id": n.id,
                "dimvec": list(n.module.dimvec),
                "projective": n.projective,
                "injective": n.injective,
                "tau": n.tau,
            } for n in self.nodes],
            "arrows": [list(a) for a in self.arrows()],
            "meshes": [{"end": n.id, "start": n.tau, "middle": n.middle}
                       for n in self.nodes if n.tau is not None],
        }

    def to_dot(self) -> str:
        lines = ["digraph AR {", "  rankdir=LR;"]
        for n in self.nodes:
            lbl = "".join(str(d) for d in n.module.dimvec)
            shape = "box" if n.projective or n.injective else "ellipse"
            lines.append(f'  n{n.id} [label="{lbl}", shape={shape}];')
        for a, b, k in self.arrows():
            for _ in range(k):
                lines.append(f"  n{a} -> n{b};")
        for n in self.nodes:
            if n.tau is not None:
                lines.append(f"  n{n.id} -> n{n.tau} [style=dashed, constraint=false];")
        lines.append("}")
        return "\n".join(lines)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


class _Exhausted(Exception):
    pass


def knit(A, budget: Budget | None = None, seed: int = 0) -> ARQuiver:
    """Close the projectives under tau, tau^-1 and mesh neighbours."""
    budget = budget or Budget()
    nodes: list[ARNode] = []
    by_dim: dict = {}
    queue = deque()
    total = [0]

    def add(X: Rep) -> int:
        for i in by_dim.get(X.dimvec, []):
            if iso_witness(nodes[i].module, X) is not None:
                return i
        total[0] += X.dim
        if total[0] > budget.max_dim:
            raise _Exhausted(f"total dimension {total[0]} exceeds max_dim={budget.max_dim}")
        n = ARNode(len(nodes), X, is_projective(X), is_injective(X))
        nodes.append(n)
        by_dim.setdefault(X.dimvec, []).append(n.id)
        queue.append(n.id)
        return n.id

    steps = 0
    reason = ""
    try:
        for v in A.vertices:
            add(projective(A, v))
        while queue:
            if steps >= budget.max_steps:
                raise _Exhausted(f"step budget {budget.max_steps} used up")
            steps += 1
            n = nodes[queue.popleft()]
            M = n.module
            if not n.projective:
                s = almost_split_sequence(M, seed)
                t = add(s.X)
                n.tau = t
                nodes[t].tau_inv = n.id
                for S in decompose(s.Y, seed).summands:
                    n.middle.append(add(S.module))
            else:
                R, _ = radical(M)
                if R.dim:
                    for S in decompose(R, seed).summands:
                        add(S.module)
            if not n.injective:
                if n.tau_inv is None:
                    t = add(tau_inverse(M))
                    n.tau_inv = t
            else:
                Q, _ = quotient(M, socle_basis(M))
                if Q.dim:
                    for S in decompose(Q, seed).summands:
                        add(S.module)
    except _Exhausted as exc:
        reason = str(exc)
    complete = not queue and not reason
    if complete:
        for v in A.vertices:
            I = injective(A, v)
            if not any(iso_witness(nodes[i].module, I) is not None for i in by_dim.get(I.dimvec, [])):
                complete = False
                reason = f"injective I({v}) not reached"
    return ARQuiver(A, nodes, complete, reason, steps)


# -- representation type and nodes ----------------------------------------------------------
def is_representation_finite(A, budget: Budget | None = None, seed: int = 0) -> str:
    """``"yes"``, ``"no"`` or ``"unknown"``."""
    if A.is_hereditary_presentation():
        for comp in A.quiver.components():
            if not classify_graph(comp).is_dynkin:
                return "no"
    ar = knit(A, budget, seed)
    return "yes" if ar.complete else "unknown"


@dataclass
class NodeReport:
    nodes: list  # vertex labels v with S(v) a node
    middle_terms: dict  # v -> middle term of the sequence starting at S(v)
    checked: list  # simples that are neither projective nor injective


def find_nodes(A, seed: int = 0) -> NodeReport:
    from .modules.rep import simple
    out, mids, checked = [], {}, []
    for v in A.vertices:
        S = simple(A, v)
        if is_projective(S) or is_injective(S):
            continue
        checked.append(v)
        s = almost_split_sequence(tau_inverse(S), seed)
        mids[v] = s.Y
        if is_projective(s.Y):
            out.append(v)
    return NodeReport(out, mids, checked)
