"""Exhaustive wrd = ed comparison over the F_2 micro-corpus."""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import fixtures
from .dimensions import (
    ModuleUniverse, SearchBounds, candidate_pool, exhaustive_ed, exhaustive_wrd, filtration_levels,
    wrd_upper,
)
from .modules.decompose import decompose
from .modules.homology import syzygy

# exhaustive A+DA searches here take minutes each
SLOW_CROSS_CHECK = frozenset({"loop_tail_free", "two_loops_bridge"})


@dataclass
class OracleConfig:
    bounds: SearchBounds = field(default_factory=SearchBounds)
    filtration_bounds: SearchBounds = field(default_factory=lambda: SearchBounds(max_dim=8))
    max_n: int = 3
    cross_check: bool = True
    skip_cross_check: frozenset = SLOW_CROSS_CHECK


@dataclass
class OracleRow:
    name: str
    dim: int
    indecomposables: int
    ed: int | None
    wrd: int | None
    # A + DA cross-check; None when skipped
    wrd_A_DA: list | None = None
    approx_A_DA: list | None = None
    approx_dominates: bool | None = None
    filtration_closes: bool | None = None
    seconds: float = 0.0

    @property
    def agrees(self) -> bool:
        return self.ed is not None and self.ed == self.wrd

    @property
    def passed(self) -> bool:
        return self.agrees and self.approx_dominates is not False and self.filtration_closes is not False


def _indices(U, mods):
    return sorted({U.index(c[0].module) for M in mods if M.dim for c in decompose(M, U.seed).classes})


def run_one(name: str, A, cfg: OracleConfig | None = None) -> OracleRow:
    cfg = cfg or OracleConfig()
    t = time.perf_counter()
    U = ModuleUniverse.from_knit(A)
    N = len(U.mods)
    ed, _ = exhaustive_ed(U, cfg.bounds, cfg.max_n)
    everything = list(range(N))
    found = [exhaustive_wrd(U, everything, X, cfg.bounds, cfg.max_n) for X in U.mods]
    wrd = None if None in found else max(found)
    row = OracleRow(name, A.dim, N, ed, wrd)
    if cfg.cross_check and name not in cfg.skip_cross_check:
        pool = candidate_pool(A)["A+DA"]
        idx = _indices(U, pool)
        ex = [exhaustive_wrd(U, idx, X, cfg.bounds, cfg.max_n) for X in U.mods]
        ap = [wrd_upper(pool, X).value for X in U.mods]
        row.wrd_A_DA = ex
        row.approx_A_DA = [a.value if a.is_finite else None for a in ap]
        row.approx_dominates = all(e is not None and e <= a.value for e, a in zip(ex, ap) if a.is_finite)
        if None not in ex:
            # every module then lies in [sum_{i<=n} Omega^{-i}(A + DA)]_{n+1}
            n = max(ex)
            T = [syzygy(U.mods[i], -k) for k in range(n + 1) for i in idx]
            levels, _, _ = filtration_levels(U, _indices(U, T), n, cfg.filtration_bounds)
            row.filtration_closes = len(levels) == N and max(levels.values()) <= n + 1
    row.seconds = time.perf_counter() - t
    return row


def run_corpus(cfg: OracleConfig | None = None, names=None) -> list:
    names = names or list(fixtures.MICRO_CORPUS)
    return [run_one(n, fixtures.micro_algebra(n), cfg) for n in names]
