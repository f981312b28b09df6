"""Homological dimensions, the [T]_n filtration, weak resolution dimension and ed bounds."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .ar import Budget, knit
from .core.fdalgebra import NonsplitError
from .core.linalg import Matrix, span_basis
from .core.quiver import classify_graph
from .modules.decompose import decompose, end_algebra, in_add, is_isomorphic, is_summand_of, iso_witness
from .modules.homology import HomSpace, ext, realize_extension, resolution, syzygy, syzygy_sequence
from .modules.rep import (
    SES, Rep, RepMap, cokernel, direct_sum, dual, dual_map, identity_map, injective, kernel,
    map_from_sum, projective, regular_module, simple, zero_rep,
)


# -- dimension values -------------------------------------------------------------------------
@dataclass(frozen=True)
class DimValue:
    """``finite(n)``, ``infinite`` with a periodic pair ``i < j`` of syzygies, or ``unknown`` past a cutoff."""

    kind: str
    value: int | None = None
    witness: tuple | None = None
    cutoff: int | None = None

    @classmethod
    def finite(cls, n):
        return cls("finite", n)

    @classmethod
    def infinite(cls, i=None, j=None):
        return cls("infinite", None, None if i is None else (i, j))

    @classmethod
    def unknown(cls, cutoff):
        return cls("unknown", None, None, cutoff)

    @property
    def is_finite(self):
        return self.kind == "finite"

    def bound(self):
        """Numeric value usable as an upper bound (``inf`` unless finite)."""
        return self.value if self.is_finite else float("inf")

    def __str__(self):
        if self.kind == "finite":
            return str(self.value)
        if self.kind == "infinite":
            return "inf" + (f" (Omega^{self.witness[0]} ~ Omega^{self.witness[1]})" if self.witness else "")
        return f"unknown(>{self.cutoff})"

    def to_json(self):
        return {"kind": self.kind, "value": self.value,
                "witness": list(self.witness) if self.witness else None, "cutoff": self.cutoff}


def proj_dim(M: Rep, cutoff: int = 12) -> DimValue:
    """Length of the minimal projective resolution; ``-1`` for the zero module."""
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    if M.dim == 0:
        return DimValue.finite(-1)
    res = resolution(M)
    for k in range(1, cutoff + 2):
        res.extend(k)
        K = res.syz[k]
        if K.dim == 0:
            return DimValue.finite(k - 1)
        for i in range(k):
            if res.syz[i].dimvec == K.dimvec and is_isomorphic(res.syz[i], K):
                return DimValue.infinite(i, k)
    return DimValue.unknown(cutoff)


def inj_dim(M: Rep, cutoff: int = 12) -> DimValue:
    return proj_dim(dual(M), cutoff)


def global_dim(A, cutoff: int = 12) -> DimValue:
    best = DimValue.finite(0)
    unknown = None
    for v in A.vertices:
        d = proj_dim(simple(A, v), cutoff)
        if d.kind == "infinite":
            return d
        if d.kind == "unknown":
            unknown = d
        elif d.value > best.value:
            best = d
    return unknown or best


# -- add(M) and approximations ---------------------------------------------------------------------
def basic_generators(mods, seed: int = 0) -> list:
    """Pairwise non-isomorphic indecomposable summands of the given modules."""
    if isinstance(mods, Rep):
        mods = [mods]
    out = []
    for M in mods:
        for c in decompose(M, seed).classes:
            X = c[0].module
            if not any(G.dimvec == X.dimvec and iso_witness(G, X) is not None for G in out):
                out.append(X)
    return out


def _radical_endo_maps(G: Rep):
    E = end_algebra(G)
    out = []
    for i in range(E.dim):
        z = E.basis_vec(i)
        r = E.sub(z, E.scale(E.eigenvalue(z, E.one), E.one))
        if not E.is_zero(r):
            out.append(E.to_map(r))
    return out


def right_approximation(gens, X: Rep):
    """Minimal right ``add(gens)``-approximation ``f: M_0 -> X`` and the multiplicities used.

    ``gens`` must be pairwise non-isomorphic indecomposables with split local endomorphism rings.
    A generator contributes one copy per vector of a complement to the maps factoring through
    radical maps between generators.
    """
    F = X.F
    spaces = [HomSpace(G, X) for G in gens]
    chosen, mult = [], []
    for i, G in enumerate(gens):
        H = spaces[i]
        if H.dim == 0:
            mult.append(0)
            continue
        sub = []
        for j, G2 in enumerate(gens):
            if spaces[j].dim == 0:
                continue
            if i == j:
                try:
                    rads = _radical_endo_maps(G)
                except NonsplitError:
                    rads = []
            else:
                rads = HomSpace(G, G2).basis()
            for r in rads:
                for h in spaces[j].basis():
                    sub.append(H.coords(H.vec_from_map(h @ r)))
        rows, piv = span_basis(F, sub, H.dim) if sub else ([], [])
        base = [list(r) for r in rows]
        cnt = 0
        for k in range(H.dim):
            e = [F.one if t == k else F.zero for t in range(H.dim)]
            trial = base + [e]
            if len(span_basis(F, trial, H.dim)[1]) > len(base):
                base = [list(r) for r in span_basis(F, trial, H.dim)[0]]
                chosen.append(H.basis_map(k))
                cnt += 1
        mult.append(cnt)
    if not chosen:
        return RepMap(zero_rep(X.A), X, {v: Matrix(F, X.dims[v], 0) for v in X.A.vertices}), mult
    return map_from_sum(chosen), mult


@dataclass
class WrdResolution:
    """``0 -> M_n -> ... -> M_0 -> X -> 0`` built from approximations.

    ``approx[i]: M_i -> K_i`` is onto with ``K_0 = X``; ``incl[i]: K_{i+1} -> M_i`` is its kernel.
    The last term ``M_n = K_n`` lies in ``add(M)``.
    """

    target: Rep
    gens: list
    value: DimValue
    approx: list = field(default_factory=list)
    incl: list = field(default_factory=list)

    @property
    def terms(self):
        out = [f.src for f in self.approx]
        if self.value.is_finite and self.value.value > 0:
            out.append(self.incl[-1].src)
        elif self.value.is_finite:
            out = [self.target]
        return out

    def ses(self, i) -> SES:
        return SES(self.incl[i], self.approx[i])

    def is_exact(self):
        return all(self.ses(i).is_exact() for i in range(len(self.incl)))


def wrd_upper(M, X: Rep, cutoff: int = 8, seed: int = 0, gens=None) -> WrdResolution:
    """Certified upper bound for ``M-wrd(X)`` with ``Y = 0``."""
    gens = gens if gens is not None else basic_generators(M, seed)
    if X.dim == 0 or in_add(X, gens, seed):
        return WrdResolution(X, gens, DimValue.finite(0))
    out = WrdResolution(X, gens, DimValue.unknown(cutoff))
    K = X
    for k in range(cutoff):
        f, _ = right_approximation(gens, K)
        if not f.is_surjective():
            return out
        Kn, inc = kernel(f)
        out.approx.append(f)
        out.incl.append(inc)
        if in_add(Kn, gens, seed):
            out.value = DimValue.finite(k + 1)
            return out
        K = Kn
    return out


def wrd_of_modules(M, modules, cutoff: int = 8, seed: int = 0) -> DimValue:
    """Maximum of the certified bounds over ``modules``."""
    gens = basic_generators(M, seed)
    best = 0
    for X in modules:
        v = wrd_upper(M, X, cutoff, seed, gens).value
        if not v.is_finite:
            return v
        best = max(best, v.value)
    return DimValue.finite(best)


# -- filtration witnesses ------------------------------------------------------------------------
@dataclass
class FiltrationWitness:
    """Chain ``0 -> T_i -> X_i + X_i' -> X_{i+1} -> 0`` with ``X_0 = target`` and ``X_len`` in ``add T``."""

    target: Rep
    T: list          # indecomposable generators of add T
    steps: list      # SES per step
    source: str = "exhaustive"

    @property
    def level(self):
        """``n`` with ``target`` in ``[T]_{n+1}``."""
        return len(self.steps)

    def validate(self, seed: int = 0) -> bool:
        if not self.steps:
            return in_add(self.target, self.T, seed)
        cur = self.target
        for s in self.steps:
            if not s.is_exact():
                return False
            if s.X.dim and not in_add(s.X, self.T, seed):
                return False
            if not is_summand_of(cur, s.Y, seed):
                return False
            cur = s.Z
        return cur.dim == 0 or in_add(cur, self.T, seed)


def ses_sum(seqs) -> SES:
    seqs = list(seqs)
    X, _, _ = direct_sum([s.X for s in seqs])
    Y, _, _ = direct_sum([s.Y for s in seqs])
    Z, _, _ = direct_sum([s.Z for s in seqs])
    F = X.F
    iota = RepMap(X, Y, {v: Matrix.block_diag(F, [s.iota.maps[v] for s in seqs]) for v in X.A.vertices})
    pi = RepMap(Y, Z, {v: Matrix.block_diag(F, [s.pi.maps[v] for s in seqs]) for v in X.A.vertices})
    return SES(iota, pi)


def trivial_ses(Y: Rep) -> SES:
    """``0 -> 0 -> Y -> Y -> 0``."""
    Z = zero_rep(Y.A)
    F = Y.F
    return SES(RepMap(Z, Y, {v: Matrix(F, Y.dims[v], 0) for v in Y.A.vertices}), identity_map(Y))


def dual_ses(s: SES) -> SES:
    return SES(dual_map(s.pi), dual_map(s.iota))


def cosyzygy_sequence(s: SES, i: int) -> SES:
    """``0 -> Omega^{-i} Y -> Omega^{-i} Z + I -> Omega^{-(i+1)} X -> 0`` for ``0 -> X -> Y -> Z -> 0``."""
    return dual_ses(syzygy_sequence(dual_ses(s), i).ses)


def resolution_to_filtration(r: WrdResolution) -> tuple:
    """``(T, witness)`` with ``T = sum of Omega^{-i} M_i`` and the target in ``[T]_{n+1}``."""
    if not r.value.is_finite:
        raise ValueError("no finite resolution to convert")
    n = r.value.value
    if n == 0:
        T = basic_generators([r.target])
        return T, FiltrationWitness(r.target, T, [], "resolution")
    steps = [cosyzygy_sequence(r.ses(i), i) for i in range(n)]
    pieces = [syzygy(r.approx[i].src, -i) for i in range(n)] + [syzygy(r.incl[-1].src, -n)]
    T = basic_generators([P for P in pieces if P.dim])
    return T, FiltrationWitness(r.target, T, steps, "resolution")


# -- exhaustive search over a finite field -------------------------------------------------------
@dataclass
class SearchBounds:
    mult: int = 1            # multiplicity of each indecomposable in T_1 and X_2
    max_dim: int = 12        # dimension of the middle term
    max_classes: int = 4096  # extension classes enumerated per pair
    max_maps: int = 4096     # maps enumerated per pair in the wrd search


@dataclass
class FiltrationResult:
    verdict: str                 # "yes", "no-within-bounds", "witnessed-yes-from-construction"
    witness: FiltrationWitness | None = None
    levels: dict = field(default_factory=dict)  # indecomposable index -> least k with it in [T]_k
    truncated: bool = False


class ModuleUniverse:
    """All indecomposables of a representation-finite algebra, with summand bookkeeping."""

    def __init__(self, A, modules, seed: int = 0):
        self.A = A
        self.mods = list(modules)
        self.seed = seed

    @classmethod
    def from_knit(cls, A, budget: Budget | None = None, seed: int = 0):
        ar = knit(A, budget, seed)
        if not ar.complete:
            raise ValueError(f"knitting incomplete: {ar.reason}")
        return cls(A, ar.modules, seed)

    def index(self, X: Rep) -> int:
        for i, M in enumerate(self.mods):
            if M.dimvec == X.dimvec and iso_witness(M, X) is not None:
                return i
        raise KeyError("module not in the universe")

    def key(self, X: Rep) -> tuple:
        """Multiplicity vector of ``X``."""
        out = [0] * len(self.mods)
        for c in decompose(X, self.seed).classes:
            out[self.index(c[0].module)] += c[1]
        return tuple(out)

    def build(self, key) -> Rep:
        parts = [self.mods[i] for i, m in enumerate(key) for _ in range(m)]
        return direct_sum(parts)[0] if parts else zero_rep(self.A)

    def dim(self, key) -> int:
        return sum(m * self.mods[i].dim for i, m in enumerate(key))


def _field_vectors(F, n):
    return itertools.product(F.elements(), repeat=n)


def _multisets(indices, mult, n):
    """Nonzero multiplicity vectors supported on ``indices`` with entries ``<= mult``."""
    idx = list(indices)
    for combo in itertools.product(range(mult + 1), repeat=len(idx)):
        if any(combo):
            key = [0] * n
            for i, m in zip(idx, combo):
                key[i] = m
            yield tuple(key)


def filtration_levels(U: ModuleUniverse, T_idx, n: int, bounds: SearchBounds | None = None):
    """Least ``k <= n+1`` with each indecomposable in ``[T]_k`` found by bounded enumeration.

    Returns ``(levels, parents, truncated)``; ``parents[i] = (ses, x2_key)`` for ``levels[i] > 1``.
    """
    bounds = bounds or SearchBounds()
    F = U.A.F
    if not F.is_finite:
        raise ValueError("exhaustive mode needs a finite field")
    N = len(U.mods)
    levels = {i: 1 for i in T_idx}
    parents = {}
    truncated = False
    for k in range(1, n + 1):
        cur = [i for i, l in levels.items() if l <= k]
        found = {}
        for t_key in _multisets(sorted(T_idx), bounds.mult, N):
            for x_key in _multisets(cur, bounds.mult, N):
                if not any(x_key[i] and levels[i] == k for i in range(N)):
                    continue  # pairs from lower levels were seen already
                if U.dim(t_key) + U.dim(x_key) > bounds.max_dim:
                    truncated = True
                    continue
                T1, X2 = U.build(t_key), U.build(x_key)
                E = ext(X2, T1, 1)
                if F.char ** E.dim > bounds.max_classes:
                    truncated = True
                    continue
                for coeffs in _field_vectors(F, E.dim):
                    if not any(coeffs):
                        continue
                    cocycle = [F.zero] * len(E.classes[0])
                    for c, cl in zip(coeffs, E.classes):
                        if c:
                            cocycle = [a + c * b for a, b in zip(cocycle, cl)]
                    s = realize_extension(E, cocycle)
                    for S in decompose(s.Y, U.seed).summands:
                        j = U.index(S.module)
                        if j not in levels and j not in found:
                            found[j] = (s, x_key)
        if not found:
            break
        for j, p in found.items():
            levels[j] = k + 1
            parents[j] = p
    return levels, parents, truncated


def _chain(U: ModuleUniverse, levels, parents, key, length):
    """SES chain of the given length for the module with multiplicity vector ``key``."""
    pieces = []
    for i, m in enumerate(key):
        for _ in range(m):
            pieces.append(_indec_chain(U, levels, parents, i, length))
    if not pieces:
        return []
    return [ses_sum([p[s] for p in pieces]) for s in range(length)]


def _indec_chain(U, levels, parents, i, length):
    own = levels[i] - 1
    pad = [trivial_ses(U.mods[i])] * (length - own)
    if own == 0:
        return pad
    s, x_key = parents[i]
    return pad + [s] + _chain(U, levels, parents, x_key, own - 1)


def filtration_member(X: Rep, T, n: int, bounds: SearchBounds | None = None, universe=None,
                      seed: int = 0, mode: str = "exhaustive", resolution: WrdResolution | None = None):
    """Decide ``X`` in ``[T]_{n+1}`` within bounds, or convert a resolution into a witness."""
    if mode == "construct":
        if resolution is None:
            raise ValueError("construct mode needs a resolution")
        Tg, w = resolution_to_filtration(resolution)
        if w.level > n:
            return FiltrationResult("no-within-bounds", w)
        return FiltrationResult("witnessed-yes-from-construction", w)
    gens = basic_generators(T, seed) if not (isinstance(T, list) and all(isinstance(t, int) for t in T)) else None
    if gens is not None and (X.dim == 0 or in_add(X, gens, seed)):
        # [T]_1 = add T needs no enumeration, so any field will do
        return FiltrationResult("yes", FiltrationWitness(X, gens, []), {})
    U = universe or ModuleUniverse.from_knit(X.A, seed=seed)
    T_idx = sorted({U.index(G) for G in gens}) if gens is not None else sorted(T)
    if X.dim == 0:
        return FiltrationResult("yes", FiltrationWitness(X, [U.mods[i] for i in T_idx], []), {})
    levels, parents, truncated = filtration_levels(U, T_idx, n, bounds)
    key = U.key(X)
    need = [i for i, m in enumerate(key) if m]
    if all(i in levels for i in need):
        length = max(levels[i] for i in need) - 1
        w = FiltrationWitness(X, [U.mods[i] for i in T_idx], _chain(U, levels, parents, key, length))
        return FiltrationResult("yes", w, levels, truncated)
    return FiltrationResult("no-within-bounds", None, levels, truncated)


def exhaustive_ed(U: ModuleUniverse, bounds: SearchBounds | None = None, max_n: int = 3, candidates=None):
    """Least ``n`` with ``mod A = [T]_{n+1}``, searching ``T`` over ``candidates`` (index sets).

    The additive generator is always a candidate; smaller sets are tried first at each ``n``.
    """
    N = len(U.mods)
    cands = [tuple(sorted(c)) for c in (candidates or [])]
    full = tuple(range(N))
    if full not in cands:
        cands.append(full)
    cands.sort(key=len)
    for n in range(max_n + 1):
        for c in cands:
            levels, _, _ = filtration_levels(U, c, n, bounds)
            if len(levels) == N:
                return n, c
    return None, None


def exhaustive_wrd(U: ModuleUniverse, M_idx, X: Rep, bounds: SearchBounds | None = None, max_n: int = 3):
    """Least ``n`` with an exact ``add(M)``-resolution of length ``n`` of some ``X + Y``.

    Classes ``R_k`` of modules admitting exact resolutions of length ``k`` are grown by
    enumerating monomorphisms ``K' -> M_0`` over the finite field; ``Y`` is implicit since
    ``X`` is tested for summand-hood.  ``None`` if nothing is found within the bounds.
    """
    bounds = bounds or SearchBounds()
    F = U.A.F
    if not F.is_finite:
        raise ValueError("exhaustive mode needs a finite field")
    N = len(U.mods)
    xkey = U.key(X)
    addM = [k for k in _multisets(M_idx, bounds.mult, N) if U.dim(k) <= bounds.max_dim]

    def hit(R):
        return any(all(k[i] >= xkey[i] for i in range(N)) for k in R)

    R = set(addM)
    if hit(R):
        return 0
    for n in range(1, max_n + 1):
        new = set(R)
        for kp in R:
            Kp = U.build(kp)
            for m0 in addM:
                if U.dim(m0) <= U.dim(kp):
                    continue
                M0 = U.build(m0)
                H = HomSpace(Kp, M0)
                if F.char ** H.dim > bounds.max_maps:
                    continue
                for coeffs in _field_vectors(F, H.dim):
                    f = H.combo(list(coeffs))
                    if not f.is_injective():
                        continue
                    C, _ = cokernel(f)
                    new.add(U.key(C))
        R = new
        if hit(R):
            return n
    return None


# -- extension dimension bounds ---------------------------------------------------------------------
@dataclass
class EdBounds:
    lower: int
    lower_cert: str
    upper: DimValue
    upper_cert: str
    candidates: dict = field(default_factory=dict)   # certificate kind -> DimValue
    ar_status: str = ""
    seed: int = 0
    budget: dict = field(default_factory=dict)

    @property
    def interval(self):
        return (self.lower, self.upper.value if self.upper.is_finite else None)

    def contains(self, n: int) -> bool:
        return self.lower <= n <= self.upper.bound()

    def __str__(self):
        hi = self.upper.value if self.upper.is_finite else "inf"
        return f"[{self.lower}, {hi}]"

    def to_json(self):
        return {
            "interval": [self.lower, self.upper.value if self.upper.is_finite else None],
            "lower": {"value": self.lower, "certificate": self.lower_cert},
            "upper": {"value": self.upper.to_json(), "certificate": self.upper_cert},
            "candidates": {k: v.to_json() for k, v in self.candidates.items()},
            "ar_status": self.ar_status,
            "seed": self.seed,
            "budget": self.budget,
        }


def hereditary_non_dynkin(A) -> bool:
    if not A.is_hereditary_presentation():
        return False
    return any(not classify_graph(c).is_dynkin for c in A.quiver.components())


def ed_bounds(A, budget: Budget | None = None, seed: int = 0, cutoff: int = 12) -> EdBounds:
    budget = budget or Budget()
    cands = {"loewy": DimValue.finite(max(A.loewy_length() - 1, 0))}
    gd = global_dim(A, cutoff)
    cands["global-dimension"] = gd
    lower, lower_cert = 0, "trivial"
    status = "skipped"
    if hereditary_non_dynkin(A):
        lower, lower_cert = 1, "representation-infinite (hereditary, non-Dynkin quiver)"
    else:
        ar = knit(A, budget, seed)
        status = ar.status
        if ar.complete:
            # the additive generator resolves every indecomposable in one step of length zero
            cands["additive-generator"] = wrd_of_modules(ar.modules, ar.modules, cutoff, seed)
    kind, best = min(cands.items(), key=lambda kv: kv[1].bound())
    return EdBounds(lower, lower_cert, best, kind, cands, status, seed,
                    {"max_dim": budget.max_dim, "max_steps": budget.max_steps})


def candidate_pool(A, depth: int | None = None) -> dict:
    """Candidate modules for wrd upper bounds: ``A + DA``, and ``A + DA + sum Omega^i DA``."""
    AA = regular_module(A)
    DA = direct_sum([injective(A, v) for v in A.vertices])[0]
    depth = A.loewy_length() if depth is None else depth
    syz = [syzygy(DA, i) for i in range(1, depth + 1)]
    return {
        "A+DA": [AA, DA],
        "syzygy-sum": [AA, DA] + [S for S in syz if S.dim],
    }


# -- verifiers --------------------------------------------------------------------------------------
def _interval(b: EdBounds):
    return b.lower, b.upper.bound()


@dataclass
class DerivedBoundReport:
    ed_A: EdBounds
    ed_B: EdBounds
    length: int
    presentation_match: bool
    verdict: str      # "pass", "consistent", "fail"
    tightness: str    # "equality", "strict", "undecided"

    def to_json(self):
        return {"ed_A": self.ed_A.to_json(), "ed_B": self.ed_B.to_json(), "length": self.length,
                "presentation_match": self.presentation_match, "verdict": self.verdict,
                "tightness": self.tightness}


def presentations_match(P, B, seed: int = 0) -> bool:
    from .complexes import end_algebra as complex_end
    from .core.quiver import quivers_isomorphic
    pres = complex_end(P, seed)
    return pres.algebra.dim == B.dim and quivers_isomorphic(pres.quiver, B.quiver)


def verify_derived_bound(A, B, P, budget: Budget | None = None, seed: int = 0,
                         bA: EdBounds | None = None, bB: EdBounds | None = None) -> DerivedBoundReport:
    """``|ed A - ed B| <= l(P) - 1`` on the computed intervals."""
    from .complexes import complex_length
    match = presentations_match(P, B, seed)
    if not match:
        raise ValueError("End(P) does not match the given algebra B")
    ell = complex_length(P)
    bA = bA or ed_bounds(A, budget, seed)
    bB = bB or ed_bounds(B, budget, seed)
    la, ua = _interval(bA)
    lb, ub = _interval(bB)
    gap_max = max(ua - lb, ub - la)
    gap_min = max(la - ub, lb - ua, 0)
    if gap_max <= ell - 1:
        verdict = "pass"
    elif gap_min <= ell - 1:
        verdict = "consistent"
    else:
        verdict = "fail"
    if la == ua and lb == ub:
        tight = "equality" if abs(la - lb) == ell - 1 else "strict"
    else:
        tight = "undecided"
    return DerivedBoundReport(bA, bB, ell, match, verdict, tight)


@dataclass
class SplitReport:
    separating: str          # "true", "false", "undecided"
    splitting: str
    splitting_via: str       # "torsion pair over B" or "Ext^2 criterion"
    id_bound: str            # id(X) <= 1 over F(P): "true", "false", "undecided"
    id_values: list          # (dimvec, DimValue) over F(P)
    tp_A: object = None
    tp_B: object = None
    Q: object = None


def _tri(flag: bool | None) -> str:
    return "undecided" if flag is None else ("true" if flag else "false")


def _split_verdict(tp) -> str:
    if tp.neither:
        return "false"
    return "true" if tp.complete else "undecided"


def check_separating_splitting(A, P, budget: Budget | None = None, seed: int = 0) -> SplitReport:
    from .complexes import induced_Q, torsion_pair
    budget = budget or Budget()
    arA = knit(A, budget, seed)
    tpA = torsion_pair(P, arA)
    sep = _split_verdict(tpA)
    ids = [(tpA.modules[i].dimvec, inj_dim(tpA.modules[i])) for i in tpA.F]
    if any(v.kind != "finite" or v.value > 1 for _, v in ids):
        id_ok = "false"
    else:
        id_ok = "true" if tpA.complete else "undecided"
    iq = induced_Q(P, seed)
    B = iq.presentation.algebra
    arB = knit(B, budget, seed)
    tpB = torsion_pair(iq.Q, arB)
    spl, via = _split_verdict(tpB), "torsion pair over B"
    if spl == "undecided" and tpA.complete:
        # splitting iff Ext^2(T(P), F(P)) = 0
        bad = any(ext(tpA.modules[t], tpA.modules[f], 2).dim for t in tpA.T for f in tpA.F)
        spl, via = ("false" if bad else "true"), "Ext^2 criterion"
    return SplitReport(sep, spl, via, id_ok, ids, tpA, tpB, iq)


@dataclass
class SiltingTheoremReport:
    silting: bool
    separating: str
    id_bound: str
    hypotheses: str          # "hold", "fail", "undecided"
    ed_A: EdBounds
    ed_B: EdBounds
    conclusion: str          # "equal", "differ", "undecided"
    verdict: str             # "pass", "hypothesis-failure", "fail", "undecided"
    split: SplitReport = None

    def to_json(self):
        return {"silting": self.silting, "separating": self.separating, "id_bound": self.id_bound,
                "hypotheses": self.hypotheses, "ed_A": self.ed_A.to_json(), "ed_B": self.ed_B.to_json(),
                "conclusion": self.conclusion, "verdict": self.verdict,
                "splitting": self.split.splitting if self.split else None}


def _compare(bA: EdBounds, bB: EdBounds) -> str:
    la, ua = _interval(bA)
    lb, ub = _interval(bB)
    if la == ua and lb == ub:
        return "equal" if la == lb else "differ"
    if ua < lb or ub < la:
        return "differ"
    return "undecided"


def verify_silting_theorem(A, P, budget: Budget | None = None, seed: int = 0) -> SiltingTheoremReport:
    """Hypotheses (separating, id <= 1 on F(P)) and conclusion ``ed A = ed B``."""
    from .complexes import is_two_term_silting
    sr = is_two_term_silting(P, seed)
    if not sr.silting:
        raise ValueError("P is not a 2-term silting complex")
    sp = check_separating_splitting(A, P, budget, seed)
    B = sp.Q.presentation.algebra
    bA, bB = ed_bounds(A, budget, seed), ed_bounds(B, budget, seed)
    flags = [sp.separating, sp.id_bound]
    hyp = "fail" if "false" in flags else ("hold" if all(f == "true" for f in flags) else "undecided")
    concl = _compare(bA, bB)
    if hyp == "hold":
        verdict = {"equal": "pass", "differ": "fail"}.get(concl, "undecided")
    elif hyp == "fail":
        verdict = "hypothesis-failure"
    else:
        verdict = "undecided"
    return SiltingTheoremReport(True, sp.separating, sp.id_bound, hyp, bA, bB, concl, verdict, sp)


@dataclass
class StableExampleReport:
    nodes: list
    loewy_A: int
    gd_A: DimValue
    gd_B: DimValue
    ed_A: EdBounds
    ed_B: EdBounds
    checks: dict

    @property
    def passed(self):
        return all(self.checks.values())

    def to_json(self):
        return {"nodes": self.nodes, "loewy_A": self.loewy_A, "gd_A": self.gd_A.to_json(),
                "gd_B": self.gd_B.to_json(), "ed_A": self.ed_A.to_json(), "ed_B": self.ed_B.to_json(),
                "checks": self.checks}


def verify_stable_example(A, B, n: int, claimed_ed: int = 1, budget: Budget | None = None,
                          seed: int = 0) -> StableExampleReport:
    """Numbers of the stable-equivalence example: nodes, Loewy length, ed on both sides."""
    from .ar import find_nodes
    nodes = find_nodes(A, seed).nodes
    ll = A.loewy_length()
    gA, gB = global_dim(A), global_dim(B)
    bA, bB = ed_bounds(A, budget, seed), ed_bounds(B, budget, seed)
    first = A.vertices[0]
    checks = {
        "loewy_length": ll == n - 1,
        "unique_node": nodes == [first],
        "ed_B": bB.lower == bB.upper.bound() == claimed_ed,
        "ed_A_consistent": bA.contains(claimed_ed),
    }
    return StableExampleReport(nodes, ll, gA, gB, bA, bB, checks)
