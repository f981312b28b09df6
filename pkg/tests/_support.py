"""Shared generators and independent oracles for the test suite."""
import functools
import itertools
import random

from extdim import fixtures as fx
from extdim.ar import knit
from extdim.modules.homology import ext, realize_extension


@functools.lru_cache(maxsize=None)
def ar_of(name):
    if name.startswith("micro:"):
        return knit(fx.micro_algebra(name[6:]))
    return knit(fx.algebra(name))


def indecomposables(name):
    return ar_of(name).modules


def random_ses(rng: random.Random, name):
    """A random extension between two indecomposables of a fixture algebra."""
    mods = indecomposables(name)
    A = mods[0].A
    F = A.F
    pairs = [(x, z) for x in mods for z in mods]
    rng.shuffle(pairs)
    for X, Z in pairs:
        E = ext(Z, X, 1)
        if E.dim == 0:
            continue
        coeffs = [F(rng.randrange(-2, 3)) for _ in range(E.dim)]
        n = len(E.classes[0])
        cocycle = [F.zero] * n
        for c, v in zip(coeffs, E.classes):
            cocycle = [a + c * b for a, b in zip(cocycle, v)]
        return realize_extension(E, cocycle)
    raise AssertionError(f"{name} has no nonzero extensions")


def mod2(x):
    return int(str(x)) % 2


def _mat(M, label):
    m = M.mats[label]
    return [[mod2(x) for x in row] for row in m.rows], m.nrows, m.ncols


def _mul(X, Y, n, k):
    """(n x m) @ (m x k) over F_2 on plain lists."""
    m = len(Y)
    return [[sum(X[i][t] * Y[t][j] for t in range(m)) % 2 for j in range(k)] for i in range(n)]


def brute_force_ext1_f2(M, N):
    """dim Ext^1(M, N) over F_2 by counting block-triangular extensions.

    Cocycles are families ``c_a: M_s -> N_t`` making ``[[N_a, c_a], [0, M_a]]`` satisfy the
    relations; coboundaries are ``N_a h_s - h_t M_a``.  Everything is enumerated.
    """
    A = M.A
    arrows = A.quiver.arrows
    shapes = [(N.dims[a.target], M.dims[a.source]) for a in arrows]
    nbits = sum(r * c for r, c in shapes)
    dE = {v: N.dims[v] + M.dims[v] for v in A.vertices}

    def block(a, c):
        Nm, _, _ = _mat(N, a.label)
        Mm, _, _ = _mat(M, a.label)
        nt, ns = N.dims[a.target], N.dims[a.source]
        mt, ms = M.dims[a.target], M.dims[a.source]
        rows = []
        for i in range(nt):
            rows.append([Nm[i][j] for j in range(ns)] + [c[i][j] for j in range(ms)])
        for i in range(mt):
            rows.append([0] * ns + [Mm[i][j] for j in range(ms)])
        return rows

    def satisfies(cs):
        mats = {a.label: block(a, c) for a, c in zip(arrows, cs)}
        for r in A.relations:
            p0 = next(iter(r))
            s, t = p0.source, p0.target
            tot = [[0] * dE[s] for _ in range(dE[t])]
            for p, coef in r.items():
                cur = [[int(i == j) for j in range(dE[s])] for i in range(dE[s])]
                v = s
                for lab in p.arrows:
                    a = A.quiver.arrow(lab)
                    cur = _mul(mats[lab], cur, dE[a.target], dE[s])
                    v = a.target
                cf = mod2(coef)
                tot = [[(x + cf * y) % 2 for x, y in zip(r1, r2)] for r1, r2 in zip(tot, cur)]
            if any(any(row) for row in tot):
                return False
        return True

    def unpack(bits):
        out, o = [], 0
        for r, c in shapes:
            out.append([[bits[o + i * c + j] for j in range(c)] for i in range(r)])
            o += r * c
        return out

    cocycles = {bits for bits in itertools.product((0, 1), repeat=nbits) if satisfies(unpack(bits))}
    hshapes = [(N.dims[v], M.dims[v]) for v in A.vertices]
    hbits = sum(r * c for r, c in hshapes)
    vidx = {v: k for k, v in enumerate(A.vertices)}
    bounds = set()
    for bits in itertools.product((0, 1), repeat=hbits):
        hs, o = [], 0
        for r, c in hshapes:
            hs.append([[bits[o + i * c + j] for j in range(c)] for i in range(r)])
            o += r * c
        flat = []
        for a in arrows:
            Nm, nt, ns = _mat(N, a.label)
            Mm, mt, ms = _mat(M, a.label)
            hs_, ht = hs[vidx[a.source]], hs[vidx[a.target]]
            x = _mul(Nm, hs_, nt, ms) if ns else [[0] * ms for _ in range(nt)]
            y = _mul(ht, Mm, nt, ms) if mt else [[0] * ms for _ in range(nt)]
            flat.extend((u + w) % 2 for r1, r2 in zip(x, y) for u, w in zip(r1, r2))
        bounds.add(tuple(flat))
    z, b = len(cocycles), len(bounds)
    assert z % b == 0
    return (z // b).bit_length() - 1
