"""Slow, obviously-correct reference computations used to check the fast paths."""

import itertools
import random

import numpy as np

from extalg import Algebra
from extalg.linalg import rref


def all_vectors(n, p):
    return np.array(list(itertools.product(range(p), repeat=n)), dtype=np.int64)


def exhaustive_tortkara(A: Algebra) -> bool:
    """Check (ab)(cb) = J(a,b,c)b for every triple of vectors of GF(p)^n via lookup tables."""
    p, n = A.field.characteristic, A.dim
    V = all_vectors(n, p)
    N = len(V)
    weights = p ** np.arange(n - 1, -1, -1)
    T = A.structure_tensor()
    prod = np.einsum("ai,bj,ijk->abk", V, V, T) % p
    M = prod @ weights  # M[a, b] = index of v_a v_b
    ADD = ((V[:, None, :] + V[None, :, :]) % p) @ weights
    a, b, c = (x.ravel() for x in np.meshgrid(np.arange(N), np.arange(N), np.arange(N), indexing="ij"))
    lhs = M[M[a, b], M[c, b]]
    J = ADD[ADD[M[M[a, b], c], M[M[b, c], a]], M[M[c, a], b]]
    rhs = M[J, b]
    return bool(np.all(lhs == rhs))


def random_nilpotent(n, field, rng: random.Random, density=0.5, name=None) -> Algebra:
    """e_i e_j in span{e_k : k > j}, which makes the algebra nilpotent."""
    products = {}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                v = [0] * n
                for k in range(j + 1, n):
                    v[k] = field.random(rng)
                products[(i, j)] = tuple(v)
    return Algebra(n, field, products, name)


def random_algebra(n, field, rng: random.Random, density=0.5) -> Algebra:
    products = {}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                products[(i, j)] = tuple(field.random(rng) for _ in range(n))
    return Algebra(n, field, products)


def brute_subspaces(d, s, field):
    """Every s-dim subspace of GF(p)^d as an RREF tuple, by row-reducing all s x d matrices."""
    p = field.characteristic
    out = set()
    for entries in itertools.product(range(p), repeat=s * d):
        rows = [entries[k * d:(k + 1) * d] for k in range(s)]
        R = rref(field, rows, d)
        if any(R[-1]):
            out.add(tuple(R))
    return out


def parametric_aut_a3(p):
    """All matrices of the lower-triangular automorphism shape of A_3 over GF(p)."""
    out = set()
    for x, z in itertools.product(range(1, p), repeat=2):
        for y, u, v, h, g in itertools.product(range(p), repeat=5):
            M = ((x, 0, 0, 0), (y, z, 0, 0), (u, v, x * z % p, 0), (h, g, x * v % p, x * x * z % p))
            out.add(M)
    return out


def random_invertible(n, field, rng: random.Random):
    from extalg.linalg import is_invertible
    while True:
        M = tuple(tuple(field.random(rng) for _ in range(n)) for _ in range(n))
        if is_invertible(field, M):
            return M
