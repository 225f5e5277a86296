"""Generator-image search for isomorphisms between nilpotent algebras over GF(p).

Let A be nilpotent.  Pick "free" generators spanning a complement of
A^2 + Ann(A) and "annihilator" generators spanning a complement of
A^2 ∩ Ann(A) inside Ann(A); together they generate A, and a basis of A^2 is
obtained as iterated products of free generators.  A homomorphism A -> B is
then fixed by the generator images, and all product constraints only see
those images modulo Ann(B).  So the search enumerates free-generator images
in a fixed complement of Ann(B) (vectorised over the last generator) and
afterwards lifts survivors by Ann(B) components to invertible maps.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .algebra import Algebra
from .linalg import Matrix, Subspace, inverse, rank, transpose

DEFAULT_BOUND = 10**8


class SearchBoundExceeded(RuntimeError):
    def __init__(self, size: int, bound: int):
        super().__init__(f"search space of {size} candidates exceeds the bound {bound}")
        self.size = size
        self.bound = bound


def enumeration_bound(bound: int | None = None) -> int:
    if bound is not None:
        return bound
    env = os.environ.get("EXTALG_ENUM_BOUND")
    return int(env) if env else DEFAULT_BOUND


@dataclass
class GeneratorPlan:
    """Basis of A adapted to generator-image search.

    ``basis`` columns: free generators, then annihilator generators, then
    products ``words[r] = (i, j)`` meaning element i times element j, where
    elements are numbered free generators first, then products.
    """

    free: list[tuple]
    ann: list[tuple]
    words: list[tuple[int, int]]
    basis: Matrix  # columns are the adapted basis vectors
    structure: np.ndarray  # S[i, j, k] in the adapted basis

    @property
    def n_free(self) -> int:
        return len(self.free)

    @property
    def n_ann(self) -> int:
        return len(self.ann)


def generator_plan(A: Algebra) -> GeneratorPlan:
    f = A.field
    sq, ann = A.square, A.annihilator
    free = [A.unit(c) for c in (sq + ann).complement_units()]
    ann_gens = []
    cur = sq.intersect(ann)
    for v in ann.basis:
        if v not in cur:
            ann_gens.append(v)
            cur = cur + Subspace.span(f, A.dim, [v])

    elems = list(free)
    words = []
    prod_span = Subspace.zero(f, A.dim)
    i = 0
    while prod_span.dim < sq.dim and i < len(elems):
        for j in range(i):
            if prod_span.dim == sq.dim:
                break
            v = A.multiply(elems[j], elems[i])
            if v not in prod_span:
                prod_span = prod_span + Subspace.span(f, A.dim, [v])
                elems.append(v)
                words.append((j, i))
        i += 1
    if prod_span.dim < sq.dim:
        raise ValueError("generator search needs a nilpotent algebra (generators do not generate)")

    cols = free + ann_gens + elems[len(free):]
    P = transpose(tuple(cols))
    adapted = A.change_basis(P)
    S = np.zeros((A.dim,) * 3, dtype=np.int64)
    for (a, b), v in adapted.products.items():
        S[a, b] = v
        S[b, a] = [(-x) % f.characteristic for x in v]
    return GeneratorPlan(free, ann_gens, words, P, S)


def _bmul(X, Y, T, p):
    X, Y = np.broadcast_arrays(X, Y)
    shape = X.shape
    n = shape[-1]
    outer = (X[..., :, None] * Y[..., None, :]).reshape(-1, n * n)
    return ((outer @ T.reshape(n * n, n)) % p).reshape(shape)


def _candidates(B: Algebra, exclude: Subspace) -> np.ndarray:
    """All vectors supported on the complement coordinates of Ann(B), minus ``exclude``."""
    p, n = B.field.characteristic, B.dim
    free_cols = B.annihilator.complement_units()
    vecs = []
    for vals in itertools.product(range(p), repeat=len(free_cols)):
        v = [0] * n
        for c, x in zip(free_cols, vals):
            v[c] = x
        if tuple(v) not in exclude:
            vecs.append(v)
    return np.array(vecs, dtype=np.int64).reshape(-1, n)


def _rank_of_left(B: Algebra, v) -> int:
    return rank(B.field, B.left_matrix(tuple(int(x) for x in v)), B.dim)


def search_size(A: Algebra, B: Algebra, plan: GeneratorPlan, all_lifts: bool) -> int:
    p = A.field.characteristic
    c = B.dim - B.annihilator.dim
    size = p ** (c * plan.n_free)
    if all_lifts:
        size *= p ** (B.annihilator.dim * (plan.n_free + plan.n_ann))
    return size


def iter_isomorphism_blocks(A: Algebra, B: Algebra, bound: int | None = None, first_only: bool = False) -> Iterator[np.ndarray]:
    """Yield arrays of shape (m, n, n): isomorphisms A -> B, images as columns."""
    F = A.field
    if B.field != F or not F.is_finite:
        raise ValueError("isomorphism search needs both algebras over the same GF(p)")
    if A.dim != B.dim:
        return
    n, p = A.dim, F.characteristic
    if (A.square.dim, A.annihilator.dim) != (B.square.dim, B.annihilator.dim):
        return
    plan = generator_plan(A)
    size = search_size(A, B, plan, all_lifts=not first_only)
    limit = enumeration_bound(bound)
    if size > limit:
        raise SearchBoundExceeded(size, limit)

    TB = B.structure_tensor()
    S = plan.structure
    kf, ka, kw = plan.n_free, plan.n_ann, len(plan.words)
    annB = B.annihilator
    Pinv = np.array(inverse(F, plan.basis), dtype=np.int64)

    cand = _candidates(B, B.square + annB)
    if kf and not len(cand):
        return
    # rank of left multiplication is preserved by isomorphisms
    cand_rank = np.array([_rank_of_left(B, v) for v in cand], dtype=np.int64)
    per_gen = []
    for g in plan.free:
        r = rank(F, A.left_matrix(g), n)
        per_gen.append(cand[cand_rank == r])
    if any(len(c) == 0 for c in per_gen):
        return

    prod_idx = kf + ka  # first product column in the adapted basis
    # constraints: pairs (i < j) among free gens and products, adapted indexing
    live = list(range(kf)) + list(range(prod_idx, n))
    pairs = [(i, j) for a, i in enumerate(live) for j in live[a + 1:]]

    def images(fixed, last):
        N = len(last)
        imgs = [np.broadcast_to(np.array(v, dtype=np.int64), (N, n)) for v in fixed] + [last]
        for (i, j) in plan.words:
            imgs.append(_bmul(imgs[i], imgs[j], TB, p))
        return imgs  # free gens then products

    def col(imgs, q):
        # adapted index -> image (mod Ann(B) for generators)
        return imgs[q] if q < kf else imgs[q - ka]

    heads = per_gen[:-1] if kf else []
    tail = per_gen[-1] if kf else np.zeros((1, n), dtype=np.int64)
    for fixed in itertools.product(*heads):
        if kf:
            imgs, N = images(fixed, tail), len(tail)
        else:
            imgs, N = [], 1
        mask = np.ones(N, dtype=bool)
        for (i, j) in pairs:
            idx = np.nonzero(mask)[0]
            if not len(idx):
                break
            lhs = _bmul(col(imgs, i)[idx], col(imgs, j)[idx], TB, p)
            rhs = np.zeros_like(lhs)
            for q in np.nonzero(S[i, j])[0]:
                rhs = rhs + S[i, j, q] * col(imgs, q)[idx]
            ok = np.all(lhs == rhs % p, axis=1)
            mask[idx[~ok]] = False
        for t in np.nonzero(mask)[0]:
            gens = [np.asarray(imgs[g][t]) for g in range(kf)]
            prods = [np.asarray(imgs[kf + r][t]) for r in range(kw)]
            for block in _lifts(F, B, annB, gens, ka, prods, first_only):
                # adapted columns: gens, ann gens, products
                out = np.einsum("mij,jk->mik", block, Pinv) % p
                yield out
                if first_only:
                    return


def _lifts(F, B, annB: Subspace, gens, ka, prods, first_only):
    n, p = B.dim, F.characteristic
    U = Subspace.span(F, n, [tuple(int(x) for x in u) for u in prods])
    if U.dim != len(prods):
        return
    gens_t = [tuple(int(x) for x in g) for g in gens]
    total = U + annB + Subspace.span(F, n, gens_t)
    if total.dim != n:
        return
    kf = len(gens)
    ann_basis = [np.array(v, dtype=np.int64) for v in annB.basis]

    if first_only:
        cols = [None] * (kf + ka)
        cur = U
        deferred = []
        for i, g in enumerate(gens_t):
            if g not in cur + annB:
                cols[i] = g
                cur = cur + Subspace.span(F, n, [g])
            else:
                deferred.append(i)
        deferred += list(range(kf, kf + ka))
        for i in deferred:
            a = gens_t[i] if i < kf else (0,) * n
            if a in cur:
                t = next(v for v in annB.basis if v not in cur)
                a = tuple((x + y) % p for x, y in zip(a, t))
            cols[i] = a
            cur = cur + Subspace.span(F, n, [a])
        if cur.dim != n:
            return
        M = np.array(cols + [tuple(int(x) for x in u) for u in prods], dtype=np.int64).T
        yield M[None]
        return

    # every lift: gens get any Ann(B) component, ann generators any Ann(B) vector
    base = np.zeros((n, n), dtype=np.int64)
    for i, g in enumerate(gens):
        base[:, i] = g
    for r, u in enumerate(prods):
        base[:, kf + ka + r] = u
    d = annB.dim
    if d == 0:
        if rank(F, tuple(map(tuple, base.tolist())), n) == n:
            yield base[None]
        return
    coeffs = np.array(list(itertools.product(range(p), repeat=d)), dtype=np.int64)
    annvecs = (coeffs @ np.array(ann_basis)) % p  # all p**d vectors of Ann(B)
    m = len(annvecs)
    k = kf + ka
    if U.contains(annB) and ka == 0:
        # Ann(B) components cannot change the rank
        if rank(F, tuple(map(tuple, base.tolist())), n) != n:
            return
        for combo in itertools.product(range(m), repeat=k - 1) if k > 1 else [()]:
            block = np.repeat(base[None], m, axis=0)
            for i, c in enumerate(combo):
                block[:, :, i] = (block[:, :, i] + annvecs[c]) % p
            block[:, :, k - 1] = (block[:, :, k - 1] + annvecs) % p
            yield block
        return
    for combo in itertools.product(range(m), repeat=k):
        M = base.copy()
        for i, c in enumerate(combo):
            M[:, i] = (M[:, i] + annvecs[c]) % p
        if rank(F, tuple(map(tuple, M.tolist())), n) == n:
            yield M[None]


def iter_isomorphisms(A: Algebra, B: Algebra, bound: int | None = None, first_only: bool = False) -> Iterator[Matrix]:
    for block in iter_isomorphism_blocks(A, B, bound=bound, first_only=first_only):
        for M in block:
            yield tuple(tuple(int(x) for x in row) for row in M)
