"""Automorphism groups and their action on skew forms and on Grassmannians of H^2.

Convention: an automorphism matrix has the images phi(e_j) as columns, and it
acts on a form by (phi theta)(x, y) = theta(phi x, phi y), i.e. C -> phi^t C phi.
This is a right action: act(phi psi, theta) = act(psi, act(phi, theta)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .algebra import Algebra, is_homomorphism
from .cohomology import CohomologySpace, SkewForm, pair_index
from .extension import in_T_s
from .linalg import Matrix, Subspace, enumerate_subspaces, is_invertible, mat_mul, transpose
from .search import iter_isomorphism_blocks

FILTERS = ("all", "Ts", "Us", "Rs")


class AutomorphismSet:
    """The full automorphism group of an algebra over GF(p), held as an (N, n, n) array."""

    def __init__(self, algebra: Algebra, matrices: np.ndarray):
        self.algebra = algebra
        self.matrices = matrices
        self._actions = {}

    @property
    def order(self) -> int:
        return len(self.matrices)

    def __len__(self):
        return self.order

    def __iter__(self) -> Iterator[Matrix]:
        for M in self.matrices:
            yield tuple(tuple(int(x) for x in row) for row in M)

    def __getitem__(self, k) -> Matrix:
        return tuple(tuple(int(x) for x in row) for row in self.matrices[k])

    def __contains__(self, phi) -> bool:
        target = np.array(phi, dtype=np.int64) % self.algebra.field.characteristic
        return bool(np.any(np.all(self.matrices == target, axis=(1, 2))))

    def __repr__(self):
        return f"<AutomorphismSet of {self.algebra.name or 'algebra'}: order {self.order}>"


def automorphisms(A: Algebra, bound: int | None = None) -> AutomorphismSet:
    if not A.field.is_finite:
        raise ValueError("automorphism enumeration needs a finite field")
    blocks = list(iter_isomorphism_blocks(A, A, bound=bound))
    n = A.dim
    mats = np.concatenate(blocks) if blocks else np.zeros((0, n, n), dtype=np.int64)
    return AutomorphismSet(A, mats)


def is_automorphism(A: Algebra, phi: Matrix) -> bool:
    F = A.field
    phi = tuple(tuple(F.coerce(x) for x in row) for row in phi)
    if len(phi) != A.dim or any(len(r) != A.dim for r in phi):
        return False
    return is_invertible(F, phi) and is_homomorphism(A, A, phi)


def compose(F, phi: Matrix, psi: Matrix) -> Matrix:
    """phi after psi."""
    return mat_mul(F, phi, psi)


def act_on_form(phi: Matrix, theta: SkewForm) -> SkewForm:
    """(phi theta)(x, y) = theta(phi x, phi y), i.e. the matrix phi^t C phi."""
    F = theta.field
    phi = tuple(tuple(F.coerce(x) for x in row) for row in phi)
    C = theta.matrix()
    return SkewForm.from_matrix(F, mat_mul(F, mat_mul(F, transpose(phi), C), phi))


def act_on_grassmann_point(space: CohomologySpace, phi: Matrix, W: Subspace) -> Subspace:
    return space.point([act_on_form(phi, t) for t in space.forms_of(W)])


def induced_action(space: CohomologySpace, matrices: np.ndarray) -> np.ndarray:
    """Matrices M (N, h, h) with coords(phi theta) = coords(theta) @ M, for GF(p) groups."""
    F = space.field
    p = F.characteristic
    n = space.algebra.dim
    G = np.asarray(matrices, dtype=np.int64) % p
    N, h = len(G), space.dim
    pairs = pair_index(n)
    I = np.array([i for i, _ in pairs])
    J = np.array([j for _, j in pairs])
    b2 = [(pc, np.array(row, dtype=np.int64)) for pc, row in zip(space.b2.pivots, space.b2.basis)]
    out = np.zeros((N, h, h), dtype=np.int64)
    Gt = np.transpose(G, (0, 2, 1))
    for r, theta in enumerate(space.h2_basis):
        C = np.array(theta.matrix(), dtype=np.int64) % p
        Cp = (Gt @ C) % p @ G % p
        coeffs = Cp[:, I, J]
        for pc, row in b2:
            coeffs = (coeffs - coeffs[:, pc, None] * row[None, :]) % p
        out[:, r, :] = coeffs[:, list(space.coords)]
    return out


def _distinct_rows(X: np.ndarray, p: int) -> np.ndarray:
    """Indices of the first occurrence of each distinct row of X (entries in GF(p)), in lex order of the rows."""
    X = np.asarray(X, dtype=np.int64)
    if X.shape[1] * np.log2(p) < 62:
        # base-p integer code keeps lexicographic order and sorts much faster
        weights = p ** np.arange(X.shape[1] - 1, -1, -1, dtype=np.int64)
        _, first = np.unique(X @ weights, return_index=True)
    else:
        _, first = np.unique(X, axis=0, return_index=True)
    return first


def distinct_action(space: CohomologySpace, group: AutomorphismSet) -> np.ndarray:
    """The distinct matrices of the induced action of ``group`` on H^2 coordinates (cached on the group)."""
    key = tuple(space.coords)
    if key not in group._actions:
        p, h = space.field.characteristic, space.dim
        M = induced_action(space, group.matrices).reshape(group.order, -1)
        group._actions[key] = M[np.sort(_distinct_rows(M, p))].reshape(-1, h, h)
    return group._actions[key]


def batch_rref(X: np.ndarray, p: int) -> np.ndarray:
    """Row-reduce a batch (K, s, h) of full-rank matrices over GF(p)."""
    X = np.array(X, dtype=np.int64) % p
    K, s, h = X.shape
    inv = np.array([0] + [pow(a, -1, p) for a in range(1, p)], dtype=np.int64)
    r = np.zeros(K, dtype=np.int64)
    rows = np.arange(s)
    for c in range(h):
        cand = (X[:, :, c] != 0) & (rows[None, :] >= r[:, None])
        idx = np.nonzero(cand.any(axis=1) & (r < s))[0]
        if not len(idx):
            continue
        piv = cand[idx].argmax(axis=1)
        ri = r[idx]
        top, other = X[idx, ri].copy(), X[idx, piv].copy()
        X[idx, ri], X[idx, piv] = other, top
        X[idx, ri] = X[idx, ri] * inv[X[idx, ri, c]][:, None] % p
        fac = X[idx, :, c].copy()
        fac[np.arange(len(idx)), ri] = 0
        X[idx] = (X[idx] - fac[:, :, None] * X[idx, ri][:, None, :]) % p
        r[idx] += 1
    return X


def grassmann_points(space: CohomologySpace, s: int, filter: str = "all") -> Iterator[Subspace]:
    """Points of G_s(H^2) (lexicographic order) passing ``filter``."""
    if filter not in FILTERS:
        raise ValueError(f"unknown filter {filter!r}; choose from {FILTERS}")
    h2t = None
    if filter in ("Rs", "Us"):
        if not space.is_tortkara_base:
            raise ValueError("R_s / U_s are only defined over a Tortkara base")
        h2t = space.h2t
    for W in enumerate_subspaces(space.dim, s, space.field):
        if filter == "all":
            yield W
            continue
        if h2t is not None:
            tortkara_side = h2t.contains(W)
            if (filter == "Rs") != tortkara_side:
                continue
        if in_T_s(space, W):
            yield W


@dataclass
class Orbit:
    representative: Subspace
    size: int
    members: list


@dataclass
class OrbitReport:
    algebra: str
    field: str
    s: int
    filter: str
    group_order: int
    n_points: int
    orbits: list[Orbit]

    @property
    def representatives(self) -> list[Subspace]:
        return [o.representative for o in self.orbits]

    @property
    def counts(self) -> list[int]:
        return [o.size for o in self.orbits]

    def __len__(self):
        return len(self.orbits)


def orbit_partition(space: CohomologySpace, s: int, filter: str = "all", group: AutomorphismSet | None = None,
                    points: list[Subspace] | None = None) -> OrbitReport:
    """Partition the filtered points of G_s(H^2) into Aut(A)-orbits.

    Each orbit is the image of a seed point under every group element
    (duplicates in the induced action on H^2 removed first); the representative
    is the lexicographically least point of the orbit.
    """
    F = space.field
    if not F.is_finite:
        raise ValueError("orbit enumeration needs a finite field")
    p = F.characteristic
    if points is None:
        points = list(grassmann_points(space, s, filter))
    keyed = {W.key(): W for W in points}
    if not points:
        return OrbitReport(space.algebra.name or "", str(F), s, filter, group.order if group else 0, 0, [])
    if group is None:
        group = automorphisms(space.algebra)
    action = distinct_action(space, group)

    seen = set()
    orbits = []
    for key in sorted(keyed):
        if key in seen:
            continue
        W = np.array(key, dtype=np.int64)
        images = batch_rref(np.einsum("sh,khg->ksg", W, action) % p, p)
        first = _distinct_rows(images.reshape(len(images), -1), p)
        members = [tuple(tuple(int(x) for x in row) for row in images[k]) for k in first]
        missing = [m for m in members if m not in keyed]
        if missing:
            raise AssertionError("filtered point set is not stable under the group")
        seen.update(members)
        orbits.append(Orbit(keyed[members[0]], len(members), [keyed[m] for m in members]))
    orbits.sort(key=lambda o: o.representative.key())
    return OrbitReport(space.algebra.name or "", str(F), s, filter, group.order, len(points), orbits)
