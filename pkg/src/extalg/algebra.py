"""Anticommutative algebras given by structure constants.

Basis vectors are indexed from 0 internally; ``e1`` in text is index 0.
Only products ``e_i e_j`` with ``i < j`` are stored; ``e_j e_i = -e_i e_j``
and ``e_i e_i = 0`` follow from anticommutativity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from .linalg import DimensionError, Matrix, Subspace, Vector, inverse, kernel, mat_vec, unit
from .scalars import Field


class Algebra:
    def __init__(self, dim: int, field: Field, products: Mapping[tuple[int, int], Vector], name: str | None = None):
        table = {}
        for (i, j), v in products.items():
            if not (0 <= i < j < dim):
                raise DimensionError(f"bad product index pair ({i + 1}, {j + 1}) for dimension {dim}")
            v = tuple(field.coerce(x) for x in v)
            if len(v) != dim:
                raise DimensionError(f"product e{i + 1} e{j + 1} has {len(v)} coordinates, expected {dim}")
            if any(v):
                table[(i, j)] = v
        self.dim = dim
        self.field = field
        self.products = dict(sorted(table.items()))
        self.name = name

    @classmethod
    def from_rules(cls, dim: int, field: Field, rules, name: str | None = None) -> "Algebra":
        """Build from 1-based rules ``{(i, j): k}`` meaning ``e_i e_j = e_k``, or
        ``{(i, j): {k: c, ...}}`` for a linear combination."""
        products = {}
        for (i, j), rhs in dict(rules).items():
            if isinstance(rhs, int):
                rhs = {rhs: 1}
            v = [field.zero] * dim
            for k, c in rhs.items():
                if not 1 <= k <= dim:
                    raise DimensionError(f"e{k} out of range for dimension {dim}")
                v[k - 1] = field.add(v[k - 1], field.coerce(c))
            sign = field.one
            if i > j:
                i, j, sign = j, i, field.neg(field.one)
            if i == j:
                raise DimensionError(f"e{i} e{i} is zero in an anticommutative algebra")
            products[(i - 1, j - 1)] = tuple(field.mul(sign, x) for x in v)
        return cls(dim, field, products, name)

    @classmethod
    def trivial(cls, dim: int, field: Field, name: str | None = None) -> "Algebra":
        return cls(dim, field, {}, name)

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return (self.dim, self.field, self.products) == (other.dim, other.field, other.products)

    def __hash__(self):
        return hash((self.dim, self.field, tuple(self.products.items())))

    def __repr__(self):
        label = f"{self.name}: " if self.name else ""
        return f"<Algebra {label}dim {self.dim} over {self.field!r}, {len(self.products)} products>"

    def renamed(self, name: str | None) -> "Algebra":
        return Algebra(self.dim, self.field, self.products, name)

    def over(self, field: Field) -> "Algebra":
        """Reduce (or lift) the integer/rational structure constants into another field."""
        prods = {k: tuple(field.coerce(x) for x in v) for k, v in self.products.items()}
        return Algebra(self.dim, field, prods, self.name)

    @cached_property
    def _table(self):
        f = self.field
        t = [[None] * self.dim for _ in range(self.dim)]
        for (i, j), v in self.products.items():
            t[i][j] = v
            t[j][i] = tuple(f.neg(x) for x in v)
        return t

    def basis_product(self, i: int, j: int) -> Vector:
        v = self._table[i][j]
        return v if v is not None else (self.field.zero,) * self.dim

    def _check(self, x):
        if len(x) != self.dim:
            raise DimensionError(f"vector of length {len(x)} for a {self.dim}-dimensional algebra")

    def multiply(self, x: Vector, y: Vector) -> Vector:
        self._check(x)
        self._check(y)
        f = self.field
        p = f.characteristic
        out = [f.zero] * self.dim
        for (i, j), v in self.products.items():
            c = x[i] * y[j] - x[j] * y[i]
            if p:
                c %= p
            if c:
                for k, vk in enumerate(v):
                    if vk:
                        out[k] = out[k] + c * vk
        if p:
            return tuple(a % p for a in out)
        return tuple(out)

    def unit(self, i: int) -> Vector:
        return unit(self.field, self.dim, i)

    def left_matrix(self, x: Vector) -> Matrix:
        """Matrix of ``y -> x y`` (column j is ``x e_j``)."""
        cols = [self.multiply(x, self.unit(j)) for j in range(self.dim)]
        return tuple(zip(*cols)) if cols else ()

    # structure

    @cached_property
    def square(self) -> Subspace:
        """The subspace A^2 spanned by all products."""
        return Subspace.span(self.field, self.dim, self.products.values())

    @cached_property
    def annihilator(self) -> Subspace:
        rows = []
        for j in range(self.dim):
            # x -> x e_j, as a matrix acting on x
            cols = [self.basis_product(i, j) for i in range(self.dim)]
            rows.extend(zip(*cols))
        if not rows:
            return Subspace.full(self.field, self.dim)
        return kernel(self.field, rows, self.dim)

    def product_space(self, u: Subspace, w: Subspace) -> Subspace:
        return Subspace.span(self.field, self.dim, [self.multiply(x, y) for x in u.basis for y in w.basis])

    @cached_property
    def ideal_powers(self) -> tuple[Subspace, ...]:
        """A<1> = A, A<k> = sum_{i+j=k} A<i> A<j>, up to the first zero power.

        If the chain is constant from A<k> through A<2k> and nonzero it is constant
        forever, and the tuple ends there (the algebra is not nilpotent).
        """
        powers = [None, Subspace.full(self.field, self.dim)]
        k = 1
        while True:
            k += 1
            s = Subspace.zero(self.field, self.dim)
            for i in range(1, k // 2 + 1):
                s = s + self.product_space(powers[i], powers[k - i])
            powers.append(s)
            if s.dim == 0:
                break
            start = k
            while start > 1 and powers[start - 1] == s:
                start -= 1
            if k >= 2 * start:
                break
        return tuple(powers[1:])

    @property
    def is_nilpotent(self) -> bool:
        return self.ideal_powers[-1].dim == 0

    @property
    def nilpotency_index(self) -> int | None:
        """Smallest N with A<N> = 0, or None."""
        return len(self.ideal_powers) if self.is_nilpotent else None

    # identities

    def j_operator(self, a: Vector, b: Vector, c: Vector) -> Vector:
        m, f = self.multiply, self.field
        t1 = m(m(a, b), c)
        t2 = m(m(b, c), a)
        t3 = m(m(c, a), b)
        return tuple(f.add(f.add(x, y), z) for x, y, z in zip(t1, t2, t3))

    def tortkara_defect(self, a: Vector, b: Vector, c: Vector) -> Vector:
        """(ab)(cb) - J(a, b, c) b."""
        m, f = self.multiply, self.field
        lhs = m(m(a, b), m(c, b))
        rhs = m(self.j_operator(a, b, c), b)
        return tuple(f.sub(x, y) for x, y in zip(lhs, rhs))

    def polarization_triples(self):
        """Triples (a, b, c) whose vanishing defect is equivalent to the Tortkara identity.

        The defect is linear in a and c and quadratic in b, so in characteristic
        other than 2 it suffices to take a, c basis vectors and b either a basis
        vector or a sum of two distinct basis vectors.  Order: b first (basis
        vectors, then pairs), then a, then c.
        """
        n, f = self.dim, self.field
        bs = [self.unit(k) for k in range(n)]
        for k in range(n):
            for l in range(k + 1, n):
                v = [f.zero] * n
                v[k] = v[l] = f.one
                bs.append(tuple(v))
        for b in bs:
            for i in range(n):
                for j in range(n):
                    yield self.unit(i), b, self.unit(j)

    @cached_property
    def tortkara_witness(self):
        """First (a, b, c, defect) violating the Tortkara identity, or None."""
        if self.field.characteristic == 2:
            raise ValueError("polarized Tortkara check needs characteristic != 2")
        for a, b, c in self.polarization_triples():
            d = self.tortkara_defect(a, b, c)
            if any(d):
                return a, b, c, d
        return None

    @property
    def is_tortkara(self) -> bool:
        return self.tortkara_witness is None

    def direct_sum_with_trivial(self, k: int, name: str | None = None) -> "Algebra":
        z = self.field.zero
        prods = {key: v + (z,) * k for key, v in self.products.items()}
        return Algebra(self.dim + k, self.field, prods, name)

    def change_basis(self, P: Matrix, name: str | None = None) -> "Algebra":
        """The same algebra written in the basis given by the columns of ``P``."""
        Pinv = inverse(self.field, P)
        if Pinv is None:
            raise ValueError("change of basis matrix is singular")
        cols = list(zip(*P))
        prods = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                prods[(i, j)] = mat_vec(self.field, Pinv, self.multiply(cols[i], cols[j]))
        return Algebra(self.dim, self.field, prods, name)

    def structure_tensor(self):
        """numpy int64 tensor T[i, j, k] = coefficient of e_k in e_i e_j (finite fields)."""
        import numpy as np

        if not self.field.is_finite:
            raise ValueError("structure tensor is only built over finite fields")
        T = np.zeros((self.dim, self.dim, self.dim), dtype=np.int64)
        for (i, j), v in self.products.items():
            T[i, j] = v
            T[j, i] = [(-x) % self.field.characteristic for x in v]
        return T


@dataclass(frozen=True)
class InvariantSignature:
    dim: int
    power_dims: tuple[int, ...]
    ann_dim: int
    square_dim: int
    tortkara: bool


def invariant_signature(A: Algebra) -> InvariantSignature:
    return InvariantSignature(
        A.dim,
        tuple(s.dim for s in A.ideal_powers),
        A.annihilator.dim,
        A.square.dim,
        A.is_tortkara,
    )


def is_homomorphism(A: Algebra, B: Algebra, phi: Matrix) -> bool:
    """phi(e_i e_j) == phi(e_i) phi(e_j) for all i < j; phi has images as columns."""
    f = A.field
    cols = list(zip(*phi))
    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            if mat_vec(f, phi, A.basis_product(i, j)) != B.multiply(cols[i], cols[j]):
                return False
    return True


def find_isomorphism(A: Algebra, B: Algebra, bound: int | None = None) -> Matrix | None:
    """An isomorphism A -> B (columns are images of e_1..e_n) or None; GF(p) only."""
    from .search import iter_isomorphisms

    if A.field != B.field:
        raise ValueError("algebras over different fields")
    if not A.field.is_finite:
        raise ValueError("exhaustive isomorphism search needs a finite field")
    if A.dim != B.dim:
        return None
    return next(iter_isomorphisms(A, B, bound=bound, first_only=True), None)
