"""Dense exact linear algebra over a :class:`~extalg.scalars.Field`.

Matrices are tuples of row tuples of raw field values; vectors are tuples.
Subspaces are stored by their reduced row echelon basis, which is unique, so
equality of :class:`Subspace` objects is equality of sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .scalars import Field

Vector = tuple
Matrix = tuple


class DimensionError(ValueError):
    pass


def zeros(field: Field, rows: int, cols: int) -> Matrix:
    z = field.zero
    return tuple(tuple(z for _ in range(cols)) for _ in range(rows))


def identity(field: Field, n: int) -> Matrix:
    z, o = field.zero, field.one
    return tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))


def unit(field: Field, n: int, i: int) -> Vector:
    return tuple(field.one if k == i else field.zero for k in range(n))


def as_matrix(field: Field, rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(field.coerce(x) for x in row) for row in rows)


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def mat_mul(field: Field, a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise DimensionError("inner dimensions differ")
    bt = transpose(b)
    p = field.characteristic
    out = []
    for row in a:
        if p:
            out.append(tuple(sum(x * y for x, y in zip(row, col)) % p for col in bt))
        else:
            out.append(tuple(sum((x * y for x, y in zip(row, col)), field.zero) for col in bt))
    return tuple(out)


def mat_vec(field: Field, m: Matrix, v: Vector) -> Vector:
    p = field.characteristic
    if p:
        return tuple(sum(x * y for x, y in zip(row, v)) % p for row in m)
    return tuple(sum((x * y for x, y in zip(row, v)), field.zero) for row in m)


def vec_add(field: Field, u: Vector, v: Vector) -> Vector:
    return tuple(field.add(x, y) for x, y in zip(u, v))


def vec_sub(field: Field, u: Vector, v: Vector) -> Vector:
    return tuple(field.sub(x, y) for x, y in zip(u, v))


def vec_scale(field: Field, c, v: Vector) -> Vector:
    return tuple(field.mul(c, x) for x in v)


def lin_comb(field: Field, coeffs: Sequence, vectors: Sequence[Vector], length: int) -> Vector:
    out = [field.zero] * length
    for c, v in zip(coeffs, vectors):
        if not c:
            continue
        for k, x in enumerate(v):
            if x:
                out[k] = field.add(out[k], field.mul(c, x))
    return tuple(out)


def _rref_rows(field: Field, rows: Sequence[Sequence], ncols: int):
    m = [[field.coerce(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, x) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rref(field: Field, m: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """Reduced row echelon form, keeping zero rows at the bottom (same shape as ``m``)."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    rows, _ = _rref_rows(field, m, ncols)
    return tuple(tuple(r) for r in rows)


def rank(field: Field, m: Sequence[Sequence], ncols: int | None = None) -> int:
    if ncols is None:
        ncols = len(m[0]) if m else 0
    return len(_rref_rows(field, m, ncols)[1])


def kernel(field: Field, m: Sequence[Sequence], ncols: int | None = None) -> "Subspace":
    """Right null space ``{x : m x = 0}`` as a canonical subspace."""
    if ncols is None:
        if not m:
            raise DimensionError("ncols needed for an empty matrix")
        ncols = len(m[0])
    rows, pivots = _rref_rows(field, m, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = field.neg(rows[r][f])
        basis.append(v)
    return Subspace.span(field, ncols, basis)


def inverse(field: Field, m: Matrix) -> Matrix | None:
    n = len(m)
    aug = [list(row) + list(e) for row, e in zip(m, identity(field, n))]
    rows, pivots = _rref_rows(field, aug, 2 * n)
    if pivots[:n] != list(range(n)):
        return None
    return tuple(tuple(r[n:]) for r in rows[:n])


def is_invertible(field: Field, m: Matrix) -> bool:
    return len(m) == len(m[0]) and rank(field, m) == len(m)


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``field**ambient_dim`` given by its RREF basis rows."""

    field: Field
    ambient_dim: int
    basis: Matrix

    @classmethod
    def span(cls, field: Field, ambient_dim: int, vectors) -> "Subspace":
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        rows, pivots = _rref_rows(field, vectors, ambient_dim)
        return cls(field, ambient_dim, tuple(tuple(r) for r in rows[: len(pivots)]))

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, ())

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, identity(field, ambient_dim))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple:
        return tuple(next(c for c, x in enumerate(row) if x) for row in self.basis)

    def _check(self, other: "Subspace"):
        if other.ambient_dim != self.ambient_dim or other.field != self.field:
            raise DimensionError("subspaces live in different spaces")

    def reduce(self, v: Vector) -> Vector:
        """Canonical representative of ``v`` modulo this subspace (pivot coordinates cleared)."""
        f = self.field
        v = list(v)
        for row, pc in zip(self.basis, self.pivots):
            c = v[pc]
            if c:
                for k, x in enumerate(row):
                    if x:
                        v[k] = f.sub(v[k], f.mul(c, x))
        return tuple(v)

    def __contains__(self, v) -> bool:
        return not any(self.reduce(v))

    def contains(self, other: "Subspace") -> bool:
        self._check(other)
        if self.dim == self.ambient_dim:
            return True
        return all(v in self for v in other.basis)

    def coordinates(self, v: Vector) -> Vector:
        """Coefficients of ``v`` in the stored basis; raises if ``v`` is outside."""
        if v not in self:
            raise ValueError("vector not in subspace")
        return tuple(v[pc] for pc in self.pivots)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.field, self.ambient_dim, self.basis + other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        f = self.field
        if not self.dim or not other.dim:
            return Subspace.zero(f, self.ambient_dim)
        # solve sum a_i u_i - sum b_j w_j = 0
        cols = list(self.basis) + [vec_scale(f, f.neg(f.one), w) for w in other.basis]
        rel = kernel(f, transpose(tuple(cols)), len(cols))
        vecs = [lin_comb(f, r[: self.dim], self.basis, self.ambient_dim) for r in rel.basis]
        return Subspace.span(f, self.ambient_dim, vecs)

    def complement_units(self) -> list[int]:
        """Indices of unit vectors spanning a complement (the non-pivot columns)."""
        piv = set(self.pivots)
        return [c for c in range(self.ambient_dim) if c not in piv]

    def key(self) -> tuple:
        return self.basis

    def __lt__(self, other: "Subspace") -> bool:
        return self.basis < other.basis

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, basis={self.basis})"


def span_equal(s1: Subspace, s2: Subspace) -> bool:
    s1._check(s2)
    return s1.basis == s2.basis


def intersect(s1: Subspace, s2: Subspace) -> Subspace:
    return s1.intersect(s2)


def subspace_sum(s1: Subspace, s2: Subspace) -> Subspace:
    return s1 + s2


def gaussian_binomial(d: int, s: int, q: int) -> int:
    if s < 0 or s > d:
        return 0
    num = den = 1
    for i in range(s):
        num *= q ** (d - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def enumerate_subspaces(ambient_dim: int, s: int, field: Field) -> Iterator[Subspace]:
    """Yield every ``s``-dimensional subspace of GF(p)^d once, in lexicographic RREF order.

    Rows are generated one at a time in lexicographic order; a row's pivot must
    sit in a column where all earlier rows vanish, and later pivots must avoid
    columns where earlier rows are nonzero.
    """
    if not field.is_finite:
        raise ValueError("subspace enumeration needs a finite field")
    if not 0 <= s <= ambient_dim:
        raise DimensionError(f"no {s}-dimensional subspaces of a {ambient_dim}-dimensional space")
    d, p = ambient_dim, field.characteristic

    def rows_after(prev_pivot):
        # all vectors with leading 1 in a column > prev_pivot, in lexicographic order
        # (a later leading column means more leading zeros, hence smaller)
        for c in range(d - 1, prev_pivot, -1):
            tail_len = d - c - 1
            for t in range(p**tail_len):
                tail = []
                for _ in range(tail_len):
                    t, r = divmod(t, p)
                    tail.append(r)
                yield c, (0,) * c + (1,) + tuple(reversed(tail))

    def extend(rows, pivots):
        k = len(rows)
        if k == s:
            yield Subspace(field, d, tuple(rows))
            return
        last = pivots[-1] if pivots else -1
        if d - last - 1 < s - k:
            return
        for c, row in rows_after(last):
            if any(row[pc] for pc in pivots):
                continue
            if any(r[c] for r in rows):
                continue
            # remaining pivots must also land where this and earlier rows vanish
            yield from extend(rows + [row], pivots + [c])

    yield from extend([], [])
