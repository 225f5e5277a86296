"""Skew forms on an algebra and the spaces Z^2, B^2, H^2, Z^2_T, H^2_T.

A skew form is stored by its coefficients on the basis forms Delta_ij
(i < j, lexicographic), i.e. ``theta = sum c_ij Delta_ij`` with
``theta(e_i, e_j) = c_ij``.  This turns every cohomology computation into
ordinary subspace arithmetic in F^(n(n-1)/2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .algebra import Algebra
from .linalg import Matrix, Subspace, Vector, kernel
from .scalars import Field


@lru_cache(maxsize=None)
def pair_index(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


@lru_cache(maxsize=None)
def _pair_pos(n: int) -> dict:
    return {pr: k for k, pr in enumerate(pair_index(n))}


def cocycle_space_dim(A: Algebra | int) -> int:
    n = A if isinstance(A, int) else A.dim
    return n * (n - 1) // 2


@dataclass(frozen=True)
class SkewForm:
    dim: int
    field: Field
    coeffs: Vector

    @classmethod
    def zero(cls, dim: int, field: Field) -> "SkewForm":
        return cls(dim, field, (field.zero,) * cocycle_space_dim(dim))

    @classmethod
    def delta(cls, dim: int, field: Field, i: int, j: int) -> "SkewForm":
        """Delta_ij with 1-based indices (``delta(4, F, 3, 4)`` is Delta_34)."""
        if i == j:
            raise ValueError("Delta_ii is zero")
        sign = field.one
        if i > j:
            i, j, sign = j, i, field.neg(field.one)
        c = [field.zero] * cocycle_space_dim(dim)
        c[_pair_pos(dim)[(i - 1, j - 1)]] = sign
        return cls(dim, field, tuple(c))

    @classmethod
    def from_terms(cls, dim: int, field: Field, terms) -> "SkewForm":
        """``{(i, j): c}`` with 1-based indices."""
        out = cls.zero(dim, field)
        for (i, j), c in dict(terms).items():
            out = out + cls.delta(dim, field, i, j).scale(field.coerce(c))
        return out

    @classmethod
    def from_matrix(cls, field: Field, C: Matrix) -> "SkewForm":
        n = len(C)
        return cls(n, field, tuple(field.coerce(C[i][j]) for i, j in pair_index(n)))

    def matrix(self) -> Matrix:
        f, n = self.field, self.dim
        C = [[f.zero] * n for _ in range(n)]
        for (i, j), c in zip(pair_index(n), self.coeffs):
            C[i][j] = c
            C[j][i] = f.neg(c)
        return tuple(tuple(r) for r in C)

    def __call__(self, x: Vector, y: Vector):
        f = self.field
        p = f.characteristic
        s = f.zero
        for (i, j), c in zip(pair_index(self.dim), self.coeffs):
            if c:
                s = s + c * (x[i] * y[j] - x[j] * y[i])
        return s % p if p else s

    def __add__(self, other: "SkewForm") -> "SkewForm":
        f = self.field
        return SkewForm(self.dim, f, tuple(f.add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "SkewForm") -> "SkewForm":
        f = self.field
        return SkewForm(self.dim, f, tuple(f.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> "SkewForm":
        f = self.field
        c = f.coerce(c)
        return SkewForm(self.dim, f, tuple(f.mul(c, a) for a in self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def terms(self) -> dict:
        """Nonzero coefficients keyed by 1-based pairs."""
        return {(i + 1, j + 1): c for (i, j), c in zip(pair_index(self.dim), self.coeffs) if c}

    def __str__(self):
        return format_form(self)


def format_form(theta: SkewForm) -> str:
    parts = []
    f = theta.field
    for (i, j), c in theta.terms().items():
        name = f"d{i}{j}" if theta.dim < 10 else f"d{i},{j}"
        if c == f.one:
            parts.append(name)
        elif not f.is_finite and c == -1:
            parts.append(f"-{name}")
        else:
            parts.append(f"{c}*{name}")
    return "+".join(parts).replace("+-", "-") if parts else "0"


def delta_of_functional(A: Algebra, f: Sequence) -> SkewForm:
    """The coboundary (x, y) -> f(xy) of a functional given by its values on the basis."""
    F = A.field
    vals = [F.coerce(x) for x in f]
    coeffs = []
    for i, j in pair_index(A.dim):
        v = A.basis_product(i, j)
        s = F.zero
        for x, y in zip(vals, v):
            s = F.add(s, F.mul(x, y))
        coeffs.append(s)
    return SkewForm(A.dim, F, tuple(coeffs))


def coboundary_space(A: Algebra) -> Subspace:
    """B^2(A) in skew-form coordinates, spanned by the coboundaries of the dual basis."""
    F = A.field
    vecs = []
    for k in range(A.dim):
        f = [F.zero] * A.dim
        f[k] = F.one
        vecs.append(delta_of_functional(A, f).coeffs)
    B2 = Subspace.span(F, cocycle_space_dim(A), vecs)
    assert B2.dim == A.square.dim
    return B2


def _form_on(A: Algebra, theta: SkewForm):
    if theta.dim != A.dim or theta.field != A.field:
        raise ValueError("skew form does not live on this algebra")


def tortkara_constraints(A: Algebra) -> list[Vector]:
    """Rows c with sum c_ij theta_ij = theta(ab, cb) - theta(J(a,b,c), b), over polarization triples."""
    F = A.field
    m = A.multiply
    rows = set()
    for a, b, c in A.polarization_triples():
        u, v = m(a, b), m(c, b)
        w = A.j_operator(a, b, c)
        row = tuple(
            F.sub(F.sub(F.mul(u[i], v[j]), F.mul(u[j], v[i])), F.sub(F.mul(w[i], b[j]), F.mul(w[j], b[i])))
            for i, j in pair_index(A.dim)
        )
        if any(row):
            rows.add(row)
    return sorted(rows)


class NotTortkaraError(ValueError):
    pass


def tortkara_cocycle_space(A: Algebra) -> Subspace:
    """Z^2_T(A): skew forms theta with theta(ab, cb) = theta(J(a,b,c), b) for all a, b, c."""
    if not A.is_tortkara:
        raise NotTortkaraError(f"{A.name or 'algebra'} is not Tortkara; Z^2_T is only defined over a Tortkara base")

    rows = tortkara_constraints(A)
    d = cocycle_space_dim(A)
    if not rows:
        return Subspace.full(A.field, d)
    return kernel(A.field, rows, d)


class CohomologySpace:
    """H^2(A) with canonical coset representatives.

    The representative of a class is the form with every pivot coordinate of
    B^2's RREF basis cleared.  The remaining (non-pivot) pairs index the H^2
    coordinates; Grassmannian points are subspaces of that coordinate space.
    """

    def __init__(self, A: Algebra):
        self.algebra = A
        self.field = A.field
        self.z2_dim = cocycle_space_dim(A)
        self.b2 = coboundary_space(A)
        self.coords = tuple(self.b2.complement_units())
        pairs = pair_index(A.dim)
        self.coord_pairs = tuple((pairs[k][0] + 1, pairs[k][1] + 1) for k in self.coords)
        self._z2t = None

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def h2_basis(self) -> list[SkewForm]:
        return [SkewForm.delta(self.algebra.dim, self.field, i, j) for i, j in self.coord_pairs]

    def class_reduce(self, theta: SkewForm) -> SkewForm:
        _form_on(self.algebra, theta)
        return SkewForm(theta.dim, theta.field, self.b2.reduce(theta.coeffs))

    def to_coords(self, theta: SkewForm) -> Vector:
        r = self.class_reduce(theta).coeffs
        return tuple(r[k] for k in self.coords)

    def from_coords(self, v: Vector) -> SkewForm:
        c = [self.field.zero] * self.z2_dim
        for k, x in zip(self.coords, v):
            c[k] = self.field.coerce(x)
        return SkewForm(self.algebra.dim, self.field, tuple(c))

    def point(self, forms: Sequence[SkewForm]) -> Subspace:
        """The subspace <[theta_1], ..., [theta_s]> of H^2 in canonical form."""
        return Subspace.span(self.field, self.dim, [self.to_coords(t) for t in forms])

    def forms_of(self, W: Subspace) -> list[SkewForm]:
        return [self.from_coords(v) for v in W.basis]

    @property
    def is_tortkara_base(self) -> bool:
        return self.algebra.is_tortkara

    @property
    def z2t(self) -> Subspace:
        if self._z2t is None:
            self._z2t = tortkara_cocycle_space(self.algebra)
        return self._z2t

    @property
    def h2t(self) -> Subspace:
        """H^2_T as a subspace of the H^2 coordinate space."""
        return self.point([SkewForm(self.algebra.dim, self.field, v) for v in self.z2t.basis])

    @property
    def h2t_basis(self) -> list[SkewForm]:
        return self.forms_of(self.h2t)

    def __repr__(self):
        return f"<H^2 of {self.algebra.name or 'algebra'}: dim {self.dim}, classes {self.coord_pairs}>"


def h2(A: Algebra) -> CohomologySpace:
    return CohomologySpace(A)


def class_reduce(space: CohomologySpace, theta: SkewForm) -> SkewForm:
    return space.class_reduce(theta)

