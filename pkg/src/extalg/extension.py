"""Central extensions A_theta = A + V of an algebra by skew forms."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .algebra import Algebra
from .cohomology import CohomologySpace, SkewForm, pair_index
from .linalg import Subspace, kernel, rank


def _as_list(theta) -> list[SkewForm]:
    return [theta] if isinstance(theta, SkewForm) else list(theta)


def radical(A: Algebra, theta: SkewForm | Sequence[SkewForm]) -> Subspace:
    """{x : theta(x, A) = 0}; for several forms, the intersection of their radicals."""
    forms = _as_list(theta)
    rows = []
    for t in forms:
        if t.dim != A.dim or t.field != A.field:
            raise ValueError("skew form does not live on this algebra")
        rows.extend(t.matrix())
    if not rows:
        return Subspace.full(A.field, A.dim)
    return kernel(A.field, rows, A.dim)


@dataclass
class ExtensionSpec:
    base: Algebra
    cocycles: list[SkewForm]
    name: str | None = None
    classes: list[SkewForm] = dc_field(default_factory=list)

    def __post_init__(self):
        if not self.cocycles:
            raise ValueError("an extension needs at least one cocycle")
        for t in self.cocycles:
            if t.dim != self.base.dim or t.field != self.base.field:
                raise ValueError("cocycle does not live on the base algebra")
        if not self.classes:
            space = CohomologySpace(self.base)
            self.classes = [space.class_reduce(t) for t in self.cocycles]

    @property
    def extension_dim(self) -> int:
        return self.base.dim + len(self.cocycles)


def central_extension(spec: ExtensionSpec | Algebra, cocycles: Sequence[SkewForm] | None = None, name: str | None = None) -> Algebra:
    """A_theta with the new basis vectors e_{m+1}, ..., e_{m+s} placed last.

    Accepts either an :class:`ExtensionSpec` or ``(base, cocycles)``.
    """
    if isinstance(spec, Algebra):
        spec = ExtensionSpec(spec, list(cocycles), name)
    A, forms = spec.base, spec.cocycles
    m, s = A.dim, len(forms)
    F = A.field
    prods = {}
    for k, (i, j) in enumerate(pair_index(m)):
        v = list(A.basis_product(i, j)) + [t.coeffs[k] for t in forms]
        prods[(i, j)] = tuple(v)
    return Algebra(m + s, F, prods, spec.name)


def annihilator_formula(A: Algebra, cocycles: Sequence[SkewForm]) -> Subspace:
    """(theta-radical ∩ Ann(A)) + V inside A + V."""
    m, s = A.dim, len(cocycles)
    F = A.field
    inner = radical(A, cocycles).intersect(A.annihilator)
    vecs = [v + (F.zero,) * s for v in inner.basis]
    for k in range(s):
        e = [F.zero] * (m + s)
        e[m + k] = F.one
        vecs.append(tuple(e))
    return Subspace.span(F, m + s, vecs)


def has_annihilator_component(space: CohomologySpace | Algebra, classes: Sequence[SkewForm]) -> bool:
    """True iff the classes [theta_1], ..., [theta_s] are linearly dependent in H^2."""
    if isinstance(space, Algebra):
        space = CohomologySpace(space)
    vecs = [space.to_coords(t) for t in classes]
    return rank(space.field, vecs, space.dim) < len(vecs) if vecs else False


def in_T_s(space: CohomologySpace, W: Subspace) -> bool:
    """Whether the radicals of W's basis cocycles meet Ann(A) only in 0."""
    A = space.algebra
    forms = space.forms_of(W)
    if not forms:
        return A.annihilator.dim == 0
    return radical(A, forms).intersect(A.annihilator).dim == 0


def shift_isomorphism(A: Algebra, functionals: Sequence[Sequence]):
    """Matrix of x + v -> x + v + sum_i f_i(x) e_{m+i}, an isomorphism A_theta -> A_(theta + delta f)."""
    F = A.field
    m, s = A.dim, len(functionals)
    M = [[F.zero] * (m + s) for _ in range(m + s)]
    for k in range(m + s):
        M[k][k] = F.one
    for i, f in enumerate(functionals):
        for x in range(m):
            M[m + i][x] = F.coerce(f[x])
    return tuple(tuple(r) for r in M)
