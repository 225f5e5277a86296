import random

import pytest
from hypothesis import given, settings, strategies as st

from extalg import A1, A2, A3, SkewForm, class_reduce, coboundary_space, cocycle_space_dim, delta_of_functional, h2
from extalg.catalog import table_of
from extalg.cohomology import NotTortkaraError, tortkara_cocycle_space
from extalg.linalg import Subspace
from extalg.scalars import GF, QQ

from oracles import random_nilpotent


def d(i, j, n=4, F=QQ):
    return SkewForm.delta(n, F, i, j)


def test_delta_of_dual_basis():
    A = A3()
    assert delta_of_functional(A, (0, 0, 1, 0)) == d(1, 2)
    assert delta_of_functional(A, (0, 0, 0, 1)) == d(1, 3)
    assert not delta_of_functional(A, (0, 0, 0, 0))


def test_coboundary_spaces():
    assert coboundary_space(A1()).dim == 0
    assert coboundary_space(A2()) == Subspace.span(QQ, 6, [d(1, 2).coeffs])
    assert coboundary_space(A3()) == Subspace.span(QQ, 6, [d(1, 2).coeffs, d(1, 3).coeffs])


@pytest.mark.parametrize("n,expected", [(4, 6), (1, 0), (5, 10)])
def test_cocycle_space_dim(n, expected):
    assert cocycle_space_dim(n) == expected


def test_tortkara_cocycles_of_A3():
    Z = tortkara_cocycle_space(A3())
    assert Z.dim == 5
    assert Z == Subspace.span(QQ, 6, [d(i, j).coeffs for i, j in [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]])
    assert tortkara_cocycle_space(A2()).dim == 6
    assert tortkara_cocycle_space(A1()).dim == 6


def test_tortkara_cocycles_need_tortkara_base():
    with pytest.raises(NotTortkaraError):
        tortkara_cocycle_space(table_of(5, 1))


@pytest.mark.parametrize("A,h,ht,classes", [
    (A1(), 6, 6, ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))),
    (A2(), 5, 5, ((1, 3), (1, 4), (2, 3), (2, 4), (3, 4))),
    (A3(), 4, 3, ((1, 4), (2, 3), (2, 4), (3, 4))),
])
def test_cohomology_table(A, h, ht, classes):
    space = h2(A)
    assert (space.dim, space.h2t.dim) == (h, ht)
    assert space.coord_pairs == classes


def test_h2t_basis_of_A3():
    assert [str(t) for t in h2(A3()).h2t_basis] == ["d14", "d23", "d24"]


def test_class_reduce_removes_coboundaries():
    space = h2(A3())
    shifted = d(3, 4) + delta_of_functional(A3(), (0, 0, 1, 0))
    assert class_reduce(space, shifted) == d(3, 4)
    assert space.to_coords(d(1, 2)) == (0, 0, 0, 0)


def test_skew_form_basics():
    assert d(4, 3) == d(3, 4).scale(-1)
    assert d(3, 4)((0, 0, 1, 0), (0, 0, 0, 1)) == 1
    assert SkewForm.from_matrix(QQ, d(1, 4).matrix()) == d(1, 4)
    assert str(d(1, 4) + d(2, 3).scale(2)) == "d14+2*d23"


@given(st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_cohomology_dimension_formula(seed):
    rng = random.Random(seed)
    F = rng.choice([QQ, GF(3), GF(5)])
    A = random_nilpotent(rng.randint(2, 6), F, rng)
    space = h2(A)
    assert space.dim == cocycle_space_dim(A) - A.square.dim
    theta = SkewForm(A.dim, F, tuple(F.random(rng) for _ in range(cocycle_space_dim(A))))
    # the representative is in the class and is canonical
    r = space.class_reduce(theta)
    assert space.b2.reduce((theta - r).coeffs) == (F.zero,) * len(theta.coeffs)
    assert space.class_reduce(r) == r
    assert space.from_coords(space.to_coords(theta)) == r
