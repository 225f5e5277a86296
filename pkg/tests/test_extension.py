import random

import pytest

from extalg import A3, SkewForm, central_extension, has_annihilator_component, h2, in_T_s, radical
from extalg.catalog import table_of
from extalg.extension import ExtensionSpec, annihilator_formula, shift_isomorphism
from extalg.linalg import Subspace
from extalg.scalars import GF, QQ


def d(i, j, F=QQ):
    return SkewForm.delta(4, F, i, j)


def test_radicals():
    A = A3()
    assert radical(A, d(3, 4)) == Subspace.span(QQ, 4, [(1, 0, 0, 0), (0, 1, 0, 0)])
    assert radical(A, SkewForm.zero(4, QQ)) == Subspace.full(QQ, 4)
    assert radical(A, d(1, 4) + d(2, 3)).dim == 0


def test_extensions_reproduce_catalog():
    assert central_extension(A3(), [d(3, 4)]).products == table_of(5, 1).products
    assert central_extension(A3(), [d(3, 4), d(2, 4)]).products == table_of(6, 2).products
    assert central_extension(ExtensionSpec(A3(), [d(3, 4), d(2, 3) + d(1, 4)])).products == table_of(6, 5).products


def test_zero_cocycle_adds_a_trivial_line():
    B = central_extension(A3(), [SkewForm.zero(4, QQ)])
    assert B.products == A3().direct_sum_with_trivial(1).products
    assert B.annihilator.dim == A3().annihilator.dim + 1


def test_annihilator_components():
    A = A3()
    assert has_annihilator_component(A, [d(3, 4), d(3, 4).scale(2)])
    assert not has_annihilator_component(A, [d(3, 4), d(2, 4)])
    assert has_annihilator_component(A, [d(1, 2)])


def test_T_s_membership():
    space = h2(A3())
    assert in_T_s(space, space.point([d(3, 4)]))
    assert not in_T_s(space, space.point([d(2, 3)]))
    assert in_T_s(space, Subspace.full(QQ, 4))


def test_annihilator_formula_on_catalog():
    for cocycles in ([d(3, 4)], [d(3, 4), d(2, 3)], [d(2, 3)]):
        assert central_extension(A3(), cocycles).annihilator == annihilator_formula(A3(), cocycles)


def test_spec_rejects_foreign_cocycles():
    with pytest.raises(ValueError):
        ExtensionSpec(A3(), [SkewForm.delta(5, QQ, 1, 2)])
    with pytest.raises(ValueError):
        ExtensionSpec(A3(), [])


def test_shift_isomorphism_example():
    from extalg import is_homomorphism
    from extalg.cohomology import delta_of_functional
    A = A3()
    f = (0, 0, 2, -1)
    theta = d(3, 4)
    B1 = central_extension(A, [theta])
    B2 = central_extension(A, [theta + delta_of_functional(A, f)])
    assert is_homomorphism(B1, B2, shift_isomorphism(A, [f]))
