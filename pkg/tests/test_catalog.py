import pytest

from extalg import A3, SkewForm, catalog_entry, central_extension, h2, theorem1_catalog
from extalg.catalog import catalog_size, cocycles_of, table_of
from extalg.classify import classify_extensions_over_gfp, gate_check, verify_theorem1
from extalg.extension import has_annihilator_component
from extalg.linalg import Subspace
from extalg.scalars import GF, QQ


@pytest.mark.parametrize("n,count", [(4, 0), (5, 1), (6, 5), (7, 9), (8, 10), (9, 10), (11, 10)])
def test_catalog_sizes(n, count):
    entries = theorem1_catalog(n)
    assert len(entries) == count == catalog_size(n)
    assert all(e.algebra.dim == n for e in entries)


def test_catalog_rejects_small_n():
    with pytest.raises(ValueError):
        theorem1_catalog(3)


def test_split_entries_in_dimension_7():
    entries = theorem1_catalog(7)
    assert [e.split for e in entries] == [True] * 5 + [False] * 4
    assert entries[0].provenance == ("split", "A_{5,1}", 2)


def test_padding_beyond_8():
    e = catalog_entry(11, 10)
    assert e.name == "A_{11,10}"
    assert e.algebra.products == table_of(8, 10).direct_sum_with_trivial(3).products


def test_annihilator_of_A810():
    A = table_of(8, 10)
    units = [tuple(int(i == k) for i in range(8)) for k in range(4, 8)]
    assert A.annihilator == Subspace.span(QQ, 8, units)


def test_non_split_cocycles_live_in_U_s():
    space = h2(A3())
    h2t = space.h2t
    for (n, i) in [(5, 1), (6, 2), (6, 5), (7, 9), (8, 10)]:
        forms = cocycles_of(n, i)
        W = space.point(forms)
        assert W.dim == len(forms)
        assert not h2t.contains(W)
        assert not has_annihilator_component(space, forms)


def test_verify_small():
    report = verify_theorem1(6, [3])
    assert report.ok
    witness = next(c for c in report.checks if c.subject == "A_{5,1}" and c.name.startswith("b"))
    assert witness.detail.startswith("a=e2, b=e1, c=e3")


def test_verify_reports_failures():
    # a bogus prime list is an input error, not a report
    with pytest.raises(ValueError):
        verify_theorem1(6, [4])
    with pytest.raises(ValueError):
        verify_theorem1(4, [3])


@pytest.mark.parametrize("s,names", [
    (1, {"A_{5,1}"}),
    (3, {"A_{7,6}", "A_{7,7}", "A_{7,8}", "A_{7,9}"}),
])
def test_classify_gf3(s, names):
    r = classify_extensions_over_gfp(3, s)
    assert set(r.matches.values()) == names and r.bijective


def test_classify_gf5_top():
    r = classify_extensions_over_gfp(5, 4)
    assert list(r.matches.values()) == ["A_{8,10}"]
    assert r.representatives == ["d14, d23, d24, d34"]


def test_gate():
    results = gate_check(GF(3))
    assert [(g.algebra, g.h2_dim, g.h2t_dim) for g in results] == [("A_1", 6, 6), ("A_2", 5, 5)]
    assert all(g.ok for g in results)
    assert all(g.ok for g in gate_check(QQ))
