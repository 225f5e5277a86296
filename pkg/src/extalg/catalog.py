"""The 4-dimensional nilpotent algebras A_1, A_2, A_3 and the main classification list.

Non-split entries are stored twice on purpose: as the literal multiplication
table and as the cocycle list on A_3 that produces them, so verification can
compare the two routes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra
from .cohomology import SkewForm
from .scalars import QQ, Field

BASE_RULE = {(1, 2): 3, (1, 3): 4}

# name -> (cocycles on A_3 as pair lists, multiplication table beyond the A_3 part)
NON_SPLIT = {
    (5, 1): ([[(3, 4)]], {(3, 4): 5}),
    (6, 2): ([[(3, 4)], [(2, 4)]], {(3, 4): 5, (2, 4): 6}),
    (6, 3): ([[(3, 4)], [(2, 3)]], {(3, 4): 5, (2, 3): 6}),
    (6, 4): ([[(3, 4)], [(1, 4)]], {(3, 4): 5, (1, 4): 6}),
    (6, 5): ([[(3, 4)], [(2, 3), (1, 4)]], {(3, 4): 5, (2, 3): 6, (1, 4): 6}),
    (7, 6): ([[(3, 4)], [(2, 4)], [(2, 3)]], {(3, 4): 5, (2, 4): 6, (2, 3): 7}),
    (7, 7): ([[(3, 4)], [(2, 4)], [(1, 4)]], {(3, 4): 5, (2, 4): 6, (1, 4): 7}),
    (7, 8): ([[(3, 4)], [(1, 4)], [(2, 3)]], {(3, 4): 5, (1, 4): 6, (2, 3): 7}),
    (7, 9): ([[(3, 4)], [(2, 4)], [(1, 4), (2, 3)]], {(3, 4): 5, (2, 4): 6, (1, 4): 7, (2, 3): 7}),
    (8, 10): ([[(3, 4)], [(2, 4)], [(2, 3)], [(1, 4)]], {(3, 4): 5, (2, 4): 6, (2, 3): 7, (1, 4): 8}),
}


def entry_name(n: int, i: int) -> str:
    return f"A_{{{n},{i}}}"


def A1(field: Field = QQ) -> Algebra:
    return Algebra.trivial(4, field, "A_1")


def A2(field: Field = QQ) -> Algebra:
    return Algebra.from_rules(4, field, {(1, 2): 3}, "A_2")


def A3(field: Field = QQ) -> Algebra:
    return Algebra.from_rules(4, field, BASE_RULE, "A_3")


def four_dim_bases(field: Field = QQ) -> list[Algebra]:
    return [A1(field), A2(field), A3(field)]


def cocycles_of(n: int, i: int, field: Field = QQ) -> list[SkewForm]:
    forms, _ = NON_SPLIT[(n, i)]
    return [SkewForm.from_terms(4, field, {pr: 1 for pr in terms}) for terms in forms]


def table_of(n: int, i: int, field: Field = QQ) -> Algebra:
    _, extra = NON_SPLIT[(n, i)]
    return Algebra.from_rules(n, field, {**BASE_RULE, **extra}, entry_name(n, i))


@dataclass
class CatalogEntry:
    name: str
    dim: int
    index: int
    algebra: Algebra
    # ("extension", cocycles) or ("split", name of the base entry, padding)
    provenance: tuple

    @property
    def split(self) -> bool:
        return self.provenance[0] == "split"


def _split_source(n: int, i: int) -> tuple[int, int]:
    """Entry that A_{n,i} pads by one dimension."""
    return (n - 1, i)


def catalog_entry(n: int, i: int, field: Field = QQ) -> CatalogEntry:
    if (n, i) in NON_SPLIT:
        return CatalogEntry(entry_name(n, i), n, i, table_of(n, i, field), ("extension", cocycles_of(n, i, field)))
    base_n, base_i = _split_source(n, i)
    if base_n < 5:
        raise KeyError(entry_name(n, i))
    # pad the non-split ancestor directly
    root_n = base_n
    while (root_n, base_i) not in NON_SPLIT:
        root_n -= 1
        if root_n < 5:
            raise KeyError(entry_name(n, i))
    root = table_of(root_n, base_i, field)
    alg = root.direct_sum_with_trivial(n - root_n, entry_name(n, i))
    return CatalogEntry(entry_name(n, i), n, i, alg, ("split", entry_name(root_n, base_i), n - root_n))


def catalog_size(n: int) -> int:
    if n < 4:
        raise ValueError("the classification starts at dimension 4")
    return {4: 0, 5: 1, 6: 5, 7: 9}.get(n, 10)


def theorem1_catalog(n: int, field: Field = QQ) -> list[CatalogEntry]:
    """All n-dimensional nilpotent non-Tortkara algebras with (n-4)-dimensional annihilator."""
    return [catalog_entry(n, i, field) for i in range(1, catalog_size(n) + 1)]
