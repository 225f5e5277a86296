"""End-to-end pipeline: orbits on U_s(A_3), their extensions, and catalog verification."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field as dc_field

from .algebra import Algebra, find_isomorphism, invariant_signature
from .catalog import A1, A2, A3, CatalogEntry, catalog_entry, theorem1_catalog
from .cohomology import CohomologySpace
from .extension import central_extension
from .scalars import GF, QQ, Field
from .symmetry import automorphisms, grassmann_points, orbit_partition


@dataclass
class Check:
    name: str
    subject: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    max_n: int
    primes: list[int]
    checks: list[Check] = dc_field(default_factory=list)
    entries: dict = dc_field(default_factory=dict)  # n -> entry names
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def add(self, name, subject, passed, detail=""):
        self.checks.append(Check(name, subject, bool(passed), detail))


def _vec(v) -> str:
    terms = [f"{c}*e{k + 1}" if c != 1 else f"e{k + 1}" for k, c in enumerate(v) if c]
    return " + ".join(terms) or "0"


def _span(S) -> str:
    return "span{" + ", ".join(_vec(v) for v in S.basis) + "}"


def _has_annihilator_component(A: Algebra) -> bool:
    # for a nilpotent algebra: a one-dimensional ideal summand exists iff Ann(A) is not inside A^2
    return not A.square.contains(A.annihilator)


def _check_entry(report: VerificationReport, e: CatalogEntry):
    A, n = e.algebra, e.dim
    report.add("a:nilpotent", e.name, A.is_nilpotent, f"index {A.nilpotency_index}")
    w = A.tortkara_witness
    detail = "" if w is None else f"a={_vec(w[0])}, b={_vec(w[1])}, c={_vec(w[2])}, defect={_vec(w[3])}"
    report.add("b:non-tortkara", e.name, w is not None, detail)
    report.add("c:annihilator", e.name, A.annihilator.dim == n - 4, f"Ann = {_span(A.annihilator)}")
    if e.split:
        prev = catalog_entry(n - 1, e.index, A.field).algebra.direct_sum_with_trivial(1)
        same = prev.products == A.products
        report.add("f:split", e.name, same and _has_annihilator_component(A),
                   f"{e.name} = A_{{{n - 1},{e.index}}} + F e{n}")
    else:
        built = central_extension(A3(A.field), e.provenance[1])
        same = built.products == A.products
        cocycles = ", ".join(str(t) for t in e.provenance[1])
        report.add("e:extension", e.name, same and not _has_annihilator_component(A), f"A_3 extended by [{cocycles}]")


def _check_pairs(report: VerificationReport, n: int, p: int, bound=None):
    entries = theorem1_catalog(n, GF(p))
    sigs = {e.name: invariant_signature(e.algebra) for e in entries}
    for e1, e2 in itertools.combinations(entries, 2):
        subject = f"{e1.name} vs {e2.name} over GF({p})"
        if sigs[e1.name] != sigs[e2.name]:
            report.add("d:non-isomorphic", subject, True, "invariant signatures differ")
            continue
        phi = find_isomorphism(e1.algebra, e2.algebra, bound=bound)
        report.add("d:non-isomorphic", subject, phi is None,
                   "exhaustive search found none" if phi is None else f"isomorphism {phi}")


def verify_theorem1(max_n: int = 8, primes=(3, 5), bound: int | None = None) -> VerificationReport:
    """Checks (a)-(f) for every catalog entry with 5 <= n <= max_n."""
    if max_n < 5:
        raise ValueError("max_n must be at least 5")
    primes = [int(p) for p in primes]
    for p in primes:
        GF(p)  # rejects 2 and non-primes
    t0 = time.perf_counter()
    report = VerificationReport(max_n, primes)
    for n in range(4, max_n + 1):
        entries = theorem1_catalog(n, QQ)
        report.entries[n] = [e.name for e in entries]
        for e in entries:
            _check_entry(report, e)
        for p in primes:
            _check_pairs(report, n, p, bound)
    report.seconds = time.perf_counter() - t0
    return report


@dataclass
class ClassificationReport:
    prime: int
    s: int
    filter: str
    aut_order: int
    n_points: int
    representatives: list[str]
    orbit_sizes: list[int]
    matches: dict  # representative -> catalog entry name (or None)
    seconds: float = 0.0

    @property
    def n_orbits(self) -> int:
        return len(self.representatives)

    @property
    def bijective(self) -> bool:
        names = list(self.matches.values())
        expected = {e.name for e in theorem1_catalog(4 + self.s, GF(self.prime)) if not e.split}
        return None not in names and len(set(names)) == len(names) and set(names) == expected


def classify_extensions_over_gfp(p: int, s: int, bound: int | None = None) -> ClassificationReport:
    """Orbits of Aut(A_3) on U_s(A_3) over GF(p), each matched to a non-split catalog entry."""
    if not 1 <= s <= 4:
        raise ValueError("s must be between 1 and 4")
    t0 = time.perf_counter()
    F = GF(p)
    base = A3(F)
    space = CohomologySpace(base)
    group = automorphisms(base, bound=bound)
    # U_4 = T_4 since H^2_T has dimension 3
    flt = "Ts" if s == space.dim else "Us"
    orbits = orbit_partition(space, s, flt, group)
    candidates = [e for e in theorem1_catalog(4 + s, F) if not e.split]
    matches = {}
    reps = []
    for orb in orbits.orbits:
        forms = space.forms_of(orb.representative)
        label = ", ".join(str(t) for t in forms)
        reps.append(label)
        ext = central_extension(base, forms)
        sig = invariant_signature(ext)
        hit = None
        for e in candidates:
            if invariant_signature(e.algebra) == sig and find_isomorphism(ext, e.algebra, bound=bound) is not None:
                hit = e.name
                break
        matches[label] = hit
    return ClassificationReport(p, s, flt, group.order, orbits.n_points, reps, orbits.counts, matches,
                                time.perf_counter() - t0)


@dataclass
class GateResult:
    algebra: str
    h2_dim: int
    h2t_dim: int
    us_points: dict  # s -> number of U_s points over the enumeration field

    @property
    def ok(self) -> bool:
        return self.h2_dim == self.h2t_dim and not any(self.us_points.values())


def gate_check(field: Field = GF(3), enumerate_points: bool = True) -> list[GateResult]:
    """Confirm H^2_T = H^2 for A_1 and A_2, so U_s is empty for every s."""
    out = []
    for A in (A1(field), A2(field)):
        space = CohomologySpace(A)
        counts = {}
        if enumerate_points and field.is_finite:
            for s in range(1, space.dim + 1):
                counts[s] = sum(1 for _ in grassmann_points(space, s, "Us"))
        out.append(GateResult(A.name, space.dim, space.h2t.dim, counts))
    return out
