"""Plain-data views of result objects, rendered as text or stable JSON."""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import Algebra, InvariantSignature
from .classify import ClassificationReport, GateResult, VerificationReport
from .cohomology import CohomologySpace, SkewForm
from .linalg import Subspace
from .normalization import NormalizationReport
from .symmetry import OrbitReport


def _scalar(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    return x


def to_data(obj):
    """Recursively convert results to JSON-compatible values."""
    if isinstance(obj, VerificationReport):
        return {
            "kind": "verify-theorem1",
            "max_n": obj.max_n,
            "primes": obj.primes,
            "ok": obj.ok,
            "entries": {str(n): names for n, names in obj.entries.items()},
            "checks": [
                {"check": c.name, "subject": c.subject, "passed": c.passed, "detail": c.detail} for c in obj.checks
            ],
        }
    if isinstance(obj, ClassificationReport):
        return {
            "kind": "classify",
            "prime": obj.prime,
            "s": obj.s,
            "filter": obj.filter,
            "aut_order": obj.aut_order,
            "points": obj.n_points,
            "orbits": [{"representative": r, "size": k, "match": obj.matches[r]}
                       for r, k in zip(obj.representatives, obj.orbit_sizes)],
            "bijective": obj.bijective,
        }
    if isinstance(obj, OrbitReport):
        return {
            "kind": "orbits",
            "algebra": obj.algebra,
            "field": obj.field,
            "s": obj.s,
            "filter": obj.filter,
            "group_order": obj.group_order,
            "points": obj.n_points,
            "orbits": [{"representative": [list(map(_scalar, r)) for r in o.representative.basis], "size": o.size}
                       for o in obj.orbits],
        }
    if isinstance(obj, NormalizationReport):
        return {
            "kind": "normalization",
            "seed": obj.seed,
            "samples": obj.samples,
            "ok": obj.ok,
            "cases": [{"case": c.name, "passed": c.passed, "samples": c.samples, "failures": c.failures,
                       "note": c.note} for c in obj.cases],
        }
    if isinstance(obj, GateResult):
        return {"algebra": obj.algebra, "h2": obj.h2_dim, "h2t": obj.h2t_dim,
                "us_points": {str(k): v for k, v in obj.us_points.items()}, "ok": obj.ok}
    if isinstance(obj, InvariantSignature):
        return {"dim": obj.dim, "power_dims": list(obj.power_dims), "annihilator_dim": obj.ann_dim,
                "square_dim": obj.square_dim, "tortkara": obj.tortkara}
    if isinstance(obj, CohomologySpace):
        return {"h2_dim": obj.dim, "h2_basis": [str(t) for t in obj.h2_basis]}
    if isinstance(obj, SkewForm):
        return str(obj)
    if isinstance(obj, Subspace):
        return [list(map(_scalar, r)) for r in obj.basis]
    if isinstance(obj, Algebra):
        from .fileformat import render_algebra
        return render_algebra(obj)
    if isinstance(obj, dict):
        return {str(k): to_data(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_data(v) for v in obj]
    return _scalar(obj)


def render_json(obj) -> str:
    return json.dumps(to_data(obj), sort_keys=True, indent=2)


def _flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _text_lines(data, indent=0) -> list[str]:
    pad = "  " * indent
    out = []
    if isinstance(data, dict):
        for k in sorted(data):
            v = data[k]
            if _flat(v) and all(isinstance(x, (int, float, bool)) for x in v):
                out.append(f"{pad}{k}: [{', '.join(map(str, v))}]")
            elif isinstance(v, (dict, list)) and v:
                out.append(f"{pad}{k}:")
                out.extend(_text_lines(v, indent + 1))
            else:
                out.append(f"{pad}{k}: {v}")
    elif isinstance(data, list):
        for v in data:
            if isinstance(v, dict):
                first, *rest = _text_lines(v, indent + 1)
                out.append(f"{pad}- {first.strip()}")
                out.extend(rest)
            else:
                out.append(f"{pad}- {v}")
    else:
        out.append(f"{pad}{data}")
    return out


def render_text(obj) -> str:
    if isinstance(obj, VerificationReport):
        return render_verification_text(obj)
    if isinstance(obj, Algebra):
        return to_data(obj)
    return "\n".join(_text_lines(to_data(obj))) + "\n"


def render_verification_text(r: VerificationReport) -> str:
    lines = [f"verification up to n = {r.max_n} over GF({', '.join(map(str, r.primes))})"]
    for n, names in r.entries.items():
        lines.append(f"n = {n}: {len(names)} entries")
        for name in names:
            lines.append(f"  {name}")
            for c in r.checks:
                if c.subject == name:
                    lines.append(f"    {'PASS' if c.passed else 'FAIL'} {c.name}  {c.detail}".rstrip())
    pairs = [c for c in r.checks if c.name.startswith("d:")]
    bad = [c for c in pairs if not c.passed]
    lines.append(f"pairwise non-isomorphism: {len(pairs) - len(bad)}/{len(pairs)} pairs pass")
    for c in bad:
        lines.append(f"  FAIL {c.subject}: {c.detail}")
    lines.append("result: " + ("all checks passed" if r.ok else f"{len(r.failed())} checks failed"))
    return "\n".join(lines) + "\n"


def render_report(obj, fmt: str = "text") -> str:
    if fmt == "json":
        return render_json(obj) + "\n"
    if fmt == "text":
        return render_text(obj)
    raise ValueError(f"unknown format {fmt!r}")
