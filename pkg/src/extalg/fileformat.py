"""Line-based text format for algebras and a small syntax for skew forms.

    # comment
    name A_3
    dim 4
    field Q                 (or: field gf 3)
    e1 e2 -> e3
    e1 e3 -> 1*e4 + -2/3*e2

Unlisted products are zero.  Only ``ei ej`` with i < j is accepted.
"""

from __future__ import annotations

import re

from .algebra import Algebra
from .cohomology import SkewForm
from .linalg import DimensionError
from .scalars import Field, FieldError, field_from_text


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


_PRODUCT = re.compile(r"^e(\d+)\s+e(\d+)\s*->\s*(.+)$")
_TERM = re.compile(r"^([+-]?\s*[0-9/]*)\s*\*?\s*e(\d+)$")
_DELTA = re.compile(r"^([+-]?\s*[0-9/]*)\s*\*?\s*d(\d+)(?:[,_](\d+))?$")


def _coefficient(field: Field, text: str, line=None):
    t = text.replace(" ", "")
    if t in ("", "+"):
        return field.one
    if t == "-":
        return field.neg(field.one)
    try:
        return field.parse(t)
    except (ValueError, ZeroDivisionError, FieldError) as exc:
        raise ParseError(f"bad coefficient {text!r}: {exc}", line) from None


def _split_terms(text: str) -> list[str]:
    # split on + and on - that starts a new term (not a sign right after '*' or at the start)
    parts = re.split(r"\s*\+\s*|\s+(?=-)", text.strip())
    return [p for p in parts if p.strip()]


def parse_vector(text: str, dim: int, field: Field, line=None) -> tuple:
    v = [field.zero] * dim
    if text.strip() == "0":
        return tuple(v)
    for term in _split_terms(text):
        m = _TERM.match(term.strip())
        if not m:
            raise ParseError(f"cannot read term {term!r}", line)
        k = int(m.group(2))
        if not 1 <= k <= dim:
            raise ParseError(f"e{k} out of range for dimension {dim}", line)
        v[k - 1] = field.add(v[k - 1], _coefficient(field, m.group(1), line))
    return tuple(v)


def parse_algebra(text: str) -> Algebra:
    name = dim = field = None
    products = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "name":
            if name is not None:
                raise ParseError("duplicate name line", lineno)
            name = rest or None
        elif key == "dim":
            if dim is not None:
                raise ParseError("duplicate dim line", lineno)
            try:
                dim = int(rest)
            except ValueError:
                raise ParseError(f"bad dimension {rest!r}", lineno) from None
            if dim < 1:
                raise ParseError("dimension must be positive", lineno)
        elif key == "field":
            if field is not None:
                raise ParseError("duplicate field line", lineno)
            try:
                field = field_from_text(rest)
            except (FieldError, ValueError) as exc:
                raise ParseError(str(exc), lineno) from None
        else:
            m = _PRODUCT.match(line)
            if not m:
                raise ParseError(f"cannot read {line!r}", lineno)
            if dim is None or field is None:
                raise ParseError("dim and field must come before the products", lineno)
            i, j = int(m.group(1)), int(m.group(2))
            for k in (i, j):
                if not 1 <= k <= dim:
                    raise ParseError(f"e{k} out of range for dimension {dim}", lineno)
            if i >= j:
                raise ParseError(f"product e{i} e{j} must have i < j", lineno)
            if (i - 1, j - 1) in products:
                raise ParseError(f"duplicate product e{i} e{j}", lineno)
            products[(i - 1, j - 1)] = parse_vector(m.group(3), dim, field, lineno)
    if dim is None:
        raise ParseError("missing dim line")
    if field is None:
        raise ParseError("missing field line")
    try:
        return Algebra(dim, field, products, name)
    except DimensionError as exc:
        raise ParseError(str(exc)) from None


def read_algebra(path) -> Algebra:
    with open(path) as fh:
        return parse_algebra(fh.read())


def render_vector(v, field: Field) -> str:
    terms = []
    for k, c in enumerate(v):
        if not c:
            continue
        terms.append(f"e{k + 1}" if c == field.one else f"{field.format(c)}*e{k + 1}")
    return " + ".join(terms) if terms else "0"


def render_algebra(A: Algebra) -> str:
    lines = []
    if A.name:
        lines.append(f"name {A.name}")
    lines.append(f"dim {A.dim}")
    lines.append(f"field {A.field}")
    for (i, j), v in A.products.items():
        lines.append(f"e{i + 1} e{j + 1} -> {render_vector(v, A.field)}")
    return "\n".join(lines) + "\n"


def parse_cocycle(text: str, dim: int, field: Field) -> SkewForm:
    """Read ``d34``, ``d14+d23``, ``2*d24 - d13`` (``d1,10`` for two-digit indices)."""
    theta = SkewForm.zero(dim, field)
    terms = _split_terms(text.replace("-", " -")) if text.strip() else []
    if not terms:
        raise ParseError(f"empty cocycle {text!r}")
    for term in terms:
        m = _DELTA.match(term.strip())
        if not m:
            raise ParseError(f"cannot read cocycle term {term!r}")
        if m.group(3) is not None:
            i, j = int(m.group(2)), int(m.group(3))
        else:
            digits = m.group(2)
            if len(digits) != 2:
                raise ParseError(f"write d{digits[0]},{digits[1:]} style indices for {term!r}")
            i, j = int(digits[0]), int(digits[1])
        if not (1 <= i <= dim and 1 <= j <= dim) or i == j:
            raise ParseError(f"bad index pair ({i}, {j}) for dimension {dim}")
        c = _coefficient(field, m.group(1))
        theta = theta + SkewForm.delta(dim, field, i, j).scale(c)
    return theta
