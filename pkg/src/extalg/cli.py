"""Command-line entry point: ``extalg <command> ...``.

Exit codes: 0 success, 1 a verification/check reported failure, 2 bad input or usage.
"""

from __future__ import annotations

import argparse
import sys

from .algebra import find_isomorphism, invariant_signature
from .classify import classify_extensions_over_gfp, verify_theorem1
from .cohomology import CohomologySpace, NotTortkaraError
from .extension import central_extension, radical
from .fileformat import ParseError, parse_cocycle, read_algebra, render_algebra
from .normalization import verify_normalization_maps
from .reports import render_report
from .scalars import FieldError
from .search import SearchBoundExceeded
from .symmetry import FILTERS, automorphisms, orbit_partition


class UsageError(Exception):
    pass


def _emit(data, fmt):
    sys.stdout.write(render_report(data, fmt))


def _finite(A):
    if not A.field.is_finite:
        raise UsageError("this command needs an algebra over gf p")


def cmd_check(args):
    A = read_algebra(args.file)
    w = A.tortkara_witness
    data = {
        "name": A.name or "",
        "field": str(A.field),
        "signature": invariant_signature(A),
        "nilpotent": A.is_nilpotent,
        "nilpotency_index": A.nilpotency_index,
        "annihilator": A.annihilator,
        "tortkara": w is None,
    }
    if w is not None:
        data["tortkara_witness"] = {"a": list(w[0]), "b": list(w[1]), "c": list(w[2]), "defect": list(w[3])}
    _emit(data, args.format)
    return 0


def cmd_cohomology(args):
    A = read_algebra(args.file)
    space = CohomologySpace(A)
    data = {"h2_dim": space.dim, "h2_basis": [str(t) for t in space.h2_basis],
            "z2_dim": space.z2_dim, "b2_dim": space.b2.dim}
    if args.tortkara:
        data["z2t_dim"] = space.z2t.dim
        data["h2t_dim"] = space.h2t.dim
        data["h2t_basis"] = [str(t) for t in space.h2t_basis]
    _emit(data, args.format)
    return 0


def _cocycles(A, specs):
    return [parse_cocycle(s, A.dim, A.field) for s in specs]


def cmd_radical(args):
    A = read_algebra(args.file)
    forms = _cocycles(A, args.cocycle)
    R = radical(A, forms)
    _emit({"cocycles": [str(t) for t in forms], "radical": R, "radical_dim": R.dim,
           "meets_annihilator": R.intersect(A.annihilator).dim}, args.format)
    return 0


def cmd_extend(args):
    A = read_algebra(args.file)
    ext = central_extension(A, _cocycles(A, args.cocycle), args.name)
    if args.format == "json":
        _emit({"algebra": render_algebra(ext), "signature": invariant_signature(ext)}, "json")
    else:
        sys.stdout.write(render_algebra(ext))
    return 0


def cmd_aut(args):
    A = read_algebra(args.file)
    _finite(A)
    G = automorphisms(A)
    data = {"order": G.order}
    if args.list:
        data["automorphisms"] = [[list(r) for r in M] for M in G]
    _emit(data, args.format)
    return 0


def cmd_orbits(args):
    A = read_algebra(args.file)
    _finite(A)
    space = CohomologySpace(A)
    if not 1 <= args.s <= space.dim:
        raise UsageError(f"-s must be between 1 and dim H^2 = {space.dim}")
    _emit(orbit_partition(space, args.s, args.filter), args.format)
    return 0


def cmd_iso(args):
    A, B = read_algebra(args.file1), read_algebra(args.file2)
    if A.field != B.field:
        raise UsageError("both algebras must be over the same field")
    _finite(A)
    phi = find_isomorphism(A, B)
    data = {"isomorphic": phi is not None}
    if phi is not None:
        data["matrix"] = [list(r) for r in phi]
    _emit(data, args.format)
    return 0 if phi is not None else 1


def cmd_classify(args):
    r = classify_extensions_over_gfp(args.prime, args.s)
    _emit(r, args.format)
    return 0 if r.bijective else 1


def cmd_verify(args):
    r = verify_theorem1(args.max_n, args.primes)
    _emit(r, args.format)
    return 0 if r.ok else 1


def cmd_normalize(args):
    r = verify_normalization_maps(args.samples, args.seed, corrected=args.corrected, literal=args.literal)
    _emit(r, args.format)
    return 0 if r.ok else 1


def _primes(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="extalg", description="Central extensions of anticommutative algebras.")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[fmt], help="validate a file and print invariants")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("cohomology", parents=[fmt], help="H^2 (and H^2_T) of an algebra")
    p.add_argument("file")
    p.add_argument("--tortkara", action="store_true", help="also compute Z^2_T and H^2_T")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("radical", parents=[fmt], help="radical of one or more skew forms")
    p.add_argument("file")
    p.add_argument("--cocycle", action="append", required=True, metavar="SPEC")
    p.set_defaults(func=cmd_radical)

    p = sub.add_parser("extend", parents=[fmt], help="central extension by skew forms")
    p.add_argument("file")
    p.add_argument("--cocycle", action="append", required=True, metavar="SPEC")
    p.add_argument("--name")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("aut", parents=[fmt], help="automorphism group order (gf p only)")
    p.add_argument("file")
    p.add_argument("--list", action="store_true", help="print every automorphism")
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("orbits", parents=[fmt], help="Aut-orbits on Grassmannian points of H^2 (gf p only)")
    p.add_argument("file")
    p.add_argument("-s", type=int, required=True)
    p.add_argument("--filter", choices=FILTERS, default="all")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("iso", parents=[fmt], help="find an isomorphism (gf p only); exit 1 if none")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("classify", parents=[fmt], help="orbits of Aut(A_3) on U_s and their catalog matches")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify-theorem1", parents=[fmt], help="check the classification list")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--primes", type=_primes, default=[3, 5])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("normalize", parents=[fmt], help="random checks of the normalising automorphisms")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--corrected", action="store_true", help="include the corrected variants")
    p.add_argument("--literal", action="store_true", help="include the literal readings")
    p.set_defaults(func=cmd_normalize)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, FieldError, UsageError, NotTortkaraError, SearchBoundExceeded, OSError, ValueError) as exc:
        print(f"extalg: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
