"""Command-line front end: batch tools with JSON input and output.

Exit codes: 0 for success / admissible, 1 for a negative verdict or a
failed verification, 2 for invalid input.  All output is deterministic:
enumeration streams NDJSON in canonical order, JSON keys are sorted, and
any randomness is seeded (``--seed``, overridden by the BETTIFORGE_SEED
environment variable).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .aci import AciBetti, check_betti, enumerate_admissible, link_betti
from .exact import parse_matrix
from .gorenstein import (
    GorensteinBetti,
    check_gorenstein_betti,
    hilbert_from_resolution,
    koszul_modules,
    mci,
)
from .multiset import IntMultiset
from .pfaffian import AlternatingMatrix
from .structure import AlternatingPresentation, build_aci_complex, verify_complex


class InputError(Exception):
    """Invalid user input; mapped to exit code 2."""


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {path}: {exc}") from exc


def _parse_int_list(text: str) -> list[int]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"expected a JSON integer array, got {text!r}: {exc}") from exc
    if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
        raise InputError(f"expected a JSON integer array, got {text!r}")
    return data


def _emit(data) -> None:
    print(json.dumps(data, sort_keys=True))


def _load_alternating(data) -> tuple[AlternatingMatrix, list[int] | None]:
    """Accept a bare array-of-arrays or {"entries": ..., "twists": ..., "variables": ...}."""
    twists = None
    if isinstance(data, dict):
        if "entries" not in data:
            raise InputError('matrix object needs an "entries" key')
        entries = data["entries"]
        names = data.get("variables")
        twists = data.get("twists")
    else:
        entries = data
        names = None
    if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
        raise InputError("matrix entries must be an array of arrays")
    try:
        pm = parse_matrix(entries, names)
        return AlternatingMatrix.from_poly_matrix(pm), twists
    except ValueError as exc:
        raise InputError(str(exc)) from exc


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------


def cmd_check(args) -> int:
    data = _read_json(args.input)
    try:
        betti = AciBetti.from_json(data)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    verdict = check_betti(betti)
    _emit(verdict.to_json())
    if args.explain:
        if verdict.admissible:
            print("admissible: every stage of the decision procedure passed", file=sys.stderr)
        else:
            print(f"rejected at stage {verdict.stage}: {verdict.witness}", file=sys.stderr)
    return 0 if verdict.admissible else 1


def cmd_mci(args) -> int:
    gens = IntMultiset.from_values(_parse_int_list(args.gens))
    try:
        beta = GorensteinBetti.from_gens(gens)
        triple = mci(beta)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit({"mci": list(triple), "theta": beta.theta})
    return 0


def cmd_gorenstein_check(args) -> int:
    gens = IntMultiset.from_values(_parse_int_list(args.gens))
    verdict = check_gorenstein_betti(gens)
    _emit({"admissible": verdict.admissible, "theta": verdict.theta, "reason": verdict.reason})
    return 0 if verdict.admissible else 1


def cmd_hilbert(args) -> int:
    if (args.resolution is None) == (args.ci is None):
        raise InputError("provide exactly one of --resolution or --ci")
    if args.ci is not None:
        degrees = _parse_int_list(args.ci)
        modules = koszul_modules(degrees)
    else:
        try:
            data = json.loads(args.resolution)
        except json.JSONDecodeError as exc:
            raise InputError(f"--resolution is not valid JSON: {exc}") from exc
        if not isinstance(data, list) or not all(isinstance(m, list) for m in data):
            raise InputError("--resolution must be a JSON array of integer arrays")
        try:
            modules = [IntMultiset.from_values(m) for m in data]
        except (TypeError, ValueError) as exc:
            raise InputError(f"--resolution entries must be integers: {exc}") from exc
    try:
        h = hilbert_from_resolution(modules, args.nvars)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit({"values": list(h.values), "socle_degree": h.socle_degree(), "length": h.length()})
    return 0


def cmd_pfaffian(args) -> int:
    matrix, _ = _load_alternating(_read_json(args.input))
    if matrix.size % 2 == 0:
        _emit({"pfaffian": str(matrix.pfaffian())})
    else:
        _emit({"submaximal_pfaffians": [str(p) for p in matrix.submaximal_pfaffians()]})
    return 0


def cmd_link(args) -> int:
    gens = IntMultiset.from_values(_parse_int_list(args.gens))
    ci_type = _parse_int_list(args.ci)
    extra = IntMultiset.from_values(_parse_int_list(args.extra)) if args.extra else None
    try:
        result = link_betti(gens, args.theta, ci_type, extra)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(result.to_json())
    return 0


def cmd_enumerate(args) -> int:
    if args.max_degree < 1 or args.max_f < 2:
        raise InputError("--max-degree must be >= 1 and --max-f >= 2")
    for betti in enumerate_admissible(args.max_degree, args.max_f, jobs=args.jobs):
        print(json.dumps(betti.to_json(), sort_keys=True))
    return 0


def cmd_verify_structure(args) -> int:
    data = _read_json(args.matrix)
    matrix, twists = _load_alternating(data)
    if twists is None:
        raise InputError('structure verification needs "twists" in the matrix file')
    try:
        g_rows = tuple(int(x) for x in args.g_rows.split(","))
    except ValueError as exc:
        raise InputError(f"--g-rows must be comma-separated integers: {exc}") from exc
    if len(g_rows) != 3:
        raise InputError("--g-rows needs exactly three row indices")
    try:
        pres = AlternatingPresentation(matrix, g_rows, tuple(int(t) for t in twists))
        complex_ = build_aci_complex(pres)
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    report = verify_complex(complex_)
    payload = report.to_json()
    payload["twist_multisets"] = [m.to_list() for m in complex_.twist_multisets()]
    _emit(payload)
    return 0 if report.ok else 1


# ----------------------------------------------------------------------
# argument parsing
# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bettiforge",
        description="Exact pfaffian algebra and Betti-sequence tools for codimension-3 almost complete intersections.",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=0,
        help="seed for any randomized operation (BETTIFORGE_SEED overrides)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide admissibility of a (D, E, F) triple")
    p.add_argument("input", help="path to JSON {\"D\": [...], \"E\": [...], \"F\": [...]} or - for stdin")
    p.add_argument("--explain", action="store_true", help="human-readable verdict on stderr")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("mci", help="minimal complete-intersection type of a Gorenstein sequence")
    p.add_argument("--gens", required=True, help="JSON array of generator degrees")
    p.set_defaults(func=cmd_mci)

    p = sub.add_parser("gorenstein-check", help="Gaeta-Diesel admissibility of generator degrees")
    p.add_argument("--gens", required=True, help="JSON array of generator degrees")
    p.set_defaults(func=cmd_gorenstein_check)

    p = sub.add_parser("hilbert", help="Hilbert function of a graded free resolution")
    p.add_argument("--resolution", help="JSON array of twist arrays [M1, M2, ...]")
    p.add_argument("--ci", help="JSON array of complete-intersection degrees")
    p.add_argument("--nvars", type=int, default=3, help="number of variables (default 3)")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("pfaffian", help="pfaffian (even size) or submaximal vector (odd size)")
    p.add_argument("input", help="path to matrix JSON or - for stdin")
    p.set_defaults(func=cmd_pfaffian)

    p = sub.add_parser("link", help="resolution bookkeeping for linkage in a complete intersection")
    p.add_argument("--gens", required=True, help="Gorenstein generator degrees, JSON array")
    p.add_argument("--theta", required=True, type=int, help="socle-syzygy degree")
    p.add_argument("--ci", required=True, help="regular-sequence type, JSON array of three degrees")
    p.add_argument("--extra", help="degrees added as bordered pairs, JSON array")
    p.set_defaults(func=cmd_link)

    p = sub.add_parser("enumerate", help="stream all admissible triples within bounds as NDJSON")
    p.add_argument("--max-degree", required=True, type=int)
    p.add_argument("--max-f", required=True, type=int)
    p.add_argument("--jobs", type=int, default=1, help="parallel workers (order-preserving)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify-structure", help="build and verify the four-term complex of a presentation")
    p.add_argument("--matrix", required=True, help="path to matrix JSON with entries/twists/variables")
    p.add_argument("--g-rows", required=True, help="three comma-separated row indices, e.g. 1,2,3")
    p.set_defaults(func=cmd_verify_structure)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    env_seed = os.environ.get("BETTIFORGE_SEED")
    if env_seed is not None:
        try:
            args.seed = int(env_seed)
        except ValueError:
            print(f"error: BETTIFORGE_SEED must be an integer, got {env_seed!r}", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
