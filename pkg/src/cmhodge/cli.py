"""Command-line surface.

Exit codes: 0 success, 1 usage error, 2 parse/validation error,
3 verification failure, 4 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from pathlib import Path

from .catalog import catalog, catalog_entry_names, sweep_instances
from .errors import CapExceeded, CmhodgeError, ParseError, ValidationError
from .groups import mask_of
from .instance import BuiltInstance, build_instance, parse_instance, serialize_instance
from .lattice import check_via_system, reduced_validity_system
from .monomials import classify, enumerate_valid, enumerate_valid_bruteforce, galois_orbits
from .report import analysis_report, canonical_json, certificate_bundle, deltas_report
from .verify import verify_document
from .weil import coverage_certificate

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_VERIFY = 3
EXIT_CAP = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse defaults to exit code 2
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="cmhodge")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("analyze", "deltas", "witness", "verify", "oracle", "catalog"):
        cmd = sub.add_parser(name)
        cmd.add_argument("--input", metavar="PATH", help="instance file")
        cmd.add_argument("--catalog", metavar="NAME:PARAMS", help="built-in instance")
        cmd.add_argument("--degree", default="all", help="a degree p, or 'all'")
        cmd.add_argument("--orbits-only", action="store_true")
        cmd.add_argument("--certify", metavar="PATH", help="certificate file to write or verify")
        cmd.add_argument("--cap", type=int, default=10**7, help="subset-count cap")
        cmd.add_argument("--jobs", type=int, default=1)
    return parser


def _load_instance(args) -> BuiltInstance:
    if bool(args.input) == bool(args.catalog):
        raise _UsageError("exactly one of --input and --catalog is required")
    if args.input:
        spec = parse_instance(Path(args.input).read_text(encoding="utf-8"))
    else:
        name, _, params = args.catalog.partition(":")
        spec = catalog(name, params)
    return build_instance(spec)


def _degrees(args, built: BuiltInstance) -> list[int]:
    if args.degree == "all":
        return built.degrees
    try:
        p = int(args.degree)
    except ValueError:
        raise _UsageError(f"--degree wants an integer or 'all', got {args.degree!r}")
    half = built.embeddings.size // 2
    if not 0 <= p <= half:
        raise ValidationError(f"degree {p} outside 0..{half}")
    return [p]


def _map_degrees(fn, degrees: list[int], jobs: int) -> list:
    # results are collected in degree order regardless of jobs, so output
    # bytes never depend on the parallelism level
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, degrees))
    return [fn(p) for p in degrees]


def _cmd_analyze(args, out) -> int:
    built = _load_instance(args)
    reports = _map_degrees(lambda p: classify(built.cm_type, p), _degrees(args, built), args.jobs)
    out.write(canonical_json(analysis_report(built, reports)))
    return EXIT_OK


def _cmd_deltas(args, out) -> int:
    built = _load_instance(args)

    def one(p: int) -> tuple[int, list[int]]:
        valid = enumerate_valid(built.cm_type, p)
        if args.orbits_only:
            valid = [orbit[0] for orbit in galois_orbits(built.embeddings, valid)]
        return p, valid

    per_degree = _map_degrees(one, _degrees(args, built), args.jobs)
    out.write(canonical_json(deltas_report(built, per_degree, args.orbits_only)))
    return EXIT_OK


def _cmd_witness(args, out) -> int:
    built = _load_instance(args)
    certs = _map_degrees(
        lambda p: coverage_certificate(built.cm_type, p), _degrees(args, built), args.jobs
    )
    text = canonical_json(certificate_bundle(built.spec, certs))
    if args.certify:
        Path(args.certify).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    if not args.certify:
        raise _UsageError("verify requires --certify PATH")
    try:
        data = json.loads(Path(args.certify).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"certificate is not valid JSON: {exc}")
    results = verify_document(data)
    all_ok = all(res.ok for _, res in results)
    for label, res in results:
        out.write(f"{label}: {res.describe()}\n")
    return EXIT_OK if all_ok else EXIT_VERIFY


def _cmd_oracle(args, out) -> int:
    built = _load_instance(args)
    phi = built.cm_type
    m = built.embeddings.size
    agree = True
    for p in _degrees(args, built):
        brute = enumerate_valid_bruteforce(phi, p, cap=args.cap)
        fast = enumerate_valid(phi, p)
        system = reduced_validity_system(phi, p)
        by_system = sorted(
            mask_of(pts)
            for pts in combinations(range(m), 2 * p)
            if check_via_system(system, mask_of(pts), p)
        ) if 2 * p <= m else []
        ok = brute == fast == by_system
        agree = agree and ok
        out.write(f"p={p}: {'agree' if ok else 'DISAGREE'} ({len(brute)} valid)\n")
    return EXIT_OK if agree else EXIT_VERIFY


def _cmd_catalog(args, out) -> int:
    if args.catalog:
        name, _, params = args.catalog.partition(":")
        out.write(serialize_instance(catalog(name, params)))
        return EXIT_OK
    out.write("entries: " + ", ".join(catalog_entry_names()) + "\n")
    out.write("standard sweep instances:\n")
    for spec in sweep_instances(12):
        out.write(f"  {spec.name} (order {spec.order})\n")
    return EXIT_OK


_COMMANDS = {
    "analyze": _cmd_analyze,
    "deltas": _cmd_deltas,
    "witness": _cmd_witness,
    "verify": _cmd_verify,
    "oracle": _cmd_oracle,
    "catalog": _cmd_catalog,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args, sys.stdout)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, ValidationError) as exc:
        print(f"invalid instance: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except FileNotFoundError as exc:
        print(f"file not found: {exc.filename}", file=sys.stderr)
        return EXIT_INVALID
    except CmhodgeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())
