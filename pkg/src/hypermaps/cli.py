"""Command-line workbench: build, inspect, transform and compare hypermaps.

Hypermap arguments are file paths in the text or JSON format, ``-`` for
standard input, or ``family:SPEC`` (for example ``family:pp2k:3``) to build
a named hypermap on the fly.

Exit codes: 0 success, 1 a requested check is false, 2 usage or input
error, 3 a capacity limit was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import verify
from .construct import DEFAULT_CORE_CAP, closure_cover, covering_core, double_cover, phi_construct, sigma_dual
from .errors import CapacityExceeded, HypermapError
from .families import FamilySpec
from .hypermap import Hypermap
from .morphism import find_covering, in_image_of, is_bipartite_regular, is_regular
from .presentation import DEFAULT_MAX_COSETS, Presentation, coset_enumerate
from .words import BUILTIN_SPECS, EpimorphismSpec, parse_sigma

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def load_hypermap(arg: str) -> Hypermap:
    if arg.startswith("family:"):
        return FamilySpec.parse(arg[len("family:"):]).build()
    return Hypermap.loads(_read_text(arg))


def load_spec(arg: str) -> EpimorphismSpec:
    if arg.lower() in BUILTIN_SPECS:
        return BUILTIN_SPECS[arg.lower()]
    return EpimorphismSpec.from_text(Path(arg).read_text(), name=Path(arg).stem)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _write_hypermap(h: Hypermap, args) -> None:
    text = h.to_json() + "\n" if args.format == "json" else h.to_text()
    _emit(text, args.output)


def _print_result(name: str, value, args, extra: dict | None = None) -> None:
    if args.format == "json":
        payload = {name: value}
        payload.update(extra or {})
        print(json.dumps(payload))
    else:
        print(f"{name}: {str(value).lower() if isinstance(value, bool) else value}")
        for key, val in (extra or {}).items():
            print(f"{key}: {val}")


def cmd_build(args) -> int:
    if args.presentation:
        p = Presentation.from_text(_read_text(args.presentation), args.max_cosets)
        table = coset_enumerate(p)
        if p.arity == 3:
            h = Hypermap(*table)
        else:
            from .construct import hypermap_from_b_action

            h = hypermap_from_b_action(*table)
    else:
        h = FamilySpec.parse(args.family).build(allow_boundary=args.allow_boundary)
    _write_hypermap(h, args)
    return EXIT_OK


def cmd_info(args) -> int:
    report = load_hypermap(args.file).report()
    if args.format == "json":
        print(json.dumps(report.as_dict()))
    else:
        sys.stdout.write(report.to_text())
    return EXIT_OK


def cmd_apply(args) -> int:
    h = load_hypermap(args.file)
    op = args.operation
    if op == "dual":
        result = sigma_dual(h, parse_sigma(args.sigma))
    elif op == "phi":
        if not args.spec:
            raise ValueError("apply phi needs --spec")
        result = phi_construct(h, load_spec(args.spec))
    elif op == "double-cover":
        result = double_cover(h)
    elif op == "core":
        result = covering_core(h, args.cap)
    else:
        result = closure_cover(h)
    _write_hypermap(result, args)
    return EXIT_OK


def cmd_check(args) -> int:
    h = load_hypermap(args.file)
    prop = args.property
    if prop == "regular":
        value = is_regular(h)
    elif prop == "bipartite-regular":
        value = is_bipartite_regular(h)
    elif prop == "orientable":
        value = h.is_orientable()
    elif prop == "boundary":
        value = h.has_boundary()
    else:
        if not args.spec:
            raise ValueError("check in-im needs --spec")
        value = h.is_bipartite() and in_image_of(h, load_spec(args.spec))
    _print_result(prop, value, args)
    return EXIT_OK if value else EXIT_FALSE


def cmd_compare(args) -> int:
    g, h = load_hypermap(args.a), load_hypermap(args.b)
    psi = find_covering(g, h)
    if args.iso:
        value = psi is not None and g.n == h.n
        name = "isomorphic"
    else:
        value = psi is not None
        name = "covering"
    extra = {}
    if value:
        extra["map"] = list(psi.images) if args.format == "json" else " ".join(map(str, psi.images))
    _print_result(name, value, args, extra)
    return EXIT_OK if value else EXIT_FALSE


def cmd_verify(args) -> int:
    checks = verify.run(set(args.criterion) if args.criterion else None)
    if args.format == "json":
        print(json.dumps([{"criterion": c.criterion, "label": c.label, "passed": c.passed, "detail": c.detail}
                          for c in checks]))
    else:
        sys.stdout.write(verify.format_table(checks))
    return EXIT_OK if all(c.passed for c in checks) else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypermaps", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="verb", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text", help="output format (default text)")

    p = sub.add_parser("build", parents=[fmt], help="build a named family member or a presented hypermap")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", help="p2 | pp2k:K | sphere222k:K | klein | torus | random:N:SEED")
    src.add_argument("--presentation", metavar="FILE", help="presentation file ('delta' or 'b' then relators)")
    p.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS, metavar="N",
                   help=f"coset enumeration capacity (default {DEFAULT_MAX_COSETS})")
    p.add_argument("--allow-boundary", action="store_true", help="random family: allow fixed points")
    p.add_argument("-o", "--output", metavar="FILE", help="write to FILE instead of stdout")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("info", parents=[fmt], help="print the invariant report")
    p.add_argument("file")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("apply", parents=[fmt], help="apply a construction and write the result")
    p.add_argument("operation", choices=("dual", "phi", "double-cover", "core", "closure"))
    p.add_argument("file")
    p.add_argument("--sigma", default="01", help="dual: 01 | 02 | 12 | 012 | 021 (default 01)")
    p.add_argument("--spec", help="phi: phi1..phi5 or an epimorphism spec file")
    p.add_argument("--cap", type=int, default=DEFAULT_CORE_CAP, metavar="N",
                   help=f"core: monodromy group size limit (default {DEFAULT_CORE_CAP})")
    p.add_argument("-o", "--output", metavar="FILE", help="write to FILE instead of stdout")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("check", parents=[fmt], help="test a property; exit 1 when false")
    p.add_argument("property", choices=("regular", "bipartite-regular", "orientable", "boundary", "in-im"))
    p.add_argument("file")
    p.add_argument("--spec", help="in-im: phi1..phi5 or an epimorphism spec file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("compare", parents=[fmt], help="look for a covering or isomorphism A -> B")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--covering", action="store_true")
    mode.add_argument("--iso", action="store_true")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify-paper", parents=[fmt], help="run the full verification suite")
    p.add_argument("--criterion", type=int, action="append", choices=sorted(verify.CRITERIA),
                   help="run only this criterion (repeatable)")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except CapacityExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (HypermapError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
