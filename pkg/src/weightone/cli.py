"""Command line interface.

    weightone classgroup --q 23 [--json|--csv]
    weightone theta --q 23 --chi 1 --limit 50 [--csv]
    weightone verify --suite identities|duality|theta|meanvalue|rankin|scheme [--grid 23,31]
    weightone rankin --q 23 --x 10000 [--csv]
    weightone bound --q 23 [--k-prop1 F --k-prop2a F] [--json]
    weightone fields --q 23 [--json]

Exit codes: 0 success, 1 verification failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys

from .bounds import K_PROP1_DEFAULT, K_PROP2A_DEFAULT, dimension_bound, field_report
from .characters import characters
from .class_group import class_group, torsion_count
from .errors import InvalidInput
from .rankin import b_coeffs, petersson_estimate
from .theta import theta_lattice
from .verify import SUITE_NAMES, run_suite


def fmt(x: float) -> str:
    return f"{x:.12g}"


def _round_floats(obj):
    if isinstance(obj, float):
        return float(fmt(obj)) if math.isfinite(obj) else obj
    if isinstance(obj, dict):
        return {str(k): _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def _dump(obj, out) -> None:
    json.dump(_round_floats(obj), out, indent=2)
    out.write("\n")


def _grid(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad grid {text!r}") from None


def cmd_classgroup(args, out) -> int:
    G = class_group(args.q)
    if args.csv:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["index", "a", "b", "c", "order", "dlog"])
        for i, f in enumerate(G.reduced_forms):
            w.writerow([i, f.a, f.b, f.c, G.order(i), " ".join(map(str, G.dlog[i]))])
        return 0
    doc = G.to_json()
    doc["torsion"] = {str(ell): torsion_count(G, ell) for ell in (2, 3)}
    doc["dlog"] = [list(v) for v in G.dlog]
    doc["characters"] = [list(chi.exponents) for chi in characters(G)]
    _dump(doc, out)
    return 0


def _character(q: int, index: int):
    chars = characters(class_group(q))
    if not 0 <= index < len(chars):
        raise InvalidInput(f"character index {index} outside 0..{len(chars) - 1}")
    return chars[index]


def cmd_theta(args, out) -> int:
    chi = _character(args.q, args.chi)
    f = theta_lattice(chi, args.limit)
    rows = [(n, str(a), float(f.floats[n])) for n, a in enumerate(f.coeffs, start=1)]
    if args.csv:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "a_exact", "a_float"])
        for n, exact, val in rows:
            w.writerow([n, exact, fmt(val)])
        return 0
    _dump(
        {
            "q": args.q,
            "chi": args.chi,
            "exponents": list(chi.exponents),
            "zeta_order": chi.m,
            "N": args.limit,
            "coefficients": [{"n": n, "exact": e, "float": v} for n, e, v in rows],
        },
        out,
    )
    return 0


def cmd_rankin(args, out) -> int:
    chi = _character(args.q, args.chi)
    f = theta_lattice(chi, args.x)
    if args.csv:
        series = b_coeffs(f, args.x)
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "b"])
        for n in range(1, args.x + 1):
            v = series.b[n]
            w.writerow([n, int(v) if series.exact else fmt(float(v))])
        return 0
    est = petersson_estimate(f, args.x)
    doc = {"q": args.q, "chi": args.chi, **est.to_json(), "stable": est.stability_gap <= args.tolerance}
    _dump(doc, out)
    return 0


def cmd_verify(args, out) -> int:
    names = SUITE_NAMES if args.suite == "all" else (args.suite,)
    ok = True
    report = {}
    for name in names:
        checks = run_suite(name, args.grid)
        report[name] = [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks]
        for c in checks:
            ok &= c.passed
            if not args.json:
                out.write(f"{name}: {c.line()}\n")
                if args.verbose and c.detail:
                    out.write(f"    {json.dumps(_round_floats(c.detail))}\n")
    if args.json:
        _dump(report, out)
    return 0 if ok else 1


def cmd_bound(args, out) -> int:
    b = dimension_bound(args.q, args.k_prop1, args.k_prop2a)
    if args.json:
        _dump(b.to_json(), out)
        return 0
    for line in b.trace:
        out.write(line + "\n")
    return 0


def cmd_fields(args, out) -> int:
    r = field_report(args.q, args.k_prop1, args.k_prop2a)
    if args.json:
        _dump(r.to_json(), out)
        return 0
    for k, v in r.to_json().items():
        if v is None:
            continue
        out.write(f"{k}: {fmt(v) if isinstance(v, float) else v}\n")
    if r.cubic_count_discrepancy:
        out.write("note: cubic_count_three_halves = (3/2) h3 differs from the standard h3/2\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weightone", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classgroup", help="reduced forms, class number, structure, torsion")
    p.add_argument("--q", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true", help="JSON output (default)")
    g.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_classgroup)

    p = sub.add_parser("theta", help="coefficient table of a dihedral form")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--chi", type=int, default=1, help="index into the character list (0 is trivial)")
    p.add_argument("--limit", type=int, default=100)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--suite", choices=SUITE_NAMES + ("all",), required=True)
    p.add_argument("--grid", type=_grid, default=None, help="comma separated list of q")
    p.add_argument("--json", action="store_true")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rankin", help="Rankin-Selberg coefficients and Petersson norm estimate")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--x", type=int, default=10_000)
    p.add_argument("--chi", type=int, default=1)
    p.add_argument("--tolerance", type=float, default=0.1, help="allowed relative gap between X and X/2")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_rankin)

    for name, func, help_ in (
        ("bound", cmd_bound, "dimension bound report"),
        ("fields", cmd_fields, "class-group torsion and field counts"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--k-prop1", type=float, default=K_PROP1_DEFAULT)
        p.add_argument("--k-prop2a", type=float, default=K_PROP2A_DEFAULT)
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("limit", "x"):
        if getattr(args, name, 1) < 1:
            parser.exit(2, f"weightone: --{name} must be positive\n")
    for name in ("k_prop1", "k_prop2a"):
        if getattr(args, name, 1.0) <= 0:
            parser.exit(2, f"weightone: --{name.replace('_', '-')} must be positive\n")
    try:
        return args.func(args, sys.stdout)
    except InvalidInput as exc:
        print(f"weightone: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
