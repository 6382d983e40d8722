"""Command-line entry point.

Exit codes: 0 success, 1 a requested check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence

from . import catalan as cat
from . import coinvariant as co
from . import filtration as fl
from . import verify as vf
from .dunkl import CherednikParam
from .irrep import SCHEMA_VERSION, build_irrep, character_q

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# output

def _emit(args, text: str, data, rows: Optional[List[list]] = None, header: Optional[List[str]] = None):
    if args.format == "json":
        payload = json.dumps({"schema_version": SCHEMA_VERSION, **data}, indent=2, sort_keys=True)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if header:
            w.writerow(header)
        w.writerows(rows or [])
        payload = buf.getvalue().rstrip("\n")
    else:
        payload = text
    if args.out and args.command != "build":
        with open(args.out, "w") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)


def _pair(args) -> tuple:
    m = args.m if args.m is not None else args.pos_m
    n = args.n if args.n is not None else args.pos_n
    if m is None or n is None:
        raise UsageError("give m and n, either positionally or with --m/--n")
    return m, n


def _param(args) -> CherednikParam:
    m, n = _pair(args)
    return CherednikParam(m, n)


# ---------------------------------------------------------------------------
# commands

def cmd_build(args) -> int:
    p = _param(args)
    model = build_irrep(p)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(model.to_json(), fh, sort_keys=True)
    prof = model.weight_profile()
    data = {"m": p.m, "n": p.n, "dimension": model.dim, "mu": model.mu,
            "weights": {str(k): v for k, v in sorted(prof.items())}}
    _emit(args, f"dim {model.dim}, μ = {model.mu}", data,
          [[k, v] for k, v in sorted(prof.items())], ["weight", "multiplicity"])
    return EXIT_OK


def _kinds(text: str) -> List[str]:
    kinds = [k.strip() for k in text.split(",") if k.strip()]
    for k in kinds:
        if k not in fl.KINDS:
            raise UsageError(f"unsupported filtration kind {k!r}; expected one of {', '.join(fl.KINDS)}")
    return kinds


def _table_text(filt: fl.Filtration) -> List[str]:
    model = filt.model
    weights = [model.weight(d) for d in model.degrees]
    lines = [f"F^{filt.kind} on L_{model.m}/{model.n}",
             "level | " + " ".join(f"{w:>3}" for w in weights) + " | total"]
    for i, row in filt.table().items():
        lines.append(f"{i:>5} | " + " ".join(f"{row[w]:>3}" for w in weights) + f" | {sum(row.values())}")
    return lines


def cmd_filtration(args) -> int:
    model = build_irrep(_param(args))
    kinds = _kinds(args.kinds)
    filts = [fl.filtration(model, k) for k in kinds]
    text, rows = [], []
    data = {"m": model.m, "n": model.n, "filtrations": [f.to_json() for f in filts]}
    for f in filts:
        text.extend(_table_text(f))
        rows.extend([f.kind, e["level"], e["weight"], e["dimension"]] for e in f.to_json()["levels"])
    status = EXIT_OK
    if args.compare:
        if len(filts) < 2:
            raise UsageError("--compare needs at least two kinds")
        data["comparisons"] = []
        for other in filts[1:]:
            rep = fl.compare(filts[0], other)
            data["comparisons"].append({k: v for k, v in rep.items() if k != "rows"})
            label = f"F^{filts[0].kind} vs F^{other.kind}"
            if rep["equal"]:
                text.append(f"{label}: EQUAL at all levels")
            else:
                lvl, w = rep["first_discrepancy"]
                text.append(f"{label}: DIFFER, first at level {lvl}, weight {w}")
                status = EXIT_FAIL
    _emit(args, "\n".join(text), data, rows, ["kind", "level", "weight", "dimension"])
    return status


def cmd_character(args) -> int:
    model = build_irrep(_param(args))
    if args.convention and args.convention not in fl.CATALAN_CONVENTIONS:
        raise UsageError(f"unknown convention; expected one of {', '.join(fl.CATALAN_CONVENTIONS)}")
    if args.super:
        conv = args.convention or "kazhdan"
        poly = fl.superpolynomial(model, fl.filtration(model, args.kind), conv)
        label = f"superpolynomial from F^{args.kind} ({conv})"
    elif args.convention:
        poly = fl.catalan_character(model, args.convention)
        label = f"invariant character ({args.convention})"
    elif args.kind == "none":
        poly = character_q(model)
        label = "q-character"
    else:
        comp = args.component
        if comp not in (None, "all"):
            comp = int(comp)
        poly = fl.gr_character(model, fl.filtration(model, args.kind), comp)
        label = f"gr F^{args.kind} character"
    data = {"m": model.m, "n": model.n, "label": label, "terms": poly.to_json()}
    _emit(args, f"{label}: {poly}", data, poly.to_json(), ["q", "t", "a", "coefficient"])
    return EXIT_OK


def cmd_coinv(args) -> int:
    if args.springer is not None:
        n = args.springer
        value = co.springer_min_dim(n)
        _emit(args, f"Springer dimension n={n}: {value}", {"n": n, "springer_dimension": value},
              [[n, value]], ["n", "dimension"])
        return EXIT_OK
    m, n = _pair(args)
    ab = co.ab_report(m, n)
    lat = co.lattice_check(m, n)
    iso = co.isotropy_report(m, n)
    diag = co.isotropy_report(m, n, pairing="diagonal")
    lines = [f"coinvariant algebra n={n}, m={m}"]
    lines.append(f"AB = 0: {ab['AB = 0']}")
    lines.append(f"rank A = {ab['rank A']}, rank B = {ab['rank B']}, (2n-m)n!/2 = {ab['expected']}")
    lines.append(f"Im A = Ker B: {ab['Im A = Ker B']}")
    for e in lat.identities:
        mark = "ok" if e["holds"] else "FAILS"
        lines.append(f"  {e['identity']}: {e['lhs']} vs {e['rhs']} {mark}")
    lines.append(f"distributive: {lat.distributive}")
    lines.append(f"Im A Lagrangian (complementary pairing): {iso['lagrangian']}")
    lines.append(f"Im A isotropic (diagonal pairing): {diag['isotropic']}")
    data = {"m": m, "n": n, "ab": ab, "lattice": lat.to_json(),
            "isotropy": {"complementary": iso, "diagonal": diag}}
    rows = [[e["identity"], e["lhs"], e["rhs"], e["holds"]] for e in lat.identities]
    _emit(args, "\n".join(lines), data, rows, ["identity", "lhs", "rhs", "holds"])
    core = ab["AB = 0"] and ab["Im A = Ker B"] and ab["rank A"] == ab["rank B"] == ab["expected"]
    return EXIT_OK if core else EXIT_FAIL


def cmd_catalan(args) -> int:
    m, n = _pair(args)
    paths = cat.enumerate_paths(m, n)
    poly = cat.qt_catalan(m, n)
    lines = [f"count ({m},{n}) = {len(paths)}", f"C_{m},{n}(q,t) = {poly}"]
    if args.paths:
        for p in paths:
            a, d = cat.statistics(p)
            lines.append(f"  {p.steps}  area {a}  dinv {d}")
    data = {"m": m, "n": n, "count": len(paths), "polynomial": poly.to_json(),
            "paths": [{"steps": p.steps, "area": p.area(), "dinv": p.dinv()} for p in paths]}
    rows = [[p.steps, p.area(), p.dinv()] for p in paths]
    _emit(args, "\n".join(lines), data, rows, ["steps", "area", "dinv"])
    return EXIT_OK


def _run_suite(name: str) -> List[vf.Result]:
    return vf.run(name)


def cmd_verify(args) -> int:
    suites = list(vf.SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in vf.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}")
    if args.jobs > 1 and len(suites) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            batches = list(pool.map(_run_suite, suites))
    else:
        batches = [_run_suite(s) for s in suites]
    results = [r for b in batches for r in b]
    counts = vf.summary(results)
    lines = [r.line(timing=args.timing) for r in results]
    lines.append(f"summary: {counts['PASS']} passed, {counts['FAIL']} failed, {counts['NOTE']} notes")
    data = {"results": [vars(r) | {"seconds": round(r.seconds, 3)} for r in results], "summary": counts}
    rows = [[r.suite, r.name, r.status, r.detail] for r in results]
    _emit(args, "\n".join(lines), data, rows, ["suite", "check", "status", "detail"])
    return EXIT_FAIL if counts["FAIL"] else EXIT_OK


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cherednik", description="Finite-dimensional rational Cherednik modules L_{m/n}.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", help="write the result to this file")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")

    pair = argparse.ArgumentParser(add_help=False)
    pair.add_argument("pos_m", nargs="?", type=int, metavar="m")
    pair.add_argument("pos_n", nargs="?", type=int, metavar="n")
    pair.add_argument("--m", type=int)
    pair.add_argument("--n", type=int)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common, pair], help="build L_{m/n}; --out writes the model as JSON")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("filtration", parents=[common, pair], help="filtration tables and comparisons")
    p.add_argument("--kinds", default="a", help=f"comma-separated, from {', '.join(fl.KINDS)}")
    p.add_argument("--compare", action="store_true", help="compare every kind with the first")
    p.set_defaults(func=cmd_filtration)

    p = sub.add_parser("character", parents=[common, pair], help="graded characters")
    p.add_argument("--kind", default="a", help="filtration kind, or none for the plain q-character")
    p.add_argument("--component", help="hook index i for (n-i, 1^i), or all")
    p.add_argument("--super", action="store_true",
                   help="sum of hook characters weighted by powers of a (kazhdan convention unless given)")
    p.add_argument("--convention", help=f"regrading of (weight, level): {', '.join(fl.CATALAN_CONVENTIONS)}")
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("coinv", parents=[common, pair], help="coinvariant algebra certificates")
    p.add_argument("--springer", type=int, metavar="N", help="only the Springer dimension for n = N")
    p.set_defaults(func=cmd_coinv)

    p = sub.add_parser("catalan", parents=[common, pair], help="rational Dyck paths and C_{m,n}(q,t)")
    p.add_argument("--paths", action="store_true", help="list every path with its statistics")
    p.set_defaults(func=cmd_catalan)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", default="all", help=f"all or one of {', '.join(vf.SUITES)}")
    p.add_argument("--timing", action="store_true", help="show seconds per check")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (fl.FiltrationUndefined, co.ParameterOutOfRange, cat.NotCoprime, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: IoFailure: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
