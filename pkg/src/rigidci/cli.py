"""Command-line front end.

Exit codes: 0 success (or rigid), 1 not rigid or a failed check, 2 bad
input, 3 out of scope, 4 the Fano condition fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import tables
from .bwb import LineBundleClass, line_cohomology
from .classify import (
    FanoError,
    Rigid,
    classify_quasi_homogeneous_hyperplane,
    classify_rigidity,
    enumerate_verdicts,
    reduce_to_club,
)
from .errors import DomainError, InvalidTypeError, NotSupportedError, ParseError, RigidCIError
from .intersect import CISpec, chi_tangent, clubsuit, restricted_sections
from .lab import experiments
from .notation import parse_degrees, parse_space, space_name
from .rootdata import HomSpace, lie_dim, normalize
from . import theorems

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_SCOPE, EXIT_FANO = 0, 1, 2, 3, 4

ENUM_COLUMNS = ["label", "space", "degrees", "ambient", "chi", "h0", "h1", "rules"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


# ---------------------------------------------------------------- rendering


def _emit(out, fmt: str, obj: dict, rows: list[dict] | None = None, columns: list[str] | None = None) -> None:
    if fmt == "json":
        out.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if rows is not None:
            w.writerow(columns)
            for r in rows:
                w.writerow([r[c] for c in columns])
        else:
            w.writerow(["key", "value"])
            for k, v in obj.items():
                w.writerow([k, v if isinstance(v, (str, int)) or v is None else json.dumps(v, ensure_ascii=False)])
        out.write(buf.getvalue())
    else:
        for k, v in obj.items():
            if isinstance(v, list) and v and isinstance(v[0], dict):
                out.write(f"{k}:\n")
                for item in v:
                    out.write("  - " + ", ".join(f"{a}={b}" for a, b in item.items() if b not in ("", None)) + "\n")
            elif isinstance(v, list):
                out.write(f"{k}: {', '.join(map(str, v)) if v else '-'}\n")
            else:
                out.write(f"{k}: {v}\n")


def _verdict_text(v) -> dict:
    d = v.as_dict()
    d["rule_chain"] = [str(r) for r in v.rule_chain]
    return d


# ---------------------------------------------------------------- argument helpers


def _divisors(args, space: HomSpace) -> list[tuple[int, ...]]:
    if args.linear is not None and args.deg:
        raise ParseError("give either --deg or --linear, not both")
    if args.linear is not None:
        if args.linear < 1:
            raise ParseError("--linear needs r >= 1")
        return [(1,) * space.picard_rank] * args.linear
    if not args.deg:
        raise ParseError("no divisors: use --deg D (repeatable) or --linear r")
    return [parse_degrees(d) for d in args.deg]


def _spec(args) -> CISpec:
    hs = parse_space(args.space)
    return CISpec.of_degrees(hs, _divisors(args, hs))


# ---------------------------------------------------------------- commands


def cmd_describe(args, out) -> int:
    hs = parse_space(args.space)
    rs = hs.root_system
    obj = {
        "space": hs.label,
        "name": space_name(hs),
        "dimension": hs.dimension,
        "picard_rank": hs.picard_rank,
        "dim_g": lie_dim(rs),
        "dim_V": hs.fundamental_dim,
        "anticanonical": list(hs.anticanonical),
    }
    if hs.picard_rank == 1:
        info = normalize(hs)
        obj["index"] = hs.index()
        obj["canonical"] = info.canonical.label
        obj["aliases"] = [a.label for a in info.aliases]
        obj["aut_dim"] = info.aut_dim
        obj["aut_is_g"] = info.aut_is_g
    else:
        obj["canonical"] = hs.label
    obj["club"] = clubsuit(hs)
    _emit(out, args.format, obj)
    return EXIT_OK


def cmd_cohomology(args, out) -> int:
    hs = parse_space(args.space)
    if len(args.deg or []) != 1:
        raise ParseError("cohomology takes exactly one --deg")
    lb = LineBundleClass.of_degrees(hs, parse_degrees(args.deg[0]))
    res = line_cohomology(lb)
    obj = {
        "space": hs.label,
        "degrees": list(lb.degrees),
        "weight": list(lb.weight),
        "kind": res.kind,
        "degree": res.degree,
        "highest_weight": list(res.highest_weight) if res.highest_weight is not None else None,
        "dim": res.dim,
    }
    _emit(out, args.format, obj)
    return EXIT_OK


def cmd_sections(args, out) -> int:
    spec = _spec(args)
    m = LineBundleClass.of_degrees(spec.space, parse_degrees(args.line))
    sc = restricted_sections(spec, m)
    obj = {"space": spec.space.label, "degrees": [list(d) for d in spec.degrees], "line": list(m.degrees),
           "h0": sc.value, "exact": sc.exact}
    _emit(out, args.format, obj)
    return EXIT_OK


def cmd_chi(args, out) -> int:
    spec = _spec(args)
    red = reduce_to_club(spec)
    obj = {"space": spec.space.label, "degrees": [list(d) for d in spec.degrees]}
    if red.space != spec.space:
        obj["computed_on"] = red.space.label
        obj["computed_degrees"] = [list(d) for d in red.degrees]
    obj["chi"] = chi_tangent(red)
    _emit(out, args.format, obj)
    return EXIT_OK


def cmd_classify(args, out) -> int:
    spec = _spec(args)
    if args.qh:
        if spec.space.picard_rank != 1 or spec.degrees != ((1,),):
            raise ParseError("--qh applies to a single hyperplane of a Picard-rank-one space")
        v = classify_quasi_homogeneous_hyperplane(spec.space)
    else:
        v = classify_rigidity(spec)
    _emit(out, args.format, _verdict_text(v) if args.format == "text" else v.as_dict())
    if v.rigid is Rigid.OUT_OF_SCOPE:
        return EXIT_SCOPE
    return EXIT_OK if v.rigid is Rigid.YES else EXIT_NO


def _enum_rows(verdicts) -> list[dict]:
    return [
        {
            "label": v.label,
            "space": v.space,
            "degrees": " ".join(":".join(map(str, d)) for d in v.degrees),
            "ambient": v.ambient,
            "chi": v.chi,
            "h0": v.h0,
            "h1": v.h1,
            "rules": "; ".join(r.id for r in v.rule_chain),
        }
        for v in verdicts
    ]


def cmd_enumerate(args, out) -> int:
    if not 1 <= args.max_rank <= 30 or args.max_r < 1:
        raise ParseError("need 1 <= --max-rank <= 30 and --max-r >= 1")
    vs = enumerate_verdicts(args.max_rank, args.max_r)
    if args.format == "json":
        obj = {"format_version": 1, "max_rank": args.max_rank, "max_r": args.max_r, "count": len(vs),
               "verdicts": [v.as_dict() for v in vs]}
        _emit(out, "json", obj)
    elif args.format == "csv":
        _emit(out, "csv", {}, _enum_rows(vs), ENUM_COLUMNS)
    else:
        out.write(f"{len(vs)} locally rigid complete intersections (rank <= {args.max_rank}, r <= {args.max_r})\n")
        for r in _enum_rows(vs):
            out.write(f"  {r['label']:<18} from {r['space']} [{r['degrees']}]  h0={r['h0']}  chi={r['chi']}  ({r['rules']})\n")
    return EXIT_OK


def _lab_results(names) -> list[theorems.SuiteResult]:
    out = []
    for n in names:
        rep = experiments.run(n)
        det = [f"{c.label}: {c.found} (expected {c.expected})" for c in rep.checks if not c.passed]
        out.append(theorems.SuiteResult(f"lab:{n}", rep.passed, f"{sum(c.passed for c in rep.checks)}/{len(rep.checks)} checks", det))
    return out


def cmd_verify(args, out) -> int:
    suite = args.suite
    results: list[theorems.SuiteResult] = []
    if suite in ("table1", "all"):
        results.append(theorems.check_table1())
    if suite in ("theorems", "all"):
        results += theorems.check_theorems(args.max_rank, args.max_r)
    if suite in ("lab", "all"):
        results += _lab_results(experiments.EXPERIMENTS)
    ok = all(r.passed for r in results)
    if args.format == "json":
        _emit(out, "json", {"passed": ok, "suites": [r.as_dict() for r in results]})
    elif args.format == "csv":
        _emit(out, "csv", {}, [{"suite": r.name, "passed": r.passed, "summary": r.summary} for r in results],
              ["suite", "passed", "summary"])
    else:
        for r in results:
            out.write(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.summary}\n")
            for d in r.details:
                out.write(f"    {d}\n")
    return EXIT_OK if ok else EXIT_NO


def cmd_lab(args, out) -> int:
    rep = experiments.run(args.experiment)
    d = rep.as_dict()
    if args.format == "text":
        out.write(f"{d['experiment']}: {'PASS' if d['passed'] else 'FAIL'}\n")
        for c in d["checks"]:
            out.write(f"  {'ok ' if c['passed'] else 'BAD'} {c['label']}: {c['found']} (expected {c['expected']})\n")
    elif args.format == "csv":
        _emit(out, "csv", {}, d["checks"], ["label", "found", "expected", "passed"])
    else:
        _emit(out, "json", d)
    return EXIT_OK if rep.passed else EXIT_NO


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--data", help="JSON tables replacing the embedded ones")

    p = _Parser(prog="rigidci", description="Local rigidity of complete intersections in rational homogeneous spaces.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def divisor_args(sp):
        sp.add_argument("space", help="e.g. D5/P5, A4/P2, A2/P1,2, Gr(2,5), S5, Q7, P(T_P2)")
        sp.add_argument("--deg", action="append", help="divisor degrees on the marked nodes, e.g. 2 or 1:1 (repeatable)")
        sp.add_argument("--linear", type=int, metavar="R", help="R general hyperplane sections")

    sp = sub.add_parser("describe", parents=[common], help="invariants of G/P")
    sp.add_argument("space")
    sp.set_defaults(func=cmd_describe)

    sp = sub.add_parser("cohomology", parents=[common], help="Borel-Weil-Bott for one line bundle")
    sp.add_argument("space")
    sp.add_argument("--deg", action="append", required=True)
    sp.set_defaults(func=cmd_cohomology)

    sp = sub.add_parser("sections", parents=[common], help="h^0(X, M|_X) via the Koszul complex")
    divisor_args(sp)
    sp.add_argument("--line", required=True, help="degrees of M")
    sp.set_defaults(func=cmd_sections)

    sp = sub.add_parser("chi", parents=[common], help="h^0(T_X) - h^1(T_X)")
    divisor_args(sp)
    sp.set_defaults(func=cmd_chi)

    sp = sub.add_parser("classify", parents=[common], help="decide local rigidity")
    divisor_args(sp)
    sp.add_argument("--qh", action="store_true", help="also decide quasi-homogeneity of a hyperplane section")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("enumerate", parents=[common], help="all rigid complete intersections within bounds")
    sp.add_argument("--max-rank", type=int, default=8)
    sp.add_argument("--max-r", type=int, default=4)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify", parents=[common], help="check the embedded data and the classification lists")
    sp.add_argument("suite", choices=("table1", "theorems", "lab", "all"))
    sp.add_argument("--max-rank", type=int, default=12)
    sp.add_argument("--max-r", type=int, default=5)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("lab", parents=[common], help="run an algebra experiment")
    sp.add_argument("experiment", help=", ".join(experiments.EXPERIMENTS))
    sp.set_defaults(func=cmd_lab)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.data:
            tables.set_path(args.data)
        return args.func(args, out)
    except FanoError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FANO
    except NotSupportedError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SCOPE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (ParseError, InvalidTypeError, DomainError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except RigidCIError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NO
    finally:
        if args.data:
            tables.set_path(None)


if __name__ == "__main__":
    raise SystemExit(main())
