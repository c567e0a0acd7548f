"""Command line interface.

Subcommands: classify, survey, tables, family, cyclo.  Exit codes: 0 success
(for classify: well-rounded), 1 classify on a valid but not well-rounded
ideal, 2 invalid input, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .arith import QuadOrder, euler_phi
from .cyclo import CycloTheoremReport, cyclo_field, verify_cyclotomic_theorem
from .errors import InvariantViolation
from .families import family_stream
from .ideals import IdealTriple, triple_violation
from .survey import (
    SurveyConfig,
    canonical_json,
    classify_triple,
    record_dict,
    record_line,
    records_to_csv,
    records_to_json,
    records_to_text,
    reference_tables,
    run_survey,
    summary_line,
    tables_to_csv,
    tables_to_json,
    tables_to_text,
    _bool_str,
    _yn,
)
from .svp import MAX_ENUM_DIM

EXIT_OK = 0
EXIT_NOT_WR = 1
EXIT_BAD_INPUT = 2
EXIT_INVARIANT = 3


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_common(sub):
    sub.add_argument("--format", choices=("json", "csv", "text"), default="text")
    sub.add_argument("--out", default=None, help="write output to this path instead of stdout")


def _cmd_classify(args) -> int:
    try:
        order = QuadOrder(args.D)
        triple = IdealTriple(args.a, args.b, args.g, order)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    reason = triple_violation(triple)
    if reason:
        print(f"error: invalid ideal triple: {reason}", file=sys.stderr)
        return EXIT_BAD_INPUT
    rec = classify_triple(triple)
    if args.format == "json":
        _emit(canonical_json(record_dict(rec)), args.out)
    elif args.format == "csv":
        _emit(records_to_csv([rec]), args.out)
    else:
        _emit(record_line(rec) + "\n", args.out)
    return EXIT_OK if rec.wr else EXIT_NOT_WR


_CONFIG_KEYS = ("d_min", "d_max", "norm_bound", "require_squarefree", "output_format", "workers")


def _as_bool(v) -> bool:
    if isinstance(v, bool):
        return v
    if isinstance(v, str) and v.lower() in ("true", "yes", "1", "on"):
        return True
    if isinstance(v, str) and v.lower() in ("false", "no", "0", "off"):
        return False
    raise ValueError(f"cannot interpret {v!r} as a boolean")


def load_config(path: str) -> dict:
    """Survey settings from a JSON object or flat key=value lines."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        data = json.loads(text)
        if not isinstance(data, dict):
            raise ValueError("config JSON must be an object")
    except json.JSONDecodeError:
        data = {}
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, val = line.partition("=")
            if not sep:
                raise ValueError(f"bad config line: {line!r}")
            data[key.strip()] = val.strip()
    out = {}
    for key, val in data.items():
        if key not in _CONFIG_KEYS:
            raise ValueError(f"unknown config key {key!r}")
        if key == "require_squarefree":
            out[key] = _as_bool(val)
        elif key == "output_format":
            out[key] = str(val)
        else:
            out[key] = int(val)
    return out


def _cmd_survey(args) -> int:
    settings = {}
    if args.config:
        settings = load_config(args.config)
    if args.d_min is not None:
        settings["d_min"] = args.d_min
    if args.d_max is not None:
        settings["d_max"] = args.d_max
    if args.norm_bound is not None:
        settings["norm_bound"] = args.norm_bound
    if args.squarefree:
        settings["require_squarefree"] = True
    if args.workers is not None:
        settings["workers"] = args.workers
    if args.format_given:
        settings["output_format"] = args.format
    if "d_min" not in settings or "d_max" not in settings:
        print("error: survey needs --d-min and --d-max (or a config file)", file=sys.stderr)
        return EXIT_BAD_INPUT
    cfg = SurveyConfig(**settings)
    cfg.validate()
    records, summary = run_survey(cfg)
    if cfg.output_format == "json":
        _emit(records_to_json(records, summary), args.out)
    elif cfg.output_format == "csv":
        _emit(records_to_csv(records), args.out)
        print(summary_line(summary), file=sys.stderr)
    else:
        _emit(records_to_text(records, summary), args.out)
    return EXIT_OK


def _cmd_tables(args) -> int:
    rows = reference_tables()
    if args.format == "json":
        _emit(tables_to_json(rows), args.out)
    elif args.format == "csv":
        _emit(tables_to_csv(rows), args.out)
    else:
        _emit(tables_to_text(rows), args.out)
    if not all(row.match for row in rows):
        print("error: reference table row failed to reproduce", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


def _family_line(inst) -> str:
    trip = inst.triple
    c1, c2, c3 = inst.closed_form.coeffs()
    return (
        f"t={inst.t} D={inst.D} (a,b,g)=({trip.a},{trip.b},{trip.g}) "
        f"form=({c1},{c2},{c3}) p_prime={_yn(inst.p_prime)} squarefree={_yn(inst.squarefree)}"
    )


def _family_dict(inst) -> dict:
    trip = inst.triple
    c1, c2, c3 = inst.closed_form.coeffs()
    return {
        "t": inst.t, "D": inst.D, "a": trip.a, "b": trip.b, "g": trip.g,
        "c1": int(c1), "c2": int(c2), "c3": int(c3),
        "p_prime": inst.p_prime, "squarefree": inst.squarefree,
    }


def _cmd_family(args) -> int:
    instances = family_stream(args.kind, args.t_max, require_squarefree=args.squarefree)
    if args.format == "json":
        _emit(canonical_json({"instances": [_family_dict(i) for i in instances]}), args.out)
    elif args.format == "csv":
        cols = ("t", "D", "a", "b", "g", "c1", "c2", "c3", "p_prime", "squarefree")
        lines = [",".join(cols)]
        for inst in instances:
            d = _family_dict(inst)
            lines.append(",".join(
                _bool_str(d[c]) if isinstance(d[c], bool) else str(d[c]) for c in cols
            ))
        _emit("\n".join(lines) + "\n", args.out)
    else:
        body = "\n".join(_family_line(i) for i in instances)
        _emit((body + "\n") if body else "", args.out)
    return EXIT_OK


def _cyclo_dict(rep: CycloTheoremReport) -> dict:
    mn = Fraction(rep.minimum)
    ex = Fraction(rep.expected)
    return {
        "k": rep.k, "phi": rep.phi,
        "minimum_num": mn.numerator, "minimum_den": mn.denominator,
        "expected_num": ex.numerator, "expected_den": ex.denominator,
        "n_minimal": rep.n_minimal, "expected_count": rep.expected_count,
        "wr": rep.wr, "pass": rep.passed,
    }


def _cmd_cyclo(args) -> int:
    if args.k < 3:
        print("error: k must be at least 3", file=sys.stderr)
        return EXIT_BAD_INPUT
    if euler_phi(args.k) > MAX_ENUM_DIM:
        print(f"error: phi(k) exceeds the enumeration guard ({MAX_ENUM_DIM})", file=sys.stderr)
        return EXIT_BAD_INPUT
    rep = verify_cyclotomic_theorem(cyclo_field(args.k))
    if args.format == "json":
        _emit(canonical_json(_cyclo_dict(rep)), args.out)
    elif args.format == "csv":
        d = _cyclo_dict(rep)
        cols = tuple(d)
        rows = ",".join(_bool_str(d[c]) if isinstance(d[c], bool) else str(d[c]) for c in cols)
        _emit(",".join(cols) + "\n" + rows + "\n", args.out)
    else:
        verdict = "PASS" if rep.passed else "FAIL"
        _emit(
            f"k={rep.k} phi={rep.phi}: minimum={Fraction(rep.minimum)} "
            f"expected={Fraction(rep.expected)} minimal_vectors={rep.n_minimal} "
            f"expected_count={rep.expected_count} wr={_yn(rep.wr)}\n{verdict}\n",
            args.out,
        )
    return EXIT_OK if rep.passed else EXIT_INVARIANT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wrlat",
        description="exact classification of well-rounded ideal lattices",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one ideal triple (D a b g)")
    p.add_argument("D", type=int)
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("g", type=int)
    _add_common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("survey", help="classify every ideal over a radicand range")
    p.add_argument("--d-min", type=int, default=None)
    p.add_argument("--d-max", type=int, default=None)
    p.add_argument("--norm-bound", type=int, default=None)
    p.add_argument("--squarefree", action="store_true", help="restrict to squarefree |D|")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--config", default=None, help="JSON or key=value settings file")
    _add_common(p)
    p.set_defaults(func=_cmd_survey)

    p = sub.add_parser("tables", help="reproduce the two reference example tables")
    _add_common(p)
    p.set_defaults(func=_cmd_tables)

    p = sub.add_parser("family", help="list instances of a well-rounded family")
    p.add_argument("kind", choices=("imaginary", "real"))
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--squarefree", action="store_true", help="keep only squarefree |D|")
    _add_common(p)
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("cyclo", help="verify the cyclotomic minimal-vector profile for one k")
    p.add_argument("k", type=int)
    _add_common(p)
    p.set_defaults(func=_cmd_cyclo)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    # survey distinguishes an explicit --format from the default
    args.format_given = "--format" in (argv if argv is not None else sys.argv[1:])
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
