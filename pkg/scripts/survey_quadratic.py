"""Classify every canonical ideal over a radicand window and dump the records.

Example:
    python3 scripts/survey_quadratic.py --d-min -200 --d-max 200 \
        --norm-bound 500 --squarefree --format csv --out survey.csv
"""

import argparse
import sys

from wrlat.survey import (
    SurveyConfig,
    records_to_csv,
    records_to_json,
    records_to_text,
    run_survey,
    summary_line,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d-min", type=int, required=True)
    ap.add_argument("--d-max", type=int, required=True)
    ap.add_argument("--norm-bound", type=int, default=10)
    ap.add_argument("--squarefree", action="store_true", help="restrict to squarefree |D|")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--format", choices=("json", "csv", "text"), default="csv")
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    cfg = SurveyConfig(
        d_min=args.d_min,
        d_max=args.d_max,
        norm_bound=args.norm_bound,
        require_squarefree=args.squarefree,
        output_format=args.format,
        workers=args.workers,
    )
    records, summary = run_survey(cfg)
    if args.format == "json":
        text = records_to_json(records, summary)
    elif args.format == "csv":
        text = records_to_csv(records)
    else:
        text = records_to_text(records, summary)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(summary_line(summary), file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
