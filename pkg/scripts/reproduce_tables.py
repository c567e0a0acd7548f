"""Recompute the two example tables of well-rounded ideal lattices.

Each row is rebuilt from scratch (canonical basis, minimal elements,
maximality of the order) and compared against the expected cells; any
discrepancy is flagged and makes the script exit nonzero.

Example:
    python3 scripts/reproduce_tables.py
    python3 scripts/reproduce_tables.py --json tables.json
"""

import argparse
import sys

from wrlat.survey import reference_tables, tables_to_json, tables_to_text


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", default=None, help="also write the rows as JSON to this path")
    args = ap.parse_args()

    rows = reference_tables()
    sys.stdout.write(tables_to_text(rows))
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(tables_to_json(rows))
    return 0 if all(row.match for row in rows) else 3


if __name__ == "__main__":
    sys.exit(main())
