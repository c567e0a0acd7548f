"""Verify the cyclotomic minimal-vector profile for every k in a range.

For each k the full ring of integers of the k-th cyclotomic field is checked:
minimum phi(k)/2, minimal vectors exactly the embedded roots of unity, and
well-roundedness.  Values of k whose degree exceeds the enumeration guard are
skipped with a note.

Example:
    python3 scripts/cyclotomic_sweep.py --k-max 36
"""

import argparse
import sys
from fractions import Fraction

from wrlat.arith import euler_phi
from wrlat.cyclo import cyclo_field, verify_cyclotomic_theorem
from wrlat.svp import MAX_ENUM_DIM


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k-min", type=int, default=3)
    ap.add_argument("--k-max", type=int, default=30)
    args = ap.parse_args()
    if args.k_min < 3 or args.k_max < args.k_min:
        print("error: need 3 <= k-min <= k-max", file=sys.stderr)
        return 2

    failures = 0
    for k in range(args.k_min, args.k_max + 1):
        phi = euler_phi(k)
        if phi > MAX_ENUM_DIM:
            print(f"k={k:3d} phi={phi:3d}  skipped (degree above {MAX_ENUM_DIM})")
            continue
        rep = verify_cyclotomic_theorem(cyclo_field(k))
        verdict = "ok" if rep.passed else "FAIL"
        print(
            f"k={k:3d} phi={phi:3d}  min={Fraction(rep.minimum)!s:>5}  "
            f"minimal={rep.n_minimal:3d} expected={rep.expected_count:3d}  {verdict}"
        )
        failures += not rep.passed
    if failures:
        print(f"{failures} value(s) of k failed", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
