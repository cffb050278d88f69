"""Run every verification suite and print a timed report.

Usage: python3 scripts/verify_all.py [--cap 5] [--literal]
"""

import argparse
import sys
import time

from permfaces.verify import SUITES, run_suite


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--cap", type=int, default=5)
    p.add_argument("--literal", action="store_true", help="include the statements known to fail as printed")
    args = p.parse_args()
    failed = 0
    for suite in SUITES:
        cap = min(args.cap, 4) if suite == "freeness" else args.cap
        start = time.perf_counter()
        reports = run_suite(suite, cap, literal=args.literal)
        elapsed = time.perf_counter() - start
        print(f"== {suite} (cap {cap}, {elapsed:.1f}s)")
        for r in reports:
            print(r.line())
        failed += sum(not r.ok for r in reports)
    print(f"{failed} report(s) failed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
