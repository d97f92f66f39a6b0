#!/usr/bin/env python3
"""Run the full verification battery over a battery of canonical cases and
print one text report per case.  Exits nonzero if any check fails."""

import sys

from orefields.cli import Config, emit, run_suite

CASES = [
    # (char, alpha literal)
    (0, "rat:2/3"),
    (0, "quad:(0+1*sqrt(2))/1"),
    (0, "param"),
    (2, "param"),
    (3, "param"),
    (5, "param"),
    (5, "rat:2"),
]


def main() -> int:
    failures = 0
    for char, alpha in CASES:
        cfg = Config(char=char, alpha=alpha, fmt="text")
        report = run_suite("all", cfg)
        print(emit(report, "text"))
        print()
        failures += len(report.failures)
    print(f"total failures: {failures}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
