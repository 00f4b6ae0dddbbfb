#!/usr/bin/env python3
"""Verified invariant reports for the three worked golden sequences.

Each report is computed twice (closed form and Buchberger oracle) and every
field must agree; a mismatch exits nonzero.
"""

import sys

from mcurve.cli import main

GOLDENS = [
    "10,13,16,19,22",   # arithmetic, Gorenstein, reg 6
    "4,5,6,7,8",        # arithmetic, type 3, reg 2
    "7,30,39,48,57,66", # generalized h=3, d=9, non-CM, reg 14
]

if __name__ == "__main__":
    rc = 0
    for seq in GOLDENS:
        print(f"== {seq}")
        rc |= main(["invariants", "-m", seq, "--verify"])
        print()
    sys.exit(rc)
