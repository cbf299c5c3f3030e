#!/usr/bin/env python3
"""Sweep the echo-speed measurement over boost magnitudes.

Prints the measured quotient in a frame where the apparatus drifts at the
given speed, for the two bounded weight profiles and for plain vector
addition (longitudinal and transverse drift). The bounded columns stay at
c for every drift; the plain-addition columns do not.
"""

import argparse
import csv
import sys

from invarlab import (
    BoundedVelocity,
    Vec3,
    classical_light_quotient,
    light_quotient,
    lorentz_g,
    rational_g,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--baseline", type=float, default=1.0)
    parser.add_argument("--c", type=float, default=1.0, help="limiting speed")
    parser.add_argument("--csv", default=None, help="also write rows to this file")
    args = parser.parse_args()

    c = args.c
    profiles = {"lorentz": lorentz_g(c), "rational": rational_g(c)}
    header = ["drift/c", "lorentz", "rational", "plain long.", "plain transv."]
    rows = []
    for k in range(0, 19):
        frac = 0.05 * k
        drift = frac * c
        row = [f"{frac:.2f}"]
        for gfun in profiles.values():
            boost = BoundedVelocity(Vec3(drift, 0.0, 0.0), gfun)
            row.append(f"{light_quotient(boost, args.baseline):.12f}")
        row.append(f"{classical_light_quotient(Vec3(drift, 0, 0), args.baseline, c):.12f}")
        row.append(f"{classical_light_quotient(Vec3(0, drift, 0), args.baseline, c):.12f}")
        rows.append(row)

    widths = [max(len(h), 16) for h in header]
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
    for row in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)))

    if args.csv:
        with open(args.csv, "w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(header)
            writer.writerows(rows)
        print(f"wrote {args.csv}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
