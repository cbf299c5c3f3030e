#!/usr/bin/env python3
"""Run the bundled near-circular orbit scenario and print the audit report.

Outputs (trajectory.csv, drift.csv, report.json) land in --out.
"""

import argparse

from invarlab.cli import main as cli_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="out/kepler", help="output directory")
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()
    return cli_main(["run", "kepler.json", "--out", args.out, "--seed", str(args.seed)])


if __name__ == "__main__":
    raise SystemExit(main())
