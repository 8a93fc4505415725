#!/usr/bin/env python3
"""Regenerate the two entropy-sweep datasets (rapidity and polar angle) at
the reference parameters p=10, m=1, theta=0.54 pi, and optionally render
them if the figplots package is installed.

Usage: python scripts/reproduce_figures.py [outdir]
"""

import subprocess
import sys
from pathlib import Path


def run(cmd):
    print("+", " ".join(cmd))
    subprocess.run(cmd, check=True)


def main():
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("figures")
    outdir.mkdir(parents=True, exist_ok=True)
    fig1 = outdir / "entropy_vs_rapidity.csv"
    fig2 = outdir / "entropy_vs_polar_angle.csv"
    run(
        [
            "diracspin", "sweep", "--axis", "rapidity", "--p", "10", "--m", "1",
            "--theta", "0.54pi", "--phi", "0", "--lo", "0", "--hi", "12",
            "--steps", "200", "--out", str(fig1),
        ]
    )
    run(
        [
            "diracspin", "sweep", "--axis", "polar", "--xi", "10", "--p", "10",
            "--m", "1", "--lo", "0", "--hi", "pi", "--steps", "200",
            "--out", str(fig2),
        ]
    )
    try:
        run(["render", str(fig1), str(fig1.with_suffix(".png")), "--xlabel", "rapidity"])
        run(["render", str(fig2), str(fig2.with_suffix(".png")), "--xlabel", "polar angle [rad]"])
    except (FileNotFoundError, subprocess.CalledProcessError):
        print("figplots renderer not installed; CSVs written, skipping images")


if __name__ == "__main__":
    main()
