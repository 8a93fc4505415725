"""Render spin-entropy sweep CSVs into publication-style figures.

Input is the sweep CSV produced by the diracspin CLI (header
`x,entropy_psi1,entropy_psi2,ln2`).  This package does no physics: it
plots the numbers it is given and refuses values outside [0, ln2 + 1e-9],
which would indicate a units or format mismatch upstream.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

EXPECTED_HEADER = ["x", "entropy_psi1", "entropy_psi2", "ln2"]
ENTROPY_CAP = math.log(2.0) + 1e-9
Y_LIMITS = (0.0, 0.75)


@dataclass(frozen=True)
class FigureSpec:
    input_csv: str
    output_image: str
    x_label: str = "x"
    title: str = ""


@dataclass(frozen=True)
class SweepData:
    x: list[float]
    s1: list[float]
    s2: list[float]
    ln2: list[float]


def read_sweep_csv(path: str) -> SweepData:
    """Parse and validate a sweep CSV; raises ValueError on any mismatch."""
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            rows = list(csv.reader(fh))
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc
    if not rows or rows[0] != EXPECTED_HEADER:
        raise ValueError(
            f"{path}: expected header {','.join(EXPECTED_HEADER)!r}, got {rows[0] if rows else 'empty file'!r}"
        )
    if len(rows) < 2:
        raise ValueError(f"{path}: no data rows")
    cols: list[list[float]] = [[], [], [], []]
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != 4:
            raise ValueError(f"{path}:{lineno}: expected 4 columns, got {len(row)}")
        try:
            values = [float(v) for v in row]
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: non-numeric value ({exc})") from exc
        for c, v in zip(cols, values):
            c.append(v)
    data = SweepData(*cols)
    worst = max(max(data.s1), max(data.s2))
    lowest = min(min(data.s1), min(data.s2))
    if worst > ENTROPY_CAP or lowest < 0.0:
        raise ValueError(
            f"{path}: entropy values outside [0, ln2 + 1e-9] "
            f"(min {lowest}, max {worst}); wrong units or wrong file?"
        )
    return data


def build_figure(data: SweepData, spec: FigureSpec):
    """Assemble the figure: dashed and dot-dashed entropy curves plus the
    solid maximal-entropy reference line."""
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(data.x, data.s1, linestyle="--", color="tab:blue", label="state 1 entropy")
    ax.plot(data.x, data.s2, linestyle="-.", color="tab:red", label="state 2 entropy")
    ax.plot(data.x, data.ln2, linestyle="-", color="saddlebrown", label="ln 2")
    ax.set_xlabel(spec.x_label)
    ax.set_ylabel("entropy [nats]")
    ax.set_ylim(*Y_LIMITS)
    ax.set_xlim(min(data.x), max(data.x))
    if spec.title:
        ax.set_title(spec.title)
    ax.legend(loc="best")
    fig.tight_layout()
    return fig


def render(spec: FigureSpec) -> None:
    data = read_sweep_csv(spec.input_csv)
    fig = build_figure(data, spec)
    try:
        fig.savefig(spec.output_image)
    finally:
        plt.close(fig)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="render",
        description="Render a spin-entropy sweep CSV into a figure",
    )
    ap.add_argument("input_csv")
    ap.add_argument("output_image")
    ap.add_argument("--xlabel", default="x")
    ap.add_argument("--title", default="")
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    spec = FigureSpec(args.input_csv, args.output_image, args.xlabel, args.title)
    try:
        render(spec)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {Path(spec.output_image).resolve()}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
