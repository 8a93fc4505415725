"""Command-line front end: verification suite, entropy sweeps as CSV, and
operator/transport inspection.

Exit codes: 0 success, 1 verification failure, 2 usage or configuration
error.  CSV numbers use the shortest round-trip decimal representation of
the underlying doubles, so identical invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from math import pi

import numpy as np

from .density import LN2, sweep
from .kinematics import SphericalMomentum, make_momentum
from .spin_ops import covariant_spin, dirac_hamiltonian, fw_mean_spin
from .transport import ab_params, transport_fw, wigner_block
from .kinematics import boost_z
from .verification import run_verify

USAGE_ERROR = 2


@dataclass(frozen=True)
class SweepConfig:
    """Validated parameter set for one entropy sweep."""

    axis: str
    mass: float
    p_magnitude: float
    theta: float
    phi: float
    xi: float
    lo: float
    hi: float
    steps: int
    output_path: str

    def __post_init__(self):
        if self.axis not in ("rapidity", "polar"):
            raise ValueError(f"unknown axis {self.axis!r}")
        if self.steps < 2:
            raise ValueError("steps must be >= 2")
        if not self.lo < self.hi:
            raise ValueError("need lo < hi")
        if self.mass <= 0:
            raise ValueError("mass must be positive")


def parse_angle(text: str) -> float:
    """Parse a float with an optional literal 'pi' suffix (e.g. '0.54pi')."""
    s = text.strip().lower()
    if s.endswith("pi"):
        head = s[:-2].strip()
        return pi * (float(head) if head else 1.0)
    return float(s)


def run_sweep(config: SweepConfig) -> None:
    """Write the sweep CSV: header x,entropy_psi1,entropy_psi2,ln2."""
    rows = sweep(
        mass=config.mass,
        p_magnitude=config.p_magnitude,
        phi=config.phi,
        axis=config.axis,
        lo=config.lo,
        hi=config.hi,
        steps=config.steps,
        theta=config.theta,
        xi=config.xi,
    )
    lines = ["x,entropy_psi1,entropy_psi2,ln2"]
    for x, s1, s2 in rows:
        lines.append(f"{float(x)!r},{float(s1)!r},{float(s2)!r},{LN2!r}")
    with open(config.output_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def _complex_matrix_payload(M: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(M)]


def _format_matrix(M: np.ndarray) -> str:
    out = []
    for row in np.asarray(M):
        out.append("  ".join(f"{z.real:+.17g}{z.imag:+.17g}j" for z in row))
    return "\n".join(out)


def run_inspect(args) -> int:
    sph = SphericalMomentum(args.p, args.theta, args.phi)
    payload: dict[str, object] = {"kind": args.kind}
    if args.kind in ("spin_r", "spin_fw", "hamiltonian"):
        p = make_momentum(args.m, sph)
        if args.kind == "spin_r":
            trip = covariant_spin(p)
            mats = {"x": trip.x, "y": trip.y, "z": trip.z}
        elif args.kind == "spin_fw":
            trip = fw_mean_spin(p.p3, args.m)
            mats = {"x": trip.x, "y": trip.y, "z": trip.z}
        else:
            mats = {"hamiltonian": dirac_hamiltonian(p.p3, args.m)}
        if args.json:
            payload.update({k: _complex_matrix_payload(v) for k, v in mats.items()})
            print(json.dumps(payload))
        else:
            for k, v in mats.items():
                print(f"{args.kind} [{k}]:")
                print(_format_matrix(v))
    elif args.kind == "transport":
        p = make_momentum(args.m, sph)
        T = transport_fw(boost_z(args.xi), p)
        if args.json:
            payload["matrix"] = _complex_matrix_payload(T.entries)
            print(json.dumps(payload))
        else:
            print(_format_matrix(T.entries))
    elif args.kind == "wigner_block":
        p = make_momentum(args.m, sph)
        blk = wigner_block(transport_fw(boost_z(args.xi), p))
        if args.json:
            payload.update(
                {
                    "A": [blk.A.real, blk.A.imag],
                    "B": [blk.B.real, blk.B.imag],
                    "norm": abs(blk.A) ** 2 + abs(blk.B) ** 2,
                }
            )
            print(json.dumps(payload))
        else:
            print(f"A = {blk.A!r}")
            print(f"B = {blk.B!r}")
            print(f"|A|^2 + |B|^2 = {abs(blk.A) ** 2 + abs(blk.B) ** 2!r}")
    elif args.kind == "ab_params":
        ab = ab_params(args.m, sph, args.xi)
        if args.json:
            payload.update({"a1": ab.a1, "b1": ab.b1, "a2": ab.a2, "b2": ab.b2})
            print(json.dumps(payload))
        else:
            print(f"a1 = {ab.a1!r}")
            print(f"b1 = {ab.b1!r}")
            print(f"a2 = {ab.a2!r}")
            print(f"b2 = {ab.b2!r}")
    else:
        raise ValueError(f"unknown inspect kind {args.kind!r}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="diracspin",
        description="Relativistic spin operators and boosted spin entropy for massive Dirac particles",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    vp = sub.add_parser("verify", help="run the randomized invariant suite")
    vp.add_argument("--seed", type=int, default=42)
    vp.add_argument("--samples", type=int, default=100)

    swp = sub.add_parser("sweep", help="entropy sweep over rapidity or polar angle -> CSV")
    swp.add_argument("--axis", choices=("rapidity", "polar"), required=True)
    swp.add_argument("--m", type=float, default=1.0, help="rest mass")
    swp.add_argument("--p", type=float, default=10.0, help="momentum magnitude")
    swp.add_argument("--theta", type=parse_angle, default=0.0, help="polar angle (accepts 'pi' suffix)")
    swp.add_argument("--phi", type=parse_angle, default=0.0, help="azimuth (accepts 'pi' suffix)")
    swp.add_argument("--xi", type=float, default=0.0, help="observer rapidity (polar axis)")
    swp.add_argument("--lo", type=parse_angle, required=True)
    swp.add_argument("--hi", type=parse_angle, required=True)
    swp.add_argument("--steps", type=int, default=200)
    swp.add_argument("--out", default="sweep.csv", help="CSV destination path")

    ip = sub.add_parser("inspect", help="print an operator matrix or parameter set")
    ip.add_argument("kind", choices=("spin_r", "spin_fw", "hamiltonian", "transport", "wigner_block", "ab_params"))
    ip.add_argument("--m", type=float, default=1.0)
    ip.add_argument("--p", type=float, default=0.0)
    ip.add_argument("--theta", type=parse_angle, default=0.0)
    ip.add_argument("--phi", type=parse_angle, default=0.0)
    ip.add_argument("--xi", type=float, default=0.0)
    ip.add_argument("--json", action="store_true", help="machine-parseable stable-ordered output")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors already
        return int(exc.code or 0)

    if args.command == "verify":
        try:
            report = run_verify(args.seed, args.samples)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return USAGE_ERROR
        for line in report.lines():
            print(line)
        print(f"{'OK' if report.passed else 'FAILED'} (seed={report.seed}, samples={report.samples})")
        return 0 if report.passed else 1

    if args.command == "sweep":
        try:
            config = SweepConfig(
                axis=args.axis,
                mass=args.m,
                p_magnitude=args.p,
                theta=args.theta,
                phi=args.phi,
                xi=args.xi,
                lo=args.lo,
                hi=args.hi,
                steps=args.steps,
                output_path=args.out,
            )
            run_sweep(config)
        except (ValueError, OSError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return USAGE_ERROR
        return 0

    if args.command == "inspect":
        try:
            return run_inspect(args)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return USAGE_ERROR

    return USAGE_ERROR


def entrypoint() -> None:
    raise SystemExit(main())
