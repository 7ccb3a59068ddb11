"""Command-line front end.

Subcommands map one-to-one onto the library: ``transform`` and ``invert``
expose the measure transforms, ``evolve`` the certified flow solver,
``grunsky`` the univalence certificate, and ``hayman`` the capacity
diagnostic.  Reports are deterministic: JSON with sorted keys, or CSV with
a fixed column order, and every numeric result is accompanied by the error
bound or tolerance it was produced under.

Exit codes: 0 success, 2 invalid input (bad flags, malformed files,
constraint violations), 1 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import capacity as _capacity
from . import grunsky as _grunsky
from . import loewner as _loewner
from . import measures as _measures
from .errors import InvalidInputError, NonConvergenceError

__all__ = ["RunConfig", "run", "main", "parse_complex"]

_EPS = float(np.finfo(float).eps)


@dataclass(frozen=True)
class RunConfig:
    """Resolved invocation: one subcommand, its input file, overrides."""

    subcommand: str
    input_path: str | None
    tolerance: float | None
    output_format: str

    def __post_init__(self) -> None:
        if self.tolerance is not None and not self.tolerance > 0:
            raise InvalidInputError("tolerance overrides must be positive")
        if self.output_format not in ("csv", "json"):
            raise InvalidInputError("output format must be csv or json")


def parse_complex(text: str) -> complex:
    """Parse ``a+bi`` (no spaces), e.g. ``0+1i``, ``-1.5-0.25i``, ``2i``."""
    s = text.strip()
    if not s or " " in s:
        raise InvalidInputError(f"malformed complex number {text!r}")
    if s.endswith("i"):
        s = s[:-1] + "j"
        # bare trailing i means coefficient 1
        if s in ("j", "+j", "-j") or s[-2] in "+-":
            s = s[:-1] + "1j"
    try:
        return complex(s)
    except ValueError as exc:
        raise InvalidInputError(f"malformed complex number {text!r}") from exc


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"malformed JSON in {path}: {exc}") from exc


def _measure_arg(path: str) -> _measures.RealMeasure:
    return _measures.measure_from_dict(_load_json(path))


def _emit_json(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


# -- subcommand handlers ----------------------------------------------------


def _cmd_transform(args) -> None:
    mu = _measure_arg(args.measure)
    if args.op == "nevanlinna":
        triple = _measures.nevanlinna_triple(lambda z: _measures.reciprocal_cauchy(mu, z))
        _emit_json({
            "op": "nevanlinna",
            "b": triple.b,
            "c": triple.c,
            "nu_mass": triple.nu_mass,
            "ladder_settle_tol": 1e-3,
        })
        return
    if args.z is None:
        raise InvalidInputError(f"--z is required for op {args.op!r}")
    z = parse_complex(args.z)
    pos, wts = mu.nodes()
    g = _measures.cauchy_transform(mu, z)
    # summation roundoff over the node cloud, propagated through 1/G
    g_bound = float((wts / np.abs(z - pos)).sum()) * pos.size * _EPS
    if args.op == "cauchy":
        value, bound = g, g_bound
    else:
        value = _measures.reciprocal_cauchy(mu, z)
        bound = g_bound * abs(value) ** 2
    _emit_json({
        "op": args.op,
        "z": [z.real, z.imag],
        "value": [value.real, value.imag],
        "roundoff_bound": bound,
    })


def _cmd_invert(args) -> None:
    mu = _measure_arg(args.measure)
    try:
        a, b = (float(v) for v in args.interval.split(","))
    except ValueError as exc:
        raise InvalidInputError("--interval expects 'a,b'") from exc
    try:
        ladder = [float(v) for v in args.eps_ladder.split(",")]
    except ValueError as exc:
        raise InvalidInputError("--eps-ladder expects comma-separated floats") from exc
    value = _measures.stieltjes_invert(
        lambda z: _measures.cauchy_transform(mu, z), (a, b), ladder)
    _emit_json({
        "interval": [a, b],
        "eps_ladder": ladder,
        "value": value,
        "extrapolation_settle_tol": 1e-3 * max(1.0, abs(value)),
    })


def _cmd_evolve(args) -> None:
    family = _loewner.driver_from_dict(_load_json(args.driver))
    if (args.z is None) == (args.grid is None):
        raise InvalidInputError("evolve needs exactly one of --z or --grid")
    if args.z is not None:
        zs = np.array([parse_complex(args.z)])
    else:
        raw = _load_json(args.grid)
        if not isinstance(raw, list):
            raise InvalidInputError("--grid file must hold a JSON list of [re, im] pairs")
        try:
            zs = np.array([complex(float(p[0]), float(p[1])) for p in raw])
        except (TypeError, ValueError, IndexError) as exc:
            raise InvalidInputError("--grid entries must be [re, im] pairs") from exc
    config = _loewner.SolverConfig(tol=args.tol) if args.tol is not None else None
    t = float(args.t)
    values, bounds = _loewner.transition_grid(family, 0.0, t, zs, config)
    out = ["t,re_z,im_z,re_f,im_f,err_bound"]
    for z, w, e in zip(zs, values, bounds):
        out.append(",".join([
            _fmt(t), _fmt(z.real), _fmt(z.imag), _fmt(w.real), _fmt(w.imag), _fmt(e),
        ]))
    sys.stdout.write("\n".join(out) + "\n")


def _cmd_grunsky(args) -> None:
    if (args.moments is None) == (args.measure is None):
        raise InvalidInputError("grunsky needs exactly one of --moments or --measure")
    order = int(args.order)
    if args.moments is not None:
        try:
            moments = [float(v) for v in args.moments.split(",")]
        except ValueError as exc:
            raise InvalidInputError("--moments expects comma-separated floats") from exc
    else:
        mu = _measure_arg(args.measure)
        moments = [_measures.moment(mu, k) for k in range(2 * order + 1)]
    report = _grunsky.univalence_certificate(
        moments, order, boundary_tol=args.boundary_tol)
    _emit_json({
        "order": report.order,
        "verdict": report.verdict,
        "max_abs_eigenvalue": report.max_abs_eigenvalue,
        "eigenvalues": [float(v) for v in report.eigenvalues],
        "c_matrix": [[float(v) for v in row] for row in report.c_matrix],
        "boundary_tol": report.boundary_tol,
    })


def _cmd_hayman(args) -> None:
    mu = _measure_arg(args.measure)
    report = _capacity.hayman_report(
        mu, n=args.n, resolution=args.resolution, epsilon=args.eps)
    curve = None
    if args.curve_csv is not None:
        curve = _capacity.boundary_image(
            mu, resolution=args.resolution,
            epsilon=args.eps if args.eps is not None
            else 1e-3 * (mu.support[1] - mu.support[0]))
        with open(args.curve_csv, "w", encoding="utf-8") as fh:
            fh.write("re,im\n")
            for p in curve.points:
                fh.write(f"{_fmt(p.real)},{_fmt(p.imag)}\n")
    _emit_json({
        "n_points": report.n_points,
        "d_image": report.d_image,
        "d_interval": report.d_interval,
        "ratio": report.ratio,
        "verdict": report.verdict,
        "ratio_band": 0.05,
    })


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordal",
        description="Loewner flows, univalence certificates, and capacity "
                    "diagnostics for measure transforms.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("transform", help="Cauchy/reciprocal transform or Nevanlinna triple")
    p.add_argument("--measure", required=True, help="measure JSON file")
    p.add_argument("--z", help="evaluation point, a+bi")
    p.add_argument("--op", choices=("cauchy", "reciprocal", "nevanlinna"), default="cauchy")
    p.set_defaults(func=_cmd_transform, input_arg="measure")

    p = sub.add_parser("invert", help="Stieltjes inversion over an interval")
    p.add_argument("--measure", required=True, help="measure JSON file")
    p.add_argument("--interval", required=True, help="a,b")
    p.add_argument("--eps-ladder", required=True, dest="eps_ladder",
                   help="strictly decreasing positive heights, e1,e2,...")
    p.set_defaults(func=_cmd_invert, input_arg="measure")

    p = sub.add_parser("evolve", help="solve the flow map f(t; z) = B(0, t; z)")
    p.add_argument("--driver", required=True, help="driver JSON file")
    p.add_argument("--t", required=True, type=float)
    p.add_argument("--z", help="single point, a+bi")
    p.add_argument("--grid", help="JSON file with a list of [re, im] pairs")
    p.add_argument("--tol", type=float, help="solver tolerance override")
    p.set_defaults(func=_cmd_evolve, input_arg="driver")

    p = sub.add_parser("grunsky", help="univalence certificate from moments")
    p.add_argument("--moments", help="a0,a1,... (a0 = 1)")
    p.add_argument("--measure", help="measure JSON file")
    p.add_argument("--order", required=True, type=int)
    p.add_argument("--boundary-tol", dest="boundary_tol", type=float, default=1e-8)
    p.set_defaults(func=_cmd_grunsky, input_arg="measure")

    p = sub.add_parser("hayman", help="transfinite-diameter diagnostic")
    p.add_argument("--measure", required=True, help="measure JSON file")
    p.add_argument("--n", type=int, default=64)
    p.add_argument("--resolution", type=int, default=2048)
    p.add_argument("--eps", type=float, default=None)
    p.add_argument("--curve-csv", dest="curve_csv",
                   help="also write the boundary trace to this CSV file")
    p.set_defaults(func=_cmd_hayman, input_arg="measure")

    return parser


def _join_negative_values(argv: list[str]) -> list[str]:
    # argparse treats "-2,2" as an option string; fold such values into
    # --flag=value form so intervals and moment lists may start negative
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if (tok.startswith("--") and "=" not in tok and nxt is not None
                and len(nxt) > 1 and nxt[0] == "-" and (nxt[1].isdigit() or nxt[1] == ".")):
            out.append(f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def run(argv) -> int:
    """Dispatch one invocation; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(_join_negative_values(list(argv)))
    except SystemExit as exc:
        code = exc.code
        return int(code) if code is not None else 0
    try:
        RunConfig(
            subcommand=args.subcommand,
            input_path=getattr(args, args.input_arg, None),
            tolerance=getattr(args, "tol", None),
            output_format="csv" if args.subcommand == "evolve" else "json",
        )
        args.func(args)
        return 0
    except NonConvergenceError as exc:
        print(f"non-convergence: {exc}", file=sys.stderr)
        return 1
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
