"""Command line: ``relspin verify`` runs suites, ``relspin trace zitterbewegung`` writes a time trace."""
from __future__ import annotations

import argparse
import csv
import io
import sys
from dataclasses import replace

import numpy as np

from .config import SUITES, ConfigError, RunConfig, load_config
from .dynamics import zitterbewegung_comparison
from .minkowski import MomentumContext
from .numkit import DimensionError, EigenError

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_NUMERICAL, EXIT_OUTPUT, EXIT_UNKNOWN_SUITE = 0, 1, 2, 3, 4, 5
NUMERICAL_ERRORS = (EigenError, DimensionError, ArithmeticError, np.linalg.LinAlgError)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="relspin", description="Numerical checks for covariant spin operators.")
    sub = ap.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", default="all", help=f"one of: all, {', '.join(SUITES)}")
    v.add_argument("--config", help="flat JSON file with RunConfig fields")
    v.add_argument("--mass", type=float)
    v.add_argument("--spin", nargs="+", help="spins, e.g. 1/2 1 3/2")
    v.add_argument("--samples", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--tol", type=float, help="tolerance override for the selected suite(s)")
    v.add_argument("--format", choices=("text", "json", "csv"))
    v.add_argument("--out")
    t = sub.add_parser("trace", help="emit a time trace")
    t.add_argument("scenario", choices=("zitterbewegung",))
    t.add_argument("--config", required=True)
    t.add_argument("--out")
    return ap


def _merge(args) -> RunConfig:
    cfg = load_config(args.config) if args.config else RunConfig()
    over = {}
    for flag, fieldname in (("mass", "mass"), ("samples", "samples"), ("seed", "seed"), ("format", "format"),
                            ("out", "out")):
        val = getattr(args, flag)
        if val is not None:
            over[fieldname] = val
    if args.spin is not None:
        over["spins"] = tuple(args.spin)
    if args.tol is not None:
        names = SUITES if args.suite == "all" else (args.suite,)
        over["tolerances"] = {**cfg.tolerances, **{n: args.tol for n in names if n in SUITES}}
    return replace(cfg, **over).validated()


def _write(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", newline="") as fh:
        fh.write(text)


def render(report, fmt: str) -> str:
    return {"text": report.to_text, "json": report.to_json, "csv": report.to_csv}[fmt]()


def cmd_verify(args) -> int:
    from .suites import run_suite

    if args.suite != "all" and args.suite not in SUITES:
        print(f"error: unknown suite {args.suite!r}; expected one of all, {', '.join(SUITES)}", file=sys.stderr)
        return EXIT_UNKNOWN_SUITE
    cfg = _merge(args)
    report = run_suite(args.suite, cfg)
    _write(render(report, cfg.format), cfg.out)
    return EXIT_FAIL if report.failed else EXIT_OK


def parse_scenario(cfg: RunConfig):
    sc = cfg.scenario
    if not isinstance(sc, dict):
        raise ConfigError("trace needs a 'scenario' object with keys m, p, mix")
    extra = set(sc) - {"m", "p", "mix", "lambda"}
    if extra or not {"m", "p", "mix"} <= set(sc):
        raise ConfigError("scenario must have keys m, p, mix (and optionally lambda)")
    try:
        m = float(sc["m"])
        p = np.array([float(x) for x in sc["p"]])
        mix = [complex(*x) if isinstance(x, list) else complex(x) for x in sc["mix"]]
        lam = float(sc.get("lambda", 0.5))
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"malformed scenario: {exc}") from exc
    if not m > 0 or p.shape != (3,) or len(mix) != 2 or lam not in (0.5, -0.5):
        raise ConfigError("scenario needs m > 0, p of length 3, mix of length 2, lambda = +/-1/2")
    if abs(np.hypot(abs(mix[0]), abs(mix[1])) - 1) > 1e-12:
        raise ConfigError("scenario mix must be normalised")
    return MomentumContext(m, p), tuple(mix), lam


TRACE_HEADER = ["t"] + [f"alpha_expect_{k}" for k in (1, 2, 3)] + [f"velocity_expect_{k}" for k in (1, 2, 3)]


def trace_csv(trace) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TRACE_HEADER)
    for row in trace.rows():
        w.writerow([repr(float(x)) for x in row])
    w.writerow(["constant"] + ["yes" if c else "no" for c in trace.alpha_constant + trace.velocity_constant])
    return buf.getvalue()


def cmd_trace(args) -> int:
    cfg = load_config(args.config)
    ctx, mix, lam = parse_scenario(cfg)
    trace = zitterbewegung_comparison(ctx, mix, lam=lam)
    _write(trace_csv(trace), args.out or cfg.out)
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return cmd_verify(args) if args.command == "verify" else cmd_trace(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NUMERICAL_ERRORS as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"output error: {exc}", file=sys.stderr)
        return EXIT_OUTPUT


if __name__ == "__main__":
    sys.exit(main())
