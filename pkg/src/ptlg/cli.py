"""Command-line front end: figure data, optimization, identity checks, and the
entangled-pair demo.  Emits CSV or JSON; exit codes are stable: 0 success,
1 check failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .checks import run_identity_suite
from .errors import DegenerateWeightError, DomainError, UsageError
from .macrodiag import violation_classifier
from .nosignal import signaling_deviation
from .ptdyn import PTParams
from .sweep import (
    DEFAULT_ALPHAS,
    DEFAULT_PHI,
    DEFAULT_THETA,
    FigureData,
    GridSpec,
    SweepConfig,
    build_preset,
    figure_data,
    scan,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _fmt(v: float) -> str:
    return f"{v:.12g}"


def _round12(v: float) -> float:
    return float(_fmt(v))


def _write_table(path: str, columns, rows, fmt: str, config: dict, summary: dict):
    try:
        with open(path, "w", encoding="utf-8") as fh:
            if fmt == "csv":
                fh.write(",".join(columns) + "\n")
                for row in rows:
                    fh.write(",".join(_fmt(v) for v in row) + "\n")
            else:
                payload = {
                    "config": config,
                    "rows": [dict(zip(columns, (_round12(v) for v in row))) for row in rows],
                    "summary": summary,
                }
                json.dump(payload, fh, indent=1)
                fh.write("\n")
    except OSError as exc:
        raise IOError(f"cannot write {path}: {exc}") from exc


def _merge_config_file(args: argparse.Namespace, argv: list[str]) -> None:
    """Overlay --config JSON values onto parsed args; explicit flags win."""
    if getattr(args, "config", None) is None:
        return
    try:
        with open(args.config, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise IOError(f"cannot read config {args.config}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"config {args.config} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError("config file must hold a JSON object")
    known = vars(args)
    unknown = set(data) - set(known)
    if unknown:
        raise UsageError(f"unknown config keys: {sorted(unknown)}")
    explicit = {token[2:].split("=")[0].replace("-", "_")
                for token in argv if token.startswith("--")}
    for key, value in data.items():
        if key not in explicit:
            setattr(args, key, value)


def _parse_pre_evolution(text: str) -> bool:
    if text not in ("on", "off"):
        raise UsageError(f"--pre-evolution must be 'on' or 'off', got {text!r}")
    return text == "on"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ptlg",
        description="Temporal-correlation diagnostics for a qubit under "
                    "PT-symmetric evolution.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", default=None, help="output path")
        p.add_argument("--config", default=None, help="JSON config file; flags override")
        p.add_argument("--s", type=float, default=1.0, help="Hamiltonian scale")
        p.add_argument("--alpha", type=float, default=None, help="non-Hermiticity angle (rad)")
        p.add_argument("--t-min", type=float, default=0.0)
        p.add_argument("--t-max", type=float, default=float(np.pi))
        p.add_argument("--t-steps", type=int, default=512)
        p.add_argument("--theta", type=float, default=DEFAULT_THETA)
        p.add_argument("--phi", type=float, default=DEFAULT_PHI)
        p.add_argument("--pre-evolution", default="on", metavar="on|off")

    p_fig = sub.add_parser("figure", help="emit curve data for one of the four figures")
    p_fig.add_argument("n", type=int, choices=(1, 2, 3, 4))
    add_common(p_fig)

    p_opt = sub.add_parser("optimize", help="grid + golden-section maximization")
    p_opt.add_argument("expression", choices=("L13", "V1", "V2", "V3"))
    p_opt.add_argument("--kind", choices=("pt", "unitary"), default="pt")
    add_common(p_opt)

    p_chk = sub.add_parser("check", help="run the identity suite")
    p_chk.add_argument("--sample-size", type=int, default=16)
    p_chk.add_argument("--inject-fault", type=float, default=0.0,
                       help="perturb the propagator to demonstrate detection")
    p_chk.add_argument("--pair-closed-forms", action="store_true",
                       help="also compare the published pairwise closed forms")
    p_chk.add_argument("--config", default=None)

    p_ns = sub.add_parser("nosignal", help="partner-state deviation over a grid")
    add_common(p_ns)
    return parser


def cmd_figure(args) -> int:
    alphas = DEFAULT_ALPHAS if args.alpha is None else (args.alpha,)
    data: FigureData = figure_data(
        args.n, t_steps=args.t_steps, alphas=alphas, theta=args.theta, phi=args.phi,
        s=args.s, pre_evolution=_parse_pre_evolution(args.pre_evolution),
        t_min=args.t_min, t_max=args.t_max,
    )
    out = args.out or f"ptlg_figure{args.n}.{args.format}"
    config = {"figure": args.n, "alphas": list(alphas), "t_min": args.t_min,
              "t_max": args.t_max, "t_steps": args.t_steps, "theta": args.theta,
              "phi": args.phi, "s": args.s, "pre_evolution": args.pre_evolution}
    finite = [v for row in data.rows for v in row[2:3] if np.isfinite(v)]
    summary = {"rows": len(data.rows),
               "max_value": _round12(max(finite)) if finite else float("nan")}
    _write_table(out, data.columns, data.rows, args.format, config, summary)
    print(f"wrote {out} ({len(data.rows)} rows)")
    return EXIT_OK


def cmd_optimize(args) -> int:
    if args.t_steps < 2:
        raise UsageError("--t-steps must be >= 2 for optimization")
    fixed: dict[str, float] = {"theta": args.theta, "phi": args.phi}
    if args.kind == "pt":
        if args.alpha is None:
            raise UsageError("optimize over the non-unitary family needs --alpha")
        fixed["alpha"] = args.alpha
    cfg = SweepConfig(
        expression=args.expression,
        kind=args.kind,
        grids={"t": GridSpec(args.t_min, args.t_max, args.t_steps)},
        fixed=fixed,
        s=args.s,
        pre_evolution=_parse_pre_evolution(args.pre_evolution),
        refine=True,
    )
    result = scan(cfg)
    classifier = violation_classifier(build_preset(cfg, result.argmax_params))
    report = {
        "expression": args.expression,
        "kind": args.kind,
        "params": {k: _round12(v) for k, v in sorted(result.argmax_params.items())},
        "value": _round12(result.argmax_value),
        "classifier": {
            "lg_violated": classifier.lg_violated,
            "nsit_violated": classifier.nsit_violated,
            "aot_violated": classifier.aot_violated,
            "lg_values": {k: _round12(v) for k, v in classifier.lg_values.items()},
            "max_nsit_degree": _round12(classifier.max_nsit_degree),
            "max_aot_degree": _round12(classifier.max_aot_degree),
        },
    }
    text = json.dumps(report, indent=1)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        except OSError as exc:
            raise IOError(f"cannot write {args.out}: {exc}") from exc
    print(text)
    return EXIT_OK


def cmd_check(args) -> int:
    results = run_identity_suite(sample_size=args.sample_size, fault=args.inject_fault,
                                 include_pair_forms=args.pair_closed_forms)
    failed = [r for r in results if not r.passed]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{r.name:32s} residual={r.residual:.3e} tol={r.tolerance:.0e} {status}")
    if failed:
        print(f"FAILED: {', '.join(r.name for r in failed)}")
        return EXIT_CHECK_FAILED
    print(f"all {len(results)} checks passed")
    return EXIT_OK


def cmd_nosignal(args) -> int:
    if args.t_steps < 1:
        raise UsageError(f"--t-steps must be >= 1, got {args.t_steps}")
    alphas = DEFAULT_ALPHAS if args.alpha is None else (args.alpha,)
    ts = np.linspace(args.t_min, args.t_max, args.t_steps)
    rows = []
    for alpha in alphas:
        for t in ts:
            try:
                dev = signaling_deviation(PTParams(alpha, t, s=args.s))
            except (DomainError, DegenerateWeightError):
                dev = float("nan")
            rows.append((alpha, t, dev))
    out = args.out or f"ptlg_nosignal.{args.format}"
    config = {"alphas": list(alphas), "t_min": args.t_min, "t_max": args.t_max,
              "t_steps": args.t_steps, "s": args.s}
    finite = [r[2] for r in rows if np.isfinite(r[2])]
    summary = {"rows": len(rows),
               "max_deviation": _round12(max(finite)) if finite else float("nan")}
    _write_table(out, ("alpha", "t", "deviation"), rows, args.format, config, summary)
    print(f"wrote {out} ({len(rows)} rows)")
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
        _merge_config_file(args, argv)
        if args.command == "figure":
            return cmd_figure(args)
        if args.command == "optimize":
            return cmd_optimize(args)
        if args.command == "check":
            return cmd_check(args)
        return cmd_nosignal(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IOError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
