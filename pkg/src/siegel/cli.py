"""Command-line entry point: run verification suites, emit JSON/CSV reports.

Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage
error, 3 I/O failure.  Reports are byte-identical across runs with the
same seed; wall-clock timings are written only with --timings, since they
would break that reproducibility.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field

from .quadrature import DEFAULT_SEED, Engine
from .verify import SUITES, SuiteConfig, VerificationReport, run_suites

SCHEMA_VERSION = 1
OUTPUT_DIR_ENV = "SIEGEL_REPORT_DIR"


@dataclass(frozen=True)
class RunConfig:
    suites: tuple[str, ...]
    dim: int | None = None
    lam: float | None = None
    engine: Engine | None = None
    samples: int = 1 << 20
    seed: int = DEFAULT_SEED
    tolerances: dict = field(default_factory=dict)
    output_path: str = ""
    format: str = "json"
    timings: bool = False


class UsageError(ValueError):
    pass


def _jsonable(value):
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, float) and value != value:  # NaN
        return None
    return value


def _report_record(r: VerificationReport, timings: bool) -> dict:
    return {
        "check_id": r.check_id,
        "params": {k: _jsonable(v) for k, v in sorted(r.params.items())},
        "expected": _jsonable(r.expected),
        "actual": _jsonable(r.actual),
        "residual": r.residual,
        "tolerance": r.tolerance,
        "passed": r.passed,
        "runtime_ms": r.runtime_ms if timings else 0,
        "seed": r.seed,
    }


def render_json(reports, cfg: RunConfig) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "seed": cfg.seed,
        "suites": sorted(set(cfg.suites)),
        "checks": [_report_record(r, cfg.timings) for r in reports],
        "summary": {
            "total": len(reports),
            "passed": sum(r.passed for r in reports),
            "failed": sum(not r.passed for r in reports),
        },
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


CSV_COLUMNS = ("check_id", "params", "expected", "actual", "residual",
               "tolerance", "passed", "runtime_ms", "seed")


def render_csv(reports, cfg: RunConfig) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        params = ";".join(f"{k}={_jsonable(v)}" for k, v in sorted(r.params.items()))
        writer.writerow([
            r.check_id, params, repr(_jsonable(r.expected)),
            repr(_jsonable(r.actual)), repr(r.residual), repr(r.tolerance),
            int(r.passed), r.runtime_ms if cfg.timings else 0, r.seed,
        ])
    return buf.getvalue()


def _parse_suites(raw: list[str]) -> tuple[str, ...]:
    names: list[str] = []
    for chunk in raw:
        names.extend(s.strip() for s in chunk.split(",") if s.strip())
    if not names:
        raise UsageError("no suites requested")
    if "all" in names:
        return tuple(SUITES)
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise UsageError(
            f"unknown suite id(s): {', '.join(unknown)}; "
            f"known: {', '.join(SUITES)}, all")
    return tuple(dict.fromkeys(names))


def _parse_tols(items: list[str]) -> dict:
    out = {}
    for item in items:
        if "=" not in item:
            raise UsageError(f"bad --tol entry {item!r}; expected PREFIX=VALUE")
        key, _, val = item.partition("=")
        try:
            out[key] = float(val)
        except ValueError as exc:
            raise UsageError(f"bad tolerance value in {item!r}") from exc
    return out


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="siegel-verify",
        description="Run the numerical verification suites and write a report.")
    ap.add_argument("--suites", action="append", default=None, metavar="IDS",
                    help="comma-separated suite ids, or 'all' "
                         f"(known: {', '.join(SUITES)})")
    ap.add_argument("--dim", type=int, default=None, choices=(1, 2),
                    help="restrict checks to this ambient dimension")
    ap.add_argument("--lambda", dest="lam", type=float, default=None,
                    help="restrict weight-parameterized checks to this lambda")
    ap.add_argument("--engine", choices=("tensor", "mc"), default=None,
                    help="force the engine for n=1 checks")
    ap.add_argument("--samples", type=int, default=1 << 20,
                    help="Monte Carlo sample budget per integral")
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ap.add_argument("--tol", action="append", default=[], metavar="PREFIX=VAL",
                    help="override tolerance for checks whose id starts with PREFIX")
    ap.add_argument("--output", "-o", default=None,
                    help=f"report path (default: ${OUTPUT_DIR_ENV} or cwd)")
    ap.add_argument("--format", choices=("json", "csv"), default="json")
    ap.add_argument("--timings", action="store_true",
                    help="record wall-clock runtimes (breaks byte-identical reruns)")
    return ap


def parse_config(argv) -> RunConfig:
    args = build_parser().parse_args(argv)
    if args.suites is None:
        raise UsageError("--suites is required (use --suites all for everything)")
    suites = _parse_suites(args.suites)
    engine = Engine(args.engine) if args.engine else None
    if engine is Engine.TENSOR and args.dim == 2:
        raise UsageError("the tensor engine supports dimension 1 only")
    if args.samples < 10_000:
        raise UsageError("--samples below 10000 is not acceptable for MC runs")
    output = args.output
    if output is None:
        base = os.environ.get(OUTPUT_DIR_ENV, ".")
        output = os.path.join(base, f"siegel_report.{args.format}")
    return RunConfig(suites=suites, dim=args.dim, lam=args.lam, engine=engine,
                     samples=args.samples, seed=args.seed,
                     tolerances=_parse_tols(args.tol), output_path=output,
                     format=args.format, timings=args.timings)


def run(config: RunConfig) -> int:
    """Execute the configured suites, write the report, print a summary."""
    cfg = SuiteConfig(dim=config.dim, lam=config.lam, engine=config.engine,
                      samples=config.samples, seed=config.seed,
                      tolerances=config.tolerances)
    reports = run_suites(config.suites, cfg)
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status}  {r.check_id}  residual={r.residual:.3e} "
              f"tol={r.tolerance:.3e}  [{r.runtime_ms} ms]")
    text = (render_json if config.format == "json" else render_csv)(reports, config)
    try:
        with open(config.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write report to {config.output_path}: {exc}",
              file=sys.stderr)
        return 3
    n_fail = sum(not r.passed for r in reports)
    print(f"{len(reports) - n_fail}/{len(reports)} checks passed; "
          f"report written to {config.output_path}")
    return 0 if n_fail == 0 else 1


def main(argv=None) -> int:
    try:
        config = parse_config(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # argparse's own exit (e.g. bad flag, --help)
        return int(exc.code) if exc.code is not None else 0
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
