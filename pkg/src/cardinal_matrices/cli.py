"""Command-line entry point.

Exit codes: 0 success, 2 usage error, 3 computation failure, 4 a
verification ledger (or homotopy signature check) reported failures.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import asdict, dataclass, field, replace

from . import __version__
from .algebra import mobius_matrix, rho, zeta_matrix
from .cardinal import m_matrix, t_inverse, t_matrix, u_inverse, u_matrix
from .deformed import (
    difference_matrices,
    m_tilde,
    u_tilde,
    u_tilde_inverse,
    u_tilde_plus,
    z_tilde_and_w,
)
from .divisors import build_divisor_set
from .io import (
    atomic_write,
    format_matrix,
    homotopy_to_csv,
    homotopy_to_json,
    scan_to_csv,
    scan_to_json,
    scan_to_wide_csv,
)
from .mertens import SieveConfig, mertens, sieve_mobius
from .spectral import METRICS, homotopy_track, log_spaced, rh_scan, spectral_report
from .verify import run_verification

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_VERIFY = 0, 2, 3, 4
FORMATS = ("text", "csv", "json")

MATRICES = {
    "t": lambda S: t_matrix(S.s),
    "t-inv": lambda S: t_inverse(S.s),
    "zeta": zeta_matrix,
    "mobius": mobius_matrix,
    "u": u_matrix,
    "u-inv": u_inverse,
    "m": m_matrix,
    "u-tilde": u_tilde,
    "u-tilde-plus": u_tilde_plus,
    "u-tilde-inv": u_tilde_inverse,
    "m-tilde": m_tilde,
}
DIFFS = {
    "e": lambda S: difference_matrices(S).E,
    "e-plus": lambda S: difference_matrices(S).E_plus,
    "e-tilde": lambda S: difference_matrices(S).E_tilde,
    "z-tilde": lambda S: z_tilde_and_w(S)[0],
    "w": lambda S: z_tilde_and_w(S)[1],
}
SPECTRUM_MATRICES = {"u": u_matrix, "m": m_matrix, "m-tilde": m_tilde, "t": lambda S: t_matrix(S.s)}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: int | None = None
    n_range: tuple[int, int] | None = None
    metrics: list[str] = field(default_factory=list)
    out: str | None = None
    format: str = "text"
    seed: int = 0
    jobs: int = 1
    memory_budget: int = SieveConfig.memory_budget
    options: dict = field(default_factory=dict)

    def validate(self):
        if self.n is not None and self.n < 1:
            raise UsageError(f"n must be >= 1, got {self.n}")
        if self.n_range is not None:
            n0, n1 = self.n_range
            if n0 < 1 or n0 > n1:
                raise UsageError(f"need 1 <= n0 <= n1, got {n0}..{n1}")
        if self.format not in FORMATS:
            raise UsageError(f"format must be one of {FORMATS}")
        bad = [m for m in self.metrics if m not in METRICS]
        if bad:
            raise UsageError(f"unknown metrics: {', '.join(bad)}; known: {', '.join(METRICS)}")
        if self.jobs < 1:
            raise UsageError("jobs must be >= 1")
        if self.out is not None:
            parent = os.path.dirname(os.path.abspath(self.out))
            if not os.path.isdir(parent):
                raise UsageError(f"output directory {parent} does not exist")


def _env_default(name, default):
    v = os.environ.get(name)
    return int(v) if v else default


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, help="default: csv for scan and homotopy, text otherwise")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--manifest", action="store_true", help="write the resolved run config next to the output")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=_env_default("CARDINAL_JOBS", 1))
    common.add_argument(
        "--memory-budget", type=int, default=_env_default("CARDINAL_MEMORY_BUDGET", SieveConfig.memory_budget)
    )

    p = argparse.ArgumentParser(prog="cardinal-matrices", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("divisors", parents=[common], help="approximate divisors of n")
    c.add_argument("n", type=int)

    c = sub.add_parser("mertens", parents=[common], help="M(N), or the x, mu(x), M(x) table")
    c.add_argument("n", type=int)
    c.add_argument("--table", action="store_true")

    c = sub.add_parser("matrix", parents=[common], help="print one of the matrices")
    c.add_argument("kind", choices=sorted(MATRICES) + ["rho", "diff"])
    c.add_argument("n", type=int)
    c.add_argument("arg", nargs="?", help="k for rho; one of e, e-plus, e-tilde, w, z-tilde for diff")

    c = sub.add_parser("verify", parents=[common], help="run every identity check for n (or n..n1)")
    c.add_argument("n", type=int)
    c.add_argument("n1", type=int, nargs="?")
    c.add_argument("--cap", type=int, default=500, help="largest n for the full commutativity check")
    c.add_argument("--samples", type=int, default=5, help="random homomorphism pairs per n")

    c = sub.add_parser("spectrum", parents=[common], help="norms and eigenvalues")
    c.add_argument("n", type=int)
    c.add_argument("--matrix", choices=sorted(SPECTRUM_MATRICES), default="u")
    c.add_argument("--paired", action="store_true", help="also report n + 1, for interlacing inspection")

    c = sub.add_parser("homotopy", parents=[common], help="eigenvalues along (1-t)T + tU_n")
    c.add_argument("n", type=int)
    c.add_argument("--steps", type=int, default=101)
    c.add_argument("--floor", type=float, default=1e-9)

    c = sub.add_parser("scan", parents=[common], help="norm-ratio scan over a range of n")
    c.add_argument("n0", type=int)
    c.add_argument("n1", type=int)
    c.add_argument("--metrics", default="m-ratio", help=f"comma list from {', '.join(METRICS)}")
    c.add_argument("--log-points", type=int, help="sample this many log-spaced n instead of every n")
    c.add_argument("--wide", action="store_true", help="one column per metric (ratios), one row per n")
    return p


def _config(args) -> RunConfig:
    cfg = RunConfig(
        command=args.command,
        out=args.out,
        format=args.format or ("csv" if args.command in ("scan", "homotopy") else "text"),
        seed=args.seed,
        jobs=args.jobs,
        memory_budget=args.memory_budget,
    )
    if args.command == "scan":
        cfg.n_range = (args.n0, args.n1)
        cfg.metrics = [m.strip() for m in args.metrics.split(",") if m.strip()]
        cfg.options = {"log_points": args.log_points, "wide": args.wide}
        if args.log_points is not None and args.log_points < 1:
            raise UsageError("--log-points must be positive")
    elif args.command == "verify" and args.n1 is not None:
        cfg.n_range = (args.n, args.n1)
        cfg.options = {"cap": args.cap, "samples": args.samples}
    else:
        cfg.n = args.n
        if args.command == "verify":
            cfg.options = {"cap": args.cap, "samples": args.samples}
        elif args.command == "matrix":
            cfg.options = {"kind": args.kind, "arg": args.arg}
        elif args.command == "spectrum":
            cfg.options = {"matrix": args.matrix, "paired": args.paired}
        elif args.command == "homotopy":
            if args.steps < 2:
                raise UsageError("--steps must be at least 2")
            cfg.options = {"steps": args.steps, "floor": args.floor}
        elif args.command == "mertens":
            cfg.options = {"table": args.table}
    cfg.validate()
    return cfg


def _sieve_config(cfg: RunConfig) -> SieveConfig:
    return replace(SieveConfig.from_env(), memory_budget=cfg.memory_budget)


def _emit(cfg: RunConfig, text: str):
    if cfg.out:
        atomic_write(cfg.out, text)
    else:
        sys.stdout.write(text)


def _manifest(cfg: RunConfig, argv):
    doc = {"version": __version__, "argv": list(argv), "config": asdict(cfg)}
    text = json.dumps(doc, indent=2, default=list) + "\n"
    if cfg.out:
        atomic_write(cfg.out + ".manifest.json", text)
    else:
        sys.stderr.write(text)


def cmd_divisors(cfg: RunConfig) -> int:
    S = build_divisor_set(cfg.n)
    pairs = [[k, S.n // k] for k in S.elements]
    if cfg.format == "json":
        text = json.dumps({"n": S.n, "s": S.s, "elements": list(S.elements), "involution": pairs}) + "\n"
    elif cfg.format == "csv":
        text = "index,k,involution\n" + "".join(f"{i},{k},{v}\n" for i, (k, v) in enumerate(pairs, 1))
    else:
        text = f"n = {S.n}, s = {S.s}\n" + "".join(f"{i:>5}  {k:>10}  <->  {v}\n" for i, (k, v) in enumerate(pairs, 1))
    _emit(cfg, text)
    return EXIT_OK


def cmd_mertens(cfg: RunConfig) -> int:
    config = _sieve_config(cfg)
    N = cfg.n
    if not cfg.options.get("table"):
        value = mertens(N, config)(N)
        text = json.dumps({"N": N, "M": value}) + "\n" if cfg.format == "json" else f"{value}\n"
        _emit(cfg, text)
        return EXIT_OK
    mu = sieve_mobius(N, config).mu
    M = mu.cumsum(dtype="int64")
    if cfg.format == "json":
        text = json.dumps({"x": list(range(1, N + 1)), "mu": mu[1:].tolist(), "M": M[1:].tolist()}) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["x", "mu", "M"])
        w.writerows(zip(range(1, N + 1), mu[1:].tolist(), M[1:].tolist()))
        text = buf.getvalue()
    _emit(cfg, text)
    return EXIT_OK


def cmd_matrix(cfg: RunConfig) -> int:
    S = build_divisor_set(cfg.n)
    kind, arg = cfg.options["kind"], cfg.options["arg"]
    if kind == "rho":
        try:
            k = int(arg)
        except (TypeError, ValueError):
            raise UsageError("matrix rho needs an integer k") from None
        if k not in S:
            raise UsageError(f"{k} is not an approximate divisor of {S.n}")
        A, name = rho(S, k), f"rho({k})"
    elif kind == "diff":
        if arg not in DIFFS:
            raise UsageError(f"matrix diff needs one of {', '.join(DIFFS)}")
        A, name = DIFFS[arg](S), arg
    else:
        if arg is not None:
            raise UsageError(f"matrix {kind} takes no extra argument")
        A, name = MATRICES[kind](S), kind
    _emit(cfg, format_matrix(A, S, cfg.format, name))
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    ns = [cfg.n] if cfg.n is not None else list(range(cfg.n_range[0], cfg.n_range[1] + 1))
    ledgers = [
        run_verification(n, commutativity_cap=cfg.options["cap"], seed=cfg.seed, samples=cfg.options["samples"])
        for n in ns
    ]
    if cfg.format == "json":
        text = json.dumps([x.as_dict() for x in ledgers] if len(ledgers) > 1 else ledgers[0].as_dict()) + "\n"
    elif cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "check", "passed", "location", "detail"])
        for L in ledgers:
            for c in L.checks:
                loc = f"{c.location[0]},{c.location[1]}" if c.location else ""
                w.writerow([L.n, c.name, int(c.passed), loc, c.detail])
        text = buf.getvalue()
    else:
        lines = []
        for L in ledgers:
            lines.append(f"n = {L.n}: {'PASS' if L.passed else 'FAIL'}")
            for c in L.checks:
                loc = f" at {c.location}" if c.location else ""
                extra = f"  ({c.detail})" if c.detail else ""
                lines.append(f"  [{'pass' if c.passed else 'FAIL'}] {c.name}{loc}{extra}")
        text = "\n".join(lines) + "\n"
    _emit(cfg, text)
    return EXIT_OK if all(x.passed for x in ledgers) else EXIT_VERIFY


def cmd_spectrum(cfg: RunConfig) -> int:
    ns = [cfg.n, cfg.n + 1] if cfg.options["paired"] else [cfg.n]
    build = SPECTRUM_MATRICES[cfg.options["matrix"]]
    reports = [spectral_report(n, build(build_divisor_set(n))) for n in ns]
    if cfg.format == "json":
        text = json.dumps([r.as_dict() for r in reports]) + "\n"
    elif cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "index", "eigenvalue"])
        for r in reports:
            for i, v in enumerate(r.eigenvalues, 1):
                w.writerow([r.n, i, repr(v)])
        text = buf.getvalue()
    else:
        lines = []
        for r in reports:
            lines += [
                f"n = {r.n}, s = {r.s}, matrix {cfg.options['matrix']}",
                f"  Frobenius^2     {r.frobenius_norm_sq}",
                f"  Frobenius       {r.frobenius_norm!r}",
                f"  operator norm   {r.operator_norm!r}",
                f"  min |lambda|    {r.min_abs_eigenvalue!r}",
                f"  signs (+/-)     {r.positive_count}/{r.negative_count}",
                "  eigenvalues     " + " ".join(f"{v:.6g}" for v in r.eigenvalues),
            ]
        text = "\n".join(lines) + "\n"
    _emit(cfg, text)
    return EXIT_OK


def cmd_homotopy(cfg: RunConfig) -> int:
    track = homotopy_track(build_divisor_set(cfg.n), cfg.options["steps"], cfg.options["floor"])
    if cfg.format == "json":
        text = homotopy_to_json(track)
    elif cfg.format == "csv":
        text = homotopy_to_csv(track)
    else:
        first, last = track.snapshots[0], track.snapshots[-1]
        text = (
            f"n = {track.n}, s = {track.s}, steps = {len(track.snapshots)}\n"
            f"  signs at t=0: {first.positive_count}+/{first.negative_count}-, "
            f"at t=1: {last.positive_count}+/{last.negative_count}-\n"
            f"  signature constant: {track.signature_constant}\n"
            f"  smallest |lambda| on path: {min(x.min_abs_eigenvalue for x in track.snapshots)!r}\n"
            f"  flagged steps (|lambda| < {track.floor}): {track.flagged_steps}\n"
        )
    _emit(cfg, text)
    return EXIT_OK if track.signature_constant else EXIT_VERIFY


def cmd_scan(cfg: RunConfig) -> int:
    n0, n1 = cfg.n_range
    points = cfg.options.get("log_points")
    ns = log_spaced(n0, n1, points) if points else range(n0, n1 + 1)
    records = rh_scan(ns, cfg.metrics, jobs=cfg.jobs, config=_sieve_config(cfg))
    if cfg.format == "json":
        text = scan_to_json(records)
    elif cfg.options.get("wide"):
        text = scan_to_wide_csv(records, cfg.metrics)
    elif cfg.format == "csv":
        text = scan_to_csv(records)
    else:
        lines = [f"{'n':>8} {'metric':<13} {'value':>22} {'ratio':>22}"]
        lines += [f"{r.n:>8} {r.metric:<13} {r.value!r:>22} {r.ratio!r:>22} {r.error}".rstrip() for r in records]
        text = "\n".join(lines) + "\n"
    _emit(cfg, text)
    return EXIT_COMPUTE if any(r.error for r in records) else EXIT_OK


COMMANDS = {
    "divisors": cmd_divisors,
    "mertens": cmd_mertens,
    "matrix": cmd_matrix,
    "verify": cmd_verify,
    "spectrum": cmd_spectrum,
    "homotopy": cmd_homotopy,
    "scan": cmd_scan,
}


def _fail(code: int, kind: str, message: str) -> int:
    sys.stderr.write(json.dumps({"error": kind, "message": message, "exit_code": code}) + "\n")
    return code


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config(args)
    except UsageError as exc:
        return _fail(EXIT_USAGE, "usage", str(exc))
    try:
        code = COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        return _fail(EXIT_USAGE, "usage", str(exc))
    except Exception as exc:
        return _fail(EXIT_COMPUTE, "computation", f"{type(exc).__name__}: {exc}")
    if args.manifest:
        _manifest(cfg, argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
