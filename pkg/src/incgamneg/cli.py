"""Command-line front end: ``incgamneg {eval,table,regionmap,bench,selftest}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import statistics
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .core import EvalPoint, evaluate, predict_range_status, select_method
from .results import DomainError, Status
from .rng import sample_points

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_RANGE = 2
MAX_GRID_NODES = 10**8
_PARALLEL_MIN = 2000


@dataclass(frozen=True)
class GridSpec:
    a_min: float
    a_max: float
    na: int
    z_min: float
    z_max: float
    nz: int
    spacing: str = "linear"

    def __post_init__(self) -> None:
        vals = (self.a_min, self.a_max, self.z_min, self.z_max)
        if not all(math.isfinite(v) for v in vals):
            raise ValueError("grid bounds must be finite")
        if self.na < 1 or self.nz < 1:
            raise ValueError("grid counts must be >= 1")
        if not (self.z_max < 0.0 and self.z_min < 0.0):
            raise ValueError("grid z values must be negative")
        if self.na * self.nz > MAX_GRID_NODES:
            raise ValueError(f"grid has more than {MAX_GRID_NODES} nodes")
        if self.spacing != "linear":
            raise ValueError("only linear spacing is supported")

    @staticmethod
    def _axis(lo: float, hi: float, n: int) -> list[float]:
        if n == 1:
            return [lo]
        step = (hi - lo) / (n - 1)
        return [hi if i == n - 1 else lo + i * step for i in range(n)]

    def nodes(self) -> list[tuple[float, float]]:
        """Row-major (outer ``a``, inner ``z``)."""
        zs = self._axis(self.z_min, self.z_max, self.nz)
        return [(a, z) for a in self._axis(self.a_min, self.a_max, self.na) for z in zs]


def parse_grid(text: str) -> GridSpec:
    try:
        a_part, z_part = text.split(",")
        a0, a1, na = a_part.split(":")
        z0, z1, nz = z_part.split(":")
        return GridSpec(float(a0), float(a1), int(na), float(z0), float(z1), int(nz))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"bad grid {text!r} (want a_min:a_max:na,z_min:z_max:nz): {exc}"
        ) from None


def fmt(x: float) -> str:
    """Shortest string that parses back to the same double."""
    return repr(float(x))


def _workers() -> int:
    raw = os.environ.get("INCGAM_THREADS", "0").strip() or "0"
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n <= 0:
        n = os.cpu_count() or 1
    return n


def _eval_row(pt: tuple[float, float]) -> dict:
    a, z = pt
    r = evaluate(EvalPoint(a, z))
    return {
        "a": a,
        "z": z,
        "value": r.value,
        "status": r.status.value,
        "method": r.method.value,
        "terms": r.terms_used,
    }


def _region_row(pt: tuple[float, float]) -> dict:
    a, z = pt
    p = EvalPoint(a, z)
    return {
        "a": a,
        "z": z,
        "method": select_method(p).value,
        "predicted": predict_range_status(p).value,
    }


def _map_ordered(fn, pts: list) -> list:
    workers = _workers()
    if workers > 1 and len(pts) >= _PARALLEL_MIN:
        chunk = max(len(pts) // (workers * 8), 1)
        with ProcessPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(fn, pts, chunksize=chunk))
    return [fn(p) for p in pts]


def _render(rows: list[dict], columns: list[str], form: str) -> str:
    if form == "json":
        out = []
        for r in rows:
            out.append({c: r[c] for c in columns})
        return json.dumps(out, indent=None, separators=(",", ":")) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([fmt(r[c]) if isinstance(r[c], float) else r[c] for c in columns])
    return buf.getvalue()


def _emit(text: str, out: str | None) -> int:
    if out is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {out}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK


def cmd_eval(args) -> int:
    try:
        r = evaluate(EvalPoint(args.a, args.z))
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.format == "json":
        row = {"a": args.a, "z": args.z, "value": r.value, "status": r.status.value,
               "method": r.method.value, "terms": r.terms_used}
        print(json.dumps(row))
    else:
        print(f"value={fmt(r.value)} status={r.status.value} method={r.method.value} "
              f"terms={r.terms_used}")
    return EXIT_OK if r.status is Status.OK else EXIT_RANGE


def cmd_table(args) -> int:
    rows = _map_ordered(_eval_row, args.grid.nodes())
    text = _render(rows, ["a", "z", "value", "status", "method", "terms"], args.format)
    return _emit(text, args.out)


def cmd_regionmap(args) -> int:
    rows = _map_ordered(_region_row, args.grid.nodes())
    return _emit(_render(rows, ["a", "z", "method", "predicted"], args.format), args.out)


FULL_DOMAIN = ((-500.0, 500.0), (-500.0, 0.0))


def bench_report(n: int, seed: int, a_range=FULL_DOMAIN[0], z_range=FULL_DOMAIN[1]) -> dict:
    """Per-method timings of ``n`` uniform random points in the given box."""
    pts = sample_points(n, seed, a_range, z_range)
    per: dict[str, list[float]] = {}
    clock = time.perf_counter
    t0 = clock()
    for a, z in pts:
        s = clock()
        r = evaluate(EvalPoint(a, z))
        per.setdefault(r.method.value, []).append(clock() - s)
    total = clock() - t0
    methods = {
        m: {"count": len(v), "mean_us": 1e6 * statistics.fmean(v),
            "median_us": 1e6 * statistics.median(v)}
        for m, v in sorted(per.items())
    }
    means = [d["mean_us"] for d in methods.values()]
    return {
        "n_evals": n,
        "seed": seed,
        "total_s": total,
        "evals_per_s": n / total if total > 0 else math.inf,
        "methods": methods,
        "mean_ratio_max_min": max(means) / min(means) if means else 1.0,
        "ratio_threshold": 20.0,
    }


def cmd_bench(args) -> int:
    if args.n < 1:
        print("error: --n must be >= 1", file=sys.stderr)
        return EXIT_ERROR
    if args.grid is None:
        rep = bench_report(args.n, args.seed)
    else:
        g = args.grid
        rep = bench_report(args.n, args.seed, (g.a_min, g.a_max), (g.z_min, g.z_max))
    return _emit(json.dumps(rep, indent=2) + "\n", args.out)


def cmd_selftest(args) -> int:
    from .selftest import run_all

    reports = run_all(args.n, args.seed, args.tol)
    for r in reports:
        print(r.line())
    ok = all(r.passed for r in reports)
    print("selftest: " + ("PASS" if ok else "FAIL"))
    return EXIT_OK if ok else EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="incgamneg", description="gamma*(a, z) for z < 0")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate one point")
    e.add_argument("-a", type=float, required=True)
    e.add_argument("-z", type=float, required=True)
    e.add_argument("--format", choices=["text", "json"], default="text")
    e.set_defaults(func=cmd_eval)

    for name, func, help_ in (
        ("table", cmd_table, "evaluate every grid node"),
        ("regionmap", cmd_regionmap, "method and predicted range status per grid node"),
    ):
        t = sub.add_parser(name, help=help_)
        t.add_argument("--grid", type=parse_grid, required=True)
        t.add_argument("--format", choices=["csv", "json"], default="csv")
        t.add_argument("--out")
        t.set_defaults(func=func)

    b = sub.add_parser("bench", help="time random evaluations")
    b.add_argument("--n", type=int, default=50000)
    b.add_argument("--grid", type=parse_grid, default=None)
    b.add_argument("--seed", type=int, default=1)
    b.add_argument("--out")
    b.set_defaults(func=cmd_bench)

    s = sub.add_parser("selftest", help="oracle, recurrence and overlap checks")
    s.add_argument("--n", type=int, default=10000)
    s.add_argument("--seed", type=int, default=1)
    s.add_argument("--tol", type=float, default=5e-13)
    s.set_defaults(func=cmd_selftest)
    return p


def _glue_grid(argv: list[str]) -> list[str]:
    """``--grid -7:-6:2,...`` would read as an option; pass it as ``--grid=...``."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        if argv[i] == "--grid" and i + 1 < len(argv):
            out.append("--grid=" + argv[i + 1])
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = _glue_grid(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors; this tool reserves 2 for range status
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
