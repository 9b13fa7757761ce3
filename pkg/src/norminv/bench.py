"""Throughput benchmarks for the quantile evaluators.

Protocol
--------
Each method is compiled to native code and timed over a fixed grid of 999
probabilities (0.001 .. 0.999 step 0.001) repeated ``reps`` times, reps in
the outer loop, with every evaluation folded into a running checksum so the
compiler cannot hoist or dead-code the work. One full warmup pass precedes
timing (it also absorbs JIT compilation). A benchmark consists of ``runs``
independently timed passes with the method order rotated between runs so no
method systematically inherits a warm or cold cache position; the reported
figure is the per-run median. Checksums must be bit-identical across runs —
any drift means the harness measured different work and is an error, not a
warning.

Wall-clock numbers are hardware-dependent and inherently noisy; each result
carries its run-to-run coefficient of variation, and results with
cov >= 15% (or fewer than 5 runs) are flagged unreliable rather than trusted.
The high-precision oracle is deliberately not benchmarkable here: it is a
verification tool, and timing it alongside the evaluators would invite
meaningless comparisons.

Nothing in this module executes at import time.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numba as nb
import numpy as np

from .baselines import _as_improved_raw, _as_original_raw, _beasley_springer_raw
from .quantile import _rat22a_raw, _rat22b_raw

__all__ = [
    "BenchResult",
    "DEFAULT_METHODS",
    "BENCH_METHODS",
    "run_benchmark",
    "paired_gap",
    "results_to_csv",
    "results_to_text",
    "BENCH_CSV_HEADER",
]

#: Grid size of one pass; total_evals = reps * GRID_POINTS.
GRID_POINTS = 999

DEFAULT_METHODS: Tuple[str, ...] = (
    "rat22b", "rat22a", "beasley-springer", "as-original",
)

BENCH_CSV_HEADER = "method,ns_per_eval,speedup_vs_as,total_evals,checksum,cov,reliable"


@dataclass(frozen=True)
class BenchResult:
    """Timing outcome for one method.

    ``elapsed`` is the median wall-clock seconds of a single timed run and
    ``ns_per_eval = elapsed / total_evals * 1e9`` — the headline figure.
    ``runs_ns`` holds every run's ns/eval in run order (run k of method A
    and run k of method B were interleaved in the same wall-clock window,
    so per-run pairing is meaningful). ``checksum`` is the bit-exact sum of
    every evaluation, identical across runs by construction.
    """

    method: str
    total_evals: int
    elapsed: float
    ns_per_eval: float
    checksum: float
    runs_ns: Tuple[float, ...]
    cov: float
    reliable: bool


@nb.njit(cache=True)
def _drive_rat22a(grid, reps):
    s = 0.0
    for _ in range(reps):
        for i in range(grid.shape[0]):
            s += _rat22a_raw(grid[i])
    return s


@nb.njit(cache=True)
def _drive_rat22b(grid, reps):
    s = 0.0
    for _ in range(reps):
        for i in range(grid.shape[0]):
            s += _rat22b_raw(grid[i])
    return s


@nb.njit(cache=True)
def _drive_bs(grid, reps):
    s = 0.0
    for _ in range(reps):
        for i in range(grid.shape[0]):
            s += _beasley_springer_raw(grid[i])
    return s


@nb.njit(cache=True)
def _drive_as(grid, reps):
    s = 0.0
    for _ in range(reps):
        for i in range(grid.shape[0]):
            s += _as_original_raw(grid[i])
    return s


@nb.njit(cache=True)
def _drive_as_improved(grid, reps):
    s = 0.0
    for _ in range(reps):
        for i in range(grid.shape[0]):
            s += _as_improved_raw(grid[i])
    return s


_DRIVERS = {
    "rat22a": _drive_rat22a,
    "rat22b": _drive_rat22b,
    "beasley-springer": _drive_bs,
    "as-original": _drive_as,
    "as-improved": _drive_as_improved,
}

BENCH_METHODS: Tuple[str, ...] = tuple(_DRIVERS)


def _bench_grid() -> np.ndarray:
    return np.arange(1, GRID_POINTS + 1, dtype=np.float64) / 1000.0


def run_benchmark(methods: Optional[Sequence[str]] = None, reps: int = 200_000,
                  warmup_reps: int = 1, runs: int = 5) -> List[BenchResult]:
    """Time each method and return results in the order requested.

    ``runs`` independent timing windows are taken per method, with the
    method order rotated from run to run; each result's headline number is
    the median across runs. At least one full warmup pass always executes
    (the first pass also triggers JIT compilation). Raises RuntimeError if
    any method's checksum differs between runs.
    """
    names = list(DEFAULT_METHODS if methods is None else methods)
    if not names:
        raise ValueError("no methods to benchmark")
    for name in names:
        if name not in _DRIVERS:
            known = ", ".join(sorted(_DRIVERS))
            raise ValueError(f"unknown bench method {name!r}; choose from: {known}")
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate methods in {names!r}")
    if reps < 1:
        raise ValueError(f"reps must be >= 1, got {reps!r}")
    if runs < 1:
        raise ValueError(f"runs must be >= 1, got {runs!r}")

    grid = _bench_grid()
    warm = max(int(warmup_reps), 1)
    for name in names:
        _DRIVERS[name](grid, warm)

    total = reps * GRID_POINTS
    seconds: Dict[str, List[float]] = {name: [] for name in names}
    checksums: Dict[str, float] = {}
    m = len(names)
    for k in range(runs):
        rotated = names[k % m:] + names[:k % m]
        for name in rotated:
            driver = _DRIVERS[name]
            t0 = time.perf_counter()
            cs = driver(grid, reps)
            dt = time.perf_counter() - t0
            seconds[name].append(dt)
            if name in checksums:
                if checksums[name] != cs:
                    raise RuntimeError(
                        f"checksum drift for {name!r}: {checksums[name]!r} "
                        f"then {cs!r}; timed work was not identical")
            else:
                checksums[name] = cs

    results = []
    for name in names:
        per_run = seconds[name]
        runs_ns = tuple(dt / total * 1e9 for dt in per_run)
        elapsed = statistics.median(per_run)
        mean_ns = statistics.fmean(runs_ns)
        cov = (statistics.stdev(runs_ns) / mean_ns) if len(runs_ns) > 1 else 0.0
        results.append(BenchResult(
            method=name,
            total_evals=total,
            elapsed=elapsed,
            ns_per_eval=elapsed / total * 1e9,
            checksum=checksums[name],
            runs_ns=runs_ns,
            cov=cov,
            reliable=(len(runs_ns) >= 5 and cov < 0.15),
        ))
    return results


def paired_gap(fast: BenchResult, slow: BenchResult) -> Tuple[float, Tuple[float, ...]]:
    """Median and per-run relative speed gap 1 - fast/slow, paired by run.

    Pairing run k with run k cancels machine-wide slowdowns that hit both
    methods in the same wall-clock window, which a comparison of summary
    medians would smear.
    """
    if len(fast.runs_ns) != len(slow.runs_ns):
        raise ValueError("results have different run counts")
    gaps = tuple(1.0 - f / s for f, s in zip(fast.runs_ns, slow.runs_ns))
    return statistics.median(gaps), gaps


def _fmt(x: float) -> str:
    return repr(float(x))


def results_to_csv(results: Sequence[BenchResult]) -> str:
    """CSV table, fastest first: method,ns_per_eval,speedup_vs_as,...

    speedup_vs_as is blank unless as-original is among the results.
    """
    base = next((r.ns_per_eval for r in results if r.method == "as-original"), None)
    lines = [BENCH_CSV_HEADER]
    for r in sorted(results, key=lambda r: r.ns_per_eval):
        speed = _fmt(base / r.ns_per_eval) if base is not None else ""
        lines.append(
            f"{r.method},{_fmt(r.ns_per_eval)},{speed},{r.total_evals},"
            f"{_fmt(r.checksum)},{_fmt(r.cov)},"
            f"{'true' if r.reliable else 'false'}")
    return "\n".join(lines) + "\n"


def results_to_text(results: Sequence[BenchResult]) -> str:
    """Aligned human-readable table, fastest first."""
    base = next((r.ns_per_eval for r in results if r.method == "as-original"), None)
    header = f"{'method':<24} {'ns/eval':>9} {'vs AS':>7} {'cov':>7} {'reliable':>8}"
    lines = [header, "-" * len(header)]
    for r in sorted(results, key=lambda r: r.ns_per_eval):
        speed = f"{base / r.ns_per_eval:6.2f}x" if base is not None else "      -"
        lines.append(
            f"{r.method:<24} {r.ns_per_eval:>9.3f} {speed:>7} "
            f"{r.cov:>7.4f} {'yes' if r.reliable else 'NO':>8}")
    return "\n".join(lines) + "\n"
