"""Error scanning, argmax location, alternating points, equioscillation checks.

Every accuracy claim in the package is adjudicated here: a dense grid scan of
|approx(p) - oracle(p)| locates all local maxima of the error, refines each
one by golden-section search (to a p-resolution of 1e-8), and assembles an
:class:`ErrorReport`. :func:`verify_equioscillation` then checks the
alternation structure that certifies a minimax fit: by Chebyshev's theorem an
(m, n) rational minimax approximation equioscillates at m + n + 2 points, and
by de la Vallée Poussin's theorem the smallest extremum magnitude
lower-bounds the best achievable error, so a tiny relative spread brackets
the fit against the true optimum.

Error is measured in x-units (absolute quantile error) throughout; there is
no relative-error mode.

Scans are deterministic: fixed method, region, and step always produce the
same report, independent of evaluation chunking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple, Union

import numpy as np

from . import baselines, quantile
from .errors import DomainError
from .oracle import inv_cdf_oracle, oracle_values

__all__ = [
    "Extremum",
    "ErrorReport",
    "ScanData",
    "MethodSpec",
    "METHODS",
    "get_method",
    "linear_grid",
    "log_grid",
    "acceptance_grid",
    "scan_max_abs_error",
    "find_alternation_points",
    "verify_equioscillation",
    "vallee_poussin_bracket",
    "run_scan",
    "write_scan_csv",
    "summary_lines",
    "SCAN_CSV_HEADER",
]

#: Default linear scan step for central regions.
DEFAULT_STEP = 1e-5
#: Default log-grid density for tails (points per decade of p).
DEFAULT_PER_DECADE = 400
#: Golden-section refinement target in p.
REFINE_TOL = 1e-8

SCAN_CSV_HEADER = "method,region_lo,region_hi,p,approx,oracle,err"


@dataclass(frozen=True)
class Extremum:
    """One local maximum of |approx - oracle|: location, magnitude, error sign."""

    p: float
    abs_err: float
    sign: int


@dataclass(frozen=True)
class ErrorReport:
    """Outcome of an error scan over one method and region."""

    method: str
    region: Tuple[float, float]
    grid_spec: str
    max_abs_error: float
    argmax_p: float
    extrema: Tuple[Extremum, ...]


@dataclass(frozen=True)
class ScanData:
    """An ErrorReport plus the raw scan arrays backing it (for CSV export)."""

    report: ErrorReport
    grid: np.ndarray
    approx: np.ndarray
    oracle: np.ndarray
    err: np.ndarray


@dataclass(frozen=True)
class MethodSpec:
    """Registry entry: evaluator, domain, and default scan grid for a name."""

    name: str
    func: Callable
    domain: Tuple[float, float]
    region: Optional[Tuple[float, float]]  # None -> full acceptance grid
    grid: str  # "linear" | "log" | "acceptance"


METHODS = {
    spec.name: spec
    for spec in (
        MethodSpec("rat22a", quantile.inv_cdf_rat22a,
                   (quantile.HARD_FLOOR, 1.0), None, "acceptance"),
        MethodSpec("rat22b", quantile.inv_cdf_rat22b,
                   (quantile.HARD_FLOOR, 1.0), None, "acceptance"),
        MethodSpec("rat22a-central", quantile.central_2_2,
                   (0.0465, 0.9535), (0.0465, 0.9535), "linear"),
        MethodSpec("rat22b-central", quantile.central_2_2_wide,
                   (0.025, 0.975), (0.025, 0.975), "linear"),
        MethodSpec("tail32", quantile.tail_3_2,
                   (quantile.HARD_FLOOR, 0.0465), (1e-290, 0.0465), "log"),
        MethodSpec("as-original", baselines.as_original,
                   (quantile.HARD_FLOOR, 1.0), None, "acceptance"),
        MethodSpec("as-improved", baselines.as_improved,
                   (quantile.HARD_FLOOR, 1.0), None, "acceptance"),
        MethodSpec("beasley-springer", baselines.beasley_springer,
                   (0.0, 1.0), None, "acceptance"),
        MethodSpec("beasley-springer-central", baselines.beasley_springer,
                   (0.0, 1.0), baselines.BS_CENTRAL_REGION, "linear"),
    )
}


def get_method(name: str) -> MethodSpec:
    """Look up a registry entry; unknown names raise ValueError with choices."""
    try:
        return METHODS[name]
    except KeyError:
        known = ", ".join(sorted(METHODS))
        raise ValueError(f"unknown method {name!r}; choose one of: {known}") from None


# --------------------------------------------------------------------------
# Grids.
# --------------------------------------------------------------------------

def linear_grid(lo: float, hi: float, step: float) -> np.ndarray:
    """Inclusive linear grid from lo to hi; degenerate lo == hi gives one point."""
    if step <= 0.0:
        raise ValueError(f"step must be positive, got {step!r}")
    if hi < lo:
        raise ValueError(f"empty region [{lo!r}, {hi!r}]")
    if hi == lo:
        return np.array([lo], dtype=np.float64)
    n = int(round((hi - lo) / step))
    xs = lo + step * np.arange(n + 1, dtype=np.float64)
    xs = np.clip(xs, lo, hi)
    if xs[-1] != hi:
        xs = np.append(xs, hi)
    return np.unique(xs)


def log_grid(lo: float, hi: float, per_decade: int = DEFAULT_PER_DECADE) -> np.ndarray:
    """Log-spaced grid on [lo, hi): includes lo, excludes hi."""
    if not (0.0 < lo < hi):
        raise ValueError(f"need 0 < lo < hi, got {lo!r}, {hi!r}")
    decades = math.log10(hi) - math.log10(lo)
    n = max(int(round(decades * per_decade)), 1) + 1
    xs = np.exp(np.linspace(math.log(lo), math.log(hi), n))
    xs[0] = lo
    return xs[xs < hi]


def acceptance_grid() -> np.ndarray:
    """The package's standard full-domain grid.

    Linear step 1e-5 on [1e-4, 1 - 1e-4], plus 400 log-spaced points per
    decade from 1e-290 up to 1e-4 and their upper-tail mirrors 1 - g (exact
    in binary64 for every kept point; mirrors that round to 1.0 — i.e.
    g < 2^-53, below which binary64 has no distinct upper-tail value — are
    dropped).
    """
    lin = np.arange(10, 99991, dtype=np.float64) * 1e-5
    low = log_grid(1e-290, 1e-4, DEFAULT_PER_DECADE)
    high = 1.0 - low
    high = high[high < 1.0]
    return np.unique(np.concatenate([low, lin, high]))


# --------------------------------------------------------------------------
# Scanning.
# --------------------------------------------------------------------------

def _eval_chunked(func, grid: np.ndarray, chunks: int) -> np.ndarray:
    out = np.empty_like(grid)
    n = grid.size
    size = max(1, -(-n // max(chunks, 1)))  # ceil division
    for start in range(0, n, size):
        sl = slice(start, min(start + size, n))
        out[sl] = func(grid[sl])
    return out


_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def _golden_max(f, a: float, b: float, tol: float) -> Tuple[float, float]:
    """Maximize f on [a, b] by golden-section search; returns (x, f(x))."""
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc = f(c)
    fd = f(d)
    while (b - a) > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def _refine_extrema(scalar_err, grid: np.ndarray, abs_err: np.ndarray,
                    signed_err: np.ndarray) -> Tuple[Extremum, ...]:
    """Locate grid-local maxima of |err| and refine each inside its bracket.

    Refinement never leaves the bracket formed by the flanking grid points,
    so results are a property of the scanned grid, not of anything outside
    the region.
    """
    n = grid.size
    if n == 1:
        p = float(grid[0])
        return (Extremum(p, float(abs_err[0]), _sign(signed_err[0])),)

    flag = np.zeros(n, dtype=bool)
    if n >= 2:
        flag[0] = abs_err[0] > abs_err[1]
        flag[-1] = abs_err[-1] > abs_err[-2]
    if n >= 3:
        flag[1:-1] = (abs_err[1:-1] >= abs_err[:-2]) & (abs_err[1:-1] >= abs_err[2:])

    if not flag.any():
        # Plateau or exactly tied endpoints: fall back to the grid argmax.
        flag[int(np.argmax(abs_err))] = True

    refined = []
    for i in np.nonzero(flag)[0]:
        lo = float(grid[max(i - 1, 0)])
        hi = float(grid[min(i + 1, n - 1)])
        if hi > lo:
            x, v = _golden_max(lambda t: abs(scalar_err(t)), lo, hi, REFINE_TOL)
        else:
            x, v = float(grid[i]), float(abs_err[i])
        refined.append((x, v, hi - lo))

    refined.sort()
    merged = []
    for x, v, width in refined:
        if merged and (x - merged[-1][0]) <= max(width, merged[-1][2]):
            if v > merged[-1][1]:
                merged[-1] = (x, v, width)
            continue
        merged.append((x, v, width))

    out = []
    for x, v, _ in merged:
        out.append(Extremum(x, v, _sign(scalar_err(x))))
    return tuple(out)


def _sign(v: float) -> int:
    return 1 if v > 0.0 else (-1 if v < 0.0 else 0)


def _resolve_grid(spec: MethodSpec, region, step, per_decade):
    if region is None:
        region = spec.region
    if region is None:
        grid = acceptance_grid()
        return grid, (float(grid[0]), float(grid[-1])), \
            f"acceptance points={grid.size}"
    lo, hi = float(region[0]), float(region[1])
    if spec.grid == "log":
        grid = log_grid(lo, hi, per_decade)
        return grid, (lo, hi), f"log per_decade={per_decade} points={grid.size}"
    s = DEFAULT_STEP if step is None else float(step)
    grid = linear_grid(lo, hi, s)
    return grid, (lo, hi), f"linear step={s!r} points={grid.size}"


def run_scan(method: Union[str, MethodSpec], region=None, step=None, *,
             per_decade: int = DEFAULT_PER_DECADE, chunks: int = 1) -> ScanData:
    """Scan |method - oracle| over a grid; return the report plus raw arrays.

    ``region=None`` uses the method's default region (the full acceptance
    grid for composed evaluators). Oracle convergence failures propagate with
    the offending p named. Results do not depend on ``chunks``.
    """
    spec = get_method(method) if isinstance(method, str) else method
    grid, region_t, grid_spec = _resolve_grid(spec, region, step, per_decade)

    approx = _eval_chunked(spec.func, grid, chunks)
    oracle = _eval_chunked(oracle_values, grid, chunks)
    err = approx - oracle
    abs_err = np.abs(err)

    def scalar_err(p: float) -> float:
        return spec.func(float(p)) - inv_cdf_oracle(float(p)).value

    extrema = _refine_extrema(scalar_err, grid, abs_err, err)
    best = max(extrema, key=lambda e: e.abs_err)
    report = ErrorReport(
        method=spec.name,
        region=region_t,
        grid_spec=grid_spec,
        max_abs_error=best.abs_err,
        argmax_p=best.p,
        extrema=extrema,
    )
    return ScanData(report, grid, approx, oracle, err)


def scan_max_abs_error(method: Union[str, MethodSpec], region=None,
                       step=None, *, per_decade: int = DEFAULT_PER_DECADE,
                       chunks: int = 1) -> ErrorReport:
    """Dense-grid scan of |method(p) - oracle(p)| with refined local maxima."""
    return run_scan(method, region, step, per_decade=per_decade,
                    chunks=chunks).report


def find_alternation_points(method: Union[str, MethodSpec],
                            region=None, step=None) -> Tuple[Extremum, ...]:
    """All local maxima of |err| over the region, endpoints included when
    they are one-sided maxima; sorted by p."""
    return scan_max_abs_error(method, region, step).extrema


def verify_equioscillation(report: Union[ErrorReport, Sequence[Extremum]],
                           spread_tol: float) -> bool:
    """True iff extremum magnitudes are equal within spread_tol (relative)
    and the error signs alternate; vacuously true for a single extremum."""
    ext = report.extrema if isinstance(report, ErrorReport) else tuple(report)
    if len(ext) <= 1:
        return True
    mags = [e.abs_err for e in ext]
    top = max(mags)
    spread = (top - min(mags)) / top if top > 0.0 else 0.0
    alternating = all(ext[i].sign * ext[i + 1].sign < 0
                      for i in range(len(ext) - 1))
    return alternating and spread <= spread_tol


def vallee_poussin_bracket(
        report: Union[ErrorReport, Sequence[Extremum]]) -> Tuple[float, float]:
    """(min, max) extremum magnitude: the de la Vallée Poussin bracket.

    The minimum lower-bounds the best-possible minimax error over the region;
    the maximum is the fit's own error, so min <= optimum <= max.
    """
    ext = report.extrema if isinstance(report, ErrorReport) else tuple(report)
    if not ext:
        raise ValueError("no extrema to bracket")
    mags = [e.abs_err for e in ext]
    lo, hi = min(mags), max(mags)
    assert lo <= hi
    return lo, hi


# --------------------------------------------------------------------------
# Emission (consumed by the CLI).
# --------------------------------------------------------------------------

def _fmt(x: float) -> str:
    """Round-trip-exact decimal formatting (shortest repr)."""
    return repr(float(x))


def write_scan_csv(fh, data: ScanData) -> None:
    """Write the full scan as CSV rows: method,region_lo,region_hi,p,approx,oracle,err.

    Identity columns repeat on every row so downstream tools can merge
    multiple scans. Output is byte-deterministic for fixed inputs.
    """
    rep = data.report
    fh.write(SCAN_CSV_HEADER + "\n")
    lo, hi = _fmt(rep.region[0]), _fmt(rep.region[1])
    for p, a, o, e in zip(data.grid, data.approx, data.oracle, data.err):
        fh.write(f"{rep.method},{lo},{hi},{_fmt(p)},{_fmt(a)},{_fmt(o)},{_fmt(e)}\n")


def summary_lines(report: ErrorReport) -> list:
    """Line-oriented key=value summary of a report."""
    vp_lo, vp_hi = vallee_poussin_bracket(report)
    mags = [e.abs_err for e in report.extrema]
    top = max(mags)
    spread = (top - min(mags)) / top if top > 0.0 else 0.0
    alternating = verify_equioscillation(report, float("inf"))
    return [
        f"method={report.method}",
        f"region_lo={_fmt(report.region[0])}",
        f"region_hi={_fmt(report.region[1])}",
        f"grid={report.grid_spec}",
        f"max_abs_error={_fmt(report.max_abs_error)}",
        f"argmax_p={_fmt(report.argmax_p)}",
        f"extrema_count={len(report.extrema)}",
        f"alternating={'true' if alternating else 'false'}",
        f"spread={_fmt(spread)}",
        f"vallee_poussin_lo={_fmt(vp_lo)}",
        f"vallee_poussin_hi={_fmt(vp_hi)}",
    ]
