"""High-precision ground truth for the normal CDF and quantile.

This module adjudicates the error bounds of every approximation in the
package; it is excluded from benchmarks and exists only for verification.

* :func:`norm_cdf_hp` — N(x) via the complementary error function, relative
  error below 1e-14 on both tails within |x| <= 40 (libm/Cephes erfc are
  correctly rounded to ~1 ulp over the range the quantile domain reaches).
* :func:`inv_cdf_oracle` — N^{-1}(p) by bracketed Newton refinement on
  norm_cdf_hp, driven to an x-unit residual below 1e-12 (three orders of
  magnitude below the tightest bound this suite adjudicates) or a
  :class:`~norminv.errors.ConvergenceError`, never a silent wrong value.
* :func:`oracle_values` — vectorized variant for large scan grids, with a
  per-point scalar rescue for anything that misses the residual target.

The binary64 constants the test-suite pins were derived offline from an
arbitrary-precision evaluation; this oracle reproduces them to < 1e-12.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.special import erfc as _erfc_array

from .errors import ConvergenceError, DomainError, SaturationWarning
from .quantile import HARD_FLOOR, _rat22a_raw, _rat22a_vec

__all__ = [
    "OracleResult",
    "norm_cdf_hp",
    "normal_pdf",
    "inv_cdf_oracle",
    "oracle_values",
]

_SQRT2 = math.sqrt(2.0)
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)

#: |x| beyond which norm_cdf_hp saturates to exact 0/1 (with a warning).
SATURATION_LIMIT = 40.0

#: Upper end of the oracle's p-domain (exclusive). The analytic domain is
#: p < 1 - 1e-16, and every binary64 value below 1.0 already satisfies that
#: (the largest such value is 1 - 2**-53 ~= 1 - 1.11e-16), so the working
#: check is simply p < 1.0.
_P_HIGH = 1.0

#: Residual targets, in x-units: aim for _TARGET, accept _ACCEPT at
#: stagnation, error out above it.
_TARGET = 1e-13
_ACCEPT = 1e-12


def norm_cdf_hp(x):
    """Standard normal CDF, accurate to ~1e-15 relative on both tails.

    Scalar floats return floats; numpy arrays are evaluated elementwise.
    For |x| > 40 the true value is unrepresentable in binary64 and the
    function returns a saturated 0.0/1.0, emitting a
    :class:`~norminv.errors.SaturationWarning`.
    """
    if isinstance(x, np.ndarray):
        arr = np.asarray(x, dtype=np.float64)
        out = 0.5 * _erfc_array(-arr / _SQRT2)
        high = arr > SATURATION_LIMIT
        low = arr < -SATURATION_LIMIT
        if high.any() or low.any():
            warnings.warn(
                f"norm_cdf_hp saturated for |x| > {SATURATION_LIMIT}",
                SaturationWarning, stacklevel=2)
            out = np.where(high, 1.0, np.where(low, 0.0, out))
        return out
    xf = float(x)
    if xf > SATURATION_LIMIT:
        warnings.warn(f"norm_cdf_hp({xf!r}) saturated to 1.0",
                      SaturationWarning, stacklevel=2)
        return 1.0
    if xf < -SATURATION_LIMIT:
        warnings.warn(f"norm_cdf_hp({xf!r}) saturated to 0.0",
                      SaturationWarning, stacklevel=2)
        return 0.0
    return 0.5 * math.erfc(-xf / _SQRT2)


def normal_pdf(x):
    """Standard normal density phi(x); scalar or elementwise on arrays."""
    if isinstance(x, np.ndarray):
        arr = np.asarray(x, dtype=np.float64)
        return _INV_SQRT_2PI * np.exp(-0.5 * arr * arr)
    xf = float(x)
    return _INV_SQRT_2PI * math.exp(-0.5 * xf * xf)


@dataclass(frozen=True)
class OracleResult:
    """A refined quantile value plus the residual of its final verification.

    ``residual`` is |N(value) - p| in probability units, measured on the
    half of the symmetry reduction the refinement actually ran on. Dividing
    by the density gives the error in x-units, which the oracle drives
    below 1e-12.
    """

    value: float
    residual: float

    @property
    def residual_x(self) -> float:
        """The residual expressed in x-units (probability residual / density)."""
        return self.residual / normal_pdf(self.value)


def _cdf64(x: float) -> float:
    # Internal unclamped scalar CDF: callers stay within |x| <~ 37.
    return 0.5 * math.erfc(-x / _SQRT2)


def inv_cdf_oracle(p, *, seed=None) -> OracleResult:
    """N^{-1}(p) by bracketed Newton on :func:`norm_cdf_hp`.

    Domain: exp(-684.5) < p < 1 - 1e-16. The iteration is seeded by the
    package's own fast evaluator (or the optional ``seed``), bracketed around
    the seed, and refined until the x-unit residual drops below 1e-13
    (accepting 1e-12 at stagnation); Newton steps that would leave the
    bracket fall back to bisection. Failure to bracket or converge raises
    :class:`~norminv.errors.ConvergenceError` — never a silent wrong value.

    For p > 0.5 the refinement runs at 1 - p (an exact subtraction in
    binary64) and the result is negated, keeping the CDF on its well-scaled
    side.
    """
    pf = float(p)
    if not (HARD_FLOOR < pf < _P_HIGH):
        raise DomainError(pf, HARD_FLOOR, _P_HIGH, "inv_cdf_oracle")
    if pf > 0.5:
        inner = inv_cdf_oracle(
            1.0 - pf, seed=(-float(seed) if seed is not None else None))
        return OracleResult(-inner.value, inner.residual)

    x = float(seed) if seed is not None else float(_rat22a_raw(pf))

    # Establish a sign-changing bracket around the seed (N is increasing).
    half = 1e-3
    lo, hi = x - half, x + half
    for _ in range(64):
        if _cdf64(lo) - pf <= 0.0 <= _cdf64(hi) - pf:
            break
        half *= 4.0
        lo, hi = x - half, x + half
    else:
        raise ConvergenceError(f"could not bracket N^-1({pf!r}) near seed {x!r}")

    for _ in range(80):
        f = _cdf64(x) - pf
        phi = normal_pdf(x)
        if abs(f) < _TARGET * phi:
            return OracleResult(x, abs(f))
        if f > 0.0:
            hi = x
        elif f < 0.0:
            lo = x
        x_new = x - f / phi
        if not (lo <= x_new <= hi):
            x_new = 0.5 * (lo + hi)  # bisection fallback
        if x_new == x:
            # The bracket cannot shrink further at binary64 resolution.
            if abs(f) < _ACCEPT * phi:
                return OracleResult(x, abs(f))
            raise ConvergenceError(
                f"non-shrinking bracket at p={pf!r}: residual "
                f"{abs(f) / phi:.3e} x-units exceeds {_ACCEPT:g}")
        x = x_new
    raise ConvergenceError(f"no convergence at p={pf!r} after 80 iterations")


def oracle_values(p, *, return_residual=False):
    """Vectorized N^{-1} for scan grids; same residual guarantee as the scalar.

    Runs clamped Newton sweeps from the fast-evaluator seed over the whole
    array, then rescues any point whose x-unit residual is not below 1e-13
    through the scalar bracketed path. Returns the value array, or
    ``(values, residuals_x)`` when ``return_residual`` is true.
    """
    arr = np.atleast_1d(np.asarray(p, dtype=np.float64))
    bad = ~((arr > HARD_FLOOR) & (arr < _P_HIGH))
    if bad.any():
        raise DomainError(float(arr[np.argmax(bad)]), HARD_FLOOR, _P_HIGH,
                          "oracle_values")

    sign = np.where(arr > 0.5, -1.0, 1.0)
    pm = np.where(arr > 0.5, 1.0 - arr, arr)  # exact for p >= 0.5
    x = _rat22a_vec(pm)
    for _ in range(10):
        f = 0.5 * _erfc_array(-x / _SQRT2) - pm
        phi = _INV_SQRT_2PI * np.exp(-0.5 * x * x)
        x = x - np.clip(f / phi, -0.1, 0.1)

    f = 0.5 * _erfc_array(-x / _SQRT2) - pm
    phi = _INV_SQRT_2PI * np.exp(-0.5 * x * x)
    res = np.abs(f) / phi
    stragglers = np.nonzero(res >= _TARGET)[0]
    for i in stragglers:
        got = inv_cdf_oracle(float(pm[i]))
        x[i] = got.value
        res[i] = got.residual_x

    values = sign * x
    if return_residual:
        return values, res
    return values
