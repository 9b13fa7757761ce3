"""Reference evaluators the library's fits are compared against.

Three full-range normal-quantile approximations:

* :func:`as_original` — the classic Abramowitz & Stegun 26.2.23 formula
  (coefficients in :mod:`norminv.published_coeffs`); |error| < 4.5e-4.
* :func:`as_improved` — this library's refit of the same (2,3)-in-t shape,
  |error| < 8e-5: over five times more accurate than the original at
  identical evaluation cost.
* :func:`beasley_springer` — Beasley & Springer's Algorithm AS 111
  (coefficients in :mod:`norminv.published_coeffs`), the standard
  higher-accuracy baseline.

Sign convention: the handbook formula produces the positive deviate for the
tail it is evaluated on; every function here returns the mathematically
signed N^{-1}(p) (negative for p < 1/2) so the error scanner can treat all
methods uniformly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numba as nb
import numpy as np

from . import published_coeffs as pc
from .errors import DomainError
from .quantile import HARD_FLOOR

__all__ = [
    "AsImprovedCoefficients",
    "AS_IMPROVED",
    "as_original",
    "as_improved",
    "beasley_springer",
    "BS_CENTRAL_REGION",
]


@dataclass(frozen=True)
class AsImprovedCoefficients:
    """Constants of the improved handbook-shape fit.

    x_p = t - (c2 t^2 + c1 t + c0) / (d3 t^3 + d2 t^2 + d1 t + 1),
    t = sqrt(-2 ln p) for p <= 1/2 (upper half by odd symmetry).
    """

    c0: float
    c1: float
    c2: float
    d1: float
    d2: float
    d3: float


#: The improved fit's constants (offline minimax derivation, frozen digits).
AS_IMPROVED = AsImprovedCoefficients(
    c0=2.653962002601684482,
    c1=1.561533700212080345,
    c2=0.061146735765196993,
    d1=1.904875182836498708,
    d2=0.454055536444233510,
    d3=0.009547745327068945,
)

#: The p-interval on which Beasley-Springer uses its central rational
#: (|p - 1/2| <= 0.42); its tail formula is used outside.
BS_CENTRAL_REGION = (0.5 - pc.BS_CENTRAL_SPLIT, 0.5 + pc.BS_CENTRAL_SPLIT)


# --------------------------------------------------------------------------
# Compiled kernels (constants frozen at JIT time from the annotated sources).
# --------------------------------------------------------------------------

_AS_C0, _AS_C1, _AS_C2 = pc.AS_C0, pc.AS_C1, pc.AS_C2
_AS_D1, _AS_D2, _AS_D3 = pc.AS_D1, pc.AS_D2, pc.AS_D3

_AI_C0, _AI_C1, _AI_C2 = AS_IMPROVED.c0, AS_IMPROVED.c1, AS_IMPROVED.c2
_AI_D1, _AI_D2, _AI_D3 = AS_IMPROVED.d1, AS_IMPROVED.d2, AS_IMPROVED.d3

_BS_A0, _BS_A1, _BS_A2, _BS_A3 = pc.BS_A0, pc.BS_A1, pc.BS_A2, pc.BS_A3
_BS_B1, _BS_B2, _BS_B3, _BS_B4 = pc.BS_B1, pc.BS_B2, pc.BS_B3, pc.BS_B4
_BS_C0, _BS_C1, _BS_C2, _BS_C3 = pc.BS_C0, pc.BS_C1, pc.BS_C2, pc.BS_C3
_BS_D1, _BS_D2 = pc.BS_D1, pc.BS_D2
_BS_SPLIT = pc.BS_CENTRAL_SPLIT


@nb.njit(cache=True)
def _as_original_raw(p):
    if p > 0.5:
        t = math.sqrt(-2.0 * math.log(1.0 - p))
        return t - ((_AS_C2 * t + _AS_C1) * t + _AS_C0) / (
            ((_AS_D3 * t + _AS_D2) * t + _AS_D1) * t + 1.0)
    t = math.sqrt(-2.0 * math.log(p))
    return -(t - ((_AS_C2 * t + _AS_C1) * t + _AS_C0) / (
        ((_AS_D3 * t + _AS_D2) * t + _AS_D1) * t + 1.0))


@nb.njit(cache=True)
def _as_improved_raw(p):
    if p > 0.5:
        t = math.sqrt(-2.0 * math.log(1.0 - p))
        return t - ((_AI_C2 * t + _AI_C1) * t + _AI_C0) / (
            ((_AI_D3 * t + _AI_D2) * t + _AI_D1) * t + 1.0)
    t = math.sqrt(-2.0 * math.log(p))
    return -(t - ((_AI_C2 * t + _AI_C1) * t + _AI_C0) / (
        ((_AI_D3 * t + _AI_D2) * t + _AI_D1) * t + 1.0))


@nb.njit(cache=True)
def _beasley_springer_raw(p):
    q = p - 0.5
    if abs(q) <= _BS_SPLIT:
        r = q * q
        num = q * (((_BS_A3 * r + _BS_A2) * r + _BS_A1) * r + _BS_A0)
        den = ((((_BS_B4 * r + _BS_B3) * r + _BS_B2) * r + _BS_B1) * r) + 1.0
        return num / den
    r = p if q < 0.0 else 1.0 - p
    s = math.sqrt(-math.log(r))
    v = (((_BS_C3 * s + _BS_C2) * s + _BS_C1) * s + _BS_C0) / (
        (_BS_D2 * s + _BS_D1) * s + 1.0)
    return v if q > 0.0 else -v


@nb.vectorize(["float64(float64)"], nopython=True, cache=True)
def _as_original_vec(p):
    return _as_original_raw(p)


@nb.vectorize(["float64(float64)"], nopython=True, cache=True)
def _as_improved_vec(p):
    return _as_improved_raw(p)


@nb.vectorize(["float64(float64)"], nopython=True, cache=True)
def _beasley_springer_vec(p):
    return _beasley_springer_raw(p)


# --------------------------------------------------------------------------
# Validated public surface.
# --------------------------------------------------------------------------

def _dispatch(p, kernel, ufunc, lo, hi, method):
    if isinstance(p, np.ndarray):
        arr = np.asarray(p, dtype=np.float64)
        bad = ~((arr > lo) & (arr < hi))
        if bad.any():
            raise DomainError(float(arr[np.argmax(bad)]), lo, hi, method)
        return ufunc(arr)
    pf = float(p)
    if not (lo < pf < hi):
        raise DomainError(pf, lo, hi, method)
    return float(kernel(pf))


def as_original(p):
    """Handbook formula 26.2.23, signed: N^{-1}(p) with |error| < 4.5e-4.

    Domain exp(-684.5) < p < 1; raises DomainError at p = 0 or 1.
    """
    return _dispatch(p, _as_original_raw, _as_original_vec,
                     HARD_FLOOR, 1.0, "as_original")


def as_improved(p):
    """Refit of the handbook shape with |error| < 8e-5 at the same cost.

    Domain exp(-684.5) < p < 1.
    """
    return _dispatch(p, _as_improved_raw, _as_improved_vec,
                     HARD_FLOOR, 1.0, "as_improved")


def beasley_springer(p):
    """Beasley-Springer AS 111, signed N^{-1}(p); exact zero at p = 0.5.

    Central (3,4) rational for |p - 1/2| <= 0.42, log-sqrt tail outside.
    Domain: the open interval (0, 1); like the other evaluators the tail is
    only meaningful above exp(-684.5), and scans use that floor.
    """
    return _dispatch(p, _beasley_springer_raw, _beasley_springer_vec,
                     0.0, 1.0, "beasley_springer")
