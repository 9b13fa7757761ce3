"""Coefficient sets for the library's rational approximations.

Each set is a rational function P(x)/Q(x) with coefficients stored in
ascending powers and a monic denominator (leading coefficient exactly 1).
Alongside the plain ratio, a set may carry the derived "nested" constants
(polynomial quotient and remainder of P/Q), which evaluate the same function
with one fewer multiplication:

    P(x)/Q(x) = quotient(x) + remainder(x)/Q(x)

The nested form is the normative evaluation order in the hot path; the plain
ratio is kept for cross-checking. Both evaluators here are pure Python and
exist for verification — the compiled kernels in :mod:`norminv.quantile`
hard-code the same constants.

Externally published baseline constants live in
:mod:`norminv.published_coeffs`; the sets below are this library's own
minimax fits (derived offline by Remez-style optimization at high precision
and frozen to the printed digits).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

Poly = Tuple[float, ...]  # polynomial coefficients, ascending powers


def horner(coeffs: Poly, x: float) -> float:
    """Evaluate a polynomial given in ascending coefficient order."""
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


# --------------------------------------------------------------------------
# Compensated (double-double) helpers for the verification evaluators.
#
# Near the upper edge of the central sets' argument range the denominator
# Q(r) approaches a root, so plain binary64 evaluation of either form loses
# ~10-17 ulp to rounding there. The cross-check evaluators therefore run in
# doubled precision and round once at the end: each tracks its exact
# rational value to ~1 ulp, so comparing the two forms certifies that the
# plain and nested constants describe the same function instead of
# measuring evaluation noise. The compiled hot-path kernels are unaffected;
# their accuracy is adjudicated against the oracle at the 1e-5 level.
# --------------------------------------------------------------------------

def _two_sum(a: float, b: float) -> Tuple[float, float]:
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _split(a: float) -> Tuple[float, float]:
    c = 134217729.0 * a  # 2**27 + 1 (Dekker splitter)
    hi = c - (c - a)
    return hi, a - hi


def _two_prod(a: float, b: float) -> Tuple[float, float]:
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _dd_horner(coeffs: Poly, x: float) -> Tuple[float, float]:
    """Polynomial value as an unevaluated (hi, lo) double-double."""
    hi, lo = 0.0, 0.0
    for c in reversed(coeffs):
        p, pe = _two_prod(hi, x)
        pe += lo * x
        hi, e = _two_sum(p, c)
        lo = pe + e
    return hi, lo


def _dd_div(ph: float, pl: float, qh: float, ql: float) -> Tuple[float, float]:
    """(ph+pl)/(qh+ql) as a corrected (quotient, error) pair."""
    r = ph / qh
    t, te = _two_prod(r, qh)
    return r, (((ph - t) - te) + pl - r * ql) / qh


def polynomial_divide(numerator: Poly, denominator: Poly) -> Tuple[Poly, Poly]:
    """Long-divide numerator/denominator; return (quotient, remainder).

    All polynomials are ascending-order coefficient tuples. The remainder has
    degree strictly below the denominator's. Plain binary64 arithmetic — used
    to cross-check that independently printed nested constants are consistent
    with the plain ratio, not to manufacture them.
    """
    num = list(reversed(numerator))
    den = list(reversed(denominator))
    if len(num) < len(den):
        return (0.0,), tuple(numerator)
    lead = den[0]
    rem = num[:]
    quo = []
    for i in range(len(num) - len(den) + 1):
        c = rem[i] / lead
        quo.append(c)
        for j, d in enumerate(den):
            rem[i + j] -= c * d
    tail = rem[len(quo):]
    if not tail:
        tail = [0.0]
    return tuple(reversed(quo)), tuple(reversed(tail))


@dataclass(frozen=True)
class RationalCoefficients:
    """A named rational-approximation coefficient set.

    ``numerator``/``denominator`` are ascending-order tuples; the denominator
    is monic (its highest-order coefficient is exactly 1, as normalized in
    the fits). ``nested`` optionally holds the (quotient, remainder) pair of
    the one-multiplication-saving form. The nested and plain forms are
    mathematically redundant; the test suite checks cross-consistency to
    1e-12 relative and value agreement to 4 ulp on sampled points.
    """

    name: str
    numerator: Poly
    denominator: Poly
    nested: Optional[Tuple[Poly, Poly]] = None
    notes: str = ""

    def __post_init__(self):
        if self.denominator[-1] != 1.0:
            raise ValueError(f"{self.name}: denominator must be monic")
        if self.nested is not None:
            quotient, remainder = self.nested
            if len(remainder) > len(self.denominator) - 1:
                raise ValueError(f"{self.name}: nested remainder degree too high")
            want = len(self.numerator) - len(self.denominator) + 1
            if len(quotient) != max(want, 1):
                raise ValueError(f"{self.name}: nested quotient degree mismatch")

    @property
    def degree(self) -> Tuple[int, int]:
        """(numerator degree, denominator degree) — the (m, n) of the scheme."""
        return (len(self.numerator) - 1, len(self.denominator) - 1)

    def eval_plain(self, x: float) -> float:
        """Plain ratio P(x)/Q(x), compensated Horner + corrected division.

        Runs in doubled precision and rounds once, so the result is within
        an ulp or two of the exactly rounded ratio even where Q(x) is small.
        """
        ph, pl = _dd_horner(self.numerator, x)
        qh, ql = _dd_horner(self.denominator, x)
        r, e = _dd_div(ph, pl, qh, ql)
        return r + e

    def eval_nested(self, x: float) -> float:
        """Nested form quotient(x) + remainder(x)/Q(x); falls back to plain.

        Same doubled-precision treatment as :meth:`eval_plain`, so agreement
        between the two certifies the constants, not the rounding path.
        """
        if self.nested is None:
            return self.eval_plain(x)
        quotient, remainder = self.nested
        uh, ul = _dd_horner(quotient, x)
        rh, rl = _dd_horner(remainder, x)
        qh, ql = _dd_horner(self.denominator, x)
        d, de = _dd_div(rh, rl, qh, ql)
        s, se = _two_sum(uh, d)
        return s + (ul + de + se)


# --------------------------------------------------------------------------
# The library's fits. All digits are frozen outputs of the offline minimax
# derivation; excess digits beyond binary64 round at parse time, which is
# fine because the evaluators run entirely in binary64.
# --------------------------------------------------------------------------

# The nested constants are the normative ones (the hot-path kernels hard-code
# them); each central set's plain numerator is the recombination
# A_k = r_k + q0*d_k of those constants, rounded to binary64. Rounding the
# two forms' constants to decimal digits independently would leave them
# describing minutely different functions, and division by the small
# denominator near a region edge amplifies that last-digit mismatch to tens
# of ulp. Each literal below is a faithful rounding of the exact
# recombination (within one ulp; the test suite re-derives and checks this),
# and among the faithful roundings we freeze the combination whose rational
# function stays closest to the nested form over the argument range — the
# last-ulp choice is visible at the few-ulp level near the range's upper
# corner, where Q approaches a root. Either choice prints identically at the
# 15-significant-digit level.
_NARROW_QUOTIENT = (1.246899760652504,)
_NARROW_REMAINDER = (0.195740115269792, -0.652871358365296)
_NARROW_DENOMINATOR = (0.155331081623168, -0.839293158122257, 1.0)

#: Narrow central (2,2) scheme in r = (p - 1/2)^2, for p in [0.0465, 0.9535].
#: The full approximation is q * P(r)/Q(r) with q = p - 1/2.
#: Max absolute error 2.4943e-5, equioscillating at 12 points.
CENTRAL_NARROW = RationalCoefficients(
    name="central-2-2-narrow",
    numerator=(0.3894224037676147, -1.6993857963452224, 1.246899760652504),
    denominator=_NARROW_DENOMINATOR,
    nested=(_NARROW_QUOTIENT, _NARROW_REMAINDER),
    notes="(2,2) in r = (p-1/2)^2 on [0.0465, 0.9535]; |err| < 2.5e-5",
)

_WIDE_QUOTIENT = (1.365020122861334,)
_WIDE_REMAINDER = (0.151015505647689, -0.5303572634357367)
_WIDE_DENOMINATOR = (0.132089632343748, -0.7607324991323768, 1.0)

#: Wide central (2,2) scheme in r = (p - 1/2)^2, for p in [0.025, 0.975].
#: Trades accuracy (max error 1.1596e-4) for fewer log/sqrt tail evaluations.
CENTRAL_WIDE = RationalCoefficients(
    name="central-2-2-wide",
    numerator=(0.33132051181826033, -1.5687724328660235, 1.365020122861334),
    denominator=_WIDE_DENOMINATOR,
    nested=(_WIDE_QUOTIENT, _WIDE_REMAINDER),
    notes="(2,2) in r = (p-1/2)^2 on [0.025, 0.975]; |err| < 1.16e-4",
)

#: Tail (3,2) scheme in r = sqrt(-2 ln p), for exp(-684.5) < p < 0.0465.
#: Approximates the (negative) quantile directly; max scan error 2.4574e-5.
TAIL_3_2 = RationalCoefficients(
    name="tail-3-2",
    numerator=(
        16.896201479841517652,
        -2.793522347562718412,
        -8.731478129786263127,
        -1.000182518730158122,
    ),
    denominator=(7.173787663925508066, 8.759693508958633869, 1.0),
    nested=(
        (0.029814187308200211, -1.000182518730158122),
        (16.682320830719986527, 4.120411523939115059),
    ),
    notes="(3,2) in r = sqrt(-2 ln p) on (exp(-684.5), 0.0465); |err| < 2.458e-5 on the scan grid",
)

#: All first-party coefficient sets by name.
COEFFICIENT_SETS = {
    c.name: c for c in (CENTRAL_NARROW, CENTRAL_WIDE, TAIL_3_2)
}
