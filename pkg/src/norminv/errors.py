"""Exception and warning types shared across the package."""

from __future__ import annotations


class NormInvError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(NormInvError, ValueError):
    """An input probability (or CDF argument) lies outside a method's domain.

    The message always names the offending value and the valid interval, so
    callers (and the CLI) can surface it verbatim.
    """

    def __init__(self, p, lo, hi, method, *, lo_open=True, hi_open=True):
        self.p = p
        self.lo = lo
        self.hi = hi
        self.method = method
        lb = "(" if lo_open else "["
        rb = ")" if hi_open else "]"
        super().__init__(
            f"p={p!r} is outside the valid interval {lb}{lo!r}, {hi!r}{rb} of {method}"
        )


class ConvergenceError(NormInvError, RuntimeError):
    """The oracle's bracketed Newton refinement failed to converge.

    Raised instead of ever returning a silently wrong value.
    """


class SaturationWarning(UserWarning):
    """norm_cdf_hp was called with |x| > 40 and returned a saturated 0 or 1."""
