"""Shared fixtures: deterministic hypothesis profile, cached heavy scans."""

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "norminv",
    derandomize=True,
    max_examples=150,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("norminv")


@pytest.fixture(scope="session")
def acceptance_grid_arr():
    from norminv.analysis import acceptance_grid

    return acceptance_grid()


@pytest.fixture(scope="session")
def acceptance_oracle(acceptance_grid_arr):
    """Oracle values over the full acceptance grid, computed once per session."""
    from norminv.oracle import oracle_values

    return oracle_values(acceptance_grid_arr)


@pytest.fixture(scope="session")
def narrow_report():
    from norminv.analysis import scan_max_abs_error

    return scan_max_abs_error("rat22a-central")


@pytest.fixture(scope="session")
def wide_report():
    from norminv.analysis import scan_max_abs_error

    return scan_max_abs_error("rat22b-central")


@pytest.fixture(scope="session")
def tail_report():
    from norminv.analysis import scan_max_abs_error

    return scan_max_abs_error("tail32")


def _lex_order(x: float) -> int:
    """Map a binary64 to an integer whose ordering matches the reals."""
    i = int(np.float64(x).view(np.int64))
    return i if i >= 0 else -(i & 0x7FFFFFFFFFFFFFFF)


def ulps_apart(a: float, b: float) -> int:
    """Distance in units-in-the-last-place between two binary64 values."""
    return abs(_lex_order(a) - _lex_order(b))
