"""Error-scan machinery: grids, refinement, equioscillation checks, CSV."""

import io
import math

import numpy as np
import pytest

import _frozen as fz
from norminv.analysis import (
    DEFAULT_PER_DECADE,
    METHODS,
    SCAN_CSV_HEADER,
    Extremum,
    acceptance_grid,
    find_alternation_points,
    get_method,
    linear_grid,
    log_grid,
    run_scan,
    scan_max_abs_error,
    summary_lines,
    vallee_poussin_bracket,
    verify_equioscillation,
    write_scan_csv,
)
from norminv.errors import DomainError


# ---------------------------------------------------------------------------
# Grids.
# ---------------------------------------------------------------------------

def test_linear_grid_inclusive_endpoints():
    g = linear_grid(0.1, 0.2, 0.01)
    assert g[0] == 0.1 and g[-1] == 0.2
    assert g.size == 11
    assert np.all(np.diff(g) > 0.0)


def test_linear_grid_ragged_step_still_reaches_hi():
    g = linear_grid(0.0, 1.0, 0.3)
    assert g[0] == 0.0 and g[-1] == 1.0
    assert np.all(np.diff(g) > 0.0)


def test_linear_grid_degenerate_region():
    g = linear_grid(0.5, 0.5, 0.1)
    assert g.tolist() == [0.5]


def test_linear_grid_rejects_bad_args():
    with pytest.raises(ValueError):
        linear_grid(0.1, 0.2, 0.0)
    with pytest.raises(ValueError):
        linear_grid(0.2, 0.1, 0.01)


def test_log_grid_half_open():
    g = log_grid(1e-3, 1e-1, DEFAULT_PER_DECADE)
    assert g[0] == 1e-3
    assert g[-1] < 1e-1
    assert g.size == 800  # 2 decades at 400/decade, upper endpoint excluded
    assert np.all(np.diff(g) > 0.0)


def test_log_grid_rejects_bad_args():
    with pytest.raises(ValueError):
        log_grid(0.0, 1e-1)
    with pytest.raises(ValueError):
        log_grid(1e-1, 1e-3)


def test_acceptance_grid_shape(acceptance_grid_arr):
    g = acceptance_grid_arr
    assert g.size == fz.ACCEPTANCE_GRID_SIZE
    assert g[0] == 1e-290
    assert g[-1] == 1.0 - 2.0**-53
    assert np.all(np.diff(g) > 0.0)  # sorted, unique


def test_acceptance_grid_is_deterministic(acceptance_grid_arr):
    assert np.array_equal(acceptance_grid(), acceptance_grid_arr)


def test_tail_scan_grid_endpoint():
    g = log_grid(1e-290, 0.0465, DEFAULT_PER_DECADE)
    assert g[-1] == fz.TAIL_GRID_LAST_P


# ---------------------------------------------------------------------------
# Registry.
# ---------------------------------------------------------------------------

def test_method_registry_names():
    assert set(METHODS) == {
        "rat22a", "rat22b", "rat22a-central", "rat22b-central", "tail32",
        "as-original", "as-improved", "beasley-springer",
        "beasley-springer-central",
    }


def test_get_method_unknown_raises_with_choices():
    with pytest.raises(ValueError, match="rat22a"):
        get_method("nope")


def test_scan_outside_method_domain_raises():
    with pytest.raises(DomainError):
        run_scan("tail32", (0.5, 0.6))


# ---------------------------------------------------------------------------
# Narrow central fit: frozen 12-point equioscillation.
# ---------------------------------------------------------------------------

def test_narrow_extrema_match_frozen(narrow_report):
    ext = narrow_report.extrema
    assert len(ext) == len(fz.NARROW_EXTREMA) == 12
    last = len(ext) - 1
    for i, (e, (fp, fe, fs)) in enumerate(zip(ext, fz.NARROW_EXTREMA)):
        assert e.p == pytest.approx(fp, abs=1e-6)
        # interior extrema refine sharply; boundary ones sit on the region edge
        tol = 1e-9 if i in (0, last) else 1e-12
        assert e.abs_err == pytest.approx(fe, abs=tol)
        assert e.sign == fs


def test_narrow_equioscillates(narrow_report):
    assert verify_equioscillation(narrow_report, 1e-5)
    signs = [e.sign for e in narrow_report.extrema]
    assert all(a * b < 0 for a, b in zip(signs, signs[1:]))


def test_narrow_extrema_mirror_symmetric(narrow_report):
    ext = narrow_report.extrema
    for i in range(len(ext) // 2):
        j = len(ext) - 1 - i
        assert ext[i].p + ext[j].p == pytest.approx(1.0, abs=1e-6)
        assert ext[i].abs_err == pytest.approx(ext[j].abs_err, abs=1e-10)
        assert ext[i].sign == -ext[j].sign


def test_narrow_vallee_poussin_bracket(narrow_report):
    lo, hi = vallee_poussin_bracket(narrow_report)
    assert hi == narrow_report.max_abs_error
    assert lo <= hi < 2.5e-5
    # the fit is within a hair of optimal: tight bracket
    assert (hi - lo) / hi < 1e-5


# ---------------------------------------------------------------------------
# Wide central fit.
# ---------------------------------------------------------------------------

def test_wide_extrema_match_frozen(wide_report):
    ext = wide_report.extrema
    assert len(ext) == len(fz.WIDE_EXTREMA) == 12
    for e, (fp, fe, fs) in zip(ext, fz.WIDE_EXTREMA):
        assert e.p == pytest.approx(fp, abs=1e-6)
        assert e.abs_err == pytest.approx(fe, abs=1e-9)
        assert e.sign == fs


def test_wide_max_matches_frozen(wide_report):
    assert wide_report.max_abs_error == pytest.approx(fz.WIDE_MAX, rel=1e-9)
    assert wide_report.argmax_p == pytest.approx(fz.WIDE_ARGMAX, abs=1e-6)
    assert wide_report.max_abs_error < 1.16e-4


def test_wide_alternates_but_wider_spread(wide_report):
    # alternating, but magnitudes spread ~2.1e-5 relative: not a tight
    # equioscillation at 1e-5, passes at 5e-5
    assert not verify_equioscillation(wide_report, 1e-5)
    assert verify_equioscillation(wide_report, 5e-5)


# ---------------------------------------------------------------------------
# Tail fit.
# ---------------------------------------------------------------------------

def test_tail_extrema_match_frozen(tail_report):
    ext = tail_report.extrema
    assert len(ext) == len(fz.TAIL_EXTREMA_R) == 7
    # frozen rows are sorted by r = sqrt(-2 ln p), i.e. by descending p;
    # scan extrema are sorted by ascending p -> align against the reverse.
    # Both end extrema are grid-edge artifacts of the scan window: the low-p
    # end stops at 1e-290 (r = 36.54, short of the frozen r = 37 extremum)
    # and the high-p end stops one grid step short of the 0.0465 cut.
    frozen = list(reversed(fz.TAIL_EXTREMA_R))
    tols = [(0.5, 1e-5)] + [(1e-3, 1e-12)] * 5 + [(0.01, 2e-6)]
    for e, (fr, fe, fs), (rtol, etol) in zip(ext, frozen, tols):
        r = math.sqrt(-2.0 * math.log(e.p))
        assert r == pytest.approx(fr, abs=rtol)
        assert e.abs_err == pytest.approx(fe, abs=etol)
        assert e.sign == fs


def test_tail_scan_max_matches_frozen(tail_report):
    assert tail_report.max_abs_error == pytest.approx(fz.TAIL_GRID_MAX, rel=1e-9)
    assert tail_report.argmax_p == pytest.approx(fz.TAIL_GRID_ARGMAX, rel=1e-3)
    assert tail_report.max_abs_error < 2.458e-5


def test_tail_alternates_with_endpoint_spread(tail_report):
    # signs alternate along the whole chain ...
    assert verify_equioscillation(tail_report, float("inf"))
    # ... but the scan-window endpoints depress the smallest magnitude
    # (relative spread ~0.25), so tight equioscillation does not hold
    assert not verify_equioscillation(tail_report, 0.2)
    assert verify_equioscillation(tail_report, 0.3)
    assert not verify_equioscillation(tail_report, 1e-4)


def test_tail_supremum_pinned_just_outside_grid():
    # the scanned grid stops one step short of the 0.0465 cut; immediately
    # below the cut the fit's |error| exceeds the grid max (frozen supremum)
    from norminv.oracle import inv_cdf_oracle
    from norminv.quantile import tail_3_2

    p = math.nextafter(0.0465, 0.0)
    err = abs(tail_3_2(p) - inv_cdf_oracle(p).value)
    assert err == pytest.approx(fz.TAIL_SUPREMUM_AT_CUT, rel=1e-6)
    assert err > 2.458e-5


# ---------------------------------------------------------------------------
# Baselines are not equioscillating fits.
# ---------------------------------------------------------------------------

def test_as_original_not_minimax():
    rep = scan_max_abs_error("as-original", (0.05, 0.95), 1e-4)
    assert len(rep.extrema) >= 3
    assert not verify_equioscillation(rep, 1e-5)
    mags = [e.abs_err for e in rep.extrema]
    assert max(mags) / min(mags) > 1.1


# ---------------------------------------------------------------------------
# Scan mechanics.
# ---------------------------------------------------------------------------

def test_chunking_does_not_change_results():
    d1 = run_scan("rat22a-central", (0.4, 0.6), 1e-4, chunks=1)
    d4 = run_scan("rat22a-central", (0.4, 0.6), 1e-4, chunks=4)
    assert d1.report == d4.report
    assert np.array_equal(d1.grid, d4.grid)
    assert np.array_equal(d1.approx, d4.approx)
    assert np.array_equal(d1.oracle, d4.oracle)
    assert np.array_equal(d1.err, d4.err)


def test_refinement_insensitive_to_step():
    a = scan_max_abs_error("rat22a-central", (0.4, 0.6), 1e-4)
    b = scan_max_abs_error("rat22a-central", (0.4, 0.6), 5e-5)
    assert len(a.extrema) == len(b.extrema)
    assert a.max_abs_error == pytest.approx(b.max_abs_error, abs=1e-12)


def test_degenerate_region_single_point():
    data = run_scan("rat22a-central", (0.5, 0.5))
    rep = data.report
    assert len(rep.extrema) == 1
    assert rep.extrema[0] == Extremum(p=0.5, abs_err=0.0, sign=0)
    assert rep.max_abs_error == 0.0
    assert verify_equioscillation(rep, 0.0)  # vacuous for one extremum


def test_find_alternation_points_equals_scan_extrema():
    pts = find_alternation_points("rat22a-central", (0.4, 0.6), 1e-4)
    rep = scan_max_abs_error("rat22a-central", (0.4, 0.6), 1e-4)
    assert pts == rep.extrema


# ---------------------------------------------------------------------------
# verify_equioscillation on hand-built inputs.
# ---------------------------------------------------------------------------

def _ext(p, err, sign):
    return Extremum(p=p, abs_err=err, sign=sign)


def test_verify_alternating_tight():
    seq = [_ext(0.1, 1.0, 1), _ext(0.2, 1.0, -1), _ext(0.3, 1.0, 1)]
    assert verify_equioscillation(seq, 0.0)


def test_verify_rejects_sign_repeat():
    seq = [_ext(0.1, 1.0, 1), _ext(0.2, 1.0, 1)]
    assert not verify_equioscillation(seq, 1.0)


def test_verify_rejects_wide_spread():
    seq = [_ext(0.1, 1.0, 1), _ext(0.2, 0.5, -1)]
    assert not verify_equioscillation(seq, 0.4)
    assert verify_equioscillation(seq, 0.5)


def test_verify_vacuous_cases():
    assert verify_equioscillation([], 0.0)
    assert verify_equioscillation([_ext(0.1, 1.0, 1)], 0.0)


def test_vallee_poussin_requires_extrema():
    with pytest.raises(ValueError):
        vallee_poussin_bracket([])


# ---------------------------------------------------------------------------
# Emission.
# ---------------------------------------------------------------------------

def test_scan_csv_format_and_determinism():
    data = run_scan("rat22a-central", (0.49, 0.51), 1e-3)
    buf1, buf2 = io.StringIO(), io.StringIO()
    write_scan_csv(buf1, data)
    write_scan_csv(buf2, data)
    assert buf1.getvalue() == buf2.getvalue()  # byte-deterministic

    lines = buf1.getvalue().splitlines()
    assert lines[0] == SCAN_CSV_HEADER
    assert len(lines) == 1 + data.grid.size
    # repr round-trip: every float column parses back bit-exactly
    for i, line in enumerate(lines[1:]):
        cols = line.split(",")
        assert cols[0] == "rat22a-central"
        assert float(cols[1]) == 0.49 and float(cols[2]) == 0.51
        assert float(cols[3]) == data.grid[i]
        assert float(cols[4]) == data.approx[i]
        assert float(cols[5]) == data.oracle[i]
        assert float(cols[6]) == data.err[i]


def test_summary_lines_keys(narrow_report):
    lines = summary_lines(narrow_report)
    keys = [ln.split("=", 1)[0] for ln in lines]
    assert keys == [
        "method", "region_lo", "region_hi", "grid", "max_abs_error",
        "argmax_p", "extrema_count", "alternating", "spread",
        "vallee_poussin_lo", "vallee_poussin_hi",
    ]
    kv = dict(ln.split("=", 1) for ln in lines)
    assert kv["method"] == "rat22a-central"
    assert int(kv["extrema_count"]) == 12
    assert kv["alternating"] == "true"
    assert float(kv["max_abs_error"]) == narrow_report.max_abs_error
