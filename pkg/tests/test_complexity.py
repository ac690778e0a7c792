"""Evolution cost gauge: values, the distance bound, zero counts."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from halfcycle import (APERIODIC_MEAN_ABS_PHASE, PreconditionError, aperiodic_spectrum,
                       check_lower_bound, complexity, minimal_periodic_spectrum,
                       overlap_at, zero_count)
from halfcycle.spectral import OrbitSpectrum


def single_phase(phase):
    return OrbitSpectrum(phases=np.array([phase]), weights=np.array([1.0]), period=1)


def test_zero_phase_has_zero_cost():
    spec = single_phase(0.0)
    for t in (0.0, 0.5, 1.0, 7.0):
        assert complexity(spec, t).value == 0.0


def test_minimal_p2_values():
    spec = minimal_periodic_spectrum(2)
    reading = complexity(spec, 0.5)
    assert reading.mean_abs_phase == pytest.approx(3 * math.pi / 2)
    assert reading.value == pytest.approx(3 * math.pi / 4)


def test_minimal_p4_mean_abs_phase():
    spec = minimal_periodic_spectrum(4)
    assert complexity(spec, 1.0).value == pytest.approx(7 * math.pi / 4)


def test_aperiodic_mean_abs_phase_is_pi():
    reading = complexity(aperiodic_spectrum(), 0.5)
    assert reading.mean_abs_phase == APERIODIC_MEAN_ABS_PHASE == pytest.approx(math.pi)
    assert reading.value == pytest.approx(math.pi / 2)


def test_cost_is_linear_in_t():
    spec = minimal_periodic_spectrum(8)
    assert complexity(spec, 0.8).value == pytest.approx(4 * complexity(spec, 0.2).value)


def test_negative_time_rejected():
    with pytest.raises(PreconditionError):
        complexity(minimal_periodic_spectrum(2), -0.1)


def test_lower_bound_p2_halfstep():
    spec = minimal_periodic_spectrum(2)
    lhs = 2 - 2 * (overlap_at(spec, 0.5)).real
    assert lhs == pytest.approx(1.0)
    assert lhs <= 2 * complexity(spec, 0.5).value


def test_lower_bound_grid_report():
    spec = minimal_periodic_spectrum(2)
    report = check_lower_bound(spec, np.linspace(0, 1, 1000))
    assert report.ok
    assert report.n_points == 1000
    assert report.max_slack_violation <= 1e-9


def test_lower_bound_boundary_at_zero():
    report = check_lower_bound(minimal_periodic_spectrum(4), [0.0])
    assert report.ok  # 0 <= 0


def test_orthogonal_evolution_costs_at_least_one():
    for p in (2, 4, 8, 64):
        spec = minimal_periodic_spectrum(p)
        lhs = 2 - 2 * overlap_at(spec, 1.0).real
        assert lhs == pytest.approx(2.0, abs=1e-9)  # orthogonal after one step
        assert complexity(spec, 1.0).value >= 1.0


def test_zero_count_requires_resolution():
    with pytest.raises(PreconditionError):
        zero_count(minimal_periodic_spectrum(2), 100)


def test_zero_count_single_phase_is_zero():
    # pure phase of magnitude 1: neither component changes sign on one cycle
    assert zero_count(single_phase(1.0), 1024) == 0


def test_zero_count_frozen_minimal_family():
    # dense-sampling oracle values at the declared diagnostic resolution
    expected = {2: 2, 4: 4, 8: 7}
    for p, count in expected.items():
        assert zero_count(minimal_periodic_spectrum(p), 4096) == count


def test_zero_count_grows_with_mean_abs_phase():
    counts = [zero_count(minimal_periodic_spectrum(p), 4096) for p in (2, 4, 8)]
    means = [complexity(minimal_periodic_spectrum(p), 1.0).value for p in (2, 4, 8)]
    assert counts == sorted(counts)
    assert means == sorted(means)


@st.composite
def point_spectra(draw):
    n = draw(st.integers(1, 6))
    raw = draw(st.lists(st.floats(0.05, 1.0), min_size=n, max_size=n))
    phases = draw(st.lists(st.floats(0.0, 4 * math.pi), min_size=n, max_size=n))
    return OrbitSpectrum(phases=np.asarray(phases),
                         weights=np.asarray(raw) / np.sum(raw), period=n)


@given(point_spectra())
@settings(max_examples=80, deadline=None)
def test_lower_bound_holds_for_arbitrary_spectra(spec):
    assert check_lower_bound(spec, np.linspace(0, 2, 200)).ok
