"""Spectral core: minimal spectra, overlap values, amplitude profiles."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from halfcycle import (PreconditionError, aperiodic_spectrum, eigenbasis,
                       halfstep_profile_aperiodic, halfstep_profile_periodic,
                       minimal_periodic_spectrum, nu_of, overlap_at)
from halfcycle.spectral import OrbitSpectrum

P_RANGE = [2 ** k for k in range(1, 11)]  # 2, 4, ..., 1024


def test_minimal_spectrum_p2():
    spec = minimal_periodic_spectrum(2)
    assert np.allclose(sorted(spec.phases), [0.0, 3 * np.pi])
    assert np.allclose(spec.weights, [0.5, 0.5])


def test_minimal_spectrum_p4_phases_over_2pi():
    spec = minimal_periodic_spectrum(4)
    assert np.allclose(spec.phases / (2 * np.pi), [0.0, 5 / 4, 1 / 2, 7 / 4])


@pytest.mark.parametrize("p", P_RANGE)
def test_minimal_weights_are_uniform(p):
    spec = minimal_periodic_spectrum(p)
    assert np.allclose(spec.weights, 1.0 / p, atol=0, rtol=0)
    assert abs(spec.weights.sum() - 1.0) < 1e-12


def test_minimal_rejects_odd_period():
    with pytest.raises(PreconditionError):
        minimal_periodic_spectrum(3)


def test_overlap_at_zero_is_one():
    for p in (2, 4, 64):
        assert overlap_at(minimal_periodic_spectrum(p), 0) == pytest.approx(1.0)


def test_overlap_orthogonality_p4():
    assert abs(overlap_at(minimal_periodic_spectrum(4), 1)) < 1e-10


def test_overlap_p2_half_cycle():
    val = overlap_at(minimal_periodic_spectrum(2), 0.5)
    assert val == pytest.approx((1 + 1j) / 2)
    assert abs(val) == pytest.approx(1 / math.sqrt(2))


def test_overlap_rejects_aperiodic():
    with pytest.raises(PreconditionError):
        overlap_at(aperiodic_spectrum(), 0.5)


@pytest.mark.parametrize("p", P_RANGE)
def test_overlap_is_kronecker_delta_at_integers(p):
    spec = minimal_periodic_spectrum(p)
    ks = np.arange(1, p + 1)
    vals = overlap_at(spec, ks)
    assert abs(vals[-1] - 1.0) < 1e-10  # k = p
    assert np.max(np.abs(vals[:-1])) < 1e-10


@pytest.mark.parametrize("p", P_RANGE)
def test_halfstep_profile_closed_form_matches_direct_sum(p):
    profile = halfstep_profile_periodic(p)
    direct = overlap_at(minimal_periodic_spectrum(p), np.arange(p) - 0.5)
    assert np.max(np.abs(profile.amplitudes - direct)) < 1e-10
    assert abs(sum(abs(a) ** 2 for a in profile.amplitudes) - 1.0) < 1e-10


def test_halfstep_profile_peak():
    profile = halfstep_profile_periodic(100)
    peak = abs(profile.amplitudes[50])
    assert peak == pytest.approx(1 / (100 * math.sin(math.pi / 200)), rel=1e-13)
    assert peak == pytest.approx(0.63664595306, abs=1e-10)
    # |a_{p/2}| and |a_{p/2 + 1}| tie by symmetry about j = p/2 + 1/2
    assert np.argmax(np.abs(profile.amplitudes)) in (50, 51)
    assert abs(profile.amplitudes[51]) == pytest.approx(peak)


def test_halfstep_profile_p2_probabilities():
    profile = halfstep_profile_periodic(2)
    assert np.allclose(profile.probabilities, [0.5, 0.5])


def test_aperiodic_amplitude_k1():
    profile = halfstep_profile_aperiodic(10)
    a1 = profile.amplitudes[profile.position(1)]
    assert abs(a1) == pytest.approx(2 / math.pi)
    # a_k = -1/(pi*i*(k-1/2)) is purely imaginary with sign of (k-1/2)
    assert a1 == pytest.approx(2j / math.pi)


def test_aperiodic_captured_tail():
    profile = halfstep_profile_aperiodic(1000)
    assert profile.captured == pytest.approx(0.9998, abs=3e-5)
    tail = 1.0 - profile.captured
    assert tail == pytest.approx(2 / (math.pi ** 2 * 1000), rel=1e-3)


def test_aperiodic_symmetric_indices():
    profile = halfstep_profile_aperiodic(5)
    assert profile.indices[0] == -4 and profile.indices[-1] == 5
    # |a_k| = |a_{1-k}|: symmetric about k = 1/2
    probs = profile.probabilities
    assert probs[profile.position(0)] == pytest.approx(probs[profile.position(1)])
    assert probs[profile.position(-3)] == pytest.approx(probs[profile.position(4)])


def test_nu_of_full_window_is_one():
    profile = halfstep_profile_periodic(16)
    assert nu_of(profile, range(16)) == pytest.approx(1.0, abs=1e-10)


def test_nu_of_empty_window_is_zero():
    assert nu_of(halfstep_profile_periodic(8), []) == 0.0


def test_nu_of_p8_window_matches_brute_force():
    profile = halfstep_profile_periodic(8)
    # brute-force oracle: sum the closed-form probabilities by hand
    expected = sum(1.0 / (8 * math.cos(math.pi * (j - 0.5) / 8)) ** 2 for j in (2, 3, 4, 5))
    value = nu_of(profile, range(2, 6))
    assert value == pytest.approx(expected, abs=1e-12)
    assert value == pytest.approx(0.8942902537373689, abs=1e-12)
    # peak pair alone carries ~8/pi^2
    pair = sum(profile.probabilities[j] for j in (4, 5))
    assert pair == pytest.approx(8 / math.pi ** 2, rel=0.02)


def test_nu_of_rejects_out_of_range():
    with pytest.raises(PreconditionError):
        nu_of(halfstep_profile_periodic(8), [8])


def test_eigenbasis_small_cases():
    assert np.allclose(eigenbasis(1), [[1.0]])
    expected = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
    assert np.allclose(eigenbasis(2), expected)


def test_eigenbasis_unitary_p64():
    U = eigenbasis(64)
    assert np.max(np.abs(U @ U.conj().T - np.eye(64))) < 1e-10


# --- properties -------------------------------------------------------------

@st.composite
def point_spectra(draw):
    n = draw(st.integers(1, 8))
    raw = draw(st.lists(st.floats(0.01, 1.0), min_size=n, max_size=n))
    phases = draw(st.lists(st.floats(0.0, 4 * math.pi), min_size=n, max_size=n))
    weights = np.asarray(raw) / np.sum(raw)
    return OrbitSpectrum(phases=np.asarray(phases), weights=weights, period=n)


@given(point_spectra(), st.floats(-8.0, 8.0))
@settings(max_examples=100, deadline=None)
def test_overlap_magnitude_bounded(spec, u):
    assert abs(overlap_at(spec, u)) <= 1.0 + 1e-12


@given(point_spectra())
@settings(max_examples=50, deadline=None)
def test_overlap_normalized_at_origin(spec):
    assert overlap_at(spec, 0.0) == pytest.approx(1.0)


@given(st.integers(1, 9))
@settings(max_examples=9, deadline=None)
def test_peak_modulus_converges_to_two_over_pi(k):
    p = 2 ** k
    profile = halfstep_profile_periodic(p)
    peak = abs(profile.amplitudes[p // 2])
    assert p * math.sin(math.pi / (2 * p)) * peak == pytest.approx(1.0, rel=1e-12)
    if p >= 16:
        assert abs(peak - 2 / math.pi) < 1.0 / p ** 2
