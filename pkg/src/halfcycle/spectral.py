"""Orbit spectra, the overlap function, and half-cycle amplitude profiles.

Units are fixed throughout: one machine cycle of evolution is one time
unit, and eigenphases are radians per machine cycle (phases of the
evolution generator taken mod 4pi).  The overlap function of a point
spectrum is

    overlap(u) = sum_k w_k * exp(-i * phase_k * u),

the Fourier transform of the spectral weights; its value at half-integer
times u = j - 1/2 is the amplitude of the transient state at one half
machine cycle against computational state j.

The minimal period-p construction places phase_k = 2pi*(k/p + k mod 2)
with equal weights 1/p.  Its half-cycle amplitudes have the closed form

    a_j = exp(i*pi*(j - 1/2)/p) / (p * cos(pi*(j - 1/2)/p)),

which peaks at j = p/2 with modulus 1/(p*sin(pi/(2p))) -> 2/pi and sums to
total probability 1.  The aperiodic (non-halting) counterpart has
a_k = -1/(pi*i*(k - 1/2)), whose full two-sided square sum is 1 by Euler's
series; a symmetric truncation to 2K terms captures all but ~2/(pi^2*K).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, PreconditionError

TAU_HALF_CYCLE = 0.5
_WEIGHT_SUM_TOL = 1e-12
_PROFILE_TOL = 1e-10


@dataclass(frozen=True)
class OrbitSpectrum:
    """Eigenphases (radians per machine cycle) with spectral weights.

    ``period`` is the orbit period for point spectra and None for the
    aperiodic (absolutely continuous) case, which carries no finite phase
    list at all.
    """

    phases: np.ndarray
    weights: np.ndarray
    period: int | None

    def __post_init__(self):
        object.__setattr__(self, "phases", np.asarray(self.phases, dtype=float))
        object.__setattr__(self, "weights", np.asarray(self.weights, dtype=float))
        if self.period is None:
            if self.phases.size or self.weights.size:
                raise PreconditionError("aperiodic spectra carry no finite phase list")
            return
        if self.phases.shape != self.weights.shape:
            raise PreconditionError("phases and weights must have matching shapes")
        if np.any(self.weights < 0):
            raise PreconditionError("spectral weights must be nonnegative")
        if abs(float(self.weights.sum()) - 1.0) > _WEIGHT_SUM_TOL:
            raise PreconditionError("spectral weights must sum to 1")

    @property
    def aperiodic(self) -> bool:
        return self.period is None


@dataclass(frozen=True)
class AmplitudeProfile:
    """Complex overlap amplitudes of the half-cycle state.

    ``indices`` are cycle positions j for periodic profiles, or the
    symmetric index range (-K, K] for aperiodic truncations.  ``captured``
    is the total probability sum |a|^2 over the stored indices.
    """

    amplitudes: np.ndarray
    indices: np.ndarray
    captured: float
    period: int | None
    tau: float = TAU_HALF_CYCLE

    def __post_init__(self):
        object.__setattr__(self, "amplitudes", np.asarray(self.amplitudes, dtype=complex))
        object.__setattr__(self, "indices", np.asarray(self.indices, dtype=int))
        if self.captured > 1.0 + _WEIGHT_SUM_TOL:
            raise PreconditionError("captured probability exceeds 1")

    @property
    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def position(self, index: int) -> int:
        """Array position of cycle index ``index``."""
        pos = int(index - self.indices[0])
        if pos < 0 or pos >= self.indices.size or self.indices[pos] != index:
            raise PreconditionError(f"index {index} outside profile range")
        return pos


def aperiodic_spectrum() -> OrbitSpectrum:
    """Marker spectrum for non-halting orbits (uniform phase density on
    [0, 2pi); no finite eigenphase list exists)."""
    return OrbitSpectrum(phases=np.empty(0), weights=np.empty(0), period=None)


def minimal_periodic_spectrum(p: int) -> OrbitSpectrum:
    """phases_k = 2pi*(k/p + k mod 2), k = 0..p-1, all weights 1/p.

    Needs even p: the alternating mod-2 offsets are what make consecutive
    computational states orthogonal while concentrating the half-cycle
    amplitude on the window.
    """
    if p < 2 or p % 2 != 0:
        raise PreconditionError("minimal construction needs even p >= 2")
    k = np.arange(p)
    phases = 2.0 * np.pi * (k / p + (k % 2))
    return OrbitSpectrum(phases=phases, weights=np.full(p, 1.0 / p), period=p)


def overlap_at(spec: OrbitSpectrum, u):
    """sum_k w_k * exp(-i*phase_k*u) for scalar or array u.

    Only defined for point spectra; aperiodic orbits are handled through
    their closed-form amplitude profile instead.
    """
    if spec.aperiodic:
        raise PreconditionError("overlap_at needs a point spectrum; "
                                "use halfstep_profile_aperiodic for aperiodic orbits")
    u_arr = np.asarray(u, dtype=float)
    vals = np.exp(-1j * np.multiply.outer(u_arr, spec.phases)) @ spec.weights.astype(complex)
    return complex(vals) if np.isscalar(u) or u_arr.ndim == 0 else vals


def halfstep_profile_periodic(p: int) -> AmplitudeProfile:
    """Half-cycle amplitudes of the minimal period-p construction.

    Evaluates the closed form and cross-checks it against the direct
    spectral sum; disagreement beyond 1e-10 raises ConsistencyError.
    """
    spec = minimal_periodic_spectrum(p)
    j = np.arange(p)
    arg = np.pi * (j - 0.5) / p
    closed = np.exp(1j * arg) / (p * np.cos(arg))
    direct = overlap_at(spec, j - 0.5)
    err = float(np.max(np.abs(closed - direct)))
    if err > _PROFILE_TOL:
        raise ConsistencyError(f"closed form vs direct sum disagree by {err:.3e} at p={p}")
    captured = float(np.sum(np.abs(closed) ** 2))
    if abs(captured - 1.0) > _PROFILE_TOL:
        raise ConsistencyError(f"minimal profile capture {captured!r} differs from 1 at p={p}")
    return AmplitudeProfile(amplitudes=closed, indices=j, captured=min(captured, 1.0), period=p)


def halfstep_profile_aperiodic(K: int) -> AmplitudeProfile:
    """Truncated aperiodic amplitudes a_k = -1/(pi*i*(k-1/2)), -K < k <= K.

    The truncation tail is ~2/(pi^2*K); the full two-sided series sums
    to 1.
    """
    if K < 1:
        raise PreconditionError("K must be at least 1")
    k = np.arange(-K + 1, K + 1)
    amps = -1.0 / (np.pi * 1j * (k - 0.5))
    captured = float(np.sum(np.abs(amps) ** 2))
    return AmplitudeProfile(amplitudes=amps, indices=k, captured=captured, period=None)


def nu_of(profile: AmplitudeProfile, window) -> float:
    """Probability of landing in ``window``: sum of |a_j|^2 over j in the
    window.  Raises on indices outside the profile range."""
    probs = profile.probabilities
    total = 0.0
    for j in window:
        total += float(probs[profile.position(j)])
    return total


def eigenbasis(p: int) -> np.ndarray:
    """The p x p unitary with entries exp(2pi*i*j*k/p)/sqrt(p) mapping
    computational states to the orbit eigenvectors."""
    if p < 1:
        raise PreconditionError("dimension must be at least 1")
    j = np.arange(p)
    return np.exp(2j * np.pi * np.outer(j, j) / p) / np.sqrt(p)


from .packing import PackedInstance, PackedSpectra, pack_spectrum  # noqa: E402  (re-export)

__all__ = [
    "OrbitSpectrum",
    "AmplitudeProfile",
    "aperiodic_spectrum",
    "minimal_periodic_spectrum",
    "overlap_at",
    "halfstep_profile_periodic",
    "halfstep_profile_aperiodic",
    "nu_of",
    "eigenbasis",
    "pack_spectrum",
    "PackedSpectra",
    "PackedInstance",
]
