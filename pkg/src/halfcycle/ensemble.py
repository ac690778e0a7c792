"""Random sampling over the spectral freedom of efficient implementations.

An implementation of a period-p orbit fixes total weight 1/p per phase
class but leaves the split between the two mod-4pi branches free; the
imbalance y_j of class j can sit anywhere in [-1/p, +1/p].  Sampling the
y_j i.i.d. from a rescaled even density on [-1, 1] and evaluating the
half-cycle window mass

    nu = sum_{j in window} | sum_k y_k exp(-2pi*i*k*(j - 1/2)/p) |^2

gives the success probability of a randomly drawn implementation.  With an
even density of second moment m2 and window fraction alpha,
E(nu) = alpha*m2, with standard deviation falling like p^{-1/2}; the
experiment driver below estimates the moments, the deviation scaling, and
a calibrated one-sided Chebyshev coverage figure.

Direct summation is the authoritative evaluator throughout (the inner sums
are computed literally, batched through an FFT, which is the same sum);
the closed form for the continuous case is evaluated alongside and
reported, never asserted, since it disagrees with the direct sum on
deterministic input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import PreconditionError

_CHUNK = 4096


@dataclass(frozen=True)
class DensitySpec:
    """An even probability density on [-1, 1] with known moments."""

    name: str
    m2: float
    m4: float
    sample: object  # callable(rng, size) -> ndarray of draws in [-1, 1]


def _sample_uniform(rng, size):
    return rng.uniform(-1.0, 1.0, size)


def _sample_two_point(rng, size):
    return rng.choice(np.array([-1.0, 1.0]), size=size)


def _sample_raised_cosine(rng, size):
    # rejection against the uniform envelope; density (1 + cos(pi*y))/2 <= 1
    out = np.empty(size if isinstance(size, tuple) else (size,))
    flat = out.reshape(-1)
    filled = 0
    while filled < flat.size:
        need = flat.size - filled
        cand = rng.uniform(-1.0, 1.0, need)
        keep = rng.random(need) < 0.5 * (1.0 + np.cos(np.pi * cand))
        kept = cand[keep]
        flat[filled:filled + kept.size] = kept
        filled += kept.size
    return out if isinstance(size, tuple) else flat


DENSITIES = {
    "uniform": DensitySpec("uniform", m2=1.0 / 3.0, m4=1.0 / 5.0, sample=_sample_uniform),
    "two-point": DensitySpec("two-point", m2=1.0, m4=1.0, sample=_sample_two_point),
    "raised-cosine": DensitySpec(
        "raised-cosine",
        m2=1.0 / 3.0 - 2.0 / np.pi ** 2,
        m4=1.0 / 5.0 - 4.0 / np.pi ** 2 + 24.0 / np.pi ** 4,
        sample=_sample_raised_cosine,
    ),
}


def get_density(name: str) -> DensitySpec:
    try:
        return DENSITIES[name]
    except KeyError:
        raise PreconditionError(
            f"unknown density {name!r}; choose from {sorted(DENSITIES)}") from None


@dataclass(frozen=True)
class YSample:
    """Branch imbalances y_j in [-1/p, 1/p] for one sampled implementation."""

    p: int
    y: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "y", np.asarray(self.y, dtype=float))
        if self.y.shape != (self.p,):
            raise PreconditionError("need one imbalance per phase class")
        if np.any(np.abs(self.y) > 1.0 / self.p + 1e-15):
            raise PreconditionError("imbalances must lie in [-1/p, 1/p]")


def sample_y(p: int, density: DensitySpec, rng) -> YSample:
    """p i.i.d. draws from the density rescaled to [-1/p, 1/p]."""
    if p < 2:
        raise PreconditionError("period must be at least 2")
    return YSample(p=p, y=density.sample(rng, p) / p)


def _halfstep_rows(y_rows: np.ndarray) -> np.ndarray:
    """Amplitudes c_j = sum_k y_k exp(-2pi*i*k*(j-1/2)/p) for every row.

    The half-step twist exp(i*pi*k/p) folds into the input so a plain DFT
    over j computes the literal sums for all j = 0..p-1 at once.
    """
    p = y_rows.shape[-1]
    twist = np.exp(1j * np.pi * np.arange(p) / p)
    return np.fft.fft(y_rows * twist, axis=-1)


def nu_from_y(sample: YSample, window) -> float:
    """Window mass of the sampled implementation, by direct summation."""
    window = np.asarray(list(window), dtype=int)
    if window.size and (window.min() < 0 or window.max() >= sample.p):
        raise PreconditionError("window indices outside [0, p)")
    amps = _halfstep_rows(sample.y[np.newaxis, :])[0]
    return float(np.sum(np.abs(amps[window]) ** 2))


@dataclass(frozen=True)
class StatsRow:
    p: int
    density: str
    trials: int
    mean: float
    stderr: float
    var: float
    var_times_p: float
    cheb_fraction: float
    cheb_c: float
    target_mean: float

    @property
    def variance_defined(self) -> bool:
        return math.isfinite(self.var)

    def mean_within(self, k_sigma: float = 3.0) -> bool:
        return abs(self.mean - self.target_mean) < k_sigma * self.stderr


@dataclass(frozen=True)
class StatsReport:
    density: str
    trials: int
    delta: float
    rows: tuple

    def var_p_spread(self) -> float:
        vals = [r.var_times_p for r in self.rows if math.isfinite(r.var_times_p)]
        if len(vals) < 2:
            return float("nan")
        return max(vals) / min(vals)

    def to_dict(self) -> dict:
        return {
            "density": self.density,
            "trials": self.trials,
            "delta": self.delta,
            "var_p_spread": self.var_p_spread(),
            "rows": [vars(r) | {"variance_defined": r.variance_defined} for r in self.rows],
        }


def moment_experiment(p_list, density: DensitySpec, trials: int, rng,
                        delta: float = 3.0) -> StatsReport:
    """Sample nu for each period with the long-waiting window and estimate
    its moments.

    Per period p: the window is the centered block of the waiting ratio
    1 - p**-0.5; reported are the sample mean (target alpha*m2), standard
    error, variance, variance*p (the deviation scale), and the fraction of
    samples below mean - delta*std together with the calibrated constant c
    making that threshold read m2 - delta/(c*sqrt(p)).
    """
    from .cycle import alpha_for_period, centered_window

    if trials < 1:
        raise PreconditionError("need at least one trial")
    rows = []
    for p in p_list:
        if p < 4 or p % 2:
            raise PreconditionError("periods must be even and at least 4")
        alpha = alpha_for_period(p)
        window = centered_window(p, alpha)
        win = np.asarray(list(window), dtype=int)
        streams = rng.spawn(math.ceil(trials / _CHUNK))
        nus = np.empty(trials)
        done = 0
        for stream in streams:
            count = min(_CHUNK, trials - done)
            y = density.sample(stream, (count, p)) / p
            amps = _halfstep_rows(y)
            nus[done:done + count] = np.sum(np.abs(amps[:, win]) ** 2, axis=1)
            done += count
        mean = float(np.mean(nus))
        var = float(np.var(nus, ddof=1)) if trials > 1 else float("nan")
        std = math.sqrt(var) if trials > 1 else float("nan")
        stderr = std / math.sqrt(trials) if trials > 1 else float("nan")
        if trials > 1 and std > 0:
            threshold = mean - delta * std
            cheb_fraction = float(np.mean(nus < threshold))
            cheb_c = delta / ((density.m2 - threshold) * math.sqrt(p))
        else:
            cheb_fraction = float("nan")
            cheb_c = float("nan")
        rows.append(StatsRow(
            p=p, density=density.name, trials=trials, mean=mean, stderr=stderr,
            var=var, var_times_p=var * p, cheb_fraction=cheb_fraction,
            cheb_c=cheb_c, target_mean=alpha * density.m2,
        ))
    return StatsReport(density=density.name, trials=trials, delta=delta, rows=tuple(rows))


@dataclass(frozen=True)
class ContinuousNu:
    """Both evaluations of the continuous-case success probability.

    ``direct`` is the truncated amplitude sum (authoritative); ``closed``
    is the delta-functional form (1/2pi) * integral(y^2 + y(l)*y(l+pi)),
    reported for comparison only.
    """

    direct: float
    closed: float
    cells: int


def continuous_nu(cells: int, density: DensitySpec, rng, sample=None) -> ContinuousNu:
    """Draw a piecewise-constant branch imbalance on a 2pi grid and
    evaluate nu both ways.

    ``sample`` overrides the random draw with a fixed cell vector (used for
    the deterministic y = 1 and y = 0 checks).
    """
    if cells < 2 or cells % 2:
        raise PreconditionError("cell count must be even and at least 2")
    y = np.asarray(sample, dtype=float) if sample is not None else density.sample(rng, cells)
    if y.shape != (cells,):
        raise PreconditionError("sample length must match cell count")

    edges = 2.0 * np.pi * np.arange(cells + 1) / cells
    j = np.arange(-cells, cells + 1)
    u = j - 0.5
    phase = np.exp(-1j * np.outer(u, edges))
    cell_int = (phase[:, :-1] - phase[:, 1:]) / (1j * u)[:, np.newaxis]
    amps = (cell_int @ y) / (2.0 * np.pi)
    direct = float(np.sum(np.abs(amps) ** 2))

    shifted = np.roll(y, -(cells // 2))
    closed = float(np.mean(y * y + y * shifted))
    return ContinuousNu(direct=direct, closed=closed, cells=cells)
