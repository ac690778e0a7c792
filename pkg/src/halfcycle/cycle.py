"""Build periodic waiting cycles from halting traces.

A halting trace of s forward steps becomes a closed walk of even period
p = 2s + 2w: the forward trace, w waiting steps holding the result, w
unwinding steps (undoing the wait counter), and the reversed trace.  The
2w middle indices carry the valid result; that contiguous block is the
result window, and its fraction of the period is the waiting ratio the
cycle was built for.

The cycle is realized at trace level: each cycle state is a (phase,
counter, configuration) tuple, so all p states are pairwise distinct even
where the tape content repeats.  Downstream spectral and statistical
results depend only on the period and the label pattern.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CapacityError, PreconditionError
from .machine import Configuration, Trace, tape_content

DEFAULT_PERIOD_CAP = 2 ** 22


@dataclass(frozen=True)
class CycleState:
    """One position on the cycle: a tape configuration plus the control
    phase and counter value that keep repeated configurations distinct."""

    phase: str  # "fwd" | "wait" | "unwind" | "rev"
    counter: int
    config: Configuration


@dataclass(frozen=True)
class LabeledCycle:
    """A period-p cycle with a boolean label per index (True = the state
    holds the valid result) and the contiguous result window."""

    p: int
    labels: tuple
    window: range
    alpha_requested: Fraction
    alpha_actual: Fraction
    s: int
    w: int
    source: str
    states: tuple | None = None

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "window": [self.window.start, self.window.stop],
            "source": self.source,
            "s": self.s,
            "w": self.w,
            "alpha_requested": [self.alpha_requested.numerator, self.alpha_requested.denominator],
            "alpha_actual": [self.alpha_actual.numerator, self.alpha_actual.denominator],
        }


@dataclass(frozen=True)
class CycleReport:
    ok: bool
    violations: tuple
    p: int
    alpha_actual: Fraction


def _ceil_frac(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def build_alpha_cycle(trace: Trace, alpha, period_cap: int = DEFAULT_PERIOD_CAP,
                      source: str = "") -> LabeledCycle:
    """Turn a halted trace into a waiting cycle with ratio at least ``alpha``.

    With s forward steps, the wait count is w = ceil(alpha/(1-alpha) * s),
    floored at one so the window is never empty; the period p = 2s + 2w is
    even by construction (no parity padding is ever needed) and the window
    is [s, s + 2w).  Both s and p are recorded on the cycle so the overhead
    of the construction can be audited.
    """
    if not trace.halted:
        raise PreconditionError("cycle construction needs a halted trace")
    alpha = Fraction(alpha)
    if not (0 < alpha < 1):
        raise PreconditionError("alpha must lie strictly between 0 and 1")
    s = trace.n_steps
    w = max(1, _ceil_frac(alpha / (1 - alpha) * s))
    p = 2 * s + 2 * w
    if p > period_cap:
        raise CapacityError(f"period {p} exceeds cap {period_cap} (alpha too close to 1)")

    configs = trace.steps
    states = []
    states.extend(CycleState("fwd", j, configs[j]) for j in range(s))
    states.extend(CycleState("wait", i, configs[s]) for i in range(w))
    states.extend(CycleState("unwind", i, configs[s]) for i in range(w))
    states.extend(CycleState("rev", i, configs[s - i]) for i in range(s))
    assert len(states) == p

    window = range(s, s + 2 * w)
    labels = tuple(j in window for j in range(p))
    return LabeledCycle(
        p=p,
        labels=labels,
        window=window,
        alpha_requested=alpha,
        alpha_actual=Fraction(2 * w, p),
        s=s,
        w=w,
        source=source,
        states=tuple(states),
    )


def verify_cycle(cycle: LabeledCycle) -> CycleReport:
    """Check the structural invariants of a cycle and report violations.

    Checks: even period, window contiguity and label agreement, waiting
    ratio at least the requested alpha, window centering, and (when the
    underlying states are retained) that the configuration sequence is a
    palindromic closed walk of pairwise distinct states whose window
    indices all hold the final (result) tape.
    """
    v = []
    if cycle.p % 2 != 0:
        v.append("period is odd")
    if cycle.p != len(cycle.labels):
        v.append("label sequence length differs from period")
    true_idx = [j for j, lab in enumerate(cycle.labels) if lab]
    if true_idx != list(cycle.window):
        v.append("labels are not true exactly on the window")
    if true_idx and true_idx != list(range(true_idx[0], true_idx[-1] + 1)):
        v.append("window is not contiguous")
    if not true_idx:
        v.append("window is empty")
    if cycle.alpha_actual < cycle.alpha_requested:
        v.append("waiting ratio below requested alpha")
    if cycle.alpha_actual >= Fraction(1, 2) and cycle.p // 2 not in cycle.window:
        v.append("midpoint p/2 outside window despite waiting ratio >= 1/2")

    if cycle.states is not None:
        p = cycle.p
        if len(cycle.states) != p:
            v.append("state sequence length differs from period")
        else:
            if len(set(cycle.states)) != p:
                v.append("cycle states are not pairwise distinct")
            seq = [st.config for st in cycle.states]
            if any(seq[i] != seq[(p - i) % p] for i in range(p)):
                v.append("configuration walk is not a closed palindrome")
            final = seq[cycle.s] if cycle.s < p else seq[0]
            if any(cycle.states[j].config != final for j in cycle.window):
                v.append("window states do not all hold the result tape")
    return CycleReport(ok=not v, violations=tuple(v), p=cycle.p, alpha_actual=cycle.alpha_actual)


def alpha_for_period(p: int) -> float:
    """The waiting ratio 1 - p**-0.5 targeted by the long-period experiments."""
    if p < 4:
        raise PreconditionError("period must be at least 4")
    return 1.0 - p ** -0.5


def centered_window(p: int, alpha) -> range:
    """The contiguous result window of length 2*ceil(alpha*p/2) centered on
    index p/2, as used for synthetic period-p experiments."""
    if p < 2 or p % 2 != 0:
        raise PreconditionError("period must be even and at least 2")
    alpha = Fraction(alpha)
    if not (0 < alpha < 1):
        raise PreconditionError("alpha must lie strictly between 0 and 1")
    w = max(1, _ceil_frac(alpha * p / 2))
    return range(p // 2 - w, p // 2 + w)


def cycle_result(cycle: LabeledCycle, index: int) -> tuple:
    """The result variable r = (z, v) carried by cycle state ``index``:
    z = 0 with the final tape inside the window, z = 1 with the local tape
    elsewhere."""
    if cycle.states is None:
        raise PreconditionError("cycle was built without retained states")
    config = cycle.states[index].config
    if cycle.labels[index]:
        return (0, tape_content(config))
    return (1, tape_content(config))
