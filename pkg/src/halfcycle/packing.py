"""Pack every problem instance's spectrum into one bounded-energy operator.

Problem size n contributes 2^n instances, each carrying 2^{nu_n}
eigenphases whose fractional parts (in units of 2pi) are fixed by the
congruence

    phase_k / 2pi  =  m * 2^-(n + nu_n) + k * 2^-nu_n   (mod 1),

with nu_n a strictly increasing exponent sequence (default nu_n = n).
Only the integer part of phase/2pi is free.  The assignment below chooses
those integer parts so that

  * all instance spectra are pairwise disjoint (exact rational points),
  * each instance's mean phase stays at most 4pi (energy bound),
  * points keep the even/odd interval parity of their index k wherever
    collisions allow.

Collisions between instances whose fractional parts coincide form "piles";
within a pile the integer parts must be pairwise distinct, so the pile
members receive ranks 0, 1, 2, ...  Ranks are handed out by remaining
energy slack (largest slack takes the largest rank), followed by a swap
repair pass for any instance pushed past its budget and a parity pass that
restores index parity where both budgets permit.  All bookkeeping is exact
(fractions.Fraction); no floating point enters the energy accounting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .errors import CapacityError, PreconditionError

ENERGY_BUDGET_OVER_2PI = Fraction(2)  # mean phase <= 4pi
DEFAULT_POINT_CAP = 2 ** 20


@dataclass(frozen=True)
class PackedInstance:
    """One problem instance's assigned spectrum, in exact units of 2pi."""

    n: int
    m: int
    points: tuple  # Fractions phase/2pi, index-aligned with k = 0..2^nu-1
    nu: int

    @property
    def period(self) -> int:
        return 2 ** self.nu

    @property
    def mean_phase_over_2pi(self) -> Fraction:
        return sum(self.points, Fraction(0)) / self.period

    @property
    def energy(self) -> float:
        return float(2 * np.pi * self.mean_phase_over_2pi)

    def spectrum(self):
        from .spectral import OrbitSpectrum

        phases = 2.0 * np.pi * np.array([float(x) for x in self.points])
        weights = np.full(self.period, 1.0 / self.period)
        return OrbitSpectrum(phases=phases, weights=weights, period=self.period)


@dataclass(frozen=True)
class IntervalPass:
    """Occupancy snapshot after all sizes <= n are assigned."""

    n: int
    grid_ok: bool  # every point sits on the 2^-(n+nu_n) grid of its interval
    occupancy: dict  # interval index -> (count, equidistant slot capacity 2^(n-k+nu_n))


@dataclass
class PackedSpectra:
    """The full assignment for sizes 0..n_max."""

    n_max: int
    nu_exponents: tuple
    instances: list

    def instance(self, n: int, m: int) -> PackedInstance:
        for inst in self.instances:
            if inst.n == n and inst.m == m:
                return inst
        raise PreconditionError(f"no instance ({n}, {m})")

    def all_disjoint(self) -> bool:
        """Exhaustive pairwise-disjointness scan over all instance spectra."""
        sets = [frozenset(inst.points) for inst in self.instances]
        for a, b in combinations(sets, 2):
            if a & b:
                return False
        return all(len(s) == 2 ** inst.nu for s, inst in zip(sets, self.instances))

    def max_mean_phase_over_2pi(self) -> Fraction:
        return max(inst.mean_phase_over_2pi for inst in self.instances)

    def energy_bound_ok(self) -> bool:
        return self.max_mean_phase_over_2pi() <= ENERGY_BUDGET_OVER_2PI

    def parity_compliance(self) -> float:
        """Fraction of points whose interval index matches k mod 2."""
        good = total = 0
        for inst in self.instances:
            for k, x in enumerate(inst.points):
                total += 1
                good += int(int(x) % 2 == k % 2)
        return good / total

    def induction_passes(self) -> list:
        """Per-size occupancy snapshots.

        For each size n, checks that every assigned point of sizes <= n
        lies on the equidistant grid of spacing 2^-(n + nu_n) inside its
        interval [2pi*k, 2pi*(k+1)), and reports per-interval occupancy
        against the equidistant slot count 2^(n-k+nu_n).  Occupancy above
        that figure is reported, not asserted: the assigned points remain
        a subset of a refining equidistant family either way.
        """
        passes = []
        for n in range(self.n_max + 1):
            denom = 2 ** (n + self.nu_exponents[n])
            pts = [x for inst in self.instances if inst.n <= n for x in inst.points]
            grid_ok = all((x * denom).denominator == 1 for x in pts)
            occupancy: dict = {}
            for x in pts:
                interval = int(x)
                occupancy[interval] = occupancy.get(interval, 0) + 1
            report = {
                k: (count, 2 ** (n - k + self.nu_exponents[n]) if n - k + self.nu_exponents[n] >= 0 else 0)
                for k, count in sorted(occupancy.items())
            }
            passes.append(IntervalPass(n=n, grid_ok=grid_ok, occupancy=report))
        return passes

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "nu_exponents": list(self.nu_exponents),
            "disjoint": self.all_disjoint(),
            "energy_bound_ok": self.energy_bound_ok(),
            "max_energy": float(2 * np.pi * self.max_mean_phase_over_2pi()),
            "parity_compliance": self.parity_compliance(),
            "grid_ok": all(p.grid_ok for p in self.induction_passes()),
            "instances": [
                {"n": inst.n, "m": inst.m, "period": inst.period, "energy": inst.energy}
                for inst in self.instances
            ],
        }


def _validate_nu(n_max: int, nu_exponents) -> tuple:
    if nu_exponents is None:
        nu = tuple(range(n_max + 1))
    else:
        nu = tuple(int(v) for v in nu_exponents)
    if len(nu) != n_max + 1:
        raise PreconditionError("need one exponent per size 0..n_max")
    if any(v < 0 for v in nu):
        raise PreconditionError("exponents must be nonnegative")
    if any(b <= a for a, b in zip(nu, nu[1:])):
        raise PreconditionError("exponent sequence must be strictly increasing")
    return nu


def pack_spectrum(n_max: int, nu_exponents=None, point_cap: int = DEFAULT_POINT_CAP) -> PackedSpectra:
    """Assign disjoint bounded-energy spectra to all instances of sizes
    0..n_max.  See the module docstring for the assignment strategy."""
    if n_max < 0:
        raise PreconditionError("n_max must be nonnegative")
    nu = _validate_nu(n_max, nu_exponents)
    total_points = sum(2 ** (n + nu[n]) for n in range(n_max + 1))
    if total_points > point_cap:
        raise CapacityError(f"{total_points} eigenvalues exceed cap {point_cap}")

    # Fixed fractional parts, grouped into same-frac piles.
    fracs: dict = {}
    piles: dict = {}
    budgets: dict = {}
    committed: dict = {}
    for n in range(n_max + 1):
        for m in range(2 ** n):
            period = 2 ** nu[n]
            inst_fracs = []
            for k in range(period):
                f = (Fraction(m, 2 ** (n + nu[n])) + Fraction(k, period)) % 1
                fracs[(n, m, k)] = f
                piles.setdefault(f, []).append((n, m, k))
                inst_fracs.append(f)
            budgets[(n, m)] = ENERGY_BUDGET_OVER_2PI * period - sum(inst_fracs, Fraction(0))
            committed[(n, m)] = Fraction(0)

    integer_part: dict = {}

    # Singleton piles: no collision, the index parity rule applies directly.
    multi = []
    for f, members in piles.items():
        if len(members) == 1:
            (n, m, k) = members[0]
            integer_part[(n, m, k)] = k % 2
            committed[(n, m)] += k % 2
        else:
            multi.append((f, members))
    multi.sort(key=lambda item: (-len(item[1]), item[0]))

    # Collision piles: the size-0 anchor keeps phase 0; remaining ranks go
    # largest-rank-to-largest-slack so tight instances stay low.
    for f, members in multi:
        pending = list(members)
        ranks = list(range(len(members)))
        if (0, 0, 0) in pending:
            integer_part[(0, 0, 0)] = 0
            pending.remove((0, 0, 0))
            ranks.remove(0)
        for rank in reversed(ranks):
            pending.sort(key=lambda pt: (-(budgets[pt[:2]] - committed[pt[:2]]), pt))
            point = pending.pop(0)
            integer_part[point] = rank
            committed[point[:2]] += rank

    _repair_overruns(multi, integer_part, committed, budgets,
                     max_rounds=4 * total_points)
    over = sorted(nm for nm in budgets if committed[nm] > budgets[nm])
    if over:
        raise CapacityError(
            f"energy bound unreachable for instances {over} with exponents {nu}; "
            "a faster-growing exponent sequence (e.g. nu_n = 2n) spreads the "
            "collisions enough")
    _restore_parity(multi, integer_part, committed, budgets)

    instances = []
    for n in range(n_max + 1):
        for m in range(2 ** n):
            pts = tuple(
                integer_part[(n, m, k)] + fracs[(n, m, k)] for k in range(2 ** nu[n])
            )
            instances.append(PackedInstance(n=n, m=m, points=pts, nu=nu[n]))
    return PackedSpectra(n_max=n_max, nu_exponents=nu, instances=instances)


def _repair_overruns(multi, integer_part, committed, budgets, max_rounds: int = 4096) -> None:
    """Swap ranks inside piles until every instance is back within budget
    (or no swap helps).  Deterministic order throughout."""
    for _ in range(max_rounds):
        over = sorted(
            (nm for nm in budgets if committed[nm] > budgets[nm]),
            key=lambda nm: (budgets[nm] - committed[nm], nm),
        )
        if not over:
            return
        progress = False
        for nm in over:
            for f, members in multi:
                mine = [pt for pt in members if pt[:2] == nm and pt != (0, 0, 0)]
                if not mine:
                    continue
                mine.sort(key=lambda pt: -integer_part[pt])
                others = sorted(
                    (pt for pt in members if pt[:2] != nm and pt != (0, 0, 0)),
                    key=lambda pt: integer_part[pt],
                )
                for point in mine:
                    for other in others:
                        delta = integer_part[point] - integer_part[other]
                        if delta <= 0:
                            continue
                        onm = other[:2]
                        if committed[onm] + delta <= budgets[onm]:
                            integer_part[point], integer_part[other] = (
                                integer_part[other],
                                integer_part[point],
                            )
                            committed[nm] -= delta
                            committed[onm] += delta
                            progress = True
                            break
                    if progress:
                        break
                if progress:
                    break
            if progress:
                break
        if not progress:
            return


def _restore_parity(multi, integer_part, committed, budgets) -> None:
    """Swap same-pile pairs whose integer parts both mismatch k mod 2 when
    the swap fixes both and neither budget breaks."""
    for f, members in multi:
        for a, b in combinations(members, 2):
            if (0, 0, 0) in (a, b):
                continue
            ca, cb = integer_part[a], integer_part[b]
            if ca % 2 == a[2] % 2 or cb % 2 == b[2] % 2:
                continue
            if cb % 2 != a[2] % 2 or ca % 2 != b[2] % 2:
                continue
            anm, bnm = a[:2], b[:2]
            da, db = cb - ca, ca - cb
            if anm == bnm:
                pass  # same instance: energy unchanged
            elif (committed[anm] + da > budgets[anm]) or (committed[bnm] + db > budgets[bnm]):
                continue
            integer_part[a], integer_part[b] = cb, ca
            committed[anm] += da
            committed[bnm] += db
