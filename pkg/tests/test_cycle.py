"""Cycle builder: construction arithmetic, verification, window helpers."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from halfcycle import (CapacityError, PreconditionError, alpha_for_period,
                       build_alpha_cycle, centered_window, cycle_result,
                       initial_config, load_machine, run, verify_cycle)
from halfcycle.cycle import LabeledCycle


def halted_trace(n_steps=2):
    # the unary successor halts after n_steps = len(word) + 1 steps
    suc = load_machine("unary_successor")
    word = "1" * (n_steps - 1)
    trace = run(suc, initial_config(suc, word), 1000)
    assert trace.halted and trace.n_steps == n_steps
    return trace


def test_construction_s2_alpha_half():
    cycle = build_alpha_cycle(halted_trace(2), Fraction(1, 2))
    assert (cycle.s, cycle.w, cycle.p) == (2, 2, 8)
    assert cycle.window == range(2, 6)
    assert cycle.alpha_actual == Fraction(1, 2)


def test_construction_tiny_alpha_keeps_one_wait_step():
    cycle = build_alpha_cycle(halted_trace(2), Fraction(1, 1000))
    assert (cycle.w, cycle.p) == (1, 6)
    assert len(list(cycle.window)) == 2


def test_construction_s3_alpha_three_quarters():
    cycle = build_alpha_cycle(halted_trace(3), Fraction(3, 4))
    assert (cycle.w, cycle.p) == (9, 24)
    assert len(list(cycle.window)) == 18
    assert cycle.alpha_actual == Fraction(3, 4)


def test_nonhalted_trace_rejected():
    loop = load_machine("loop")
    trace = run(loop, initial_config(loop, ""), 10)
    with pytest.raises(PreconditionError):
        build_alpha_cycle(trace, Fraction(1, 2))


def test_alpha_bounds_rejected():
    trace = halted_trace(2)
    for bad in (0, 1, -1, 2):
        with pytest.raises(PreconditionError):
            build_alpha_cycle(trace, bad)


def test_period_cap():
    with pytest.raises(CapacityError):
        build_alpha_cycle(halted_trace(2), Fraction(999999, 1000000), period_cap=1000)


def test_verify_accepts_built_cycle():
    report = verify_cycle(build_alpha_cycle(halted_trace(2), Fraction(1, 2)))
    assert report.ok and not report.violations


def test_verify_flags_odd_period():
    cycle = LabeledCycle(p=7, labels=(False, False, True, True, True, False, False),
                         window=range(2, 5), alpha_requested=Fraction(1, 3),
                         alpha_actual=Fraction(3, 7), s=2, w=1, source="hand")
    report = verify_cycle(cycle)
    assert not report.ok
    assert any("odd" in v for v in report.violations)


def test_verify_flags_short_window():
    cycle = LabeledCycle(p=8, labels=tuple(j in (3, 4) for j in range(8)),
                         window=range(3, 5), alpha_requested=Fraction(3, 4),
                         alpha_actual=Fraction(2, 8), s=3, w=1, source="hand")
    report = verify_cycle(cycle)
    assert not report.ok
    assert any("below requested" in v for v in report.violations)


def test_verify_flags_noncontiguous_labels():
    labels = (False, True, False, True, False, False, False, False)
    cycle = LabeledCycle(p=8, labels=labels, window=range(1, 4),
                         alpha_requested=Fraction(1, 4), alpha_actual=Fraction(1, 4),
                         s=1, w=1, source="hand")
    assert not verify_cycle(cycle).ok


def test_cycle_walk_is_closed_palindrome_of_distinct_states():
    cycle = build_alpha_cycle(halted_trace(3), Fraction(1, 2))
    assert len(set(cycle.states)) == cycle.p
    seq = [st.config for st in cycle.states]
    assert all(seq[i] == seq[(cycle.p - i) % cycle.p] for i in range(cycle.p))


def test_cycle_results_window_holds_final_value():
    trace = halted_trace(3)  # successor on "11" -> "111"
    cycle = build_alpha_cycle(trace, Fraction(1, 2), source="succ(11)")
    for j in range(cycle.p):
        z, v = cycle_result(cycle, j)
        if j in cycle.window:
            assert (z, v) == (0, "111")
        else:
            assert z == 1


def test_alpha_for_period_values():
    assert alpha_for_period(256) == 0.9375
    assert alpha_for_period(4) == 0.5
    assert alpha_for_period(10 ** 4) == 0.99
    with pytest.raises(PreconditionError):
        alpha_for_period(2)


def test_centered_window_is_centered_and_covers_alpha():
    for p in (64, 256, 1024):
        win = centered_window(p, alpha_for_period(p))
        assert len(win) >= alpha_for_period(p) * p
        assert win.start + win.stop == p  # symmetric about p/2
        assert p // 2 in win


def test_to_dict_round_trips_fields():
    cycle = build_alpha_cycle(halted_trace(2), Fraction(1, 2), source="succ(1)")
    d = cycle.to_dict()
    assert d["p"] == 8 and d["window"] == [2, 6] and d["source"] == "succ(1)"


@given(st.integers(1, 6), st.fractions(Fraction(1, 100), Fraction(99, 100)))
@settings(max_examples=80, deadline=None)
def test_period_arithmetic_properties(n_steps, alpha):
    cycle = build_alpha_cycle(halted_trace(n_steps), alpha)
    assert cycle.p == 2 * cycle.s + 2 * cycle.w
    assert cycle.p % 2 == 0
    assert cycle.alpha_actual >= alpha
    assert list(cycle.window) == list(range(cycle.s, cycle.s + 2 * cycle.w))
    assert cycle.p // 2 in cycle.window  # w >= 1 always puts the midpoint inside
    assert verify_cycle(cycle).ok
