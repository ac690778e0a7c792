"""Machine core: hand-traced oracles, bounded runs, file round-trips."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from halfcycle import (Configuration, MachineSpecError, PreconditionError, TMSpec,
                       decode_result, initial_config, load_machine, run, save_machine,
                       step, tape_content)

BLANK = "_"


def simple_spec(transitions, states, initial, results, alphabet=("0", "1", BLANK)):
    return TMSpec(
        states=frozenset(states),
        alphabet=frozenset(alphabet),
        blank=BLANK,
        transitions=transitions,
        initial=initial,
        result_states=frozenset(results),
    )


def test_incrementer_full_trace_on_zero():
    # hand simulation: scan right over "0", bounce off the blank, write the carry
    inc = load_machine("incrementer")
    trace = run(inc, initial_config(inc, "0"), 100)
    assert trace.halted and not trace.budget_exceeded
    assert trace.n_steps == 3
    expected = [
        Configuration({0: "0"}, 0, "scan"),
        Configuration({0: "0"}, 1, "scan"),
        Configuration({0: "0"}, 0, "carry"),
        Configuration({0: "1"}, 0, "done"),
    ]
    assert list(trace.steps) == expected
    assert trace.result == (0, "1")


@pytest.mark.parametrize("word,expected", [
    ("0", "1"), ("1", "10"), ("11", "100"), ("101", "110"), ("111", "1000"), ("", "1"),
])
def test_incrementer_adds_one(word, expected):
    inc = load_machine("incrementer")
    trace = run(inc, initial_config(inc, word), 1000)
    assert trace.halted
    assert trace.result == (0, expected)


def test_unary_successor_appends_a_mark():
    suc = load_machine("unary_successor")
    trace = run(suc, initial_config(suc, "11"), 100)
    assert trace.halted
    assert trace.result == (0, "111")


@pytest.mark.parametrize("word,bit", [("", "0"), ("1", "1"), ("101", "0"), ("111", "1"), ("1001", "0")])
def test_parity_checker_matches_classical_count(word, bit):
    par = load_machine("parity")
    trace = run(par, initial_config(par, word), 1000)
    assert trace.halted
    assert trace.result == (0, bit)
    assert bit == str(word.count("1") % 2)


def test_loop_machine_exhausts_budget():
    loop = load_machine("loop")
    trace = run(loop, initial_config(loop, ""), 50)
    assert not trace.halted
    assert trace.budget_exceeded
    assert trace.n_steps == 50
    assert trace.result is None


def test_stay_machine_step_is_identity():
    spec = simple_spec(
        {("q", s): ("q", s, "S") for s in ("0", "1", BLANK)},
        states=["q"], initial="q", results=[],
    )
    config = initial_config(spec, "")
    assert step(spec, config) == config


def test_budget_smaller_than_trace():
    inc = load_machine("incrementer")
    trace = run(inc, initial_config(inc, "0"), 1)
    assert not trace.halted and trace.budget_exceeded
    assert trace.n_steps == 1


def test_run_rejects_zero_budget():
    inc = load_machine("incrementer")
    with pytest.raises(PreconditionError):
        run(inc, initial_config(inc, "0"), 0)


def test_step_is_pure():
    inc = load_machine("incrementer")
    config = initial_config(inc, "0")
    before = config.canonical()
    step(inc, config)
    assert config.canonical() == before


def test_step_rejects_unknown_state():
    inc = load_machine("incrementer")
    with pytest.raises(MachineSpecError):
        step(inc, Configuration({}, 0, "nope"))


def test_step_rejects_unknown_symbol():
    inc = load_machine("incrementer")
    with pytest.raises(MachineSpecError):
        step(inc, Configuration({0: "x"}, 0, "scan"))


def test_partial_transition_table_rejected():
    with pytest.raises(MachineSpecError):
        simple_spec({("q", "0"): ("q", "0", "S")}, states=["q"], initial="q", results=[])


def test_configuration_equality_is_canonical():
    assert Configuration({0: "1"}, 0, "q") == Configuration({0: "1"}, 0, "q")
    assert Configuration({0: "1"}, 0, "q") != Configuration({0: "1"}, 1, "q")
    assert Configuration({}, 0, "q") != Configuration({1: "1"}, 0, "q")
    assert hash(Configuration({0: "1"}, 0, "q")) == hash(Configuration({0: "1"}, 0, "q"))


def test_decode_result_reads_tape_left_to_right():
    par = load_machine("parity")
    config = Configuration({-2: "1", 3: "0", 0: "1"}, 0, "done")
    assert decode_result(par, config) == (0, "110")
    assert decode_result(par, Configuration({}, 0, "even")) == (1, "")


def test_initial_config_rejects_foreign_symbols():
    inc = load_machine("incrementer")
    with pytest.raises(MachineSpecError):
        initial_config(inc, "2")


def test_machine_file_round_trip(tmp_path):
    inc = load_machine("incrementer")
    path = tmp_path / "inc.json"
    save_machine(inc, path)
    again = load_machine(path)
    assert again.transitions == inc.transitions
    assert again.result_states == inc.result_states
    trace = run(again, initial_config(again, "11"), 100)
    assert trace.result == (0, "100")


def test_malformed_json_reports_line(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"states": [,]}')
    with pytest.raises(MachineSpecError, match="line"):
        load_machine(path)


def test_missing_field_reported(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"states": ["q"], "alphabet": ["_"]}))
    with pytest.raises(MachineSpecError, match="blank"):
        load_machine(path)


# --- property tests over random total machines -----------------------------

SYMS = ("0", "1", BLANK)


@st.composite
def total_machines(draw):
    n_states = draw(st.integers(1, 4))
    states = [f"s{i}" for i in range(n_states)]
    transitions = {}
    for state in states:
        for sym in SYMS:
            transitions[(state, sym)] = (
                draw(st.sampled_from(states)),
                draw(st.sampled_from(SYMS)),
                draw(st.sampled_from(("L", "R", "S"))),
            )
    results = draw(st.sets(st.sampled_from(states), max_size=n_states - 1)) if n_states > 1 else set()
    return simple_spec(transitions, states=states, initial="s0", results=results)


@given(total_machines(), st.text(alphabet="01", max_size=5), st.integers(1, 40))
@settings(max_examples=60, deadline=None)
def test_trace_consistency_and_canonical_tape(spec, word, budget):
    trace = run(spec, initial_config(spec, word), budget)
    for a, b in zip(trace.steps, trace.steps[1:]):
        assert step(spec, a) == b
        assert BLANK not in b.tape.values()
    assert trace.n_steps <= budget
    if trace.halted:
        assert trace.steps[-1].state in spec.result_states
        assert trace.result == (0, tape_content(trace.steps[-1]))


@given(total_machines(), st.text(alphabet="01", max_size=4))
@settings(max_examples=40, deadline=None)
def test_step_is_deterministic(spec, word):
    config = initial_config(spec, word)
    assert step(spec, config) == step(spec, config)
