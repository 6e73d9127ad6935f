import json

import pytest

from fmapump import corpus
from fmapump.alphabet import Const, User, parse_word
from fmapump.errors import MalformedLetter, ParseError
from fmapump.fma import Fma, all_runs, is_run, load

from conftest import grid_words, random_perm, random_word

d0, a, b, c = User(0), User(1), User(2), User(3)


@pytest.fixture
def repeat():
    return corpus.fma_repeat()


@pytest.fixture
def first():
    return corpus.fma_first()


def test_step_fresh_letter(repeat):
    assert repeat.step(("s0", (d0,)), a) == {("s0", (d0,)), ("s", (a,))}


def test_step_equal_letter(repeat):
    assert repeat.step(("s", (a,)), a) == {("f", (a,))}


def test_step_constant_without_transition():
    m = Fma(frozenset({"p"}), "p", frozenset(), frozenset({"#"}), 1, (d0,))
    assert m.step(("p", (d0,)), Const("#")) == set()


def test_undeclared_constant_rejected(repeat):
    with pytest.raises(MalformedLetter):
        repeat.accepts((a, Const("#")))


@pytest.mark.parametrize("text, expected", [
    ("d1 d2 d1", True), ("d1 d2 d3", False), ("d1 d1", True), ("", False), ("d0 d1 d1", True),
])
def test_repeat_membership(repeat, text, expected):
    assert repeat.accepts(parse_word(text)) is expected


@pytest.mark.parametrize("text, expected", [
    ("d1 d2 d1", False), ("d1 d2 d3", True), ("d1", True), ("", False), ("d0 d1 d2", True),
])
def test_first_membership(first, text, expected):
    assert first.accepts(parse_word(text)) is expected


def test_witness_run_is_the_unique_accepting_run(repeat):
    w = (a, a)
    accepting = [r for r in all_runs(repeat, w) if r[-1][0] in repeat.accepting]
    assert accepting == [[("s0", (d0,)), ("s", (a,)), ("f", (a,))]]
    assert repeat.witness_run(w) == accepting[0]


def test_witness_run_none_when_rejected(repeat):
    assert not any(r[-1][0] in repeat.accepting for r in all_runs(repeat, (a,)))
    assert repeat.witness_run((a,)) is None


def test_empty_word_run():
    m = Fma(frozenset({"p"}), "p", frozenset({"p"}), frozenset(), 1, (d0,))
    assert m.witness_run(()) == [("p", (d0,))]


@pytest.mark.parametrize("name, n_max, expected", [
    ("repeat", 4, {2, 3, 4}),
    ("first", 2, {1, 2}),
])
def test_enumerate_lengths(repeat, first, name, n_max, expected):
    m = {"repeat": repeat, "first": first}[name]
    assert m.enumerate_lengths(n_max) == expected


def test_enumerate_lengths_empty_language():
    m = Fma(frozenset({"p"}), "p", frozenset(), frozenset(), 1, (d0,), trans_neq_skip={"p": {"p"}})
    assert m.enumerate_lengths(4) == set()


def test_enumerate_lengths_brute_force(repeat, first):
    for m in (repeat, first):
        brute = {len(w) for w in grid_words((), 4, data=5) if m.accepts(w)}
        assert m.enumerate_lengths(4) == brute


@pytest.mark.parametrize("name", ["l_repeat", "l_first"])
def test_accepts_matches_run_enumeration(name):
    m = corpus.build(name).automaton
    for w in grid_words((), 5):
        naive = any(r[-1][0] in m.accepting for r in all_runs(m, w))
        assert m.accepts(w) == naive


@pytest.mark.parametrize("name", ["l_repeat", "l_first"])
def test_invariance(rng, name):
    m = corpus.build(name).automaton
    pool = [User(i) for i in range(7)]
    for _ in range(200):
        w = random_word(rng, pool, rng.randint(0, 7))
        p = random_perm(rng, pool)
        assert m.accepts(w) == m.accepts(p.map_word(w))


@pytest.mark.parametrize("name", ["l_repeat", "l_first"])
def test_witness_runs_are_runs(rng, name):
    m = corpus.build(name).automaton
    pool = [User(i) for i in range(5)]
    for _ in range(100):
        w = random_word(rng, pool, rng.randint(0, 8))
        run = m.witness_run(w)
        if run is not None:
            assert is_run(m, w, run) and run[-1][0] in m.accepting
            assert all(len(set(regs)) == len(regs) for _, regs in run)


def two_register():
    # remembers the first two letters and accepts when the third repeats either
    return Fma(
        frozenset({"p", "q", "r", "f"}), "p", frozenset({"f"}), frozenset(), 2, (User(8), User(9)),
        trans_eq={("r", 1): {"f"}, ("r", 2): {"f"}},
        trans_neq_replace={"p": {("q", 1)}, "q": {("r", 2)}},
        trans_neq_skip={"f": {"f"}},
    )


def test_two_register_semantics():
    m = two_register()
    assert m.accepts((a, b, a)) and m.accepts((a, b, b, c))
    assert not m.accepts((a, b, c))
    for w in grid_words((), 4):
        for run in all_runs(m, w):
            assert all(len(set(regs)) == 2 for _, regs in run)


def test_json_round_trip(repeat):
    text = json.dumps(repeat.to_json())
    back = load(text)
    assert back == repeat
    for w in grid_words((), 3):
        assert back.accepts(w) == repeat.accepts(w)


@pytest.mark.parametrize("patch", [
    {"extra": 1},
    {"kind": "afma1"},
    {"registers": 2},
    {"initial_assignment": ["#"]},
])
def test_json_rejects(repeat, patch):
    data = repeat.to_json()
    data.update(patch)
    with pytest.raises(ParseError):
        Fma.from_json(data)


def test_constructor_validation():
    with pytest.raises(ValueError):
        Fma(frozenset({"p"}), "p", frozenset(), frozenset(), 2, (d0, d0))
    with pytest.raises(ValueError):
        Fma(frozenset({"p"}), "p", frozenset(), frozenset(), 1, (d0,), trans_eq={("p", 2): {"p"}})
