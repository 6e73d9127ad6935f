import itertools

import pytest
from hypothesis import given, settings, strategies as st

from fmapump.errors import BudgetExceeded
from fmapump.wqo import (
    ResemblingEntry, compute_N, dickson_pair, good_pair, is_bad, is_extendable,
    is_resembling, longest_bad,
)

E = ResemblingEntry
S0 = frozenset({0})
EMPTY = frozenset()


def brute_longest_bad_one_state(max_len=6):
    """Longest bad sequence over one state by listing every sequence."""
    best = 0
    for n in range(1, max_len + 1):
        pools = [[(q, c) for q in (EMPTY, S0) for c in range(i + 1)] for i in range(n)]
        found = False
        for combo in itertools.product(*pools):
            seq = [E(q, {S0: c} if c else {}) for q, c in combo]
            if is_bad(seq):
                found = True
                break
        if not found:
            break
        best = n
    return best


def test_one_state_bound_matches_brute_force():
    assert brute_longest_bad_one_state() == 3
    assert longest_bad(1).length == 3
    assert compute_N(1) == 4


def test_witness_is_bad_and_resembling():
    w = longest_bad(1)
    assert len(w.entries) == w.length
    assert is_bad(w.entries)
    assert is_resembling(w.entries, states={0})
    assert not is_extendable(w.entries, w.length)


def test_every_length_four_sequence_has_a_good_pair(rng):
    for _ in range(300):
        seq = [E(rng.choice([EMPTY, S0]), {S0: rng.randint(0, i)}) for i in range(4)]
        seq = [E(e.Q, {k: v for k, v in e.f.items() if v}) for e in seq]
        assert is_extendable(seq, 4)


@pytest.mark.parametrize("s", [1, 2])
def test_label_only_space(s):
    # with every count pinned at 0 a bad sequence lists each label once
    assert longest_bad(s, f_ceiling=0).length == 2 ** s
    assert longest_bad(s, prune=False, f_ceiling=0).length == 2 ** s
    assert compute_N(1, f_ceiling=0) == 3


@pytest.mark.parametrize("s, max_len", [(1, 3), (1, 5), (2, 3)])
def test_pruning_agrees_with_full_search(s, max_len):
    assert longest_bad(s, max_len=max_len).length == longest_bad(s, prune=False, max_len=max_len).length


def test_budget():
    with pytest.raises(BudgetExceeded):
        longest_bad(2, budget=1000)
    with pytest.raises(ValueError):
        longest_bad(0)


@pytest.mark.parametrize("seq, pair", [
    ([E(S0, {}), E(S0, {})], (0, 1)),
    ([E(S0, {S0: 1}), E(EMPTY, {}), E(S0, {})], None),
    ([E(EMPTY, {}), E(S0, {}), E(S0, {S0: 1}), E(EMPTY, {S0: 2})], (1, 2)),
    ([E(S0, {S0: 1}), E(EMPTY, {}), E(S0, {}), E(S0, {S0: 1})], (0, 3)),
])
def test_good_pair_examples(seq, pair):
    assert good_pair(seq) == pair
    assert is_bad(seq) == (pair is None)


def test_is_extendable_uses_prefix():
    seq = [E(S0, {}), E(EMPTY, {}), E(S0, {})]
    assert not is_extendable(seq, 2)
    assert is_extendable(seq, 3)


def test_is_resembling_bounds():
    assert is_resembling([E(S0, {}), E(S0, {S0: 1})])
    assert not is_resembling([E(S0, {S0: 1})])
    assert not is_resembling([E(frozenset({3}), {})], states={0})
    assert not is_resembling([E(S0, {}), E(S0, {EMPTY: 1})])


@pytest.mark.parametrize("vs, pair", [
    ([(1, 0), (0, 1), (1, 1)], (0, 2)),
    ([(2, 0), (1, 1), (0, 2)], None),
    ([(3, 3), (0, 0), (0, 0)], (1, 2)),
    ([], None),
])
def test_dickson_examples(vs, pair):
    assert dickson_pair(vs) == pair


def _dickson_brute(vs):
    pairs = [(j, i) for i, j in itertools.combinations(range(len(vs)), 2)
             if all(a <= b for a, b in zip(vs[i], vs[j]))]
    return None if not pairs else min(pairs)[::-1]


@settings(max_examples=200)
@given(st.lists(st.tuples(*[st.integers(0, 6)] * 3), max_size=12))
def test_dickson_matches_brute_force(vs):
    assert dickson_pair(vs) == _dickson_brute(vs)


def test_long_sequences_always_have_pairs(rng):
    for _ in range(100):
        vs = [tuple(rng.randint(0, 5) for _ in range(2)) for _ in range(40)]
        assert dickson_pair(vs) is not None


def test_witness_json():
    data = longest_bad(1).to_json()
    assert data["length"] == 3 and len(data["entries"]) == 3
