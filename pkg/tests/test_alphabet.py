import pytest
from hypothesis import given, strategies as st

from fmapump.alphabet import (
    Chain, Const, SymSet, User, all_distinct, contents, format_word, normalize_word,
    parse_word, sorted_symbols, symset_member, symset_subset,
)
from fmapump.errors import ParseError

A, B, C = User(1), User(2), User(3)
HASH = Const("#")

letters = st.one_of(
    st.builds(User, st.integers(0, 6)),
    st.builds(Chain, st.integers(0, 2), st.integers(1, 8)),
    st.sampled_from([Const("#"), Const("$")]),
)
words = st.lists(letters, max_size=8).map(tuple)


def symsets():
    tails = st.dictionaries(st.integers(0, 2), st.integers(1, 6), max_size=3)
    return st.builds(lambda f, t: SymSet(frozenset(f), tuple(t.items())), st.sets(letters, max_size=6), tails)


@pytest.mark.parametrize("w, expected", [
    ((A, B, A), {A, B}),
    ((), set()),
    ((HASH, A, HASH), {HASH, A}),
])
def test_contents(w, expected):
    assert contents(w) == expected


@pytest.mark.parametrize("t, expected", [((A, B, C), True), ((A, A), False), ((), True)])
def test_all_distinct(t, expected):
    assert all_distinct(t) is expected


@given(words, words)
def test_contents_of_concatenation(u, v):
    assert contents(u + v) == contents(u) | contents(v)


def test_parse_and_format_round_trip():
    w = parse_word("d1 # d22 d1", {"#"})
    assert w == (A, HASH, User(22), A)
    assert format_word(w) == "d1 # d22 d1"


def test_chain_tokens_are_output_only():
    with pytest.raises(ParseError):
        parse_word("c0.1")
    assert parse_word("c0.1", allow_chain=True) == (Chain(0, 1),)


@pytest.mark.parametrize("text", ["x", "#", "d", "c1", "c1.0"])
def test_bad_tokens(text):
    with pytest.raises(ParseError):
        parse_word(text, allow_chain=True)


def test_symbol_order():
    xs = [Chain(0, 2), User(3), HASH, Chain(0, 1), User(0)]
    assert sorted_symbols(xs) == [HASH, User(0), User(3), Chain(0, 1), Chain(0, 2)]


def test_normalize_word_renames_chain_letters():
    w = (User(4), Chain(1, 1), Chain(1, 2), Chain(1, 1))
    out, ren = normalize_word(w)
    assert out == (User(4), User(5), User(6), User(5))
    assert ren == {Chain(1, 1): User(5), Chain(1, 2): User(6)}


S = SymSet.of([A], [(0, 2)])


@pytest.mark.parametrize("x, expected", [(Chain(0, 5), True), (Chain(0, 1), False), (A, True), (B, False)])
def test_symset_member(x, expected):
    assert symset_member(S, x) is expected


@pytest.mark.parametrize("a, b, expected", [
    (SymSet.of([], [(0, 3)]), SymSet.of([], [(0, 1)]), True),
    (SymSet.of([], [(0, 1)]), SymSet.of([A, B, Chain(0, 1)]), False),
    (SymSet.of([A], [(0, 2)]), SymSet.of([A, B], [(0, 1)]), True),
    (SymSet.of([], [(0, 1)]), SymSet.of([Chain(0, 1)], [(0, 2)]), True),
    (SymSet.of([], [(0, 1)]), SymSet.of([], [(1, 1)]), False),
])
def test_symset_subset(a, b, expected):
    assert symset_subset(a, b) is expected


def test_symset_rejects_duplicate_tails():
    with pytest.raises(ValueError):
        SymSet(frozenset(), ((0, 1), (0, 2)))


@given(symsets(), letters)
def test_member_matches_enumeration(s, x):
    explicit = set(s.finite) | {Chain(c, k) for c, j in s.tails for k in range(j, 101)}
    if isinstance(x, Chain) and x.index > 100:
        return
    assert symset_member(s, x) == (x in explicit)


@given(symsets(), symsets(), letters)
def test_subset_transfers_membership(a, b, x):
    if symset_subset(a, b) and symset_member(a, x):
        assert symset_member(b, x)


@given(symsets(), symsets())
def test_union_contains_both(a, b):
    u = a.union(b)
    assert symset_subset(a, u) and symset_subset(b, u)
