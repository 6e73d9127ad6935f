import pytest

from fmapump import corpus
from fmapump.alphabet import User, parse_word
from fmapump.errors import NotAccepted, WindowTooShort, WordTooShort
from fmapump.fma import Fma
from fmapump.perm import INFINITE
from fmapump.pump_fma import (
    periodic_family, pump_decompose, pumped_word, shrunk_word, verify,
)

from conftest import random_word

d0 = User(0)


def alternating():
    # no two neighbouring letters are equal; the register always holds the last letter
    return Fma(frozenset({"p"}), "p", frozenset({"p"}), frozenset(), 1, (d0,),
               trans_neq_replace={"p": {("p", 1)}})


@pytest.fixture
def repeat():
    return corpus.fma_repeat()


def test_repeat_example(repeat):
    w = parse_word("d1 d2 d3 d3")
    cert = pump_decompose(repeat, w)
    assert cert.word == w
    assert (cert.i, cert.j) == (0, 1)
    assert cert.alpha.order() <= 2
    assert verify(repeat, cert).ok


def test_identity_permutation_pumps_plainly(repeat):
    cert = pump_decompose(repeat, parse_word("d1 d1 d2 d3"))
    assert cert.alpha.order() == 1
    assert cert.upsilon == (User(2),)
    assert pumped_word(cert, 3) == parse_word("d1 d1 d2 d2 d2 d2 d3")
    assert shrunk_word(cert) == parse_word("d1 d1 d3")


def test_swap_permutation():
    m = alternating()
    w = parse_word("d1 d2 d1 d3")
    cert = pump_decompose(m, w)
    assert (cert.i, cert.j) == (0, 1)
    assert cert.alpha.order() == 2
    assert cert.alpha.apply(d0) == User(1) and cert.alpha.apply(User(1)) == d0
    # upsilon alternates between d1 and its swap partner, the tail follows the parity
    assert pumped_word(cert, 1) == parse_word("d1 d0 d2 d0 d3")
    assert pumped_word(cert, 2) == parse_word("d1 d0 d1 d2 d1 d3")
    assert shrunk_word(cert) == parse_word("d2 d0 d3")
    assert verify(m, cert, k_max=6).ok


@pytest.mark.parametrize("k", range(0, 6))
def test_pumped_length(repeat, k):
    cert = pump_decompose(repeat, parse_word("d1 d2 d3 d4 d2"))
    assert len(pumped_word(cert, k)) == len(cert.word) + k * len(cert.upsilon)
    assert len(shrunk_word(cert)) == len(cert.word) - len(cert.upsilon)


def test_window_placement(repeat):
    w = parse_word("d1 d2 d3 d4 d5 d6 d1")
    cert = pump_decompose(repeat, w, window=(2, 6))
    assert cert.psi == w[:2] and cert.omega == w[6:]
    assert 2 <= cert.i < cert.j <= 6
    assert verify(repeat, cert).ok


@pytest.mark.parametrize("window", [(0, 3), (1, 2), (4, 9), (3, 1)])
def test_window_too_short(repeat, window):
    with pytest.raises(WindowTooShort):
        pump_decompose(repeat, parse_word("d1 d2 d3 d4 d1"), window=window)


def test_not_accepted(repeat):
    with pytest.raises(NotAccepted):
        pump_decompose(repeat, parse_word("d1 d2 d3 d4"))


def test_periodic_family_too_short(repeat):
    with pytest.raises(WordTooShort):
        periodic_family(repeat, parse_word("d1 d1"))


@pytest.mark.parametrize("name, text", [
    ("repeat", "d1 d2 d3 d3"),
    ("repeat", "d1 d2 d1 d3 d4"),
    ("alt", "d1 d2 d1 d3"),
    ("alt", "d3 d1 d3 d2 d1"),
])
def test_periodic_family(name, text):
    m = alternating() if name == "alt" else corpus.fma_repeat()
    w1, w2, w3 = periodic_family(m, parse_word(text))
    assert w1 + w3 != () and w2
    for k in range(5):
        assert m.accepts(w1 + w2 * k + w3), k


@pytest.mark.parametrize("name", ["l_repeat", "l_first"])
def test_random_certificates(rng, name):
    m = corpus.build(name).automaton
    pool = [User(i) for i in range(6)]
    n_states = len(m.states)
    done = 0
    for _ in range(200):
        w = random_word(rng, pool, rng.randint(n_states + 1, 10))
        if not m.accepts(w):
            continue
        lo = rng.randint(0, len(w) - n_states - 1)
        hi = rng.randint(lo + n_states + 1, len(w))
        cert = pump_decompose(m, w, window=(lo, hi))
        assert cert.word == w
        assert lo <= cert.i < cert.j <= hi
        assert cert.alpha.order() != INFINITE
        assert verify(m, cert).ok
        done += 1
    assert done > 30


def test_alternating_random(rng):
    m = alternating()
    pool = [User(i) for i in range(4)]
    for _ in range(100):
        w = random_word(rng, pool, rng.randint(2, 8))
        if not m.accepts(w):
            continue
        res = verify(m, pump_decompose(m, w), k_max=6)
        assert res.ok and res.order <= 2


def test_certificate_json(repeat):
    data = pump_decompose(repeat, parse_word("d1 d2 d3 d3")).to_json()
    assert data["upsilon"] == "d1" and data["phi"] == "d2 d3 d3"
    assert data["alpha"]["order"] == 1
