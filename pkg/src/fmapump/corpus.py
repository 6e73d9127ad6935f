"""Example languages: constructed automata plus closed-form membership predicates.

Every entry carries a predicate written directly from the language
definition.  Where an automaton is provided as well, the two are expected
to agree on every short word; the test suite enforces this.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Union

from .afma import Afma1
from .alphabet import Const, User
from .errors import UnknownName
from .fma import Fma

HASH = Const("#")
DOLLAR = Const("$")
THETA0 = User(0)


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    automaton: Optional[Union[Fma, Afma1]]
    predicate: Callable
    constants: frozenset
    notes: str


# predicates -----------------------------------------------------------------

def _distinct(w) -> bool:
    return len(set(w)) == len(w)


def pred_repeat(w) -> bool:
    return len(set(w)) < len(w)


def pred_first(w) -> bool:
    # nonempty: the automaton for this language starts in a rejecting state
    return len(w) >= 1 and w[0] not in w[1:]


def pred_last(w) -> bool:
    return len(w) == 0 or w[-1] not in w[:-1]


def pred_diff(w) -> bool:
    return _distinct(w)


def _split_once(w, sep):
    if list(w).count(sep) != 1:
        return None
    k = list(w).index(sep)
    return tuple(w[:k]), tuple(w[k + 1:])


def pred_subset(w) -> bool:
    parts = _split_once(w, HASH)
    if parts is None:
        return False
    psi, omega = parts
    return _distinct(psi) and _distinct(omega) and set(psi) <= set(omega)


def pred_supset(w) -> bool:
    parts = _split_once(w, HASH)
    if parts is None:
        return False
    psi, omega = parts
    return _distinct(psi) and _distinct(omega) and set(psi) >= set(omega)


def _split_double_hash(w):
    w = list(w)
    if w.count(HASH) != 2:
        return None
    k = w.index(HASH)
    if k + 1 >= len(w) or w[k + 1] != HASH:
        return None
    return tuple(w[:k]), tuple(w[k + 2:])


def pred_2diff(w) -> bool:
    parts = _split_double_hash(w)
    return parts is not None and _distinct(parts[0]) and _distinct(parts[1])


def pred_eq(w) -> bool:
    parts = _split_double_hash(w)
    return pred_2diff(w) and set(parts[0]) == set(parts[1])


def pred_co(w) -> bool:
    """Concatenation of a word with a fresh last letter and a word with a fresh first letter."""
    w = tuple(w)
    return any(pred_last(w[:k]) and pred_first(w[k:]) for k in range(len(w) + 1))


def pred_first_dollar_last(w) -> bool:
    parts = _split_once(w, DOLLAR)
    return parts is not None and pred_first(parts[0]) and pred_last(parts[1])


def pred_kleene(w) -> bool:
    w = tuple(w)
    n = len(w)
    reach = [False] * (n + 1)
    reach[0] = True
    for i in range(n):
        if reach[i]:
            for j in range(i + 1, n + 1):
                if not reach[j] and pred_first_dollar_last(w[i:j]):
                    reach[j] = True
    return reach[n]


def pred_hash(w) -> bool:
    """Words ``s1 # s1 s2 # ... # s1..sn #`` with ``s1..sn`` repeat-free, n >= 1."""
    w = tuple(w)
    if not w or w[-1] != HASH:
        return False
    blocks, cur = [], []
    for x in w[:-1]:
        if x == HASH:
            blocks.append(tuple(cur))
            cur = []
        else:
            cur.append(x)
    blocks.append(tuple(cur))
    full = blocks[-1]
    if len(full) != len(blocks) or not _distinct(full):
        return False
    return all(b == full[:k] for k, b in enumerate(blocks, 1))


def hash_word(n: int, letters=None) -> tuple:
    letters = letters or [User(i + 1) for i in range(n)]
    out = []
    for k in range(1, n + 1):
        out.extend(letters[:k])
        out.append(HASH)
    return tuple(out)


def hash_length(n: int) -> int:
    return (n * n + 3 * n) // 2


# automata -----------------------------------------------------------------------

def _fs(*xs):
    return frozenset(xs)


def fma_repeat() -> Fma:
    # the extra equality loop at s0 lets a word start with the initial register
    # letter without committing to it as the repeated letter
    return Fma(
        states=_fs("s0", "s", "f"), initial="s0", accepting=_fs("f"),
        constants=frozenset(), registers=1, initial_assignment=(THETA0,),
        trans_eq={("s0", 1): _fs("s0", "s"), ("s", 1): _fs("f"), ("f", 1): _fs("f")},
        trans_neq_skip={"s0": _fs("s0"), "s": _fs("s"), "f": _fs("f")},
        trans_neq_replace={"s0": _fs(("s", 1))},
    )


def fma_first() -> Fma:
    return Fma(
        states=_fs("s0", "f"), initial="s0", accepting=_fs("f"),
        constants=frozenset(), registers=1, initial_assignment=(THETA0,),
        trans_eq={("s0", 1): _fs("f")},
        trans_neq_skip={"f": _fs("f")},
        trans_neq_replace={"s0": _fs(("f", 1))},
    )


def _ch(*sets):
    return frozenset(frozenset(s) for s in sets)


def _neq(*pairs):
    return frozenset((frozenset(k), frozenset(r)) for k, r in pairs)


def afma_diff() -> Afma1:
    # q0 keeps the initial register and spawns a watcher for every letter read;
    # a watcher has no move on its own letter, so a repetition kills the run.
    return Afma1(
        states=_fs("q0", "watch"), initial="q0", accepting=_fs("q0", "watch"),
        constants=frozenset(), initial_register=THETA0,
        mu_eq={"q0": _ch({"q0", "watch"})},
        mu_neq={"q0": _neq(({"q0"}, {"watch"})), "watch": _neq(({"watch"}, set()))},
    )


def afma_subset() -> Afma1:
    # before '#': dp forbids a repeat, find carries the letter across '#';
    # after '#': find2 must meet its letter, ds forbids a repeat.
    return Afma1(
        states=_fs("q0", "post", "dp", "find", "find2", "ds"), initial="q0",
        accepting=_fs("post", "dp", "ds"),
        constants=_fs("#"), initial_register=THETA0,
        mu_delta={
            ("q0", "#"): _ch({"post"}),
            ("dp", "#"): _ch(set()),
            ("find", "#"): _ch({"find2"}),
        },
        mu_eq={
            "q0": _ch({"q0", "dp", "find"}),
            "post": _ch({"post", "ds"}),
            "find2": _ch(set()),
        },
        mu_neq={
            "q0": _neq(({"q0"}, {"dp", "find"})),
            "post": _neq(({"post"}, {"ds"})),
            "dp": _neq(({"dp"}, set())),
            "find": _neq(({"find"}, set())),
            "find2": _neq(({"find2"}, set())),
            "ds": _neq(({"ds"}, set())),
        },
    )


def afma_last() -> Afma1:
    # every letter read gets a watcher; it is hot exactly when the letter
    # just read equals its own, and hot is rejecting.
    return Afma1(
        states=_fs("q0", "calm", "hot"), initial="q0", accepting=_fs("q0", "calm"),
        constants=frozenset(), initial_register=THETA0,
        mu_eq={"q0": _ch({"q0", "calm"}), "calm": _ch({"hot"}), "hot": _ch({"hot"})},
        mu_neq={
            "q0": _neq(({"q0"}, {"calm"})),
            "calm": _neq(({"calm"}, set())),
            "hot": _neq(({"calm"}, set())),
        },
    )


_REGISTRY = {
    "l_repeat": lambda: CorpusEntry(
        "l_repeat", fma_repeat(), pred_repeat, frozenset(),
        "FMA: some letter occurs more than once"),
    "l_first": lambda: CorpusEntry(
        "l_first", fma_first(), pred_first, frozenset(),
        "FMA: the first letter never recurs (nonempty words)"),
    "l_diff": lambda: CorpusEntry(
        "l_diff", afma_diff(), pred_diff, frozenset(),
        "alternating: all letters pairwise distinct"),
    "l_subset": lambda: CorpusEntry(
        "l_subset", afma_subset(), pred_subset, frozenset({"#"}),
        "alternating: psi # omega, both repeat-free, letters of psi occur in omega"),
    "l_last": lambda: CorpusEntry(
        "l_last", afma_last(), pred_last, frozenset(),
        "alternating: the last letter does not occur earlier"),
    "l_supset": lambda: CorpusEntry(
        "l_supset", None, pred_supset, frozenset({"#"}),
        "predicate only: psi # omega with letters of omega occurring in psi"),
    "l_co": lambda: CorpusEntry(
        "l_co", None, pred_co, frozenset(), "predicate only: concatenation l_last . l_first"),
    "l_2diff": lambda: CorpusEntry(
        "l_2diff", None, pred_2diff, frozenset({"#"}), "predicate only: psi ## omega, both repeat-free"),
    "l_eq": lambda: CorpusEntry(
        "l_eq", None, pred_eq, frozenset({"#"}), "predicate only: psi ## omega with equal contents"),
    "l_first_dollar_last": lambda: CorpusEntry(
        "l_first_dollar_last", None, pred_first_dollar_last, frozenset({"$"}),
        "predicate only: psi $ omega, psi in l_first, omega in l_last"),
    "l_kleene": lambda: CorpusEntry(
        "l_kleene", None, pred_kleene, frozenset({"$"}), "predicate only: star of l_first_dollar_last"),
    "l_hash": lambda: CorpusEntry(
        "l_hash", None, pred_hash, frozenset({"#"}),
        "predicate only: growing prefixes separated by #, lengths (n^2+3n)/2"),
}

NAMES = tuple(_REGISTRY)
AUTOMATON_NAMES = ("l_repeat", "l_first", "l_diff", "l_subset", "l_last")


def build(name: str) -> CorpusEntry:
    try:
        return _REGISTRY[name]()
    except KeyError:
        raise UnknownName(f"no corpus entry named {name!r}") from None
