"""Letters, words and symbolic letter sets over an infinite alphabet.

The alphabet is split into a finite set of constants (``Const``) and an
infinite supply of data letters.  Data letters come in two flavours:
``User`` letters, which are what input words are written with, and
``Chain`` letters, which are reserved for the infinite permutation pieces
built by the pumping engines.  Keeping the two namespaces apart makes the
freshness of chain letters a syntactic fact.

Text format: whitespace separated tokens.  A token equal to a declared
constant is a ``Const``; ``d<N>`` is ``User(N)``; ``c<C>.<J>`` is
``Chain(C, J)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import ParseError


@dataclass(frozen=True, slots=True)
class Const:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True, slots=True)
class User:
    n: int

    def __str__(self):
        return f"d{self.n}"


@dataclass(frozen=True, slots=True)
class Chain:
    chain: int
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("chain indices start at 1")

    def __str__(self):
        return f"c{self.chain}.{self.index}"


Symbol = Union[Const, User, Chain]
Word = tuple  # tuple[Symbol, ...]


def is_data(x: Symbol) -> bool:
    return not isinstance(x, Const)


def sort_key(x: Symbol):
    """Total order on letters: constants, then user letters, then chain letters."""
    if isinstance(x, Const):
        return (0, x.name, 0)
    if isinstance(x, User):
        return (1, "", x.n)
    return (2, "", (x.chain, x.index))


def sorted_symbols(xs: Iterable[Symbol]) -> list:
    return sorted(xs, key=sort_key)


_USER = re.compile(r"d(\d+)\Z")
_CHAIN = re.compile(r"c(\d+)\.(\d+)\Z")


def parse_symbol(token: str, constants: Iterable[str] = (), allow_chain: bool = False) -> Symbol:
    if token in set(constants):
        return Const(token)
    m = _USER.match(token)
    if m:
        return User(int(m.group(1)))
    m = _CHAIN.match(token)
    if m:
        if not allow_chain:
            raise ParseError(f"chain letter {token!r} is output-only")
        if int(m.group(2)) < 1:
            raise ParseError(f"chain index must be >= 1 in {token!r}")
        return Chain(int(m.group(1)), int(m.group(2)))
    raise ParseError(f"unrecognised token {token!r}")


def parse_word(text: str, constants: Iterable[str] = (), allow_chain: bool = False) -> Word:
    constants = set(constants)
    return tuple(parse_symbol(t, constants, allow_chain) for t in text.split())


def format_word(w: Sequence[Symbol]) -> str:
    return " ".join(str(x) for x in w)


def contents(w: Sequence[Symbol]) -> frozenset:
    """The set of letters occurring in ``w``."""
    return frozenset(w)


def all_distinct(letters: Sequence[Symbol]) -> bool:
    return len(set(letters)) == len(letters)


def normalize_word(w: Sequence[Symbol]) -> tuple[Word, dict]:
    """Re-encode chain letters of ``w`` as fresh user letters.

    Returns the new word and the renaming that was applied.  User letters
    and constants are left as they are.
    """
    used = {x.n for x in w if isinstance(x, User)}
    nxt = max(used, default=-1) + 1
    renaming = {}
    out = []
    for x in w:
        if isinstance(x, Chain):
            if x not in renaming:
                renaming[x] = User(nxt)
                nxt += 1
            x = renaming[x]
        out.append(x)
    return tuple(out), renaming


@dataclass(frozen=True)
class SymSet:
    """A finite letter set together with finitely many chain tails.

    ``tails`` maps a chain id ``c`` to ``j`` and stands for the infinite set
    ``{Chain(c, k) : k >= j}``.
    """

    finite: frozenset = frozenset()
    tails: tuple = ()  # sorted tuple of (chain, start)

    def __post_init__(self):
        chains = [c for c, _ in self.tails]
        if len(set(chains)) != len(chains):
            raise ValueError("tails must refer to distinct chains")
        for c, j in self.tails:
            if j < 1:
                raise ValueError("tail start must be >= 1")
        # absorb finite elements covered by a tail so the representation stays canonical
        tails = dict(self.tails)
        overlap = {
            x for x in self.finite
            if isinstance(x, Chain) and x.chain in tails and x.index >= tails[x.chain]
        }
        if overlap:
            object.__setattr__(self, "finite", frozenset(self.finite - overlap))
        object.__setattr__(self, "tails", tuple(sorted(tails.items())))

    @classmethod
    def of(cls, xs: Iterable[Symbol] = (), tails: Iterable = ()) -> "SymSet":
        return cls(frozenset(xs), tuple(tails))

    @property
    def is_finite(self) -> bool:
        return not self.tails

    def tail_start(self, chain: int):
        for c, j in self.tails:
            if c == chain:
                return j
        return None

    def __contains__(self, x) -> bool:
        return symset_member(self, x)

    def union(self, other: "SymSet") -> "SymSet":
        tails = dict(self.tails)
        for c, j in other.tails:
            tails[c] = min(j, tails.get(c, j))
        return SymSet(self.finite | other.finite, tuple(tails.items())).normalized()

    def normalized(self) -> "SymSet":
        """Fold finite chain letters adjacent to a tail into the tail."""
        tails = dict(self.tails)
        finite = set(self.finite)
        for c in list(tails):
            j = tails[c]
            while j > 1 and Chain(c, j - 1) in finite:
                finite.discard(Chain(c, j - 1))
                j -= 1
            tails[c] = j
        return SymSet(frozenset(finite), tuple(tails.items()))

    def to_json(self):
        return {
            "finite": [str(x) for x in sorted_symbols(self.finite)],
            "tails": [{"chain": c, "from": j} for c, j in self.tails],
        }

    def __str__(self):
        parts = [str(x) for x in sorted_symbols(self.finite)]
        parts += [f"c{c}.{j}.." for c, j in self.tails]
        return "{" + ", ".join(parts) + "}"


def symset_member(s: SymSet, x: Symbol) -> bool:
    if x in s.finite:
        return True
    if isinstance(x, Chain):
        j = s.tail_start(x.chain)
        return j is not None and x.index >= j
    return False


def symset_subset(a: SymSet, b: SymSet) -> bool:
    """Exact inclusion test; a tail of ``a`` needs a tail of ``b`` on the same chain."""
    if not all(symset_member(b, x) for x in a.finite):
        return False
    for c, j in a.tails:
        jb = b.tail_start(c)
        if jb is None:
            return False
        if jb > j and not all(Chain(c, k) in b.finite for k in range(j, jb)):
            return False
    return True
