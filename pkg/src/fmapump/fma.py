"""Nondeterministic r-register finite-memory automata.

A configuration is ``(state, registers)`` where ``registers`` is a tuple of
pairwise distinct data letters.  Reading a letter ``x``:

* ``x`` a constant: move along ``trans_delta[(state, x)]``, registers kept;
* ``x`` stored in register ``i``: move along ``trans_eq[(state, i)]``;
* otherwise: either skip (``trans_neq_skip``) or overwrite one register
  (``trans_neq_replace``).

Register indices are 1-based throughout, as in the JSON format.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .alphabet import Const, User, is_data, parse_symbol, sort_key
from .errors import MalformedLetter, ParseError

FMA_FIELDS = (
    "kind", "states", "initial", "accepting", "constants", "registers",
    "initial_assignment", "trans_delta", "trans_eq", "trans_neq_skip", "trans_neq_replace",
)


@dataclass(frozen=True)
class Fma:
    states: frozenset
    initial: str
    accepting: frozenset
    constants: frozenset  # of constant names
    registers: int
    initial_assignment: tuple
    trans_delta: dict = field(default_factory=dict)  # (state, const name) -> set of states
    trans_eq: dict = field(default_factory=dict)  # (state, i) -> set of states
    trans_neq_skip: dict = field(default_factory=dict)  # state -> set of states
    trans_neq_replace: dict = field(default_factory=dict)  # state -> set of (state, i)

    def __post_init__(self):
        r = self.registers
        if r < 1:
            raise ValueError("an automaton needs at least one register")
        theta = self.initial_assignment
        if len(theta) != r or len(set(theta)) != r or not all(is_data(x) for x in theta):
            raise ValueError("initial assignment must be r distinct data letters")
        st = self.states
        if self.initial not in st or not self.accepting <= st:
            raise ValueError("initial/accepting states must be declared")
        for (s, a), targets in self.trans_delta.items():
            if s not in st or a not in self.constants or not set(targets) <= st:
                raise ValueError(f"bad constant transition at {(s, a)}")
        for (s, i), targets in self.trans_eq.items():
            if s not in st or not 1 <= i <= r or not set(targets) <= st:
                raise ValueError(f"bad equality transition at {(s, i)}")
        for s, targets in self.trans_neq_skip.items():
            if s not in st or not set(targets) <= st:
                raise ValueError(f"bad skip transition at {s}")
        for s, targets in self.trans_neq_replace.items():
            if s not in st or not all(t in st and 1 <= i <= r for t, i in targets):
                raise ValueError(f"bad replace transition at {s}")

    @property
    def initial_config(self):
        return (self.initial, tuple(self.initial_assignment))

    def check_letter(self, x):
        if isinstance(x, Const) and x.name not in self.constants:
            raise MalformedLetter(f"{x} is not a declared constant")

    # semantics ----------------------------------------------------------------

    def step(self, c, x) -> set:
        """All configurations reachable from ``c`` by reading ``x``."""
        self.check_letter(x)
        s, theta = c
        if isinstance(x, Const):
            return {(t, theta) for t in self.trans_delta.get((s, x.name), ())}
        hits = [i for i, y in enumerate(theta, 1) if y == x]
        if hits:
            assert len(hits) == 1, "register assignment repeats a letter"
            return {(t, theta) for t in self.trans_eq.get((s, hits[0]), ())}
        out = {(t, theta) for t in self.trans_neq_skip.get(s, ())}
        for t, i in self.trans_neq_replace.get(s, ()):
            out.add((t, theta[:i - 1] + (x,) + theta[i:]))
        return out

    def _layers(self, w):
        layers = [{self.initial_config}]
        for x in w:
            nxt = set()
            for c in layers[-1]:
                nxt |= self.step(c, x)
            layers.append(nxt)
        return layers

    def accepts(self, w: Sequence) -> bool:
        for x in w:
            self.check_letter(x)
        frontier = {self.initial_config}
        for x in w:
            frontier = {d for c in frontier for d in self.step(c, x)}
            if not frontier:
                return False
        return any(s in self.accepting for s, _ in frontier)

    def witness_run(self, w: Sequence) -> Optional[list]:
        """The least accepting run on ``w`` (least successor at every position), or None."""
        for x in w:
            self.check_letter(x)
        layers = self._layers(w)
        good = [set() for _ in layers]
        good[-1] = {c for c in layers[-1] if c[0] in self.accepting}
        for i in range(len(w) - 1, -1, -1):
            good[i] = {c for c in layers[i] if self.step(c, w[i]) & good[i + 1]}
        if self.initial_config not in good[0]:
            return None
        run = [self.initial_config]
        for i, x in enumerate(w):
            run.append(min(self.step(run[-1], x) & good[i + 1], key=config_key))
        return run

    def enumerate_lengths(self, n_max: int) -> set:
        """Lengths ``n <= n_max`` of accepted words.

        Only canonical words are generated: every position reads a constant,
        a letter of the initial assignment, a letter already used, or the
        next fresh letter.  Any word is mapped onto such a word by a
        Delta-permutation, which preserves acceptance.
        """
        theta = list(self.initial_assignment)
        base = max((x.n for x in theta if isinstance(x, User)), default=-1) + 1
        consts = [Const(a) for a in sorted(self.constants)]
        found = set()

        def dfs(frontier, n, fresh_used):
            if any(s in self.accepting for s, _ in frontier):
                found.add(n)
            if n == n_max:
                return
            letters = consts + theta + [User(base + k) for k in range(fresh_used + 1)]
            for x in letters:
                nxt = frozenset(d for c in frontier for d in self.step(c, x))
                if nxt:
                    used = fresh_used + (1 if x == User(base + fresh_used) else 0)
                    dfs(nxt, n + 1, used)

        dfs(frozenset({self.initial_config}), 0, 0)
        return found

    # serialization --------------------------------------------------------------

    def to_json(self) -> dict:
        def names(xs):
            return sorted(xs)

        delta, eq = {}, {}
        for (s, a), ts in sorted(self.trans_delta.items()):
            delta.setdefault(s, {})[a] = names(ts)
        for (s, i), ts in sorted(self.trans_eq.items()):
            eq.setdefault(s, {})[str(i)] = names(ts)
        return {
            "kind": "fma",
            "states": names(self.states),
            "initial": self.initial,
            "accepting": names(self.accepting),
            "constants": names(self.constants),
            "registers": self.registers,
            "initial_assignment": [str(x) for x in self.initial_assignment],
            "trans_delta": delta,
            "trans_eq": eq,
            "trans_neq_skip": {s: names(ts) for s, ts in sorted(self.trans_neq_skip.items())},
            "trans_neq_replace": {
                s: [[t, i] for t, i in sorted(ts)] for s, ts in sorted(self.trans_neq_replace.items())
            },
        }

    @classmethod
    def from_json(cls, data: dict) -> "Fma":
        unknown = set(data) - set(FMA_FIELDS)
        if unknown:
            raise ParseError(f"unknown fields: {sorted(unknown)}")
        if data.get("kind") != "fma":
            raise ParseError("expected kind 'fma'")
        try:
            consts = frozenset(data.get("constants", []))
            theta = tuple(parse_symbol(t, ()) for t in data["initial_assignment"])
            return cls(
                states=frozenset(data["states"]),
                initial=data["initial"],
                accepting=frozenset(data["accepting"]),
                constants=consts,
                registers=int(data["registers"]),
                initial_assignment=theta,
                trans_delta={(s, a): frozenset(ts)
                             for s, m in data.get("trans_delta", {}).items() for a, ts in m.items()},
                trans_eq={(s, int(i)): frozenset(ts)
                          for s, m in data.get("trans_eq", {}).items() for i, ts in m.items()},
                trans_neq_skip={s: frozenset(ts) for s, ts in data.get("trans_neq_skip", {}).items()},
                trans_neq_replace={s: frozenset((t, int(i)) for t, i in ts)
                                   for s, ts in data.get("trans_neq_replace", {}).items()},
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed fma automaton: {exc}") from exc


def config_key(c):
    s, theta = c
    return (s, tuple(sort_key(x) for x in theta))


def is_run(a: Fma, w: Sequence, run: Sequence) -> bool:
    if len(run) != len(w) + 1 or run[0] != a.initial_config:
        return False
    return all(run[i + 1] in a.step(run[i], x) for i, x in enumerate(w))


def all_runs(a: Fma, w: Sequence) -> Iterable[list]:
    """Every run from the initial configuration (exhaustive, for oracles)."""
    def rec(run, i):
        if i == len(w):
            yield list(run)
            return
        for d in sorted(a.step(run[-1], w[i]), key=config_key):
            run.append(d)
            yield from rec(run, i + 1)
            run.pop()
    yield from rec([a.initial_config], 0)


def load(text: str) -> Fma:
    return Fma.from_json(json.loads(text))
