"""Alternating one-register finite-memory automata.

A configuration is ``(state, letter)``; a run moves through finite *sets* of
configurations.  Each transition offers a collection of choices, each
choice being a set of states to split into.  An empty choice (the empty
set of states) is a branch with no remaining obligations and succeeds
vacuously; an empty collection of choices means the configuration is
stuck.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .alphabet import Const, is_data, parse_symbol, sort_key
from .errors import MalformedLetter, NotARun, ParseError

AFMA_FIELDS = ("kind", "states", "initial", "accepting", "constants",
               "initial_register", "mu_delta", "mu_eq", "mu_neq")


def config_key(c):
    return (c[0], sort_key(c[1]))


def configset_key(cs):
    return tuple(sorted(config_key(c) for c in cs))


def sorted_configs(cs) -> list:
    return sorted(cs, key=config_key)


@dataclass(frozen=True, eq=False)
class Afma1:
    states: frozenset
    initial: str
    accepting: frozenset
    constants: frozenset
    initial_register: object
    mu_delta: dict = field(default_factory=dict)  # (state, const name) -> frozenset of frozensets
    mu_eq: dict = field(default_factory=dict)  # state -> frozenset of frozensets
    mu_neq: dict = field(default_factory=dict)  # state -> frozenset of (keep, replace)

    def __post_init__(self):
        if not is_data(self.initial_register):
            raise ValueError("the initial register must hold a data letter")
        st = self.states
        if self.initial not in st or not self.accepting <= st:
            raise ValueError("initial/accepting states must be declared")

        def check(choices, where):
            for q in choices:
                if not set(q) <= st:
                    raise ValueError(f"unknown state in choice at {where}")

        for (s, a), ch in self.mu_delta.items():
            if s not in st or a not in self.constants:
                raise ValueError(f"bad constant transition at {(s, a)}")
            check(ch, (s, a))
        for s, ch in self.mu_eq.items():
            if s not in st:
                raise ValueError(f"unknown state {s}")
            check(ch, s)
        for s, ch in self.mu_neq.items():
            if s not in st:
                raise ValueError(f"unknown state {s}")
            check([k for k, _ in ch] + [r for _, r in ch], s)
        object.__setattr__(self, "_mu_cache", {})

    @property
    def initial_configset(self) -> frozenset:
        return frozenset({(self.initial, self.initial_register)})

    def check_letter(self, x):
        if isinstance(x, Const) and x.name not in self.constants:
            raise MalformedLetter(f"{x} is not a declared constant")

    # one step ---------------------------------------------------------------

    def mu_config(self, c, x) -> frozenset:
        """The choices available to configuration ``c`` on letter ``x``."""
        key = (c, x)
        hit = self._mu_cache.get(key)
        if hit is not None:
            return hit
        self.check_letter(x)
        s, theta = c
        if isinstance(x, Const):
            out = frozenset(frozenset((q, theta) for q in Q) for Q in self.mu_delta.get((s, x.name), ()))
        elif x == theta:
            out = frozenset(frozenset((q, theta) for q in Q) for Q in self.mu_eq.get(s, ()))
        else:
            out = frozenset(
                frozenset([(q, theta) for q in keep] + [(q, x) for q in repl])
                for keep, repl in self.mu_neq.get(s, ())
            )
        if len(self._mu_cache) < 200_000:
            self._mu_cache[key] = out
        return out

    def step_sets(self, cs, x) -> set:
        """Every successor set: one choice per member, united."""
        per = [sorted(self.mu_config(c, x), key=configset_key) for c in sorted_configs(cs)]
        if any(not p for p in per):
            return set()
        return {frozenset().union(*combo) for combo in itertools.product(*per)}

    def is_accepting_set(self, cs) -> bool:
        return all(s in self.accepting for s, _ in cs)

    # membership ---------------------------------------------------------------

    def _search(self, w):
        """Memoised, subsumption-pruned acceptance test from any position."""
        n = len(w)
        memo = {}
        good = [[] for _ in range(n + 1)]
        bad = [[] for _ in range(n + 1)]

        def ok(p, cs):
            key = (p, cs)
            if key in memo:
                return memo[key]
            if any(cs <= d for d in good[p]):
                return True
            if any(d <= cs for d in bad[p]):
                return False
            if p == n:
                res = self.is_accepting_set(cs)
            else:
                res = any(ok(p + 1, d) for d in sorted(self.step_sets(cs, w[p]), key=configset_key))
            memo[key] = res
            (good if res else bad)[p].append(cs)
            return res

        return ok

    def accepts(self, w: Sequence) -> bool:
        for x in w:
            self.check_letter(x)
        return self._search(tuple(w))(0, self.initial_configset)

    def accepts_from(self, cs, w: Sequence) -> bool:
        for x in w:
            self.check_letter(x)
        return self._search(tuple(w))(0, frozenset(cs))

    def accepts_naive(self, w: Sequence) -> bool:
        """Exhaustive run enumeration without memo or pruning (test oracle)."""
        for x in w:
            self.check_letter(x)
        w = tuple(w)

        def rec(p, cs):
            if p == len(w):
                return self.is_accepting_set(cs)
            return any(rec(p + 1, d) for d in self.step_sets(cs, w[p]))

        return rec(0, self.initial_configset)

    def witness_run(self, w: Sequence, start=None) -> Optional[list]:
        """The canonical least accepting run, or None.

        Acceptance of each candidate successor is decided with the pruned
        search, but every set in the returned run is a genuine successor of
        the previous one.
        """
        for x in w:
            self.check_letter(x)
        w = tuple(w)
        ok = self._search(w)
        cs = self.initial_configset if start is None else frozenset(start)
        if not ok(0, cs):
            return None
        run = [cs]
        for p, x in enumerate(w):
            for d in sorted(self.step_sets(run[-1], x), key=configset_key):
                if ok(p + 1, d):
                    run.append(d)
                    break
            else:  # pragma: no cover - ok(p, run[-1]) guaranteed a successor
                raise AssertionError("search and step relation disagree")
        return run

    def check_run(self, w: Sequence, run: Sequence, accepting: bool = True):
        """Raise NotARun unless ``run`` is a run on ``w`` from the initial set."""
        if len(run) != len(w) + 1:
            raise NotARun(f"run has {len(run)} sets for a word of length {len(w)}")
        if frozenset(run[0]) != self.initial_configset:
            raise NotARun("run does not start at the initial configuration")
        for p, x in enumerate(w):
            if frozenset(run[p + 1]) not in self.step_sets(frozenset(run[p]), x):
                raise NotARun(f"step {p} -> {p + 1} is not a transition")
        if accepting and not self.is_accepting_set(run[-1]):
            raise NotARun("run does not end in accepting configurations")

    # serialization --------------------------------------------------------------

    def to_json(self) -> dict:
        def choices(ch):
            return sorted(sorted(q) for q in ch)

        delta = {}
        for (s, a), ch in sorted(self.mu_delta.items()):
            delta.setdefault(s, {})[a] = choices(ch)
        return {
            "kind": "afma1",
            "states": sorted(self.states),
            "initial": self.initial,
            "accepting": sorted(self.accepting),
            "constants": sorted(self.constants),
            "initial_register": str(self.initial_register),
            "mu_delta": delta,
            "mu_eq": {s: choices(ch) for s, ch in sorted(self.mu_eq.items())},
            "mu_neq": {
                s: [{"keep": k, "replace": r} for k, r in sorted((sorted(k), sorted(r)) for k, r in ch)]
                for s, ch in sorted(self.mu_neq.items())
            },
        }

    @classmethod
    def from_json(cls, data: dict) -> "Afma1":
        unknown = set(data) - set(AFMA_FIELDS)
        if unknown:
            raise ParseError(f"unknown fields: {sorted(unknown)}")
        if data.get("kind") != "afma1":
            raise ParseError("expected kind 'afma1'")
        try:
            def choices(ch):
                return frozenset(frozenset(q) for q in ch)

            return cls(
                states=frozenset(data["states"]),
                initial=data["initial"],
                accepting=frozenset(data["accepting"]),
                constants=frozenset(data.get("constants", [])),
                initial_register=parse_symbol(data["initial_register"], ()),
                mu_delta={(s, a): choices(ch)
                          for s, m in data.get("mu_delta", {}).items() for a, ch in m.items()},
                mu_eq={s: choices(ch) for s, ch in data.get("mu_eq", {}).items()},
                mu_neq={s: frozenset((frozenset(e["keep"]), frozenset(e["replace"])) for e in ch)
                        for s, ch in data.get("mu_neq", {}).items()},
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed afma1 automaton: {exc}") from exc


def load(text: str) -> Afma1:
    return Afma1.from_json(json.loads(text))
