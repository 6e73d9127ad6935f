"""Bad sequences of labelled count vectors and the pumping constant N.

A resembling sequence is ``(Q_0, f_0), (Q_1, f_1), ...`` where ``Q_i`` is a
subset of the state set and ``f_i`` maps nonempty state subsets to counts
in ``0..i``.  A pair ``i < j`` is *good* when ``Q_i = Q_j`` and
``f_i <= f_j`` pointwise; a sequence without good pairs is *bad*.  Bad
sequences are finite, and ``N`` is one more than the longest one.
Positions are 0-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import BudgetExceeded


@dataclass(frozen=True)
class ResemblingEntry:
    Q: frozenset
    f: dict  # nonempty subset -> count; missing subsets count 0

    def f_at(self, q) -> int:
        return self.f.get(frozenset(q), 0)

    def dominated_by(self, other: "ResemblingEntry") -> bool:
        """True when ``self.Q == other.Q`` and ``self.f <= other.f``."""
        return self.Q == other.Q and all(v <= other.f_at(q) for q, v in self.f.items())

    def to_json(self) -> dict:
        return {
            "Q": sorted(self.Q),
            "f": [{"Q": sorted(q), "count": v}
                  for q, v in sorted(self.f.items(), key=lambda t: (len(t[0]), sorted(t[0])))],
        }


@dataclass(frozen=True)
class BadSequenceWitness:
    entries: tuple
    length: int

    def to_json(self) -> dict:
        return {"length": self.length, "entries": [e.to_json() for e in self.entries]}


def from_trace(trace) -> list:
    """Forget everything but the (S, f) pairs of a trace reversal."""
    return [ResemblingEntry(frozenset(e.S), dict(e.f)) for e in trace]


def is_resembling(seq: Sequence[ResemblingEntry], states=None) -> bool:
    for i, e in enumerate(seq):
        if states is not None and not e.Q <= frozenset(states):
            return False
        if any(not q or v < 0 or v > i for q, v in e.f.items()):
            return False
    return True


def good_pair(seq: Sequence[ResemblingEntry], limit: Optional[int] = None) -> Optional[tuple]:
    """Least ``j`` (then least ``i``) with a good pair ``i < j < limit``."""
    n = len(seq) if limit is None else min(limit, len(seq))
    for j in range(1, n):
        for i in range(j):
            if seq[i].dominated_by(seq[j]):
                return i, j
    return None


def is_extendable(seq: Sequence[ResemblingEntry], n: int) -> bool:
    return good_pair(seq, n) is not None


def is_bad(seq: Sequence[ResemblingEntry]) -> bool:
    return good_pair(seq) is None


# exhaustive search ------------------------------------------------------------

def _subsets(s_count: int) -> list:
    """All subsets of ``0..s_count-1`` as frozensets, by size then lexicographically."""
    out = []
    for r in range(s_count + 1):
        out.extend(frozenset(c) for c in itertools.combinations(range(s_count), r))
    return out


def longest_bad(s_count: int, budget: int = 1_000_000, prune: bool = True,
                f_ceiling: Optional[int] = None, max_len: Optional[int] = None) -> BadSequenceWitness:
    """A longest bad resembling sequence over ``s_count`` states.

    Depth-first over entries.  With ``prune`` only the pointwise-maximal
    legal count vectors are tried at each step (a larger vector leaves every
    continuation legal), and the first label is fixed up to relabelling of
    states.  ``f_ceiling`` caps every count, e.g. 0 for the degenerate
    label-only space.  ``max_len`` stops the search at that length, which
    makes larger state counts tractable for cross-checks.  Raises BudgetExceeded once ``budget`` units of work
    (search nodes plus candidate vectors examined) are spent.
    """
    if s_count < 1:
        raise ValueError("need at least one state")
    labels = _subsets(s_count)
    keys = [q for q in labels if q]  # coordinates of f
    dim = len(keys)
    nodes = 0
    best: list = []
    seq: list = []  # (label index, f tuple)

    def legal(li, vec):
        return not any(lj == li and all(a <= b for a, b in zip(g, vec)) for lj, g in seq)

    def charge(units):
        nonlocal nodes
        nodes += units
        if nodes > budget:
            raise BudgetExceeded(f"search exceeded a budget of {budget}")

    def candidates(i):
        cap = i if f_ceiling is None else min(i, f_ceiling)
        first = i == 0 and prune
        label_range = [li for li, q in enumerate(labels)
                       if not first or q == frozenset(range(len(q)))]
        for li in label_range:
            charge((cap + 1) ** dim)
            vecs = [v for v in itertools.product(range(cap, -1, -1), repeat=dim) if legal(li, v)]
            if prune:
                vecs = [v for v in vecs
                        if not any(u != v and all(a <= b for a, b in zip(v, u)) for u in vecs)]
            for v in vecs:
                yield li, v

    def dfs(i):
        nonlocal best
        charge(1)
        if len(seq) > len(best):
            best = list(seq)
        if max_len is not None and len(seq) >= max_len:
            return
        for cand in candidates(i):
            seq.append(cand)
            dfs(i + 1)
            seq.pop()

    dfs(0)
    entries = tuple(
        ResemblingEntry(labels[li], {keys[k]: c for k, c in enumerate(v) if c})
        for li, v in best
    )
    return BadSequenceWitness(entries, len(entries))


def compute_N(s_count: int, budget: int = 1_000_000, prune: bool = True,
              f_ceiling: Optional[int] = None) -> int:
    return longest_bad(s_count, budget, prune, f_ceiling).length + 1


# Dickson pairs --------------------------------------------------------------------

def dickson_pair(vectors: Sequence[Sequence[int]]) -> Optional[tuple]:
    """Least ``j`` (then least ``i < j``) with ``v_i <= v_j`` pointwise, or None."""
    vs = [tuple(v) for v in vectors]
    for j, v in enumerate(vs):
        hit = next((i for i in range(j) if all(a <= b for a, b in zip(vs[i], v))), None)
        if hit is not None:
            return hit, j
    return None
