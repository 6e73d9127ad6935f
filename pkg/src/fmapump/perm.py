"""Permutations of the alphabet that fix every constant.

A :class:`StructuredPerm` has a finite part (a partial injection on data
letters) and, optionally, forward and backward shift chains:

* a forward chain ``(c, entry)`` sends ``entry -> Chain(c, 1) -> Chain(c, 2) -> ...``;
* a backward chain ``(c, exit)`` sends ``... -> Chain(c, 2) -> Chain(c, 1) -> exit``.

Every orbit is either a finite cycle or a bi-infinite *line*
``... c_b.2, c_b.1, x_0, ..., x_k, c_f.1, c_f.2 ...`` running from a
backward chain through a finite path into a forward chain.  Powers are
evaluated in closed form on that decomposition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from .alphabet import Chain, Const, SymSet, Symbol, sorted_symbols
from .errors import InvalidInjection, InvalidPermutation

INFINITE = math.inf


@dataclass(frozen=True)
class _Line:
    bwd: int
    path: tuple
    fwd: int


class StructuredPerm:
    """A Delta-permutation with finite cycles and shift chains.

    Parameters
    ----------
    finite_map : mapping
        Partial injection on data letters.
    fwd_chains : iterable of (chain id, entry letter)
    bwd_chains : iterable of (chain id, exit letter)
    """

    def __init__(self, finite_map: Mapping = None, fwd_chains: Iterable = (), bwd_chains: Iterable = ()):
        fm = dict(finite_map or {})
        fwd = tuple(sorted(fwd_chains))
        bwd = tuple(sorted(bwd_chains))
        self._validate(fm, fwd, bwd)
        self.finite_map = fm
        self.fwd_chains = fwd
        self.bwd_chains = bwd
        self._decompose()

    # construction helpers -------------------------------------------------

    @staticmethod
    def _validate(fm, fwd, bwd):
        letters = list(fm) + list(fm.values()) + [e for _, e in fwd] + [e for _, e in bwd]
        if any(isinstance(x, Const) for x in letters):
            raise InvalidPermutation("constants must be fixed")
        if len(set(fm.values())) != len(fm):
            raise InvalidPermutation("finite part is not injective")
        chain_ids = [c for c, _ in fwd] + [c for c, _ in bwd]
        if len(set(chain_ids)) != len(chain_ids):
            raise InvalidPermutation("chain ids must be pairwise distinct")
        if any(isinstance(x, Chain) and x.chain in chain_ids for x in letters):
            raise InvalidPermutation("chain letters of a shift chain may not appear in the finite part")
        entries = [e for _, e in fwd]
        exits = [e for _, e in bwd]
        if len(set(entries)) != len(entries) or len(set(exits)) != len(exits):
            raise InvalidPermutation("repeated chain boundary letter")
        dom = set(fm) | set(entries)
        ran = set(fm.values()) | set(exits)
        if set(fm) & set(entries) or set(fm.values()) & set(exits):
            raise InvalidPermutation("letter with two images or two preimages")
        if dom != ran:
            raise InvalidPermutation("moved letters do not form a bijection")

    def _decompose(self):
        fm = self.finite_map
        entry_of = {e: c for c, e in self.fwd_chains}
        self._pos = {}  # letter -> (orbit index, position)
        self._orbits = []
        seen = set()
        for b, e in self.bwd_chains:
            path = [e]
            while path[-1] in fm:
                path.append(fm[path[-1]])
            last = path[-1]
            line = _Line(b, tuple(path), entry_of[last])
            idx = len(self._orbits)
            self._orbits.append(line)
            for p, x in enumerate(path):
                self._pos[x] = (idx, p)
            seen.update(path)
        for x in sorted_symbols(fm):
            if x in seen:
                continue
            cyc = [x]
            while fm[cyc[-1]] != x:
                cyc.append(fm[cyc[-1]])
            idx = len(self._orbits)
            self._orbits.append(tuple(cyc))
            for p, y in enumerate(cyc):
                self._pos[y] = (idx, p)
            seen.update(cyc)
        self._chain_line = {}
        for idx, orb in enumerate(self._orbits):
            if isinstance(orb, _Line):
                self._chain_line[orb.fwd] = (idx, +1)
                self._chain_line[orb.bwd] = (idx, -1)

    @classmethod
    def identity(cls) -> "StructuredPerm":
        return cls()

    @classmethod
    def from_cycles(cls, cycles: Iterable) -> "StructuredPerm":
        fm = {}
        for cyc in cycles:
            cyc = list(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if a in fm:
                    raise InvalidPermutation(f"{a} appears in two cycles")
                fm[a] = b
        return cls(fm)

    @classmethod
    def swap(cls, a: Symbol, b: Symbol) -> "StructuredPerm":
        if a == b:
            return cls()
        return cls({a: b, b: a})

    # evaluation -----------------------------------------------------------

    def _locate(self, x):
        hit = self._pos.get(x)
        if hit is not None:
            return hit
        if isinstance(x, Chain) and x.chain in self._chain_line:
            idx, direction = self._chain_line[x.chain]
            line = self._orbits[idx]
            if direction > 0:
                return idx, len(line.path) - 1 + x.index
            return idx, -x.index
        return None

    def _at(self, idx, p):
        orb = self._orbits[idx]
        if isinstance(orb, _Line):
            k = len(orb.path) - 1
            if p < 0:
                return Chain(orb.bwd, -p)
            if p > k:
                return Chain(orb.fwd, p - k)
            return orb.path[p]
        return orb[p % len(orb)]

    def apply(self, x: Symbol) -> Symbol:
        return self.apply_pow(1, x)

    def apply_inv(self, x: Symbol) -> Symbol:
        return self.apply_pow(-1, x)

    def apply_pow(self, k: int, x: Symbol) -> Symbol:
        """Image of ``x`` under the ``k``-th power (``k`` may be negative)."""
        loc = self._locate(x)
        if loc is None or k == 0:
            return x
        idx, p = loc
        return self._at(idx, p + k)

    __call__ = apply

    def order(self):
        """Smallest k > 0 with alpha**k = id, or ``math.inf``."""
        if self.fwd_chains:
            return INFINITE
        lengths = [len(o) for o in self._orbits]
        return math.lcm(*lengths) if lengths else 1

    def support(self) -> frozenset:
        """Moved letters outside the chain namespaces (finite)."""
        return frozenset(x for x, y in self.finite_map.items() if x != y) | {
            e for _, e in self.fwd_chains}

    def cycles(self) -> list:
        return [list(o) for o in self._orbits if not isinstance(o, _Line)]

    def lines(self) -> list:
        return [o for o in self._orbits if isinstance(o, _Line)]

    def chain_ids(self) -> set:
        return {c for c, _ in self.fwd_chains} | {c for c, _ in self.bwd_chains}

    def map_word(self, w, k: int = 1) -> tuple:
        return tuple(self.apply_pow(k, x) for x in w)

    def map_config(self, c, k: int = 1):
        state, reg = c
        if isinstance(reg, tuple):
            return (state, tuple(self.apply_pow(k, x) for x in reg))
        return (state, self.apply_pow(k, reg))

    def map_configset(self, cs, k: int = 1) -> frozenset:
        return frozenset(self.map_config(c, k) for c in cs)

    def image_symset(self, s: SymSet, k: int = 1) -> SymSet:
        """The set ``alpha**k(s)`` in the same finite-plus-tails shape."""
        finite = {self.apply_pow(k, x) for x in s.finite}
        tails = {}
        for c, j in s.tails:
            if c not in self._chain_line:
                tails[c] = j
                continue
            idx, direction = self._chain_line[c]
            line = self._orbits[idx]
            top = len(line.path) - 1
            if direction > 0:
                lo = top + j + k  # image occupies positions lo, lo+1, ...
                for p in range(lo, top + 1):
                    finite.add(self._at(idx, p))
                tails[line.fwd] = max(1, lo - top)
            else:
                hi = -j + k  # image occupies positions ..., hi-1, hi
                for p in range(0, hi + 1):
                    finite.add(self._at(idx, p))
                tails[line.bwd] = max(1, -hi)
        return SymSet(frozenset(finite), tuple(tails.items())).normalized()

    # misc -----------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, StructuredPerm)
                and {a: b for a, b in self.finite_map.items() if a != b}
                == {a: b for a, b in other.finite_map.items() if a != b}
                and self.fwd_chains == other.fwd_chains
                and self.bwd_chains == other.bwd_chains)

    def __hash__(self):
        return hash((frozenset((a, b) for a, b in self.finite_map.items() if a != b),
                     self.fwd_chains, self.bwd_chains))

    def __repr__(self):
        return f"StructuredPerm({self.to_json()})"

    def to_json(self) -> dict:
        order = self.order()
        return {
            "finite_map": [[str(a), str(self.finite_map[a])] for a in sorted_symbols(self.finite_map)],
            "cycles": [[str(x) for x in c] for c in self.cycles()],
            "chains": (
                [{"chain": c, "direction": "forward", "boundary": str(e)} for c, e in self.fwd_chains]
                + [{"chain": c, "direction": "backward", "boundary": str(e)} for c, e in self.bwd_chains]
            ),
            "order": "infinite" if order == INFINITE else order,
        }

    @classmethod
    def from_json(cls, data: dict, constants: Iterable[str] = ()) -> "StructuredPerm":
        from .alphabet import parse_symbol

        def sym(t):
            return parse_symbol(t, constants, allow_chain=True)

        fm = {sym(a): sym(b) for a, b in data.get("finite_map", [])}
        fwd, bwd = [], []
        for ch in data.get("chains", []):
            (fwd if ch["direction"] == "forward" else bwd).append((ch["chain"], sym(ch["boundary"])))
        return cls(fm, fwd, bwd)


def complete_partial_injection(pairs: Iterable, forbidden: Iterable = ()) -> StructuredPerm:
    """Extend a finite partial injection to a finite-support permutation.

    Each maximal path ``x1 -> ... -> xk`` of the injection is closed into a
    cycle by sending ``xk`` back to ``x1``; existing cycles are kept.
    Paths are processed in ascending letter order, so the result is
    deterministic.
    """
    forbidden = set(forbidden)
    fm = {}
    for a, b in pairs:
        for x in (a, b):
            if isinstance(x, Const):
                raise InvalidInjection(f"constant {x} cannot be moved")
            if x in forbidden:
                raise InvalidInjection(f"{x} is forbidden")
        if a in fm and fm[a] != b:
            raise InvalidInjection(f"{a} has two images")
        fm[a] = b
    if len(set(fm.values())) != len(fm):
        raise InvalidInjection("pairs are not injective")
    values = set(fm.values())
    starts = sorted_symbols(x for x in fm if x not in values)
    for s in starts:
        x = s
        while x in fm:
            x = fm[x]
        fm[x] = s
    return StructuredPerm(fm)
