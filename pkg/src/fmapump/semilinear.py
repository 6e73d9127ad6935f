"""Length spectra of alternating one-register automata.

Word lengths of such a language form a finite union of arithmetic
progressions.  Given a pumping constant ``N``, every accepted word of
length at least ``N`` extends to one exactly ``N!`` letters longer, so the
spectrum splits into residue classes modulo ``N!``.  Beyond the search
bound nothing is decided here, and descriptions are labelled accordingly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .afma import Afma1
from .alphabet import Const, User
from .pump_afma import AfmaPumpCertificate, pumped_word


def _canonical_words(constants: Iterable[str], base: int, n_max: int):
    """Yield (word, fresh count) over constants and fresh ``User`` letters.

    Fresh letters are introduced in order, so every word is reached up to
    a permutation fixing the constants.
    """
    consts = [Const(c) for c in sorted(constants)]

    def rec(w, used):
        yield w, used
        if len(w) == n_max:
            return
        for x in consts + [User(base + k) for k in range(used + 1)]:
            yield from rec(w + (x,), used + (1 if x == User(base + used) else 0))

    yield from rec((), 0)


def _minimal(sets) -> frozenset:
    sets = set(sets)
    return frozenset(s for s in sets if not any(t < s for t in sets))


def length_spectrum(a: Afma1, n_max: int) -> set:
    """Lengths ``<= n_max`` of accepted words (exact up to the bound)."""
    theta = a.initial_register
    base = (theta.n + 1) if isinstance(theta, User) else 0
    consts = [Const(c) for c in sorted(a.constants)]
    found = set()

    def dfs(frontier, n, used):
        # frontier holds only the inclusion-minimal reachable sets: a subset
        # of a reachable set accepts whatever the larger one accepts
        if any(a.is_accepting_set(cs) for cs in frontier):
            found.add(n)
        if n == n_max:
            return
        for x in consts + [theta] + [User(base + k) for k in range(used + 1)]:
            nxt = _minimal(d for cs in frontier for d in a.step_sets(cs, x))
            if nxt:
                dfs(nxt, n + 1, used + (1 if x == User(base + used) else 0))

    dfs(frozenset({a.initial_configset}), 0, 0)
    return found


def predicate_spectrum(pred: Callable, constants: Iterable[str], n_max: int) -> set:
    """Lengths ``<= n_max`` of words satisfying a permutation-invariant predicate."""
    return {len(w) for w, _ in _canonical_words(constants, 1, n_max) if pred(w)}


def extension_step(cert: AfmaPumpCertificate, n: int) -> tuple:
    """The pumped word exactly ``n!`` letters longer than the certified word."""
    period = math.factorial(n)
    if period % len(cert.upsilon):
        raise ValueError(f"|upsilon| = {len(cert.upsilon)} does not divide {n}!")
    return pumped_word(cert, period // len(cert.upsilon))


@dataclass(frozen=True)
class SpectrumDescription:
    finite_part: frozenset
    linear_parts: frozenset  # of (a, b): {a + i b : i >= 0}
    empirical_bound: int
    status: str  # "exact" or "empirical"
    period: int
    periodic_within_bound: bool

    def members(self, n_max: int) -> set:
        out = {x for x in self.finite_part if x <= n_max}
        for a, b in self.linear_parts:
            out.update(range(a, n_max + 1, b))
        return out

    def to_json(self) -> dict:
        return {
            "finite_part": sorted(self.finite_part),
            "linear_parts": [{"a": a, "b": b} for a, b in sorted(self.linear_parts)],
            "empirical_bound": self.empirical_bound,
            "status": self.status,
            "period": self.period,
            "periodic_within_bound": self.periodic_within_bound,
        }


def eventually_periodic(lengths: Iterable[int], n_max: int) -> Optional[tuple]:
    """Some ``(n0, b)`` with ``n in L <=> n + b in L`` on ``[n0, n_max - b]``, or None.

    Only offsets ``n0 <= n_max // 2`` and periods with two full repetitions
    inside the window are tried, so sparse sets with growing gaps fail.
    """
    ls = set(x for x in lengths if x <= n_max)
    for b in range(1, n_max // 2 + 1):
        for n0 in range(0, n_max // 2 + 1):
            if n0 + 2 * b > n_max:
                break
            if all((n in ls) == (n + b in ls) for n in range(n0, n_max - b + 1)):
                return n0, b
    return None


def describe_lengths(lengths: Iterable[int], n: int, n_max: int, no_accepting: bool = False) -> SpectrumDescription:
    """Bucket lengths by residue modulo ``n!``.

    Lengths below ``n!`` form the finite part; each residue is seeded by its
    least length in ``[n!, n_max]``.  A finite element ``x`` whose
    progression ``(x + n!, n!)`` is present is then folded into ``(x, n!)``.
    """
    period = math.factorial(n)
    ls = sorted(x for x in set(lengths) if x <= n_max)
    finite = {x for x in ls if x < period}
    linear = {}
    for x in ls:
        if x >= period:
            linear.setdefault(x % period, x)
    omitted = len(linear) < period
    changed = True
    while changed:
        changed = False
        for x in sorted(finite):
            r = x % period
            if linear.get(r) == x + period:
                linear[r] = x
                finite.discard(x)
                changed = True
    exact = (not omitted) or (no_accepting and not ls)
    return SpectrumDescription(
        frozenset(finite),
        frozenset((a, period) for a in linear.values()),
        n_max,
        "exact" if exact else "empirical",
        period,
        eventually_periodic(ls, n_max) is not None,
    )


def describe_spectrum(a: Afma1, n: int, n_max: int) -> SpectrumDescription:
    return describe_lengths(length_spectrum(a, n_max), n, n_max, no_accepting=not a.accepting)
