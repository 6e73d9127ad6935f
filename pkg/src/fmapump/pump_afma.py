"""Pumping for alternating one-register automata.

A run ``C_0 .. C_m`` on ``s_1 .. s_m`` is read backwards.  For a suffix
length ``i`` let ``Sigma_i`` be the letters of the last ``i`` positions,
``S_i`` the states of ``C_{m-i}`` paired with letters outside ``Sigma_i``,
and ``f_i(Q)`` the number of letters of ``Sigma_i`` whose state set in
``C_{m-i}`` is exactly ``Q``.  Any ``i < j`` with ``S_i = S_j`` and
``f_i <= f_j`` splits the word as ``tau upsilon phi`` (``|phi| = i``,
``|upsilon phi| = j``) and yields a permutation ``alpha`` with

    tau upsilon alpha(upsilon) ... alpha^k(upsilon) alpha^k(phi)   accepted for k >= 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .afma import Afma1, sorted_configs
from .alphabet import contents, format_word, normalize_word
from .errors import NotAccepted, NotARun
from .relation import AlphaBundle, build_alpha, letter_classes, preceq_check, states_for_symset


@dataclass(frozen=True)
class TraceEntry:
    i: int
    S: frozenset
    f: dict  # nonempty state set -> count; missing sets count 0
    Sigma: frozenset

    def f_at(self, q) -> int:
        return self.f.get(frozenset(q), 0)

    def f_leq(self, other: "TraceEntry") -> bool:
        return all(v <= other.f_at(q) for q, v in self.f.items())

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "S": sorted(self.S),
            "f": [{"Q": sorted(q), "count": v} for q, v in sorted(self.f.items(), key=lambda t: sorted(t[0]))],
            "Sigma": sorted(str(x) for x in self.Sigma),
        }


def trace_entry(C, suffix: Sequence, i: int) -> TraceEntry:
    sig = contents(suffix)
    f = {}
    for q, xs in letter_classes(C).items():
        n = len(xs & sig)
        if n:
            f[q] = n
    return TraceEntry(i, states_for_symset(C, sig, complement=True), f, sig)


def trace_reversal(w: Sequence, run: Sequence, a: Optional[Afma1] = None) -> list:
    """Entries for suffix lengths ``0..m``; with ``a`` given, the run is checked first."""
    w = tuple(w)
    m = len(w)
    if len(run) != m + 1:
        raise NotARun(f"run has {len(run)} sets for a word of length {m}")
    if a is not None:
        a.check_run(w, run, accepting=False)
    return [trace_entry(frozenset(run[m - i]), w[m - i:], i) for i in range(m + 1)]


def find_pump_indices(trace: Sequence[TraceEntry]) -> Optional[tuple]:
    """Least ``j``, then least ``i < j``, with equal S and dominated f."""
    for j in range(1, len(trace)):
        for i in range(j):
            if trace[i].S == trace[j].S and trace[i].f_leq(trace[j]):
                return i, j
    return None


@dataclass(frozen=True)
class AfmaPumpCertificate:
    tau: tuple
    upsilon: tuple
    phi: tuple
    bundle: AlphaBundle
    i: int
    j: int
    C1: frozenset = field(repr=False)
    C2: frozenset = field(repr=False)

    @property
    def word(self) -> tuple:
        return self.tau + self.upsilon + self.phi

    @property
    def alpha(self):
        return self.bundle.alpha

    def relation_holds(self) -> bool:
        b = self.bundle
        return preceq_check(self.C1, b.alpha.image_symset(b.sigma_prime), self.C2, b.sigma_prime, b.alpha).holds

    def to_json(self) -> dict:
        return {
            "tau": format_word(self.tau),
            "upsilon": format_word(self.upsilon),
            "phi": format_word(self.phi),
            "i": self.i,
            "j": self.j,
            "C1": _configset_json(self.C1),
            "C2": _configset_json(self.C2),
            **self.bundle.to_json(),
        }


def _configset_json(cs) -> list:
    return [[s, str(x)] for s, x in sorted_configs(cs)]


def pump(a: Afma1, w: Sequence, min_chain: int = 0) -> Optional[AfmaPumpCertificate]:
    """Certificate from the canonical witness run, or None if its trace has no good pair."""
    w = tuple(w)
    w, _ = normalize_word(w)
    run = a.witness_run(w)
    if run is None:
        raise NotAccepted("the word is not accepted")
    trace = trace_reversal(w, run)
    hit = find_pump_indices(trace)
    if hit is None:
        return None
    i, j = hit
    m = len(w)
    tau, upsilon, phi = w[:m - j], w[m - j:m - i], w[m - i:]
    c1, c2 = run[m - i], run[m - j]
    bundle = build_alpha(c1, contents(phi), c2, contents(upsilon + phi), min_chain=min_chain)
    return AfmaPumpCertificate(tau, upsilon, phi, bundle, i, j, c1, c2)


def pumped_word(cert: AfmaPumpCertificate, k: int) -> tuple:
    al = cert.alpha
    out = list(cert.tau + cert.upsilon)
    for p in range(1, k + 1):
        out.extend(al.map_word(cert.upsilon, p))
    out.extend(al.map_word(cert.phi, k))
    return tuple(out)


@dataclass(frozen=True)
class AfmaVerification:
    results: dict  # k -> accepted, k = 0 is the input word
    relation: bool

    @property
    def violations(self) -> list:
        return sorted(k for k, ok in self.results.items() if not ok)

    @property
    def ok(self) -> bool:
        return self.relation and not self.violations

    def to_json(self) -> dict:
        return {
            "accepted": {str(k): v for k, v in sorted(self.results.items())},
            "relation_holds": self.relation,
            "violations": self.violations,
            "ok": self.ok,
        }


def verify_pumped(a: Afma1, cert: AfmaPumpCertificate, k_max: int = 4) -> AfmaVerification:
    results = {k: a.accepts(pumped_word(cert, k)) for k in range(0, k_max + 1)}
    return AfmaVerification(results, cert.relation_holds())


def trace_json(trace: Sequence[TraceEntry]) -> list:
    return [e.to_json() for e in trace]
