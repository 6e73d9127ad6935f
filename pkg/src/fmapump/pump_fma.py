"""Pumping for r-register automata with a finite-order permutation.

Given an accepted word ``psi chi omega`` with ``|chi| > |S|``, two run
positions inside ``chi`` share a state.  The register contents at those
positions determine a permutation ``alpha`` (identity elsewhere) with

    psi tau upsilon alpha(upsilon) ... alpha^k(upsilon) alpha^k(phi omega)   accepted for k >= 1
    psi tau alpha^-1(phi omega)                                               accepted
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .alphabet import format_word
from .errors import NotAccepted, WindowTooShort, WordTooShort
from .fma import Fma
from .perm import INFINITE, StructuredPerm, complete_partial_injection


@dataclass(frozen=True)
class FmaPumpCertificate:
    psi: tuple
    tau: tuple
    upsilon: tuple
    phi: tuple
    omega: tuple
    alpha: StructuredPerm
    i: int
    j: int

    @property
    def word(self) -> tuple:
        return self.psi + self.tau + self.upsilon + self.phi + self.omega

    def to_json(self) -> dict:
        return {
            "psi": format_word(self.psi),
            "tau": format_word(self.tau),
            "upsilon": format_word(self.upsilon),
            "phi": format_word(self.phi),
            "omega": format_word(self.omega),
            "i": self.i,
            "j": self.j,
            "alpha": self.alpha.to_json(),
        }


def _parse_window(window, n: int) -> Tuple[int, int]:
    if window is None:
        return 0, n
    lo, hi = window
    if not 0 <= lo <= hi <= n:
        raise WindowTooShort(f"window {lo}..{hi} is outside the word (length {n})")
    return lo, hi


def pump_decompose(a: Fma, w: Sequence, window: Optional[Tuple[int, int]] = None) -> FmaPumpCertificate:
    """Certificate for ``w`` with the pumped factor inside ``w[lo:hi]``.

    ``window`` is a half-open range of letter positions and defaults to the
    whole word.  The least ``j`` (then least ``i``) with equal states on the
    canonical witness run is used.
    """
    w = tuple(w)
    lo, hi = _parse_window(window, len(w))
    if hi - lo <= len(a.states):
        raise WindowTooShort(f"window length {hi - lo} must exceed the state count {len(a.states)}")
    run = a.witness_run(w)
    if run is None:
        raise NotAccepted("the word is not accepted")
    pick = None
    for j in range(lo + 1, hi + 1):
        for i in range(lo, j):
            if run[i][0] == run[j][0]:
                pick = (i, j)
                break
        if pick:
            break
    assert pick is not None, "pigeonhole guarantees a repeated state"
    i, j = pick
    alpha = complete_partial_injection(zip(run[i][1], run[j][1]))
    return FmaPumpCertificate(w[:lo], w[lo:i], w[i:j], w[j:hi], w[hi:], alpha, i, j)


def pumped_word(cert: FmaPumpCertificate, k: int) -> tuple:
    al = cert.alpha
    out = list(cert.psi + cert.tau + cert.upsilon)
    for p in range(1, k + 1):
        out.extend(al.map_word(cert.upsilon, p))
    out.extend(al.map_word(cert.phi + cert.omega, k))
    return tuple(out)


def shrunk_word(cert: FmaPumpCertificate) -> tuple:
    return cert.psi + cert.tau + cert.alpha.map_word(cert.phi + cert.omega, -1)


def periodic_family(a: Fma, w: Sequence):
    """Split ``w`` as ``w1 w2^0 w3`` so that ``w1 w2^k w3`` is accepted for all k."""
    w = tuple(w)
    if len(w) <= len(a.states):
        raise WordTooShort(f"need more than {len(a.states)} letters")
    cert = pump_decompose(a, w)
    order = cert.alpha.order()
    assert order != INFINITE
    first = cert.psi + cert.tau + cert.upsilon
    middle = tuple(x for p in range(1, order + 1) for x in cert.alpha.map_word(cert.upsilon, p))
    return first, middle, cert.phi + cert.omega


@dataclass(frozen=True)
class FmaVerification:
    pumped: dict  # k -> accepted
    shrunk: bool
    order: int

    @property
    def ok(self) -> bool:
        return self.shrunk and all(self.pumped.values())

    def to_json(self) -> dict:
        return {
            "pumped": {str(k): v for k, v in sorted(self.pumped.items())},
            "shrunk": self.shrunk,
            "order": self.order,
            "ok": self.ok,
        }


def verify(a: Fma, cert: FmaPumpCertificate, k_max: int = 5) -> FmaVerification:
    pumped = {k: a.accepts(pumped_word(cert, k)) for k in range(1, k_max + 1)}
    return FmaVerification(pumped, a.accepts(shrunk_word(cert)), cert.alpha.order())
