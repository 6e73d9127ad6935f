"""Embedding preorder between configuration sets and the permutations that realise it.

``preceq_check(C1, S1, C2, S2, alpha)`` decides the four-clause relation
``C1, S1 <=_alpha C2, S2``:

(i)   ``S1`` is contained in ``alpha(S2)``;
(ii)  every letter of ``C1`` lying in ``alpha(S2)`` lies in ``S1``;
(iii) for ``x`` in ``S1``, the states carrying ``x`` in ``C1`` carry
      ``alpha^-1(x)`` in ``C2``;
(iv)  states carrying letters outside ``S1`` in ``C1`` carry letters
      outside ``S2`` in ``C2``.

``transport_step`` moves the relation one letter forward, and
``build_alpha`` constructs a permutation with shift chains from counting
conditions on letter classes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from .afma import Afma1, configset_key, sorted_configs
from .alphabet import Chain, SymSet, is_data, sorted_symbols, symset_subset
from .errors import EmptyQ, PreconditionViolated
from .perm import StructuredPerm


def as_symset(s) -> SymSet:
    if isinstance(s, SymSet):
        return s
    return SymSet(frozenset(s))


# letter classes of a configuration set ------------------------------------

def sigma_of(cs) -> frozenset:
    return frozenset(x for _, x in cs if is_data(x))


def states_for_symbol(cs, x) -> frozenset:
    return frozenset(s for s, y in cs if y == x)


def states_for_symset(cs, letters, complement: bool = False) -> frozenset:
    """States paired with a letter in ``letters`` (or outside it, if ``complement``)."""
    if not isinstance(letters, SymSet):
        letters = frozenset(letters)
    return frozenset(s for s, y in cs if is_data(y) and ((y in letters) != complement))


def symbols_for_stateset(cs, q) -> frozenset:
    q = frozenset(q)
    if not q:
        raise EmptyQ("the state set must be nonempty")
    return frozenset(x for x in sigma_of(cs) if states_for_symbol(cs, x) == q)


def letter_classes(cs) -> dict:
    """Map each occurring state set Q to the letters x with S^x(C) = Q."""
    out = {}
    for x in sigma_of(cs):
        out.setdefault(states_for_symbol(cs, x), set()).add(x)
    return {q: frozenset(xs) for q, xs in out.items()}


# the preorder -----------------------------------------------------------------

@dataclass(frozen=True)
class PreorderInstance:
    C1: frozenset
    Sigma1: SymSet
    C2: frozenset
    Sigma2: SymSet
    alpha: StructuredPerm


@dataclass(frozen=True)
class PreceqReport:
    holds: bool
    failed_clause: Optional[str] = None
    detail: str = ""

    def __bool__(self):
        return self.holds


def preceq_check(C1, Sigma1, C2, Sigma2, alpha: StructuredPerm) -> PreceqReport:
    s1, s2 = as_symset(Sigma1), as_symset(Sigma2)
    if not symset_subset(s1, alpha.image_symset(s2)):
        return PreceqReport(False, "i", "Sigma1 is not inside alpha(Sigma2)")
    sig1 = sigma_of(C1)
    for x in sorted_symbols(sig1):
        if alpha.apply_inv(x) in s2 and x not in s1:
            return PreceqReport(False, "ii", f"{x} lies in alpha(Sigma2) and C1 but not in Sigma1")
    for x in sorted_symbols(sig1):
        if x in s1 and not states_for_symbol(C1, x) <= states_for_symbol(C2, alpha.apply_inv(x)):
            return PreceqReport(False, "iii", f"states of {x} not matched")
    if not states_for_symset(C1, s1, complement=True) <= states_for_symset(C2, s2, complement=True):
        return PreceqReport(False, "iv", "boundary states not covered")
    return PreceqReport(True)


def check_instance(inst: PreorderInstance) -> PreceqReport:
    return preceq_check(inst.C1, inst.Sigma1, inst.C2, inst.Sigma2, inst.alpha)


def accepting_implication(a: Afma1, inst: PreorderInstance) -> bool:
    """If the relation holds and C2 is all-accepting, C1 must be all-accepting too."""
    if check_instance(inst).holds and a.is_accepting_set(inst.C2):
        return a.is_accepting_set(inst.C1)
    return True


# one-step transport ---------------------------------------------------------------

def split_successor(a: Afma1, cs, x, target) -> Optional[dict]:
    """Pick, for every member of ``cs``, a choice so that their union is ``target``.

    The least such selection (in canonical order) is returned, or None.
    """
    members = sorted_configs(cs)
    options = [sorted((d for d in a.mu_config(c, x) if d <= target), key=configset_key) for c in members]
    if any(not o for o in options):
        return None
    for combo in itertools.product(*options):
        if frozenset().union(*combo) == target:
            return dict(zip(members, combo))
    return None


def transport_step(a: Afma1, inst: PreorderInstance, x, C2p) -> frozenset:
    """Successor of C1 on ``alpha(x)`` mirroring the step ``C2 -> C2p`` on ``x``."""
    alpha = inst.alpha
    s1, s2 = as_symset(inst.Sigma1), as_symset(inst.Sigma2)
    if not check_instance(inst).holds:
        raise PreconditionViolated("preceq", "relation does not hold")
    if x not in s2:
        raise PreconditionViolated("letter", f"{x} is not in Sigma2")
    split = split_successor(a, inst.C2, x, frozenset(C2p))
    if split is None:
        raise PreconditionViolated("step", "C2p is not a successor of C2")
    c2_sorted = sorted_configs(inst.C2)
    parts = []
    for s, y in sorted_configs(inst.C1):
        if y in s1:
            src = (s, alpha.apply_inv(y))
            parts.append(alpha.map_configset(split[src]))
        else:
            j = next(c for c in c2_sorted if c[0] == s and c[1] not in s2)
            moved = alpha.map_configset(split[j])
            sw = StructuredPerm.swap(y, alpha.apply(j[1])) if is_data(y) else StructuredPerm()
            parts.append(sw.map_configset(moved))
    return frozenset().union(*parts) if parts else frozenset()


def transport_run(a: Afma1, inst: PreorderInstance, word, run2) -> list:
    """Carry a run from C2 over to a run from C1 on ``alpha(word)``.

    Returns the list of instances after every step; each must satisfy the
    relation with the enlarged left-hand letter set.
    """
    out = [inst]
    cur = inst
    for x, nxt in zip(word, run2[1:]):
        c1p = transport_step(a, cur, x, nxt)
        s1 = as_symset(cur.Sigma1).union(SymSet.of([cur.alpha.apply(x)]))
        cur = PreorderInstance(c1p, s1, frozenset(nxt), cur.Sigma2, cur.alpha)
        out.append(cur)
    return out


# constructing alpha ------------------------------------------------------------------

@dataclass(frozen=True)
class AlphaBundle:
    alpha: StructuredPerm
    sigma_prime: SymSet
    iota: dict
    theta1_chains: tuple
    theta2_chains: tuple

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha.to_json(),
            "sigma_prime": self.sigma_prime.to_json(),
            "iota": [[str(k), str(self.iota[k])] for k in sorted_symbols(self.iota)],
            "forward_chains": list(self.theta1_chains),
            "backward_chains": list(self.theta2_chains),
        }


def _chain_ids_in(*collections) -> set:
    ids = set()
    for col in collections:
        for item in col:
            letters = [item[1]] if isinstance(item, tuple) else [item]
            ids.update(y.chain for y in letters if isinstance(y, Chain))
    return ids


def build_alpha(C1, Sigma1: Iterable, C2, Sigma2: Iterable, min_chain: int = 0) -> AlphaBundle:
    """Permutation ``alpha`` and letter set ``S'`` with ``C1, alpha(S') <=_alpha C2, S'``.

    Requires ``Sigma1 <= Sigma2``, per-class counts of ``C1`` within
    ``Sigma1`` bounded by those of ``C2`` within ``Sigma2``, and equal
    boundary state sets outside the two letter sets.  Constants in the
    letter sets are fixed by ``alpha`` and play no part in the matching.
    """
    C1, C2 = frozenset(C1), frozenset(C2)
    sig1, sig2 = frozenset(Sigma1), frozenset(Sigma2)
    if not sig1 <= sig2:
        raise PreconditionViolated("inclusion", "Sigma1 is not a subset of Sigma2")
    cls1, cls2 = letter_classes(C1), letter_classes(C2)
    for q in sorted(cls1, key=sorted):
        if len(cls1[q] & sig1) > len(cls2.get(q, frozenset()) & sig2):
            raise PreconditionViolated("counts", f"class {sorted(q)}")
    if states_for_symset(C1, sig1, complement=True) != states_for_symset(C2, sig2, complement=True):
        raise PreconditionViolated("boundary-states", "states outside the letter sets differ")

    d1 = frozenset(x for x in sig1 if is_data(x))
    d2 = frozenset(x for x in sig2 if is_data(x))
    iota = {}
    for q in sorted(cls1, key=sorted):
        src = sorted_symbols(cls1[q] & d1)
        dst = sorted_symbols(cls2.get(q, frozenset()) & d2)
        iota.update(zip(src, dst))
    rest_src = sorted_symbols(d1 - set(iota))
    rest_dst = sorted_symbols(d2 - set(iota.values()))
    iota.update(zip(rest_src, rest_dst))
    assert set(iota) == d1 and len(set(iota.values())) == len(iota)

    primes = sorted_symbols(d2 - set(iota.values()))  # sigma'_i
    seconds = sorted_symbols(d2 - d1)  # sigma''_i
    assert len(primes) == len(seconds)
    base = max(_chain_ids_in(C1, C2, sig1, sig2) | {min_chain - 1}) + 1
    fwd_ids = tuple(range(base, base + len(primes)))
    bwd_ids = tuple(range(base + len(primes), base + 2 * len(primes)))

    fm = {iota[x]: x for x in d1}
    alpha = StructuredPerm(fm, zip(fwd_ids, primes), zip(bwd_ids, seconds))
    sigma_prime = SymSet(sig2, tuple((c, 1) for c in fwd_ids))
    return AlphaBundle(alpha, sigma_prime, iota, fwd_ids, bwd_ids)
