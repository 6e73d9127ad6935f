"""Random instance generators shared by the relation tests and the acceptance suite."""

from fmapump import corpus
from fmapump.alphabet import Const, SymSet, User
from fmapump.perm import StructuredPerm
from fmapump.relation import PreorderInstance, letter_classes, states_for_symset

POOL = [User(i) for i in range(8)]


def _subset(rng, xs, p=0.5):
    return [x for x in xs if rng.random() < p]


def random_configset(rng, states, letters, size):
    return frozenset((rng.choice(states), rng.choice(letters)) for _ in range(size))


def random_preceq_instance(rng, a):
    """An instance ``C1, S1 <=_alpha C2, S2`` built to satisfy all four clauses."""
    states = sorted(a.states)
    c2 = random_configset(rng, states, POOL[:6], rng.randint(1, 6))
    consts = [Const(x) for x in sorted(a.constants)]
    sig2 = set(_subset(rng, POOL[:6], 0.6)) | set(_subset(rng, consts))
    image = POOL[:]
    rng.shuffle(image)
    alpha = StructuredPerm(dict(zip(POOL, image)))
    img2 = {alpha.apply(x) for x in sig2}
    sig1 = set(_subset(rng, sorted(img2, key=str), 0.7))
    c1 = set()
    for x in sig1:
        if not isinstance(x, User):
            continue
        src = sorted(s for s, y in c2 if y == alpha.apply_inv(x))
        c1.update((s, x) for s in _subset(rng, src))
    outside = sorted(states_for_symset(c2, sig2, complement=True))
    free = [x for x in POOL if x not in img2]
    for s in _subset(rng, outside):
        c1.add((s, rng.choice(free)))
    return PreorderInstance(frozenset(c1), SymSet.of(sig1), c2, SymSet.of(sig2), alpha)


def random_alpha_input(rng, states):
    """(C1, Sigma1, C2, Sigma2) meeting the three build_alpha preconditions."""
    states = sorted(states)
    c2 = random_configset(rng, states, POOL[:6], rng.randint(1, 6))
    sig2 = set(_subset(rng, POOL[:7], 0.6))
    sig1 = set(_subset(rng, sorted(sig2, key=str), 0.6))
    boundary = states_for_symset(c2, sig2, complement=True)
    c1 = set()
    # letters of Sigma1 copy the state classes of C2 within Sigma2, never more often
    capacity = {q: len(xs & sig2) for q, xs in letter_classes(c2).items()}
    for x in sorted(sig1, key=str):
        opts = sorted((q for q, n in capacity.items() if n > 0), key=sorted)
        if opts and rng.random() < 0.8:
            q = rng.choice(opts)
            capacity[q] -= 1
            c1.update((s, x) for s in q)
    if boundary:
        others = [x for x in POOL if x not in sig1]
        holders = rng.sample(others, rng.randint(1, min(3, len(others))))
        for s in sorted(boundary):
            c1.add((s, rng.choice(holders)))
    return frozenset(c1), sig1, c2, sig2


def corpus_automata():
    return [corpus.build(n).automaton for n in ("l_diff", "l_subset", "l_last")]
