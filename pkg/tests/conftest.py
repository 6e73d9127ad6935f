import itertools
import random

import pytest

from fmapump.alphabet import Const, User
from fmapump.cli import workbench_seed
from fmapump.perm import StructuredPerm


@pytest.fixture
def rng():
    return random.Random(workbench_seed(20240521))


def grid_words(constants, max_len, data=3):
    letters = [User(i) for i in range(data)] + [Const(c) for c in sorted(constants)]
    for n in range(max_len + 1):
        yield from itertools.product(letters, repeat=n)


def random_perm(rng, pool, fix=()):
    """A random finite-support permutation of ``pool`` fixing ``fix``."""
    movable = [x for x in pool if x not in fix]
    image = movable[:]
    rng.shuffle(image)
    return StructuredPerm(dict(zip(movable, image)))


def random_word(rng, letters, n):
    return tuple(rng.choice(letters) for _ in range(n))
