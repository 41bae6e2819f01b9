import itertools
import random

from spectralcat import permutations as pm


def test_compose_and_invert():
    for p in itertools.permutations(range(4)):
        assert pm.compose(p, pm.invert(p)) == pm.identity(4)
        assert pm.compose(pm.invert(p), p) == pm.identity(4)


def test_adjacent_decomposition_rebuilds():
    for n in range(1, 5):
        for p in itertools.permutations(range(n)):
            swaps = pm.adjacent_decomposition(p)
            assert pm.from_adjacent(n, swaps) == p


def test_split_by_blocks_factorization():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randrange(1, 7)
        gamma = list(range(n))
        rng.shuffle(gamma)
        gamma = tuple(gamma)
        k = rng.randrange(1, n + 1)
        cuts = sorted(rng.sample(range(1, n), k - 1)) if k > 1 else []
        sizes = []
        prev = 0
        for c in cuts + [n]:
            sizes.append(c - prev)
            prev = c
        blocks, twists = pm.split_by_blocks(gamma, sizes)
        assert gamma == pm.compose(pm.partition_rep(blocks), pm.block_sum(twists))


def test_ordered_partitions_count():
    import math

    parts = pm.ordered_partitions(range(4), (2, 1, 1))
    assert len(parts) == math.factorial(4) // (math.factorial(2))
    assert len(set(parts)) == len(parts)


def test_compositions():
    assert len(pm.compositions(3, 2)) == 4
    assert all(sum(c) == 5 for c in pm.compositions(5, 3))
