"""Small symmetric-group arithmetic on index tuples.

A permutation of n letters is a tuple p with p[i] the image of slot i.
Ordered partitions of the slot set are used to index induced wedge
summands; ``split_by_blocks`` factors a permutation through the canonical
representative of its ordered partition.
"""


def identity(n):
    return tuple(range(n))


def compose(p, q):
    """First q, then p."""
    return tuple(p[q[i]] for i in range(len(q)))


def invert(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def transposition(n, i):
    """The adjacent swap (i, i+1) in n letters."""
    out = list(range(n))
    out[i], out[i + 1] = out[i + 1], out[i]
    return tuple(out)


def adjacent_decomposition(p):
    """Adjacent-swap indices whose product (applied left to right) is p."""
    p = list(p)
    out = []
    n = len(p)
    for _ in range(n * n):
        done = True
        for i in range(n - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                out.append(i)
                done = False
        if done:
            break
    # out sorts p to the identity; applying the swaps in reverse builds p
    return tuple(reversed(out))


def from_adjacent(n, swaps):
    """Product t_{swaps[0]} . t_{swaps[1]} ... (rightmost applied first)."""
    p = identity(n)
    for i in swaps:
        p = compose(p, transposition(n, i))
    return p


def partition_rep(blocks):
    """The permutation sending canonical slot blocks to the given value blocks.

    ``blocks`` is an ordered list of sorted tuples partitioning 0..n-1;
    slot j of block t maps to blocks[t][j].
    """
    out = []
    for b in blocks:
        out.extend(b)
    return tuple(out)


def split_by_blocks(gamma, sizes):
    """Factor gamma as partition_rep(blocks) . (block-diagonal twist).

    Returns ``(blocks, twists)`` with blocks[t] sorted and twists[t] a
    permutation of sizes[t] letters.
    """
    blocks = []
    twists = []
    start = 0
    for size in sizes:
        values = [gamma[start + j] for j in range(size)]
        block = tuple(sorted(values))
        rank = {v: r for r, v in enumerate(block)}
        twists.append(tuple(rank[v] for v in values))
        blocks.append(block)
        start += size
    return blocks, twists


def block_sum(perms):
    """Block-diagonal permutation."""
    out = []
    offset = 0
    for p in perms:
        out.extend(offset + v for v in p)
        offset += len(p)
    return tuple(out)


def insertion_rank(value, block):
    """Rank of a new value within a sorted block it is being merged into."""
    r = 0
    for v in block:
        if v < value:
            r += 1
    return r


def ordered_partitions(values, sizes):
    """All ordered partitions of the given values with the given block sizes."""
    values = tuple(values)
    if not sizes:
        if values:
            return []
        return [()]
    import itertools

    out = []
    first_size = sizes[0]
    for first in itertools.combinations(values, first_size):
        rest = tuple(v for v in values if v not in first)
        for tail in ordered_partitions(rest, sizes[1:]):
            out.append((tuple(first),) + tail)
    return out


def compositions(total, parts):
    """All tuples of ``parts`` nonnegative integers with the given sum."""
    if parts == 1:
        return [(total,)]
    out = []
    for head in range(total + 1):
        for tail in compositions(total - head, parts - 1):
            out.append((head,) + tail)
    return out
