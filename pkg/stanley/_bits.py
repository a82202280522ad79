"""
Bitmask helpers for subsets of {1..n}.

Variable (or vertex) ``i`` is stored in bit ``i - 1``. Every solver in the
package walks a subset lattice, so supports, faces, edges and poset elements
are all plain ``int`` masks.
"""

from itertools import combinations
from typing import Iterable, Iterator

MAX_VARIABLES = 64


def bit(i: int) -> int:
    return 1 << (i - 1)


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << (i - 1)
    return mask


def indices_of(mask: int) -> tuple[int, ...]:
    result = []
    i = 1
    while mask:
        if mask & 1:
            result.append(i)
        mask >>= 1
        i += 1
    return tuple(result)


def popcount(mask: int) -> int:
    return mask.bit_count()


def lowest_index(mask: int) -> int:
    return (mask & -mask).bit_length()


def full_mask(n: int) -> int:
    return (1 << n) - 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask``, the empty set included, in decreasing order."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def masks_of_size(mask: int, k: int) -> Iterator[int]:
    for chosen in combinations(indices_of(mask), k):
        yield mask_of(chosen)


def minimal_masks(masks: Iterable[int]) -> frozenset[int]:
    """Inclusion-minimal elements of a family of subsets."""
    kept: list[int] = []
    for mask in sorted(set(masks), key=popcount):
        if not any(is_subset(k, mask) for k in kept):
            kept.append(mask)
    return frozenset(kept)


def sort_key(mask: int) -> tuple[int, ...]:
    """Lexicographic order on sorted index tuples."""
    return indices_of(mask)
