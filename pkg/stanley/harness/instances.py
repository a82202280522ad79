import logging
import random
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Optional

from stanley._bits import bit, full_mask, masks_of_size, minimal_masks
from stanley.clutters import (
    ChordalityCertificate,
    Clutter,
    d_complement,
    edge_ideal,
    is_chordal,
)
from stanley.config import Limits
from stanley.ideals import GenMonomial, SqfIdeal, polarize

__all__ = [
    "Source",
    "Instance",
    "ChordalSample",
    "generate_chordal_clutters",
    "chordal_instances",
    "random_squarefree_ideals",
    "random_quadratic_ideals",
    "worked_examples",
    "EXAMPLE_ONE_WITNESS",
    "EXAMPLE_TWO_WITNESS",
    "WorkedValues",
    "WORKED_VALUES",
]

logger = logging.getLogger(__name__)

_TOP_UP_ROUNDS = 50


class Source(str, Enum):
    GENERATED = "generated"
    EXAMPLE = "example"
    FILE = "file"


@dataclass(frozen=True)
class Instance:
    """
    One verification input. When :code:`clutter` and :code:`d` are present,
    :code:`ideal` is the edge ideal of the d-complement of the clutter; when
    :code:`general` is present, :code:`ideal` is its polarization.
    """

    id: str
    source: Source
    ideal: SqfIdeal
    clutter: Optional[Clutter] = None
    d: Optional[int] = None
    general: Optional[tuple[GenMonomial, ...]] = None

    @classmethod
    def of_clutter(
        cls, id: str, source: Source, clutter: Clutter, d: int
    ) -> "Instance":
        return cls(id, source, edge_ideal(d_complement(clutter, d)), clutter, d)

    def is_consistent(self) -> bool:
        if self.clutter is None or self.d is None:
            return True
        return self.ideal == edge_ideal(d_complement(self.clutter, self.d))


@dataclass(frozen=True)
class ChordalSample:
    clutter: Clutter
    certificate: ChordalityCertificate
    stream: str


def _chordal_graph(n: int, rng: random.Random) -> Clutter:
    """
    A chordal graph on :code:`{1..n}`: each new vertex joins a random subset of a
    random maximal clique of the graph so far, so it is simplicial when added.
    """
    cliques: list[int] = [bit(1)]
    edges: set[int] = set()
    for v in range(2, n + 1):
        clique = rng.choice(cliques)
        members = [u for u in range(1, v) if clique & bit(u)]
        chosen = [u for u in members if rng.random() < 0.5]
        for u in chosen:
            edges.add(bit(u) | bit(v))
        new_clique = bit(v)
        for u in chosen:
            new_clique |= bit(u)
        if len(chosen) == len(members):
            cliques.remove(clique)
        cliques.append(new_clique)
    return Clutter(n, frozenset(edges), full_mask(n))


def _random_clutter(n: int, d: int, rng: random.Random) -> Clutter:
    """Each subset of size at least d kept with probability 1/2, then reduced."""
    vertices = full_mask(n)
    chosen = [
        e
        for size in range(d, n + 1)
        for e in masks_of_size(vertices, size)
        if rng.random() < 0.5
    ]
    return Clutter(n, minimal_masks(chosen), vertices)


def generate_chordal_clutters(
    n: int,
    d: int,
    count: int,
    seed: int,
    *,
    limits: Optional[Limits] = None,
    exclude: Iterable[Clutter] = (),
) -> list[ChordalSample]:
    """
    Seeded, pairwise distinct chordal clutters on :code:`n` vertices with every
    edge of size at least :code:`d`, none of them in :code:`exclude`. For
    :code:`d = 2` the two streams alternate: chordal graphs built by simplicial
    attachment, and filtered random clutters. Fewer than :code:`count` samples
    come back when small :code:`n` has too few distinct chordal clutters or the
    filter rejects too many.
    """
    limits = limits or Limits.default()
    limits.require("generator_max_n", n)
    if not 1 <= d <= n:
        raise ValueError(f"d must lie in 1..{n}, got {d}")

    rng = random.Random(seed)
    seen = {(c.edges, c.active) for c in exclude}
    samples: list[ChordalSample] = []
    attempts = 0
    budget = 20 * count
    while len(samples) < count and attempts < budget:
        attempts += 1
        if d == 2 and attempts % 2 == 1:
            clutter, stream = _chordal_graph(n, rng), "chordal_graph"
        else:
            clutter, stream = _random_clutter(n, d, rng), "random_clutter"
        key = (clutter.edges, clutter.active)
        if key in seen:
            continue
        certificate = is_chordal(clutter, limits=limits)
        if certificate:
            seen.add(key)
            samples.append(ChordalSample(clutter, certificate, stream))
    if len(samples) < count:
        logger.info(
            "n=%d d=%d seed=%d: kept %d of %d requested chordal clutters",
            n,
            d,
            seed,
            len(samples),
            count,
        )
    return samples


def chordal_instances(
    max_n: int,
    count: int,
    seed: int,
    *,
    min_n: int = 2,
    minimum: int = 0,
    limits: Optional[Limits] = None,
) -> list[Instance]:
    """
    A generated corpus of distinct (clutter, d) pairs over every :code:`n` in
    range and every valid :code:`d`, :code:`count` per pair where that many
    exist. When fewer than :code:`minimum` come out, further rounds draw from
    :code:`max_n` downwards until the corpus reaches :code:`minimum` or the
    rounds run out.
    """
    kept: dict[tuple[int, int], list[Clutter]] = {}

    def draw(n: int, d: int, wanted: int, stream_seed: int) -> list[Instance]:
        have = kept.setdefault((n, d), [])
        samples = generate_chordal_clutters(
            n, d, wanted, stream_seed, limits=limits, exclude=have
        )
        instances = []
        for sample in samples:
            instances.append(
                Instance.of_clutter(
                    f"main-n{n}-d{d}-{len(have):03d}",
                    Source.GENERATED,
                    sample.clutter,
                    d,
                )
            )
            have.append(sample.clutter)
        return instances

    instances = []
    sizes = range(min_n, max_n + 1)
    for n in sizes:
        for d in range(1, n + 1):
            instances += draw(n, d, count, seed * 1000 + n * 10 + d)

    for round_ in range(1, _TOP_UP_ROUNDS + 1):
        if len(instances) >= minimum:
            break
        for n in reversed(sizes):
            for d in range(1, n + 1):
                if len(instances) >= minimum:
                    break
                stream_seed = (seed * 1000 + n * 10 + d) * 100 + round_
                instances += draw(n, d, 1, stream_seed)

    if len(instances) < minimum:
        logger.warning(
            "seed=%d: only %d distinct chordal clutters for n <= %d, wanted %d",
            seed,
            len(instances),
            max_n,
            minimum,
        )
    logger.info("seed=%d: %d distinct chordal clutters", seed, len(instances))
    return instances


def random_squarefree_ideals(
    max_n: int, count: int, seed: int, *, max_generators: int = 8
) -> list[Instance]:
    """Random proper nonzero squarefree ideals with few generators."""
    rng = random.Random(seed)
    instances = []
    for k in range(count):
        n = rng.randint(2, max_n)
        supports = [
            m for size in range(1, n + 1) for m in masks_of_size(full_mask(n), size)
        ]
        size = rng.randint(1, min(max_generators, len(supports)))
        ideal = SqfIdeal(n, minimal_masks(rng.sample(supports, size)))
        instances.append(Instance(f"smain-n{n}-{k:03d}", Source.GENERATED, ideal))
    return instances


def random_quadratic_ideals(max_n: int, count: int, seed: int) -> list[Instance]:
    """
    Random quadratic monomial ideals, squares allowed, stored with their
    polarization as the squarefree ideal.
    """
    rng = random.Random(seed)
    instances = []
    for k in range(count):
        n = rng.randint(2, max_n)
        candidates = []
        for i in range(n):
            for j in range(i, n):
                exponents = [0] * n
                exponents[i] += 1
                exponents[j] += 1
                candidates.append(tuple(exponents))
        chosen = sorted(rng.sample(candidates, rng.randint(1, len(candidates))))
        monomials = tuple(GenMonomial(n, e) for e in chosen)
        instances.append(
            Instance(
                f"linres-n{n}-{k:03d}",
                Source.GENERATED,
                polarize(monomials, n),
                general=monomials,
            )
        )
    return instances


EXAMPLE_ONE_WITNESS = [[[1, 2]], [[1, 3], [2, 3, 4]]]
EXAMPLE_TWO_WITNESS = [
    [[1, 2, 3]],
    [[1, 2, 4], [1, 3, 4], [2, 3, 4]],
    [[1, 2, 5], [1, 3, 5], [1, 4, 5], [2, 3, 5], [2, 4, 5], [3, 4, 5]],
]


@dataclass(frozen=True)
class WorkedValues:
    """Printed values for a worked ideal: a witness, its level count and both bounds."""

    witness: list[list[list[int]]]
    sv: int
    quotient_bound: int
    ideal_bound: int


WORKED_VALUES = {
    "example-xy-xz-yzt": WorkedValues(EXAMPLE_ONE_WITNESS, 2, 2, 3),
    "example-cubics-5": WorkedValues(EXAMPLE_TWO_WITNESS, 3, 2, 3),
}


def worked_examples() -> list[Instance]:
    """The two worked ideals: :math:`(xy, xz, yzt)` and all cubics in five variables."""
    first = SqfIdeal.from_supports(4, [[1, 2], [1, 3], [2, 3, 4]])
    second = SqfIdeal.from_supports(5, [list(c) for c in combinations(range(1, 6), 3)])
    return [
        Instance("example-xy-xz-yzt", Source.EXAMPLE, first),
        Instance("example-cubics-5", Source.EXAMPLE, second),
    ]
