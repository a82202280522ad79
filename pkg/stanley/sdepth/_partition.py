from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from stanley._bits import indices_of, is_subset, popcount, sort_key, submasks
from stanley.sdepth._poset import CharPoset, interval_inside

__all__ = ["Interval", "IntervalPartition", "interval_members"]

Interval = tuple[int, int]


def interval_members(sigma: int, tau: int) -> Iterator[int]:
    """Every :math:`\\rho` with :math:`\\sigma \\subseteq \\rho \\subseteq \\tau`."""
    for extra in submasks(tau & ~sigma):
        yield sigma | extra


@dataclass(frozen=True)
class IntervalPartition:
    """
    A family of intervals :math:`[\\sigma, \\tau]`; as a Stanley decomposition,
    :math:`[\\sigma, \\tau]` stands for
    :math:`x_\\sigma \\mathbb{K}[x_j : j \\in \\tau]`.
    """

    intervals: tuple[Interval, ...]

    @classmethod
    def of(cls, intervals: Iterable[Interval]) -> "IntervalPartition":
        return cls(
            tuple(sorted(intervals, key=lambda st: (sort_key(st[0]), sort_key(st[1]))))
        )

    @property
    def min_dimension(self) -> Optional[int]:
        """The Stanley depth of the decomposition; None when it is empty."""
        return min((popcount(tau) for _, tau in self.intervals), default=None)

    def first_defect(self, poset: CharPoset) -> Optional[str]:
        """
        Re-validate against :code:`poset` from scratch; return a description of
        the first defect, or None when the intervals partition the ground set.
        """
        covered: dict[int, Interval] = {}
        for sigma, tau in self.intervals:
            if not is_subset(sigma, tau):
                return f"[{_fmt(sigma)}, {_fmt(tau)}] is not an interval"
            if not interval_inside(poset, sigma, tau):
                return f"[{_fmt(sigma)}, {_fmt(tau)}] leaves the poset"
            for rho in interval_members(sigma, tau):
                if rho in covered:
                    other = covered[rho]
                    return (
                        f"{_fmt(rho)} lies in [{_fmt(other[0])}, {_fmt(other[1])}] "
                        f"and [{_fmt(sigma)}, {_fmt(tau)}]"
                    )
                covered[rho] = (sigma, tau)
        for rho in poset.ground:
            if rho not in covered:
                return f"{_fmt(rho)} is not covered"
        return None

    def is_partition_of(self, poset: CharPoset) -> bool:
        return self.first_defect(poset) is None

    def as_index_lists(self) -> list[list[list[int]]]:
        return [[list(indices_of(s)), list(indices_of(t))] for s, t in self.intervals]

    def __len__(self) -> int:
        return len(self.intervals)


def _fmt(mask: int) -> str:
    return "{" + ",".join(str(i) for i in indices_of(mask)) + "}"
