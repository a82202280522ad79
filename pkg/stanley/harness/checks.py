"""
Checks that replay one step of an inductive argument on a concrete clutter.
Each returns named :class:`~stanley.harness.report.Check` objects rather than
raising, so a sweep can report all of them.
"""

from typing import Optional

from stanley._bits import bit, popcount
from stanley.clutters import (
    Clutter,
    contraction,
    d_complement,
    deletion,
    edge_ideal,
    simplicial_vertices,
)
from stanley.config import Limits
from stanley.depth import depth_quotient, projective_dimension
from stanley.harness.report import Check
from stanley.ideals import colon_by_variable, eliminate_variable
from stanley.sdepth import (
    PosetKind,
    combine_split,
    sdepth,
    sdepth_of_poset,
    split_quotient,
)

__all__ = ["main_induction_chain", "elimination_pd_drop", "applies_to"]


def applies_to(clutter: Clutter, d: int) -> bool:
    """Every edge has at least :code:`d` vertices."""
    minimum = clutter.min_edge_cardinality
    return minimum is None or minimum >= d


def main_induction_chain(
    clutter: Clutter, d: int, *, limits: Optional[Limits] = None
) -> list[Check]:
    """
    Replay the induction step for :math:`I = I(c_d(C))` at the lowest simplicial
    vertex :math:`v` of a chordal clutter :code:`clutter`.

    When :math:`x_v` divides no generator it is a free variable, and both depth
    and Stanley depth of :math:`S/I` are one more than over the other variables.
    Otherwise :math:`(I : x_v)` and :math:`I \\cap S'` are edge ideals of the
    complements of :math:`C/v` and :math:`C \\setminus v`, the colon keeps depth,
    and the splitting :math:`S/I = S'/I' \\oplus x_v S/(I : x_v)` bounds the
    Stanley depth from below by :math:`\\mathrm{depth}(S/I)`. The glued
    certificate of the splitting is checked against the whole poset.

    Nothing is checked for :math:`d < 2`, fewer than two vertices, or no
    simplicial vertex.

    Raises:
        CapExceededError: a solver cap is exceeded.
    """
    limits = limits or Limits.default()
    ideal = edge_ideal(d_complement(clutter, d))
    m = popcount(clutter.active)
    vertices = simplicial_vertices(clutter)
    if d < 2 or m < 2 or not vertices:
        return []
    v = vertices[0]
    rest = m - 1
    quotient = PosetKind.QUOTIENT

    checks = [
        Check.claim(
            f"deletion_is_edge_ideal_x{v}",
            eliminate_variable(ideal, v)
            == edge_ideal(d_complement(deletion(clutter, v), d)),
        )
    ]
    depth = depth_quotient(ideal, m, limits=limits)
    if not ideal.support_mask & bit(v):
        checks.append(
            Check.equal(
                f"free_variable_depth_x{v}",
                depth,
                depth_quotient(ideal, rest, limits=limits) + 1,
            )
        )
        checks.append(
            Check.equal(
                f"free_variable_sdepth_x{v}",
                sdepth(ideal, quotient, m, limits=limits).value,
                sdepth(ideal, quotient, rest, limits=limits).value + 1,
            )
        )
        return checks

    colon = colon_by_variable(ideal, v)
    checks.append(
        Check.claim(
            f"colon_is_edge_ideal_x{v}",
            colon == edge_ideal(d_complement(contraction(clutter, v), d - 1)),
        )
    )
    depth_colon = depth_quotient(colon, m, limits=limits)
    sdepth_colon = sdepth(colon, quotient, m, limits=limits).value
    checks.append(Check.at_least(f"colon_keeps_depth_x{v}", depth_colon, depth))
    checks.append(
        Check.at_least(f"colon_sdepth_at_least_depth_x{v}", sdepth_colon, depth_colon)
    )

    split = split_quotient(ideal, v, active=clutter.active)
    without = sdepth_of_poset(split.without, limits=limits)
    with_ = sdepth_of_poset(split.with_, limits=limits)
    glued = combine_split(split, without.certificate, with_.certificate)
    bound = min(without.value, with_.value + 1)
    whole = sdepth_of_poset(split.whole, limits=limits).value
    checks.extend(
        [
            Check.equal(
                f"colon_free_variable_shift_x{v}", sdepth_colon, with_.value + 1
            ),
            Check.claim(
                f"split_certificate_partitions_x{v}",
                glued.is_partition_of(split.whole),
                glued.first_defect(split.whole),
            ),
            Check.equal(
                f"split_certificate_dimension_x{v}",
                glued.min_dimension if glued.min_dimension is not None else -1,
                bound,
            ),
            Check.at_least(f"splitting_inequality_x{v}", whole, bound),
            Check.at_least(f"split_bound_at_least_depth_x{v}", bound, depth),
        ]
    )
    return checks


def elimination_pd_drop(
    clutter: Clutter, d: int, *, limits: Optional[Limits] = None
) -> list[Check]:
    """
    At every simplicial vertex :math:`v` whose variable divides a generator of
    :math:`I = I(c_d(C))`, removing :math:`x_v` does not lower the depth:
    :math:`\\mathrm{depth}(S'/I') \\geq \\mathrm{depth}(S/I)`. When
    :math:`I' \\neq 0` the projective dimension drops by at least one.

    Raises:
        CapExceededError: the depth oracle cap is exceeded.
    """
    limits = limits or Limits.default()
    ideal = edge_ideal(d_complement(clutter, d))
    m = popcount(clutter.active)
    checks = []
    pd = None
    for v in simplicial_vertices(clutter):
        if not ideal.support_mask & bit(v):
            continue
        if pd is None:
            pd = projective_dimension(ideal, limits=limits).value
        without = eliminate_variable(ideal, v)
        pd_without = projective_dimension(without, limits=limits).value
        checks.append(
            Check.at_least(f"elimination_keeps_depth_x{v}", m - 1 - pd_without, m - pd)
        )
        if not without.is_zero:
            checks.append(
                Check.at_least(f"elimination_pd_drop_x{v}", pd, pd_without + 1)
            )
    return checks
