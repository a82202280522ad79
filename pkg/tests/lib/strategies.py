from hypothesis import strategies as st

from stanley._bits import full_mask, minimal_masks
from stanley.clutters import Clutter
from stanley.ideals import SqfIdeal


@st.composite
def squarefree_ideals(draw, max_n: int = 5, min_n: int = 1, max_generators: int = 6):
    """Proper nonzero squarefree ideals."""
    n = draw(st.integers(min_n, max_n))
    masks = draw(
        st.lists(
            st.integers(1, full_mask(n)), min_size=1, max_size=max_generators
        )
    )
    return SqfIdeal(n, minimal_masks(masks))


@st.composite
def clutters(draw, max_n: int = 5, min_n: int = 1, min_edge: int = 1):
    n = draw(st.integers(min_n, max_n))
    masks = draw(st.lists(st.integers(1, full_mask(n)), max_size=6))
    edges = minimal_masks(m for m in masks if m.bit_count() >= min_edge)
    return Clutter(n, edges, full_mask(n))
