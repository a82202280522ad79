from stanley.depth._complex import SimplicialComplex, stanley_reisner
from stanley.depth._homology import (
    HomologyProfile,
    boundary_matrix,
    matrix_rank,
    reduced_homology_ranks,
)
from stanley.depth._hochster import (
    ProjectiveDimension,
    depth_ideal,
    depth_quotient,
    projective_dimension,
    torsion_check,
)

__all__ = [
    "SimplicialComplex",
    "stanley_reisner",
    "HomologyProfile",
    "boundary_matrix",
    "matrix_rank",
    "reduced_homology_ranks",
    "ProjectiveDimension",
    "projective_dimension",
    "depth_quotient",
    "depth_ideal",
    "torsion_check",
]
