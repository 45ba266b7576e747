from .builders import (
    OUT_OF_SCOPE,
    REGISTRY,
    Construction,
    grid_3x3,
    gq22_graph,
    hermitian_dual_polar,
    maximal_isotropic_subspaces,
    octad_graph,
    ternary_golay_coset_graph,
)
from .codes import LinearCode, binary_golay, ternary_golay
from .gf4 import GF4Element

__all__ = [
    "Construction", "GF4Element", "LinearCode", "OUT_OF_SCOPE", "REGISTRY",
    "binary_golay", "gq22_graph", "grid_3x3", "hermitian_dual_polar",
    "maximal_isotropic_subspaces", "octad_graph", "ternary_golay", "ternary_golay_coset_graph",
]
