"""Biserial quivers, Brauer graphs, triangulation quivers and the
algebras attached to them."""

from .brauer import (
    BrauerGraph,
    biserial_to_brauer,
    brauer_to_biserial,
    classify_loop,
    green_walks,
    random_brauer_graph,
)
from .constructions import (
    TETRAHEDRAL,
    IdempotentSelection,
    barycentric_division,
    double_star,
    is_singular_tetrahedral,
    periodic_envelope,
    reduce,
    sharp,
    star,
)
from .errors import *  # noqa: F401,F403
from .iso import Isomorphism, isomorphic, ribbon_isomorphic
from .presentation import (
    AlgebraPresentation,
    Path,
    Relation,
    basis_paths,
    cartan_matrix,
    cycle_B,
    dimension,
    gabriel_quiver,
    path_A,
    relations_biserial,
    relations_border,
    relations_weighted_triangulation,
)
from .quiver import (
    Arrow,
    BiserialQuiver,
    OrbitDecomposition,
    Quiver,
    border_vertices,
    derive_g,
    is_triangulation_quiver,
    orbits,
    random_biserial_quiver,
    self_folded_triangles,
    validate,
)
from .scalars import FieldElement, parse_scalar
from .surface import SurfaceReport, surface_report
from .weighted import WeightedBiserialQuiver, random_weighted_quiver

__version__ = "0.1.0"
