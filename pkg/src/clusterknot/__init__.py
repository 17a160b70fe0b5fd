"""Cluster coordinates on braid closures, boundary-parabolic representations and their Ptolemy data."""
from .braid import BraidWord, Diagram, closure_diagram, longitude_word, parse_braid_word, wirtinger_presentation
from .cluster import apply_R, apply_R_k, check_nondegenerate, evolve, is_solution
from .decoration import Decoration, assemble_solution, build_decoration, generic_decoration
from .geometry import all_shapes, gluing_residual, tet_shape, volume
from .linalg import bloch_wigner
from .ptolemy import extend_assignment, lift_cocycle, meridian_holonomy, verify_crossing_relations
from .representation import WirtingerRep, obstruction_class, solve_parabolic, verify_relations

__version__ = "0.1.0"
