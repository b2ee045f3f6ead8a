"""Exact computations in free finite-dimensional algebras given by structure constants."""
from .algebra import Algebra, AlgebraError, Element, element_change_basis, find_unit, make_algebra, teichmuller
from .catalog import CATALOG, catalog
from .config import RunConfig
from .linmap import (
    BMatrix,
    GeneratorSet,
    LinearMap,
    Tensor2,
    b_matrix,
    compose,
    generator_set,
    map_to_tensor,
    orbit_span,
    orbits_equal,
    tensor_apply,
    tensor_inverse,
    tensor_mul,
    tensor_to_map,
)
from .linsolve import Affine, Inconsistent, Subspace, Unique, linear_solve
from .polymap import PermTensorRep, PermTerm, PolyMap, perm_rep_eval, perm_rep_to_coords, poly_symmetry
from .scalar import Rational, format_rational, parse_rational, rational_arith

__version__ = "0.1.0"
