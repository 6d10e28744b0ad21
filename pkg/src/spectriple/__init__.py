"""Finite real (twisted) spectral triples, exactly.

Construct finite-dimensional real spectral triples over block algebras,
verify their axioms mechanically, twist them by their grading, and compute
real parts and algebra/opposite intersections in exact rational arithmetic.
"""

from .algebra import (AlgebraElement, AlgebraSpec, BlockKind, Placement, Representation,
                      RepresentationError, basis_element, basis_elements, identity_element)
from .matrices import Antilinear, Matrix
from .realpart import (RealPartResult, intersect_with_opposite, real_part,
                       verify_doubling_dichotomy, verify_real_part)
from .reports import Report
from .scalars import QI, get_tolerance, rational, set_tolerance
from .subspaces import RealSubspaceBasis, real_nullspace, subspace_intersect
from .triple import (FiniteRealTriple, KOSigns, check_axioms, check_first_order,
                     check_order_zero, check_twisted_first_order, ko_dimension,
                     opposite_action)
from .twist import (TwistData, TwistError, check_compatibility, twist_by_grading,
                    twisted_commutator)

__all__ = [
    "AlgebraElement", "AlgebraSpec", "Antilinear", "BlockKind", "FiniteRealTriple",
    "KOSigns", "Matrix", "Placement", "QI", "RealPartResult", "RealSubspaceBasis",
    "Report", "Representation", "RepresentationError", "TwistData", "TwistError",
    "basis_element", "basis_elements", "check_axioms", "check_compatibility",
    "check_first_order", "check_order_zero", "check_twisted_first_order",
    "get_tolerance", "identity_element", "intersect_with_opposite", "ko_dimension",
    "opposite_action", "rational", "real_nullspace", "real_part", "set_tolerance",
    "subspace_intersect", "twist_by_grading", "twisted_commutator",
    "verify_doubling_dichotomy", "verify_real_part",
]

__version__ = "0.1.0"
