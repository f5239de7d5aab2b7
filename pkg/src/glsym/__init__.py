"""Exact arithmetic for generalized (epsilon-graded) left-symmetric algebras.

The package checks the defining identities, builds the cochain complex of
an algebra with coefficients in a bimodule, computes its cohomology over
Q(i), compares it with Chevalley-Eilenberg cohomology of the associated
epsilon-Lie algebra, and runs the order-by-order deformation calculus.
"""

__version__ = "0.1.0"

from .scalar import Scalar, scalar, scalar_parse, scalar_arith  # noqa: E402
from .grading import (GradingGroup, CommutationFactor, validate_factor, epsilon,  # noqa: E402
                      super_factor, trivial_factor, z2_decomposition)
from .algebra import (GradedAlgebra, EpsilonLieAlgebra, AxiomReport, check_left_symmetric,  # noqa: E402
                      associated_lie, gl_epsilon, is_simple, multiplication_algebra)
from .bimodule import (Bimodule, LieModule, regular_bimodule, zero_bimodule, check_bimodule,  # noqa: E402
                       classify, hom_bimodule, tensor_bimodule, lie_module_of)
from .cochains import (normalize_wedge, Cochain, CochainSpace, cochain_space_basis,  # noqa: E402
                       evaluate_cochain, face_map, coboundary, rho_action, ce_coboundary,
                       xi_action, psi, psi_inv, complex_for, lie_complex_for)
from .cohomology import cohomology_at, theorem41_check, remark42_check  # noqa: E402
from .linalg import ExactMatrix, rank_nullspace  # noqa: E402
from .deformation import (DeformationSeries, infinitesimal_space, obstruction, extend,  # noqa: E402
                          specialize, first_order_equivalent, verify_equivalence,
                          normalize_leading_term)
from .document import parse_document, load_document, dump_document  # noqa: E402
from .catalog import (example_5_2, cocycle_fa, cocycle_fb, cocycle_fc, deformed_example,  # noqa: E402
                      gl_super, idempotent_pair, one_dim, skew_factor)
