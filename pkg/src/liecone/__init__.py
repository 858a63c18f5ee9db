"""Exact computations for tamed and almost Kähler structures on Lie algebras.

Everything is done over the rationals. ``linalg.KERNEL`` tells which
echelon kernel was loaded ("cython" or "python").
"""

from .acs import (AlmostComplexStructure, is_compatible_with, is_integrable, is_tamed_by,
                  lambda_minus, lambda_plus, matched_orientation, nijenhuis,
                  orientation_sign, random_acs)
from .catalog import catalog_get, catalog_list, family_j
from .exterior import KForm, KVector, Subspace, covector, evaluate, vector, wedge
from .hodge import InnerProduct, Orientation, b_plus, hodge_star, phi_zeta
from .lie import (LieAlgebra, betti, betti_numbers, boundaries, boundary, ce_d,
                  coboundaries, cocycles, cycles, is_unimodular)
from .linalg import KERNEL
from .tameness import (Classification, ConeVerdict, JCohomologyReport,
                       OrientationMismatchError, classify, cone_membership,
                       construct_compatible_form, construct_taming_form,
                       feasibility_oracle, j_cohomology, obstruction_vector)

__version__ = "0.1.0"
