"""Exact Gaiotto and Whittaker vectors of the Virasoro algebra in the Jack basis.

The package works over exact rationals and rational functions of one formal
parameter.  Main entry points:

* :func:`gaiotto_coeffs_recursive` and :func:`gaiotto_coeff_closed` for the
  coefficients c_lam of the Gaiotto state in P_lam^{(1/beta)};
* :func:`virasoro_mode` for the bosonized L_n acting on symmetric functions;
* :func:`jack_table` for Jack functions of one degree;
* :func:`z_degree` and :func:`agt_check` for the comparison with the SU(2)
  instanton partition function.
"""
from .agt import (AgtContext, agt_alt_degree, agt_check, agt_lhs_degree, agt_rhs_degree,
                  params_from_gauge, random_gauge_params)
from .combinatorics import (Partition, arm_leg, block_encoding, conjugate, dominance_compare,
                            partition_tuples, partitions_of, partitions_up_to, z_of)
from .errors import (DegenerateParameter, DegreeCapExceeded, DivisionByZero, JackWhittakerError,
                     ModeMismatch, NonSymmetricInput, NotOneBoxCover, PoleAtPoint, ResonantParameter,
                     RetryBudgetExhausted, VanishingDenominator)
from .exactmath import RatFunc, b_symbol, beta_symbol, identity_test
from .identities import f1_eval, f2_eval, verify_identities
from .jack import (expand_in_jack, jack_norm_closed, jack_reexpand, jack_table,
                   pieri_p1_closed, pieri_p1_oracle, pieri_p2)
from .nekrasov import GaugeParams, nek_factor, tuple_weight, z_degree
from .symfunc import SymFunc, inner_product, m, p
from .virops import (bracket_check, central_charge, cubic_hamiltonian, e_operator,
                     e_operator_split, eigenvalue, eigenvalue_n, finite_n_cs_apply,
                     highest_weight, virasoro_mode)
from .whittaker import (WhittakerExpansion, gaiotto_coeff_closed, gaiotto_coeffs_recursive,
                        whittaker_coeffs_recursive, whittaker_property_check)

__version__ = "0.1.0"

import types as _types

__all__ = [_n for _n, _v in dict(globals()).items()
           if not _n.startswith("_") and not isinstance(_v, _types.ModuleType)]
