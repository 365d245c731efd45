"""Exact computations around nabla on two-column modified Hall-Littlewood polynomials."""

from .exact import (IDENTITY_TAGS, LaurentPoly, RatFunc, check_identity, identity_grid,
                    pochhammer, tbinomial)
from .nabla import (NotInSpanError, nabla_power_counterexample, expand_in_two_col_macdonald,
                    matrix_power, nabla_pow, transition_matrix, verify_dominance_difference,
                    verify_main_i, verify_main_ii, verify_thm_4_1, verify_thm_5_1)
from .partitions import conjugate, dominates, n_stat, partition, two_col
from .symfunc import (SchurVector, hl_to_mac_coeff, is_schur_positive, mac_to_hl_coeff,
                      macdonald, modified_hl, modified_hl_inverted, omega)
from .tableaux import Tableau, cocharge, kostka_foulkes

__version__ = "0.1.0"
