"""Tornheim's double zeta function, its continuation and its special values.

The main entry points:

>>> from tornheim import tornheim_direct, tornheim_continued, parity_exact
>>> str(parity_exact(1, 1, 1))
'2*zeta(3)'
"""
from .approx import DEFAULT_OPTIONS, Approx, EvalOptions, exact
from .appendix import FpmOptions, F_pm, corollary_A_sides, funeq_residual, funeq_sides, h_eval
from .closed_forms import (LimitPath, F_eval, F_exact, convolution_check, convolution_check_formal,
                           corollary_values, nonpositive_ab, nonpositive_bc_limit, nonpositive_c,
                           parity_eval, parity_exact)
from .contour import (ContourSpec, Indentation, IntegrandHandle, barnes_lemma_check,
                      integrate_contour, pfd1_residual, pfd2_residual, residue_numeric)
from .core import (A_contour, A_shifted, Region, TornheimPoint, Z_def, Z_theorem, classify, delta,
                   euler_double_zeta, euler_pole_term, h_contour, tornheim_continued,
                   tornheim_direct, z_decompose)
from .errors import *  # noqa: F401,F403
from .laurent import ExactValue, RationalLaurent, zeta_exact
from .limits import corollary_numeric, richardson
from .special import bernoulli, gamma, pochhammer, rgamma, riemann_zeta, riemann_zeta_deriv
from .witten import (WittenReport, witten_at_zero, witten_dderiv_neg_even, witten_deriv_neg_odd,
                     witten_eval, witten_positive_int)

__version__ = "0.1.0"
