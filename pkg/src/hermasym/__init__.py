"""Hermite polynomials at large degree via the Charlier limit.

Regional asymptotic formulas for ``H_n(xi)`` and ``C_n^(a)(x)``, Hermite zero
estimates from Kepler's equation, and exact oracles to score them against.
"""

__version__ = "0.1.0"

from .fidelity import Fidelity
from .logreal import ComplexLog, SignedLogReal
from .specfun import airy_ai, bessel_j
from .exactpoly import (CharlierPoint, HermitePoint, charlier_exact_sum, hermite_exact_sum,
                        hermite_recurrence_log, hermite_zeros_exact)
from .hermite_asym import (classify_hermite, hermite_eval_asym, lambda_airy, lambda_oscillatory,
                           lambda_osc_complex_pair, lambda_outer, monomial_regime, sigma,
                           szego_leading)
from .charlier_asym import (classify_charlier, delta, f_airy_edge, f_oscillatory, f_outer,
                            small_n_formula, turning_points)
from .zeros import kepler_kapteyn, kepler_newton, tau_estimates, zero_estimates
