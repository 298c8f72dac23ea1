"""Weight distributions of linearized-polynomial cyclic codes and spectra of
linearized Wenger graphs, each computed by closed form and checked against
independent enumeration."""

from .errors import BudgetError, ConsistencyError, NumericalError, ParameterError
from .params import FieldParams
from .field import GF, FieldContext, field_build, find_primitive_poly
from .qbinom import gaussian_binom, moebius_mu, product_formula_coeffs, verify_conjecture
from .linearized import LinearizedPoly, null_space, moore_matrix
from .code import (WeightDistribution, weight_distribution_formula,
                   weight_distribution_bruteforce, weight_distribution_moebius)
from .wenger import SpectrumMultiset, spectrum_formula, spectrum_counting, spectrum_dense

__version__ = "0.1.0"

__all__ = [
    "BudgetError", "ConsistencyError", "NumericalError", "ParameterError",
    "FieldParams", "GF", "FieldContext", "field_build", "find_primitive_poly",
    "gaussian_binom", "moebius_mu", "product_formula_coeffs", "verify_conjecture",
    "LinearizedPoly", "null_space", "moore_matrix",
    "WeightDistribution", "weight_distribution_formula", "weight_distribution_bruteforce",
    "weight_distribution_moebius",
    "SpectrumMultiset", "spectrum_formula", "spectrum_counting", "spectrum_dense",
]
