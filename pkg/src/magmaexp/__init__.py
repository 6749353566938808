"""Exact Mersenne-number combinatorics and the exponential series of the
free unital magma on one generator.

Everything is integer or rational arithmetic; no floating point anywhere.
"""

from .errors import BoundExceededError, InvariantError
from .exponential import (
    a_coefficient,
    a_hat,
    a_hat_product,
    a_hat_recursion_check,
    coefficient_rows,
    exp_series,
    trees_with_a_hat_one,
    verify_comb_characterization,
    verify_derivative,
    verify_functional_equation,
    verify_split_sums,
    verify_sums,
)
from .mersenne import (
    digit_sum,
    factorial_valuation,
    gaussian_binomial_at_2,
    mersenne,
    mersenne_binomial,
    mersenne_factorial,
)
from .omega import (
    convolution_term,
    omega,
    omega_factorization,
    omega_valuation,
    verify_omega_recursion,
)
from .orders import (
    DEFAULT_FACTOR_BOUND,
    FACTOR_BOUND_ENV,
    WIEFERICH_SEARCH_CAP,
    OrderRecord,
    factor_bound,
    factor_mersenne,
    mersenne_order,
    mersenne_valuation,
    order_record,
    pi_m,
    wieferich_exponent,
    wieferich_search,
)
from .primes import divisors, factorize, is_prime, primes_up_to, valuation
from .series import ClassicalSeries, TreeSeries, generator, one, zero
from .trees import (
    DEFAULT_TREE_BUDGET,
    UNIT,
    X,
    MagmaTree,
    ParseError,
    canonical_rank,
    canonical_sort_key,
    catalan,
    comb_trees,
    decompose,
    enumerate_trees,
    graft,
    inner_nodes,
    parse,
    render,
)
from .verify import CheckResult, run_verification

__version__ = "0.1.0"

__all__ = [
    "BoundExceededError",
    "CheckResult",
    "ClassicalSeries",
    "DEFAULT_FACTOR_BOUND",
    "DEFAULT_TREE_BUDGET",
    "FACTOR_BOUND_ENV",
    "InvariantError",
    "MagmaTree",
    "OrderRecord",
    "ParseError",
    "TreeSeries",
    "UNIT",
    "WIEFERICH_SEARCH_CAP",
    "X",
    "a_coefficient",
    "a_hat",
    "a_hat_product",
    "a_hat_recursion_check",
    "canonical_rank",
    "canonical_sort_key",
    "catalan",
    "coefficient_rows",
    "comb_trees",
    "convolution_term",
    "decompose",
    "digit_sum",
    "divisors",
    "enumerate_trees",
    "exp_series",
    "factor_bound",
    "factor_mersenne",
    "factorial_valuation",
    "factorize",
    "gaussian_binomial_at_2",
    "generator",
    "graft",
    "inner_nodes",
    "is_prime",
    "mersenne",
    "mersenne_binomial",
    "mersenne_factorial",
    "mersenne_order",
    "mersenne_valuation",
    "omega",
    "omega_factorization",
    "omega_valuation",
    "one",
    "order_record",
    "parse",
    "pi_m",
    "primes_up_to",
    "render",
    "run_verification",
    "trees_with_a_hat_one",
    "valuation",
    "verify_comb_characterization",
    "verify_derivative",
    "verify_functional_equation",
    "verify_omega_recursion",
    "verify_split_sums",
    "verify_sums",
    "wieferich_exponent",
    "wieferich_search",
    "zero",
]
