"""Bundled identity checks for the command line's verify subcommand.

Each check covers one family of identities up to a degree budget and reports
a pass/fail result with the first counterexample, if any, rendered as text.
All checks are exact; there are no tolerances anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import BoundExceededError, InvariantError
from .exponential import (
    a_coefficient,
    a_hat,
    a_hat_product,
    a_hat_recursion_check,
    exp_series,
    verify_functional_equation,
)
from .omega import omega, omega_factorization, verify_omega_recursion
from .orders import factor_bound, factor_mersenne
from .trees import enumerate_trees, render


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _functional_equation(max_degree: int) -> CheckResult:
    name = "functional-equation"
    if verify_functional_equation(max_degree):
        return CheckResult(name, True)
    e = exp_series(max_degree)
    difference = e * e - e.dilate(2)
    t, c = next(difference.terms())
    return CheckResult(name, False, f"coefficient of {render(t)} off by {c}")


def _derivative(max_degree: int) -> CheckResult:
    # stays within the degree budget: compares d(exp) against exp one lower
    name = "derivative"
    if max_degree < 1:
        return CheckResult(name, True, "vacuous below degree 1")
    lower = exp_series(max_degree - 1)
    difference = exp_series(max_degree).derivative().truncate(max_degree - 1) - lower
    if difference.is_zero():
        return CheckResult(name, True)
    t, c = next(difference.terms())
    return CheckResult(name, False, f"coefficient of {render(t)} off by {c}")


def _coefficient_sums(max_degree: int) -> CheckResult:
    name = "coefficient-sums"
    for n in range(1, max_degree + 1):
        trees = enumerate_trees(n)
        plain = sum(a_coefficient(t) for t in trees)
        if plain != Fraction(1, factorial(n)):
            return CheckResult(name, False, f"sum of a(t) at degree {n} is {plain}")
        integral = sum(a_hat(t) for t in trees)
        if integral != omega(n):
            return CheckResult(name, False, f"sum of a_hat at degree {n} is {integral}")
    return CheckResult(name, True)


def _binomial_product(max_degree: int) -> CheckResult:
    name = "binomial-product"
    for n in range(1, max_degree + 1):
        for t in enumerate_trees(n):
            if a_hat(t) != a_hat_product(t):
                return CheckResult(
                    name, False,
                    f"{render(t)}: recursion gives {a_hat(t)}, product {a_hat_product(t)}"
                )
    return CheckResult(name, True)


def _binomial_recursion(max_degree: int) -> CheckResult:
    name = "binomial-recursion"
    for n in range(2, max_degree + 1):
        for t in enumerate_trees(n):
            if not a_hat_recursion_check(t):
                return CheckResult(name, False, f"recursion step fails at {render(t)}")
    return CheckResult(name, True)


def _omega_recursion(max_degree: int) -> CheckResult:
    name = "omega-recursion"
    for n in range(2, max_degree + 1):
        if not verify_omega_recursion(n):
            return CheckResult(name, False, f"convolution misses omega({n})")
    return CheckResult(name, True)


def _factorizations(max_degree: int) -> CheckResult:
    name = "factorizations"
    bound = min(max_degree, factor_bound())
    for n in range(1, bound + 1):
        try:
            factors = factor_mersenne(n)
        except InvariantError as exc:
            return CheckResult(name, False, str(exc))
        product = 1
        for p, e in factors.items():
            product *= p**e
        if product != (1 << n) - 1:
            return CheckResult(name, False, f"2**{n}-1 does not reassemble")
        try:
            omega_factorization(n)
        except (InvariantError, BoundExceededError) as exc:
            return CheckResult(name, False, f"omega({n}): {exc}")
    return CheckResult(name, True)


def run_verification(max_degree: int) -> list[CheckResult]:
    """Run every identity check up to max_degree, in a fixed order."""
    if max_degree < 0:
        raise ValueError(f"degree must be >= 0, got {max_degree}")
    return [
        _functional_equation(max_degree),
        _derivative(max_degree),
        _coefficient_sums(max_degree),
        _binomial_product(max_degree),
        _binomial_recursion(max_degree),
        _omega_recursion(max_degree),
        _factorizations(max_degree),
    ]
