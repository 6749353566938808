"""The exponential series over the free magma and its integer normalization.

The coefficient a(t) is fixed by a(1) = a(x) = 1 and, for a tree of degree
n >= 2 with factors t1 and t2,

    a(t1 * t2) = a(t1) * a(t2) / (2**n - 2).

The series exp = sum a(t) t satisfies exp * exp = exp(2x) and exp' = exp,
and is the unique such series with constant term 1 and a(x) = 1.  Scaling by
2**(n-1) * (n-1)!_M turns a(t) into a positive integer a_hat(t), which also
equals a product of Mersenne binomials over the inner nodes of t; both
routes are implemented and checked against each other.  The trees with
a_hat(t) = 1 are exactly the comb trees.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import InvariantError
from .mersenne import mersenne_binomial, mersenne_factorial
from .omega import convolution_term, omega
from .series import TreeSeries
from .trees import (
    UNIT,
    MagmaTree,
    comb_trees,
    decompose,
    enumerate_trees,
    graft,
    inner_nodes,
    render,
)


@lru_cache(maxsize=None)
def a_coefficient(t: MagmaTree) -> Fraction:
    """Exact coefficient of the tree t in the exponential series."""
    if t.degree <= 1:
        return Fraction(1)
    return a_coefficient(t.left) * a_coefficient(t.right) / ((1 << t.degree) - 2)


def exp_series(truncation: int, max_trees: int | None = None) -> TreeSeries:
    """The exponential series with all tree coefficients up to the truncation."""
    if truncation < 0:
        raise ValueError(f"truncation must be >= 0, got {truncation}")
    coeffs: dict[MagmaTree, Fraction] = {UNIT: Fraction(1)}
    for n in range(1, truncation + 1):
        for t in enumerate_trees(n, max_trees):
            coeffs[t] = a_coefficient(t)
    return TreeSeries._raw(truncation, coeffs)


@lru_cache(maxsize=None)
def a_hat(t: MagmaTree) -> int:
    """The integer 2**(n-1) * (n-1)!_M * a(t) for a tree of degree n >= 1.

    Integrality and positivity are theorems; violations raise loudly.
    """
    n = t.degree
    if n < 1:
        raise ValueError("a_hat is defined for trees of degree >= 1")
    value = a_coefficient(t) * (1 << (n - 1)) * mersenne_factorial(n - 1)
    if value.denominator != 1 or value <= 0:
        raise InvariantError(f"a_hat({render(t)}) = {value} is not a positive integer")
    return value.numerator


def a_hat_product(t: MagmaTree) -> int:
    """a_hat as the product of one Mersenne binomial per inner node.

    An inner node whose subtree has degree m and left degree k contributes
    mersenne_binomial(m - 2, k - 1).  Independent of a_hat's recursion.
    """
    if t.degree < 1:
        raise ValueError("a_hat_product is defined for trees of degree >= 1")
    product = 1
    for subtree, left_degree in inner_nodes(t):
        product *= mersenne_binomial(subtree.degree - 2, left_degree - 1)
    return product


def a_hat_recursion_check(t: MagmaTree) -> bool:
    """One step of the a_hat recursion, checked against the cached values."""
    if t.degree < 2:
        raise ValueError("the recursion applies to trees of degree >= 2")
    t1, t2 = decompose(t)
    step = mersenne_binomial(t.degree - 2, t1.degree - 1) * a_hat(t1) * a_hat(t2)
    return a_hat(t) == step


def verify_functional_equation(truncation: int) -> bool:
    """exp * exp == exp(2x) up to the truncation."""
    e = exp_series(truncation)
    return e * e == e.dilate(2)


def verify_derivative(truncation: int) -> bool:
    """The derivative of exp agrees with exp through the truncation.

    Computed one degree higher so differentiation loses nothing below the
    comparison window.
    """
    higher = exp_series(truncation + 1)
    return higher.derivative().truncate(truncation) == exp_series(truncation)


def verify_sums(n: int) -> bool:
    """Degree-n coefficient sums: sum a(t) = 1/n! and sum a_hat(t) = omega(n)."""
    if n < 1:
        raise ValueError(f"coefficient sums start at degree 1, got {n}")
    trees = enumerate_trees(n)
    plain = sum(a_coefficient(t) for t in trees)
    integral = sum(a_hat(t) for t in trees)
    return plain == Fraction(1, factorial(n)) and integral == omega(n)


def trees_with_a_hat_one(n: int) -> list[MagmaTree]:
    """All degree-n trees whose normalized coefficient is 1, canonical order."""
    return [t for t in enumerate_trees(n) if a_hat(t) == 1]


def verify_comb_characterization(n: int) -> bool:
    """a_hat(t) = 1 exactly on the comb trees at degree n."""
    return trees_with_a_hat_one(n) == comb_trees(n)


def verify_split_sums(n: int) -> bool:
    """Grouped coefficient sums over splits match the binomial convolution.

    For each k, summing a_hat(t1 * t2) over deg t1 = k, deg t2 = n - k gives
    convolution_term(n, k); summing over k rebuilds omega(n).
    """
    if n < 2:
        raise ValueError(f"split sums need n >= 2, got {n}")
    total = 0
    for k in range(1, n):
        grouped = sum(
            a_hat(graft(t1, t2))
            for t1 in enumerate_trees(k)
            for t2 in enumerate_trees(n - k)
        )
        if grouped != convolution_term(n, k):
            return False
        total += grouped
    return total == omega(n)


def coefficient_rows(degree: int) -> list[tuple[str, int, int, int, int]]:
    """Table rows (tree, degree, a numerator, a denominator, a_hat).

    One row per degree-`degree` tree, in canonical order.
    """
    if degree < 1:
        raise ValueError(f"coefficient tables start at degree 1, got {degree}")
    rows = []
    for t in enumerate_trees(degree):
        a = a_coefficient(t)
        rows.append((render(t), t.degree, a.numerator, a.denominator, a_hat(t)))
    return rows
