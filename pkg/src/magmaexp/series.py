"""Truncated power series with tree monomials and rational coefficients.

A TreeSeries of truncation N stores finitely many (tree, coefficient) pairs
with degrees <= N and no zero coefficients.  Binary operations require equal
truncations; mixing truncations is a programming error and raises, equality
included.  Multiplication enumerates every factorization of the target tree,
unit factors and all, and is therefore not associative in general, exactly
like the underlying magma product.

The text format puts the truncation in a header line and one
"tree<TAB>numerator/denominator" row per term, sorted by degree and then
canonical order, so serialized output is byte deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

from .trees import UNIT, X, MagmaTree, canonical_sort_key, graft, parse, render

Scalar = Union[int, Fraction]

_ZERO = Fraction(0)


@dataclass(frozen=True)
class ClassicalSeries:
    """A truncated ordinary power series in one variable, dense and exact."""

    truncation: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.truncation < 0:
            raise ValueError(f"truncation must be >= 0, got {self.truncation}")
        if len(self.coefficients) != self.truncation + 1:
            raise ValueError("need exactly truncation + 1 coefficients")

    def coefficient(self, n: int) -> Fraction:
        if not 0 <= n <= self.truncation:
            raise ValueError(f"degree {n} outside truncation {self.truncation}")
        return self.coefficients[n]


class TreeSeries:
    """Sparse tree-indexed series, immutable once constructed."""

    __slots__ = ("truncation", "_coeffs")

    def __init__(
        self,
        truncation: int,
        coefficients: Mapping[MagmaTree, Scalar]
        | Iterable[tuple[MagmaTree, Scalar]] = (),
    ):
        if truncation < 0:
            raise ValueError(f"truncation must be >= 0, got {truncation}")
        items = (
            coefficients.items() if isinstance(coefficients, Mapping) else coefficients
        )
        coeffs: dict[MagmaTree, Fraction] = {}
        for t, c in items:
            if t.degree > truncation:
                raise ValueError(
                    f"term of degree {t.degree} exceeds truncation {truncation}"
                )
            c = Fraction(c)
            if c:
                coeffs[t] = coeffs.get(t, _ZERO) + c
                if not coeffs[t]:
                    del coeffs[t]
        object.__setattr__(self, "truncation", truncation)
        object.__setattr__(self, "_coeffs", coeffs)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("TreeSeries is immutable")

    @classmethod
    def _raw(cls, truncation: int, coeffs: dict[MagmaTree, Fraction]) -> "TreeSeries":
        # trusted constructor: coeffs already pruned, bounded, and private
        series = cls.__new__(cls)
        object.__setattr__(series, "truncation", truncation)
        object.__setattr__(series, "_coeffs", coeffs)
        return series

    def coefficient(self, t: MagmaTree) -> Fraction:
        return self._coeffs.get(t, _ZERO)

    def terms(self) -> Iterator[tuple[MagmaTree, Fraction]]:
        """Terms sorted by (degree, canonical order)."""
        for t in sorted(self._coeffs, key=canonical_sort_key):
            yield t, self._coeffs[t]

    def support(self) -> list[MagmaTree]:
        return [t for t, _ in self.terms()]

    def order(self) -> int | float:
        """Least degree with a nonzero coefficient; math.inf for the zero series."""
        return min((t.degree for t in self._coeffs), default=math.inf)

    def is_zero(self) -> bool:
        return not self._coeffs

    def _require_same_truncation(self, other: "TreeSeries") -> None:
        if self.truncation != other.truncation:
            raise ValueError(
                f"truncation mismatch: {self.truncation} vs {other.truncation}"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TreeSeries):
            return NotImplemented
        self._require_same_truncation(other)
        return self._coeffs == other._coeffs

    __hash__ = None  # mutable-value semantics are wrong for dict keys

    def __add__(self, other: "TreeSeries") -> "TreeSeries":
        if not isinstance(other, TreeSeries):
            return NotImplemented
        self._require_same_truncation(other)
        acc = dict(self._coeffs)
        for t, c in other._coeffs.items():
            s = acc.get(t, _ZERO) + c
            if s:
                acc[t] = s
            else:
                acc.pop(t, None)
        return TreeSeries._raw(self.truncation, acc)

    def __neg__(self) -> "TreeSeries":
        return TreeSeries._raw(self.truncation, {t: -c for t, c in self._coeffs.items()})

    def __sub__(self, other: "TreeSeries") -> "TreeSeries":
        if not isinstance(other, TreeSeries):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Scalar) -> "TreeSeries":
        c = Fraction(c)
        if not c:
            return TreeSeries._raw(self.truncation, {})
        return TreeSeries._raw(
            self.truncation, {t: v * c for t, v in self._coeffs.items()}
        )

    def __mul__(self, other: Union["TreeSeries", Scalar]) -> "TreeSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, TreeSeries):
            return NotImplemented
        self._require_same_truncation(other)
        acc: dict[MagmaTree, Fraction] = {}
        for t1, c1 in self._coeffs.items():
            for t2, c2 in other._coeffs.items():
                if t1.degree + t2.degree > self.truncation:
                    continue
                t = graft(t1, t2)
                s = acc.get(t, _ZERO) + c1 * c2
                if s:
                    acc[t] = s
                else:
                    acc.pop(t, None)
        return TreeSeries._raw(self.truncation, acc)

    def __rmul__(self, other: Scalar) -> "TreeSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def derivative(self) -> "TreeSeries":
        """Leibniz derivative: d(1) = 0, d(x) = 1, d(t1*t2) = d(t1)*t2 + t1*d(t2)."""
        acc: dict[MagmaTree, Fraction] = {}
        for t, c in self._coeffs.items():
            for s, multiplicity in _monomial_derivative(t):
                v = acc.get(s, _ZERO) + c * multiplicity
                if v:
                    acc[s] = v
                else:
                    acc.pop(s, None)
        return TreeSeries._raw(self.truncation, acc)

    def substitute(self, g: "TreeSeries") -> "TreeSeries":
        """The algebra homomorphism sending x to g, applied to this series.

        Requires order(g) >= 1 so that images of high-degree trees stay above
        the truncation and the result is well defined.
        """
        if not isinstance(g, TreeSeries):
            raise TypeError("substitute needs a TreeSeries argument")
        self._require_same_truncation(g)
        if g.order() == 0:
            raise ValueError("substitution needs a series of order >= 1")
        images: dict[MagmaTree, TreeSeries] = {
            UNIT: one(self.truncation),
            X: g,
        }

        def image(t: MagmaTree) -> TreeSeries:
            cached = images.get(t)
            if cached is None:
                cached = image(t.left) * image(t.right)
                images[t] = cached
            return cached

        acc: dict[MagmaTree, Fraction] = {}
        for t, c in self._coeffs.items():
            for s, v in image(t)._coeffs.items():
                w = acc.get(s, _ZERO) + c * v
                if w:
                    acc[s] = w
                else:
                    acc.pop(s, None)
        return TreeSeries._raw(self.truncation, acc)

    def dilate(self, c: Scalar) -> "TreeSeries":
        """Substitution of c*x for x: degree-n coefficients pick up c**n."""
        c = Fraction(c)
        acc: dict[MagmaTree, Fraction] = {}
        for t, v in self._coeffs.items():
            w = v * c**t.degree
            if w:
                acc[t] = w
        return TreeSeries._raw(self.truncation, acc)

    def truncate(self, truncation: int) -> "TreeSeries":
        """Drop terms above a new, not larger, truncation."""
        if truncation > self.truncation:
            raise ValueError(
                f"cannot extend truncation {self.truncation} to {truncation}"
            )
        return TreeSeries._raw(
            truncation,
            {t: c for t, c in self._coeffs.items() if t.degree <= truncation},
        )

    def classical_projection(self) -> ClassicalSeries:
        """Forget tree shapes: each degree-n tree maps to x**n."""
        coeffs = [_ZERO] * (self.truncation + 1)
        for t, c in self._coeffs.items():
            coeffs[t.degree] += c
        return ClassicalSeries(self.truncation, tuple(coeffs))

    def to_text(self) -> str:
        lines = [f"truncation\t{self.truncation}"]
        for t, c in self.terms():
            lines.append(f"{render(t)}\t{c.numerator}/{c.denominator}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "TreeSeries":
        lines = [line for line in text.splitlines() if line.strip()]
        if not lines:
            raise ValueError("missing header line")
        head = lines[0].split("\t")
        if len(head) != 2 or head[0] != "truncation":
            raise ValueError(f"bad header line {lines[0]!r}")
        truncation = int(head[1])
        terms = []
        for line in lines[1:]:
            fields = line.split("\t")
            if len(fields) != 2:
                raise ValueError(f"bad term line {line!r}")
            num, _, den = fields[1].partition("/")
            if not den:
                raise ValueError(f"coefficient {fields[1]!r} is not numerator/denominator")
            terms.append((parse(fields[0]), Fraction(int(num), int(den))))
        return cls(truncation, terms)

    def __repr__(self) -> str:
        shown = [f"{c}*{render(t)}" for t, c in list(self.terms())[:6]]
        if len(self._coeffs) > 6:
            shown.append("...")
        body = " + ".join(shown) if shown else "0"
        return f"TreeSeries(N={self.truncation}, {body})"


@lru_cache(maxsize=None)
def _monomial_derivative(t: MagmaTree) -> tuple[tuple[MagmaTree, int], ...]:
    """d(t) as (tree, multiplicity) pairs; one term per leaf of t."""
    if t.degree == 0:
        return ()
    if t.left is None:
        return ((UNIT, 1),)
    acc: dict[MagmaTree, int] = {}
    for s, m in _monomial_derivative(t.left):
        key = graft(s, t.right)
        acc[key] = acc.get(key, 0) + m
    for s, m in _monomial_derivative(t.right):
        key = graft(t.left, s)
        acc[key] = acc.get(key, 0) + m
    return tuple(acc.items())


def zero(truncation: int) -> TreeSeries:
    return TreeSeries(truncation)


def one(truncation: int) -> TreeSeries:
    return TreeSeries(truncation, {UNIT: 1})


def generator(truncation: int) -> TreeSeries:
    """The series x (requires truncation >= 1)."""
    return TreeSeries(truncation, {X: 1})
