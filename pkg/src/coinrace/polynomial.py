"""Exact univariate polynomial arithmetic over the rationals.

A polynomial is a dense, ascending coefficient sequence: ``Poly((1, -2, 1))``
is ``1 - 2p + p^2``.  Coefficients are :class:`fractions.Fraction`, so every
operation is exact at arbitrary precision.  Trailing zero coefficients are
stripped on construction; the zero polynomial stores no coefficients and has
degree ``None``.  Instances are immutable and safe to share between threads.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class Poly:
    """Immutable univariate polynomial with exact rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(cs)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Ascending coefficients with no trailing zeros (empty for zero)."""
        return self._coeffs

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else None

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_integral(self) -> bool:
        """True when every coefficient is an integer."""
        return all(c.denominator == 1 for c in self._coeffs)

    def constant_term(self) -> Fraction:
        return self._coeffs[0] if self._coeffs else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: Poly | Scalar) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self._coeffs)

    def __sub__(self, other: Poly | Scalar) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> Poly:
        return (-self) + other

    def __mul__(self, other: Poly | Scalar) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Poly:
        if exponent < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: Scalar) -> Fraction:
        """Exact value at ``x`` (Horner evaluation)."""
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Poly:
        return Poly(i * c for i, c in enumerate(self._coeffs) if i)

    def __repr__(self) -> str:
        return f"Poly({tuple(self._coeffs)!r})"

    def __str__(self) -> str:
        return render(self)


def _coerce(value: object) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly((value,))
    return NotImplemented


ZERO = Poly()
ONE = Poly((1,))
X = Poly((0, 1))


def binomial(n: int, r: int) -> int:
    """Binomial coefficient C(n, r); zero whenever r < 0 or r > n."""
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if r < 0 or r > n:
        return 0
    return comb(n, r)


def _format_coeff(c: Fraction, latex: bool) -> str:
    if c.denominator == 1:
        return f"{c.numerator:,}" if latex else str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def render(poly: Poly, var: str = "p", latex: bool = False) -> str:
    """Human-readable form, ascending powers with explicit signs.

    ``render(Poly((1, -2, 5, -4, 1)))`` gives ``"1 - 2p + 5p^2 - 4p^3 + p^4"``.
    LaTeX mode braces exponents and adds thousands separators.
    """
    if poly.is_zero():
        return "0"
    parts: list[str] = []
    for power, c in enumerate(poly.coeffs):
        if c == 0:
            continue
        mag = _format_coeff(abs(c), latex)
        if power == 0:
            term = mag
        else:
            head = "" if abs(c) == 1 else mag
            if power == 1:
                term = f"{head}{var}"
            elif latex:
                term = f"{head}{var}^{{{power}}}"
            else:
                term = f"{head}{var}^{power}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)
