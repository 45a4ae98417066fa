"""Exact scalar kernel: arbitrary-precision rationals, rising factorials,
binomial coefficients, and terminating hypergeometric sums at unit argument.

Every scalar in this package is a :class:`fractions.Fraction`: always reduced,
positive denominator, and arithmetic never rounds.  The wire format used by
all JSON output is the decimal string ``"p/q"`` with ``/q`` omitted when the
denominator is one (``"-3/4"``, ``"5"``).
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

_RATIONAL_PATTERN = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


class RationalFormatError(ValueError):
    """A string does not parse as a ``p/q`` rational."""


class SeriesDivisionError(ZeroDivisionError):
    """A denominator Pochhammer factor vanished before the series terminated."""

    def __init__(self, term_index: int, parameter: Fraction):
        self.term_index = term_index
        self.parameter = parameter
        super().__init__(
            f"denominator parameter {format_rational(parameter)} has a zero "
            f"Pochhammer factor at term {term_index} before the series terminates"
        )


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` (sign allowed on p, ``/q`` optional).  No decimals."""
    s = text.strip()
    if not _RATIONAL_PATTERN.fullmatch(s):
        raise RationalFormatError(f"not a p/q rational: {text!r}")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise RationalFormatError(f"zero denominator: {text!r}") from None


def format_rational(value: Fraction | int) -> str:
    """Serialize to ``"p/q"``, omitting ``/q`` when the denominator is one."""
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def pochhammer(x: Fraction | int, i: int) -> Fraction:
    """Rising factorial (x)_i = x (x+1) ... (x+i-1); the empty product is 1."""
    if i < 0:
        raise ValueError(f"pochhammer order must be a natural number, got {i}")
    x = Fraction(x)
    acc = Fraction(1)
    for step in range(i):
        acc *= x + step
    return acc


def binomial(n: int, i: int) -> Fraction:
    """Binomial coefficient as an exact rational.  Requires 0 <= i <= n."""
    if n < 0 or i < 0 or i > n:
        raise ValueError(f"binomial({n}, {i}) needs 0 <= i <= n")
    return Fraction(math.comb(n, i))


def _is_nonpositive_integer(x: Fraction) -> bool:
    return x.denominator == 1 and x <= 0


def hypergeom_terminating(
    numerators: Iterable[Fraction | int],
    denominators: Iterable[Fraction | int],
    terms: int,
) -> Fraction:
    """Sum of a hypergeometric series at unit argument, truncated at `terms`.

    Computes sum_{h=0}^{terms} [prod (a_k)_h / prod (b_k)_h] / h!, stopping
    early as soon as a numerator Pochhammer factor vanishes.  The zero test on
    the numerator happens before the denominator factor at the same index is
    touched, so instances where both vanish at one index are well defined by
    truncation.  Some numerator parameter must be a non-positive integer -t
    with t <= terms, so the truncated sum is the whole series.
    """
    nums: Sequence[Fraction] = [Fraction(a) for a in numerators]
    dens: Sequence[Fraction] = [Fraction(b) for b in denominators]
    if terms < 0:
        raise ValueError(f"terms must be a natural number, got {terms}")
    if not any(_is_nonpositive_integer(a) and -a <= terms for a in nums):
        raise ValueError(
            "series is not guaranteed to terminate within "
            f"{terms} terms: no numerator parameter in {{-{terms}, ..., 0}}"
        )
    total = Fraction(1)
    term = Fraction(1)
    for h in range(terms):
        top = Fraction(1)
        for a in nums:
            top *= a + h
        if top == 0:
            break
        bottom = Fraction(h + 1)
        for b in dens:
            bottom *= b + h
        if bottom == 0:
            offender = next(b for b in dens if b + h == 0)
            raise SeriesDivisionError(h + 1, offender)
        term = term * top / bottom
        total += term
    return total
