"""Exact rational probabilities and the mixing-weight combinators.

Probabilities are `fractions.Fraction` values clamped to [0, 1], wrapped in
an immutable `Prob`.  All arithmetic is exact; there is no tolerance
parameter anywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class ProbError(ValueError):
    """Raised for out-of-range or malformed probabilities."""


ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True, order=True)
class Prob:
    """A probability: an exact rational in [0, 1]."""

    value: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.value, Fraction):
            object.__setattr__(self, "value", Fraction(self.value))
        if self.value < 0 or self.value > 1:
            raise ProbError(f"probability out of range: {self.value}")

    @property
    def complement(self) -> "Prob":
        return Prob(ONE - self.value)

    def is_zero(self) -> bool:
        return self.value == 0

    def is_one(self) -> bool:
        return self.value == 1

    def __str__(self) -> str:
        return render_rational(self.value)


def prob_make(num: int, den: int) -> Prob:
    """Build `num/den` in lowest terms; reject den == 0 and values outside [0, 1]."""
    if den == 0:
        raise ProbError("zero denominator")
    return Prob(Fraction(num, den))


def prob_from_fraction(value: Fraction) -> Prob:
    return Prob(value)


def complement(p: Prob) -> Prob:
    return p.complement


def s_of(p: Prob, q: Prob) -> Prob:
    """The combined weight 1 - (1-p)(1-q); always lands in [0, 1]."""
    return Prob(ONE - (ONE - p.value) * (ONE - q.value))


def r_of(p: Prob, q: Prob) -> Prob:
    """The left-mixing weight p / s_of(p, q).

    Total by convention: when s_of(p, q) = 0 (only at p = q = 0) the result
    is 0; any value satisfies the quasi-associativity side conditions there.
    """
    s = s_of(p, q).value
    if s == 0:
        return Prob(ZERO)
    return Prob(p.value / s)


def render_rational(x: Fraction) -> str:
    """`a/b` in lowest terms, `a` alone when the denominator is 1."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse `a/b`, a bare integer, or a finite decimal literal, exactly."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ProbError(f"cannot parse rational: {text!r}") from exc


def parse_prob(text: str) -> Prob:
    return Prob(parse_rational(text))
