"""Rational intervals, with and without open endpoints."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class ExtensionInterval:
    """Closed interval [lower, upper] of coherent values for a further event.

    Always a sub-interval of [0, 1]; endpoints are exact rationals.
    """

    lower: Fraction
    upper: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lower", Fraction(self.lower))
        object.__setattr__(self, "upper", Fraction(self.upper))
        if not 0 <= self.lower <= self.upper <= 1:
            raise ValueError(f"not a sub-interval of [0, 1]: {self.lower}..{self.upper}")

    def __iter__(self):
        yield self.lower
        yield self.upper

    def __str__(self):
        return f"[{self.lower}, {self.upper}]"


@dataclass(frozen=True)
class OpenInterval:
    """Nonempty rational interval whose endpoints may be open.

    A degenerate interval (lower == upper) must have both endpoints closed,
    so every instance denotes a nonempty set.
    """

    lower: Fraction
    upper: Fraction
    lower_open: bool = False
    upper_open: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lower", Fraction(self.lower))
        object.__setattr__(self, "upper", Fraction(self.upper))
        if self.lower > self.upper:
            raise ValueError(f"empty interval: {self.lower} > {self.upper}")
        if self.lower == self.upper and (self.lower_open or self.upper_open):
            raise ValueError("degenerate interval must be closed at both ends")

    @classmethod
    def point(cls, value) -> "OpenInterval":
        return cls(Fraction(value), Fraction(value))

    @classmethod
    def closed(cls, lower, upper) -> "OpenInterval":
        return cls(Fraction(lower), Fraction(upper))

    @property
    def is_point(self) -> bool:
        return self.lower == self.upper

    def __contains__(self, value) -> bool:
        if value < self.lower or value > self.upper:
            return False
        if value == self.lower and self.lower_open:
            return False
        if value == self.upper and self.upper_open:
            return False
        return True

    def issubset(self, other: "OpenInterval") -> bool:
        if self.lower < other.lower or self.upper > other.upper:
            return False
        if self.lower == other.lower and other.lower_open and not self.lower_open:
            return False
        if self.upper == other.upper and other.upper_open and not self.upper_open:
            return False
        return True

    def closure(self) -> "OpenInterval":
        return OpenInterval(self.lower, self.upper)

    def __str__(self):
        if self.is_point:
            return "{%s}" % (self.lower,)
        left = "(" if self.lower_open else "["
        right = ")" if self.upper_open else "]"
        return f"{left}{self.lower}, {self.upper}{right}"
