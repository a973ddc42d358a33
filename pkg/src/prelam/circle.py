"""Exact points, arcs and chords on the circle R/Z.

Angles are `Fraction`s in [0, 1), measured in full turns, counterclockwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import EndpointCollision

ZERO = Fraction(0)
ONE = Fraction(1)


def point(x) -> Fraction:
    """Normalize a number or "p/q" string to a circle point in [0, 1)."""
    f = x if isinstance(x, Fraction) else Fraction(x)
    return f - (f.numerator // f.denominator)


# A circle point is just a reduced Fraction in [0, 1).
CirclePoint = Fraction


def fmt(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def ccw(a: Fraction, b: Fraction) -> Fraction:
    """Counterclockwise distance from a to b, in [0, 1)."""
    d = b - a
    return d + 1 if d < 0 else d


def cyclic_order(a: Fraction, b: Fraction, c: Fraction) -> int:
    if a == b or b == c or a == c:
        return 0
    return 1 if ccw(a, b) < ccw(a, c) else -1


def strictly_between(a: Fraction, x: Fraction, b: Fraction) -> bool:
    """x lies on the open ccw arc from a to b."""
    return cyclic_order(a, x, b) == 1


@dataclass(frozen=True, order=True)
class Chord:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        a, b = point(self.a), point(self.b)
        if a == b:
            raise ValueError("degenerate chord")
        if b < a:
            a, b = b, a
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        # Chords are dictionary keys everywhere and Fraction hashing is slow.
        object.__setattr__(self, "_hash", hash((a, b)))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if other.__class__ is not Chord:
            return NotImplemented
        return self._hash == other._hash and self.a == other.a and self.b == other.b

    @classmethod
    def of(cls, a, b) -> "Chord":
        return cls(Fraction(a), Fraction(b))

    def endpoints(self):
        return (self.a, self.b)

    def has_endpoint(self, x: Fraction) -> bool:
        return x == self.a or x == self.b

    def other(self, x: Fraction) -> Fraction:
        if x == self.a:
            return self.b
        if x == self.b:
            return self.a
        raise EndpointCollision(f"{fmt(x)} is not an endpoint of {self}")

    def rotate(self, t) -> "Chord":
        t = Fraction(t)
        return Chord(point(self.a + t), point(self.b + t))

    def to_json(self):
        return [fmt(self.a), fmt(self.b)]

    @classmethod
    def from_json(cls, pair) -> "Chord":
        a, b = pair
        return cls(Fraction(a), Fraction(b))

    def __str__(self):
        return f"({fmt(self.a)},{fmt(self.b)})"


@dataclass(frozen=True)
class Arc:
    """Open arc traversed counterclockwise from start to end."""

    start: Fraction
    end: Fraction

    def __post_init__(self):
        object.__setattr__(self, "start", point(self.start))
        object.__setattr__(self, "end", point(self.end))

    @classmethod
    def between(cls, start: Fraction, end: Fraction) -> "Arc":
        """Arc between points already normalized to [0, 1)."""
        arc = object.__new__(cls)
        arc.__dict__.update(start=start, end=end)
        return arc

    @property
    def length(self) -> Fraction:
        d = ccw(self.start, self.end)
        return ONE if d == 0 else d

    def contains(self, x: Fraction) -> bool:
        if self.start == self.end:
            return x != self.start
        return strictly_between(self.start, x, self.end)

    def to_json(self):
        return [fmt(self.start), fmt(self.end)]


def chords_cross(c1: Chord, c2: Chord) -> bool:
    # c1.a < c1.b, so c1 splits the circle into (a, b) and its complement.
    ends = {c1.a, c1.b, c2.a, c2.b}
    if len(ends) < 4:
        return False
    return (c1.a < c2.a < c1.b) != (c1.a < c2.b < c1.b)


def separates(c: Chord, p: Fraction, q: Fraction) -> bool:
    p, q = point(p), point(q)
    for x in (p, q):
        if c.has_endpoint(x):
            raise EndpointCollision(f"{fmt(x)} is an endpoint of {c}")
    return (c.a < p < c.b) != (c.a < q < c.b)


def minor_arc_gap(c: Chord) -> Fraction:
    d = c.b - c.a
    return min(d, 1 - d)


def inside(c: Chord, x: Fraction) -> bool:
    """x lies on the open arc (a, b) of c."""
    return c.a < x < c.b
