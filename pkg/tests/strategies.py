"""Hypothesis strategies for circle data."""

from fractions import Fraction

from hypothesis import strategies as st

from prelam.circle import Chord

points = st.builds(lambda n, d: Fraction(n % d, d), st.integers(0, 10 ** 4), st.integers(1, 97))


@st.composite
def chords(draw):
    a = draw(points)
    b = draw(points.filter(lambda x: x != a))
    return Chord(a, b)


@st.composite
def noncrossing(draw, max_chords=12, grid=None):
    """A non-crossing system by random recursive pairing of distinct grid points."""
    n = draw(st.integers(0, max_chords))
    den = grid or draw(st.integers(2 * n + 1, 4 * n + 12))
    idx = sorted(draw(st.lists(st.integers(0, den - 1), min_size=2 * n, max_size=2 * n,
                               unique=True)))
    out = []

    def pair(seg):
        while seg:
            k = draw(st.integers(0, len(seg) // 2 - 1)) * 2 + 1
            out.append(Chord(Fraction(seg[0], den), Fraction(seg[k], den)))
            pair(seg[1:k])
            seg = seg[k + 1:]

    pair(idx)
    return out


rotations = st.builds(lambda n, d: Fraction(n, d), st.integers(0, 96), st.integers(1, 97))
