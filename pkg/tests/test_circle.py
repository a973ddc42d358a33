import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import cross_oracle
from prelam.circle import (Arc, Chord, chords_cross, cyclic_order, minor_arc_gap, point,
                           separates)
from prelam.errors import EndpointCollision
from strategies import chords, points, rotations


def C(a, b):
    return Chord(F(a), F(b))


def test_cyclic_order_examples():
    assert cyclic_order(F(0), F(1, 3), F(2, 3)) == 1
    assert cyclic_order(F(0), F(2, 3), F(1, 3)) == -1
    assert cyclic_order(F(0), F(0), F(1, 2)) == 0


def test_chords_cross_examples():
    assert chords_cross(C(0, F(1, 2)), C(F(1, 4), F(3, 4)))
    assert not chords_cross(C(0, F(1, 4)), C(F(1, 2), F(3, 4)))
    assert not chords_cross(C(0, F(1, 2)), C(0, F(1, 4)))


def test_separates_examples():
    c = C(0, F(1, 2))
    assert separates(c, F(1, 4), F(3, 4))
    assert not separates(c, F(1, 8), F(1, 4))
    with pytest.raises(EndpointCollision):
        separates(c, F(0), F(1, 4))


def test_minor_arc_gap_examples():
    assert minor_arc_gap(C(0, F(1, 2))) == F(1, 2)
    assert minor_arc_gap(C(0, F(1, 10))) == F(1, 10)
    assert minor_arc_gap(C(F(9, 10), F(1, 10))) == F(1, 5)


def test_chord_normalizes_and_is_unordered():
    assert C(F(3, 4), F(1, 4)) == C(F(1, 4), F(3, 4))
    assert C(F(5, 4), F(1, 2)) == C(F(1, 4), F(1, 2))
    assert hash(C(F(3, 4), F(1, 4))) == hash(C(F(1, 4), F(3, 4)))
    with pytest.raises(ValueError):
        C(F(1, 3), F(4, 3))


def test_point_and_arc():
    assert point(F(7, 3)) == F(1, 3)
    assert point("-1/4") == F(3, 4)
    a = Arc(F(3, 4), F(1, 4))
    assert a.length == F(1, 2)
    assert a.contains(F(0)) and not a.contains(F(1, 2)) and not a.contains(F(3, 4))
    assert Arc(F(0), F(0)).length == 1


def test_json_round_trip():
    c = C(F(1, 3), F(5, 7))
    assert Chord.from_json(c.to_json()) == c
    assert c.to_json() == ["1/3", "5/7"]


@given(points, points, points)
def test_cyclic_order_symmetries(a, b, c):
    s = cyclic_order(a, b, c)
    assert cyclic_order(b, c, a) == s == cyclic_order(c, a, b)
    assert cyclic_order(b, a, c) == -s
    assert cyclic_order(a, c, b) == -s


@given(chords(), chords())
def test_crossing_matches_interleaving_oracle(c1, c2):
    assert chords_cross(c1, c2) == chords_cross(c2, c1)
    assert chords_cross(c1, c2) == cross_oracle((c1.a, c1.b), (c2.a, c2.b))


@given(chords(), rotations)
def test_gap_rotation_invariant(c, t):
    assert minor_arc_gap(c.rotate(t)) == minor_arc_gap(c)
    assert 0 < minor_arc_gap(c) <= F(1, 2)


def test_crossing_small_grid_exhaustive():
    pts = [F(i, 8) for i in range(8)]
    cs = [Chord(a, b) for i, a in enumerate(pts) for b in pts[i + 1:]]
    for c1 in cs:
        for c2 in cs:
            assert chords_cross(c1, c2) == cross_oracle((c1.a, c1.b), (c2.a, c2.b))


def test_separates_matches_brute_force():
    rng = random.Random(5)
    for _ in range(500):
        a, b, p, q = (F(rng.randrange(60), 60) for _ in range(4))
        if len({a, b, p, q}) < 4:
            continue
        c = Chord(a, b)
        inside = [c.a < x < c.b for x in (p, q)]
        assert separates(c, p, q) == (inside[0] != inside[1])


@given(st.integers(1, 50), st.integers(1, 50))
def test_of_accepts_integers_and_strings(n, d):
    x = F(n % d, d)
    if x != F(1, 2):
        assert Chord.of(str(x), "1/2") == Chord(x, F(1, 2))
