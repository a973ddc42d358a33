from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from prelam import corpus
from prelam.circle import Chord, separates
from prelam.completion import complete, interval_along, raw_form
from prelam.errors import EmptyInterval, EndpointCollision, PreconditionViolated
from prelam.lamination import make, validate
from prelam.properties import classify


def C(a, b):
    return Chord(F(a), F(b))


def test_largest_virtual_becomes_root():
    big, small = C(0, F(1, 3)), C(F(1, 2), F(7, 10))
    out = complete(make([], virtual=[big, small]))
    assert [s.root for s in out.shells] == [big]
    assert small in out.leaves and big not in out.leaves
    assert out.shells[0].boundary == (small,)


def test_single_virtual_component():
    leaf, v = C(F(1, 2), F(7, 10)), C(0, F(1, 3))
    out = complete(make([leaf], virtual=[v]))
    assert len(out.shells) == 1 and out.shells[0].root == v
    assert set(out.leaves) == {leaf}


def test_tie_broken_by_smallest_endpoints():
    a, b = C(F(1, 10), F(3, 10)), C(F(1, 2), F(7, 10))
    out = complete(make([], virtual=[b, a]))
    assert out.shells[0].root == a


def test_all_leaf_region_is_rejected():
    raw = make([C(0, F(1, 3)), C(F(1, 2), F(7, 10))], virtual=[])
    with pytest.raises(PreconditionViolated) as e:
        complete(raw)
    assert "region" in e.value.witness


def test_regular_raw_completes_and_classifies():
    raw, first, second = corpus.gen_regular_two_completions()
    assert complete(raw) == first
    for out in (first, second):
        assert classify(out, raw.resolution, raw.resolution).passed
        assert set(raw.leaves) <= set(out.leaves)


@given(st.integers(0, 200))
def test_complete_is_idempotent_on_raw_forms(seed):
    al, _ = corpus.gen_random(seed, F(1, 32), max_switches=8)
    again = complete(raw_form(al))
    assert set(again.leaves) == set(al.leaves)
    assert {(s.root, s.boundary) for s in again.shells} == \
        {(s.root, s.boundary) for s in al.shells}


@given(st.integers(0, 200))
def test_random_raw_completion_passes(seed):
    raw, _ = corpus.gen_random(seed, F(1, 32), max_switches=8, raw=True)
    out = complete(raw)
    validate(out)
    assert classify(out, F(1, 32), F(1, 32)).passed


# ---------------------------------------------------------------- intervals

CHAIN = [C(0, F(1, 2)), C(F(1, 8), F(3, 8)), C(F(3, 16), F(5, 16))]


def test_interval_along_from_t_a():
    al = make(CHAIN)
    t = C(F(1, 4), F(3, 4))
    # Traversal starts at 1/4, inside the innermost leaf.
    assert interval_along(al, t) == CHAIN[::-1]


def test_interval_along_outermost_first_from_the_other_end():
    al = make(CHAIN)
    t = C(F(1, 4), F(3, 4))
    assert interval_along(al, t, start=F(3, 4)) == CHAIN


def test_interval_singleton_and_empty():
    al = make(CHAIN)
    assert interval_along(al, C(F(3, 8) + F(1, 100), F(3, 4))) == [CHAIN[0]]
    with pytest.raises(EmptyInterval):
        interval_along(al, C(F(5, 8), F(3, 4)))
    with pytest.raises(EndpointCollision):
        interval_along(al, C(0, F(3, 4)))


@given(st.integers(0, 100), st.integers(1, 500))
def test_interval_is_totally_ordered_by_separation(seed, k):
    al = corpus.gen_trivial(F(1, 16), seed) if seed % 2 else corpus.gen_shell_family(3)
    t = C(F(2 * k + 1, 1002), F(1, 2) + F(2 * k + 1, 1002 * 3))
    ends = {x for c in al.leaves for x in c.endpoints()}
    if t.a in ends or t.b in ends:
        return
    try:
        seq = interval_along(al, t)
    except EmptyInterval:
        return
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            for k2 in range(j + 1, len(seq)):
                mid = seq[j]
                # mid separates an endpoint of the first from one of the last.
                x = next(p for p in seq[i].endpoints() if not mid.has_endpoint(p))
                y = next(p for p in seq[k2].endpoints() if not mid.has_endpoint(p))
                assert separates(mid, x, y)
