from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from prelam import corpus
from prelam.errors import BadBounds, DomainError
from prelam.leafspace import build_leaf_space
from prelam.planar import Edge, PlanarPresentation
from prelam.universal import (SlotSet, UniversalModel, check_maximal_order, dec,
                              dyadic_generator, embed, verify_embedding)


# ---------------------------------------------------------------- slots

def test_slot_policy():
    s = SlotSet()
    assert s.insert_between() == F(1, 2)
    s = SlotSet([F(1, 4), F(1, 2)])
    assert s.insert_between(F(1, 4), F(1, 2)) == F(3, 8)
    with pytest.raises(BadBounds):
        s.insert_between(F(1, 4), F(1, 4))
    assert s.insert_between(None, F(1, 4)) == F(-3, 4)
    assert s.insert_between(F(1, 2), None) == F(3, 2)


@given(st.lists(st.tuples(st.integers(0, 30), st.integers(0, 30)), max_size=40))
def test_insertions_keep_order(ops):
    s = SlotSet()
    for i, j in ops:
        before = list(s.labels)
        n = len(before)
        lo = before[i % n] if n and i % 3 else None
        hi = before[j % n] if n and j % 3 else None
        if lo is not None and hi is not None and not lo < hi:
            lo, hi = (hi, lo) if hi < lo else (lo, None)
        x = s.insert_between(lo, hi)
        assert len(s) == n + 1
        assert [y for y in s.labels if y != x] == before
        assert (lo is None or lo < x) and (hi is None or x < hi)


def test_decimal_addresses():
    assert dec(F(3, 8)) == "0.375"
    assert dec(F(-3, 4)) == "-0.75"
    assert dec(F(2)) == "2"
    with pytest.raises(DomainError):
        dec(F(1, 3))


def test_model_insert_between_members():
    m = UniversalModel()
    y = m.add_point("/U", F(1, 2))
    b = m.branching_at(y, "+")
    assert m.branching_at(y, "+") == b
    z = m.insert_between(b, 0, None)
    w = m.insert_between(b, y, z)
    assert m.label_in(b, w) == F(1, 2)
    with pytest.raises(BadBounds):
        m.insert_between(b, z, y)


# ---------------------------------------------------------------- embedding

def check(p):
    m = UniversalModel()
    emb = embed(p, m)
    v = verify_embedding(p, m, emb)
    assert v.passed, v.witnesses
    return m, emb


def test_single_line():
    p = PlanarPresentation(("a", "b"), (Edge("e0", (None, None), ("a", "b")),))
    m, emb = check(p)
    assert len(emb.charts) == 1 or len(emb.edges) == 1
    assert {m.line_of(emb.points[x])[0] for x in "ab"} == {"/U"}


def test_switch_with_two_points():
    p = build_leaf_space(corpus.gen_shell_family(2))
    m, emb = check(p)
    s = p.switches[0]
    b = emb.switches[s.id]
    labs = [m.label_in(b, emb.points[x]) for x in s.members]
    assert labs == sorted(labs)


def test_prong_uses_a_matching_gadget():
    for k in (3, 4, 5):
        p = build_leaf_space(corpus.gen_prong(k))
        m, emb = check(p)
        g = m.gadgets[emb.cyclics[0]]
        assert g.k == k and g.side == p.cyclics[0].side


def test_swapped_points_give_an_order_witness():
    p = build_leaf_space(corpus.gen_shell_family(3))
    m, emb = check(p)
    x, y = p.switches[0].members[:2]
    bad = emb.copy()
    bad.points[x], bad.points[y] = emb.points[y], emb.points[x]
    v = verify_embedding(p, m, bad)
    assert not v.passed
    assert any(w["check"] == "order" for w in v.witnesses)


def test_empty_presentation():
    p = PlanarPresentation()
    m = UniversalModel()
    assert verify_embedding(p, m, embed(p, m)).passed


@given(st.integers(0, 10_000))
def test_random_presentations_embed(seed):
    al, _ = corpus.gen_random(seed, F(1, 64), max_switches=12)
    check(build_leaf_space(al))


@given(st.integers(0, 10_000), st.integers(1, 6))
def test_extension_agrees_with_partial_map(seed, limit):
    al, _ = corpus.gen_random(seed, F(1, 64), max_switches=12)
    p = build_leaf_space(al)
    m = UniversalModel()
    part = embed(p, m, limit=limit)
    full = embed(p, m, seed=part)
    assert verify_embedding(p, m, full).passed
    for x, a in part.points.items():
        assert full.points[x] == a


def test_log_replays_to_the_same_model():
    p = build_leaf_space(corpus.gen_random(7, F(1, 64))[0])
    m, emb = check(p)
    r = UniversalModel.replay(m.dumps())
    assert r.counts() == m.counts()
    assert r.dumps() == m.dumps()
    assert verify_embedding(p, r, emb).passed


# ---------------------------------------------------------------- maximal order

def test_dyadic_generator_is_maximally_ordered():
    assert check_maximal_order(dyadic_generator, 5).passed


def test_fixed_list_has_a_maximum():
    v = check_maximal_order(lambda prev: [0, 1, 2], 3)
    assert not v.passed
    assert any(w["reason"] == "has a maximum" for w in v.witnesses)


def test_naturals_have_a_minimum():
    def nat(prev):
        return list(range(len(prev or ()) + 1))

    v = check_maximal_order(nat, 4)
    assert any(w["reason"] == "has a minimum" for w in v.witnesses)


def test_rounds_must_be_positive():
    with pytest.raises(DomainError):
        check_maximal_order(dyadic_generator, 0)
