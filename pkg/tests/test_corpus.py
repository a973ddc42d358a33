import json
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from prelam import corpus
from prelam.circle import Chord
from prelam.errors import DomainError, NotApplicable, NotShellStar
from prelam.lamination import to_json, validate
from prelam.leafspace import build_leaf_space, shell_members
from prelam.planar import isomorphic
from prelam.properties import check_no_bad_accumulation, classify


def passes(al, delta=None):
    eps = al.resolution
    rep = classify(al, eps, eps if delta is None else delta)
    assert rep.passed, rep.to_json()


def test_prong_examples():
    al = corpus.gen_prong(3)
    assert {x for c in al.stars[0].polygon for x in c.endpoints()} == {0, F(1, 3), F(2, 3)}
    passes(al)
    with pytest.raises(DomainError):
        corpus.gen_prong(2)
    al = corpus.gen_prong(4, F(1, 16))
    assert len(al.stars[0].polygon) == 4
    p = build_leaf_space(al)
    assert [len(c.points) for c in p.cyclics] == [4]


def test_shell_family_examples():
    p = build_leaf_space(corpus.gen_shell_family(2))
    assert [len(s.branches) for s in p.switches] == [2]
    al = corpus.gen_shell_family(3)
    passes(al)
    b = al.shells[0].boundary
    assert list(b) == sorted(b, key=al.shells[0].first_endpoint_key)
    assert shell_members(al, 0) == [f"L{al.leaves.index(c)}" for c in b]
    al = corpus.gen_shell_family(2, F(1, 32))
    assert check_no_bad_accumulation(al, F(1, 8)).passed


def test_regular_two_completions():
    raw, first, second = corpus.gen_regular_two_completions()
    passes(first)
    passes(second)
    assert set(raw.leaves) <= set(first.leaves) and set(raw.leaves) <= set(second.leaves)
    assert isomorphic(build_leaf_space(first), build_leaf_space(second)) is None
    with pytest.raises(DomainError):
        corpus.gen_regular_two_completions(F(1, 4))


def test_trivial_passes():
    passes(corpus.gen_trivial())


@pytest.mark.parametrize("args", [("prong", 0, F(1, 16), 2, 2), ("shell-family", 0, F(1, 16), 3, 1),
                                  ("prong", 0, F(1, 4), 3, 2), ("prong", 0, F(0), 3, 2),
                                  ("nope", 0, F(1, 16), 3, 2)])
def test_corpus_spec_errors(args):
    with pytest.raises(DomainError):
        corpus.CorpusSpec(*args)


def test_generators_are_deterministic():
    makers = [lambda: corpus.gen_prong(5, F(1, 32), 3),
              lambda: corpus.gen_shell_family(4, F(1, 32), 3),
              lambda: corpus.gen_trivial(F(1, 32), 3),
              lambda: corpus.gen_random(11, F(1, 64))[0],
              lambda: corpus.gen_random(12, F(1, 64), raw=True)[0]]
    for mk in makers:
        assert json.dumps(to_json(mk()), sort_keys=True) == json.dumps(to_json(mk()), sort_keys=True)


@given(st.integers(0, 10_000))
def test_random_instances_pass(seed):
    al, meta = corpus.gen_random(seed, F(1, 64), max_switches=12)
    validate(al)
    passes(al)
    assert meta.switches <= 12


# ---------------------------------------------------------------- mutators

def test_share_star_edge_example():
    al = corpus.mutate(corpus.gen_prong(3), "share-star-edge")
    rep = classify(al, al.resolution, al.resolution)
    assert rep.failing() == ["star-uniqueness"]


def test_shrink_root_example():
    al = corpus.gen_shell_family(2)
    m = corpus.mutate(al, "shrink-root", delta=al.resolution)
    rep = classify(m, al.resolution, al.resolution)
    assert rep.failing() == ["no-bad-accumulation"]


def test_drop_annotation_example():
    m = corpus.mutate(corpus.gen_shell_family(2), "drop-annotation")
    with pytest.raises(NotShellStar):
        build_leaf_space(m)
    with pytest.raises(NotApplicable):
        corpus.mutate(corpus.gen_prong(3), "drop-annotation")


def test_break_order_example():
    al = corpus.gen_shell_family(3)
    m = corpus.mutate(al, "break-order")
    assert len(m.leaves) == len(al.leaves) + 1
    assert classify(m, al.resolution, al.resolution).failing() == ["few-common-ends"]


def test_unknown_mutation():
    with pytest.raises(NotApplicable):
        corpus.mutate(corpus.gen_prong(3), "swap")


@pytest.mark.parametrize("kind", sorted(corpus.MUTATIONS))
def test_mutants_fail_only_their_target(kind):
    target = corpus.MUTATIONS[kind]
    n = 0
    for seed in range(60):
        al, _ = corpus.gen_random(seed, F(1, 64), max_switches=10)
        try:
            m = corpus.mutate(al, kind, delta=al.resolution)
        except NotApplicable:
            continue
        validate(m)
        assert classify(m, al.resolution, al.resolution).failing() == [target], seed
        n += 1
    assert n >= 10


def test_raw_random_has_virtual_chords():
    raw, _ = corpus.gen_random(3, F(1, 64), raw=True)
    assert raw.virtual
    assert all(isinstance(c, Chord) for c in raw.virtual)
