import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxcell.coxeter import (
    INF,
    CoxeterGraph,
    FiniteCoxeterGroup,
    alternating_word,
    braid_closure,
    bruhat_leq,
    descents,
    dihedral_graph,
    enumerate_elements,
    multiply,
    normal_form,
    subword_leq,
    type_a,
    type_d,
    unique_reduced_expression,
    validate_graph,
)
from coxcell.errors import CapExceededError, GraphError, InfiniteGroupError, NotReducedError

from corpus import a3, triangle
from oracles import all_reduced_words, bfs_lengths, dihedral_model, evaluate, subword_oracle, symmetric_model


def test_validate_graph_examples():
    g = validate_graph({"generators": ["r", "t"], "edges": [{"a": "r", "b": "t", "m": 3}]})
    assert g.simply_laced and g.cycle_count == 0 and g.connected
    assert triangle().cycle_count == 1
    with pytest.raises(GraphError):
        validate_graph({"generators": ["r", "t"], "edges": [{"a": "r", "b": "t", "m": 1}]})
    with pytest.raises(GraphError):
        validate_graph({"generators": ["r"], "edges": [{"a": "r", "b": "x"}]})
    with pytest.raises(GraphError):
        validate_graph({"generators": ["r", "r"]})


def test_graph_json_round_trip():
    g = CoxeterGraph(["a", "b", "c"], {("a", "b"): 4, ("b", "c"): "inf"})
    assert g.m("b", "c") == INF
    assert CoxeterGraph.from_json(g.to_json()) == g
    assert not g.simply_laced


def test_braid_closure_examples():
    g = dihedral_graph(3)
    assert braid_closure(g, "rtr") == {("r", "t", "r"), ("t", "r", "t")}
    assert braid_closure(g, "r") == {("r",)}
    assert braid_closure(a3(), ["s1", "s3"]) == {("s1", "s3"), ("s3", "s1")}
    with pytest.raises(NotReducedError):
        braid_closure(g, "rr")


def test_normal_form_examples():
    g = dihedral_graph(3)
    assert normal_form(g, "rr").is_identity
    assert normal_form(g, "trt").word == ("r", "t", "r")
    w = normal_form(g, "rtrt")
    assert w.word == ("t", "r") and w.length == 2


def test_multiply_examples():
    g = dihedral_graph(3)
    w = g("rt")
    assert multiply(g.identity(), w) == w
    assert multiply(g("r"), g("r")).is_identity
    assert multiply(g("rt"), g("tr")).is_identity
    with pytest.raises(CapExceededError):
        multiply(g("rt"), g("r"), cap=2)


def test_descents_examples():
    g = dihedral_graph(3)
    assert descents(g.identity()) == (frozenset(), frozenset())
    assert descents(g("rtr"))[0] == {"r", "t"}
    assert descents(g("rt")) == ({"r"}, {"t"})


def test_bruhat_examples():
    g = dihedral_graph(3)
    for w in FiniteCoxeterGroup.from_graph(g):
        assert bruhat_leq(g.identity(), w)
    assert bruhat_leq(g("r"), g("tr"))
    assert not bruhat_leq(g("rt"), g("tr"))


@pytest.mark.parametrize("m", range(2, 8))
def test_bruhat_dihedral_is_length_order(m):
    G = FiniteCoxeterGroup.from_graph(dihedral_graph(m))
    for y in G:
        for w in G:
            assert bruhat_leq(y, w) == (y.length < w.length or y == w)


def _check_bruhat_against_subwords(G, model):
    words = {w: all_reduced_words(model, evaluate(model, w.word), w.length) for w in G}
    for w in G:
        assert words[w] == set(braid_closure(G.graph, w.word))
    for y in G:
        for w in G:
            expected = subword_oracle(model, y.word, w.word)
            assert bruhat_leq(y, w) == expected
            assert subword_leq(y, w) == expected


@pytest.mark.parametrize("m", range(2, 6))
def test_bruhat_vs_brute_force_dihedral(m):
    _check_bruhat_against_subwords(FiniteCoxeterGroup.from_graph(dihedral_graph(m)), dihedral_model(m))


def test_bruhat_vs_brute_force_a3():
    _check_bruhat_against_subwords(FiniteCoxeterGroup.from_graph(a3()), symmetric_model(3))


def test_bruhat_ideals_match_pairwise():
    G = FiniteCoxeterGroup.from_graph(type_d(4))
    ideals = G.bruhat_ideals()
    rng = random.Random(4)
    for _ in range(400):
        i, j = rng.randrange(len(G)), rng.randrange(len(G))
        assert (i in ideals[j]) == bruhat_leq(G.elements[i], G.elements[j])


def test_enumerate_examples():
    assert [len(l) for l in enumerate_elements(dihedral_graph(2))] == [1, 2, 1]
    assert [len(l) for l in enumerate_elements(dihedral_graph(3))] == [1, 2, 2, 1]
    assert len(FiniteCoxeterGroup.from_graph(a3())) == 24
    assert len(FiniteCoxeterGroup.from_graph(type_d(4))) == 192


@pytest.mark.parametrize("model,graph", [(symmetric_model(3), type_a(3)), (dihedral_model(5), dihedral_graph(5))])
def test_enumeration_matches_model(model, graph):
    dist = bfs_lengths(model)
    levels = enumerate_elements(graph)
    expected = [0] * (max(dist.values()) + 1)
    for d in dist.values():
        expected[d] += 1
    assert [len(l) for l in levels] == expected
    # every canonical word evaluates to a distinct model element of that length
    images = {}
    for level in levels:
        for w in level:
            x = evaluate(model, w.word)
            assert dist[x] == w.length
            images[x] = w
    assert len(images) == len(dist)


def test_infinite_group_detected():
    with pytest.raises(InfiniteGroupError):
        FiniteCoxeterGroup.from_graph(triangle(), max_length=6)
    levels = enumerate_elements(triangle(), cap=4)
    assert len(levels) == 5


def test_unique_reduced_expression_examples():
    g = dihedral_graph(4)
    assert unique_reduced_expression(g("r"))
    assert not unique_reduced_expression(g("rtrt"))
    assert unique_reduced_expression(g.identity())


@pytest.mark.parametrize("m", range(2, 8))
def test_unique_reduced_count_dihedral(m):
    G = FiniteCoxeterGroup.from_graph(dihedral_graph(m))
    assert sum(unique_reduced_expression(w) and not w.is_identity for w in G) == 2 * (m - 1)


@pytest.mark.parametrize("m", range(2, 8))
def test_alternating_word(m):
    g = dihedral_graph(m)
    assert alternating_word(g, "r", "t", 0).is_identity
    assert alternating_word(g, "r", "t", 2).word == ("r", "t")
    assert alternating_word(g, "r", "t", m) == alternating_word(g, "t", "r", m)
    assert alternating_word(g, "r", "t", m) == FiniteCoxeterGroup.from_graph(g).longest
    with pytest.raises(NotReducedError):
        alternating_word(g, "r", "t", m + 1)


graphs = [dihedral_graph(3), dihedral_graph(4), a3()]


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(graphs).flatmap(lambda g: st.tuples(st.just(g), st.lists(st.sampled_from(g.generators), max_size=6))))
def test_normal_form_properties(case):
    g, word = case
    w = normal_form(g, word)
    assert normal_form(g, w.word) == w
    if len(w.word) == len(word):
        assert w.word in braid_closure(g, word)
        assert w.word == min(braid_closure(g, word), key=g.shortlex_key)
    # parity of length is a homomorphism to Z/2
    assert (len(word) - w.length) % 2 == 0


@settings(max_examples=100, deadline=None)
@given(st.lists(st.sampled_from(["s1", "s2", "s3"]), max_size=8), st.lists(st.sampled_from(["s1", "s2", "s3"]), max_size=8))
def test_multiplication_matches_permutations(u, v):
    g = a3()
    model = symmetric_model(3)
    a, b = normal_form(g, u), normal_form(g, v)
    ab = multiply(a, b)
    assert evaluate(model, ab.word) == evaluate(model, list(u) + list(v))
    assert ab.length == bfs_lengths(model)[evaluate(model, ab.word)]
    assert multiply(ab, b.inverse()) == a
