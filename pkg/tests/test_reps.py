import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxcell import linalg as la
from coxcell.coxeter import CoxeterGraph, dihedral_graph, type_a
from coxcell.dihedral import irreducible_kinds
from coxcell.errors import PreconditionError, RelationError, UnsupportedGraphError
from coxcell.reps import (
    MatrixRep,
    a1_criterion,
    check_relations,
    classify_a_value,
    conjugate,
    cwrt_annihilation,
    direct_sum,
    fixed_subspace,
    is_r_rep,
    minus_eigenspace,
    sign_rep,
    trivial_rep,
)
from coxcell.rrep import build_Vx, geometric_rep, RRepSpec

from corpus import a3, dihedral_irreducibles, full_corpus, irrep, random_invertible, triangle


def test_check_relations_examples():
    g = dihedral_graph(3)
    assert check_relations(trivial_rep(g, 3)) is None
    bad = MatrixRep(g, {"r": [[-1]], "t": [[1]]})
    assert check_relations(bad) == "(rt)^3 != 1"
    assert check_relations(irrep(3, "rho:1")) is None
    with pytest.raises(RelationError):
        classify_a_value(bad)


def test_minus_eigenspace():
    rep = irrep(3, "rho:1")
    (v,) = minus_eigenspace(rep, "r")
    assert la.matvec(rep["r"], v) == [-x for x in v]
    assert minus_eigenspace(trivial_rep(dihedral_graph(3)), "r") == []


def test_a1_criterion_examples():
    assert a1_criterion(geometric_rep(a3())) is None
    w = a1_criterion(sign_rep(dihedral_graph(3)))
    assert (w.r, w.t) == ("r", "t") and w.vector == [1]
    s = direct_sum(irrep(3, "rho:1"), irrep(3, "sign"))
    w = a1_criterion(s)
    assert w is not None
    # the witness lies in the sign summand
    assert w.vector[0] == 0 and w.vector[1] == 0 and w.vector[2] != 0


def test_witness_is_sound():
    for _, rep in full_corpus():
        w = a1_criterion(rep)
        if w is not None:
            neg = [-x for x in w.vector]
            assert la.matvec(rep[w.r], w.vector) == neg
            assert la.matvec(rep[w.t], w.vector) == neg
            assert any(w.vector)


def test_cwrt_annihilation_examples():
    assert cwrt_annihilation(trivial_rep(dihedral_graph(4)))
    for m in range(2, 8):
        assert not cwrt_annihilation(sign_rep(dihedral_graph(m)))
    assert cwrt_annihilation(geometric_rep(a3()))


def test_classify_examples():
    assert classify_a_value(trivial_rep(a3())).verdict == "value0"
    assert classify_a_value(geometric_rep(a3())).verdict == "value1"
    report = classify_a_value(sign_rep(dihedral_graph(3)))
    assert report.verdict == "greater_than_1"
    assert report.to_json()["witness"]["pair"] == ["r", "t"]
    with pytest.raises(PreconditionError):
        classify_a_value(MatrixRep(dihedral_graph(3), {"r": [], "t": []}))


def test_infinite_pairs_are_skipped():
    g = CoxeterGraph(["r", "t"], {("r", "t"): "inf"})
    rep = sign_rep(g)
    assert a1_criterion(rep) is None
    assert cwrt_annihilation(rep)
    assert classify_a_value(rep).verdict == "value1"


def test_criterion_equivalence_on_corpus():
    for name, rep in full_corpus():
        assert (a1_criterion(rep) is None) == cwrt_annihilation(rep), name


def test_dihedral_irreducible_verdicts():
    for name, rep in dihedral_irreducibles():
        verdict = classify_a_value(rep).verdict
        kind = name.split(":", 1)[1]
        expected = {"trivial": "value0", "sign": "greater_than_1"}.get(kind, "value1")
        assert verdict == expected, name


def test_is_r_rep_examples():
    assert is_r_rep(irrep(3, "rho:1"))
    check = is_r_rep(trivial_rep(dihedral_graph(3)))
    assert not check and check.failed_condition == 1
    check = is_r_rep(direct_sum(sign_rep(dihedral_graph(3)), sign_rep(dihedral_graph(3))))
    assert not check and check.failed_condition == 2
    with pytest.raises(UnsupportedGraphError):
        is_r_rep(irrep(4, "rho:1"))


def test_is_r_rep_condition_three():
    # two copies of rho(1): spanning, pairwise zero intersections, but 2-dim eigenspaces
    rep = direct_sum(irrep(3, "rho:1"), irrep(3, "rho:1"))
    check = is_r_rep(rep)
    assert not check and check.failed_condition == 3


def test_fixed_subspace_examples():
    assert len(fixed_subspace(trivial_rep(a3(), 3))) == 3
    assert fixed_subspace(irrep(3, "rho:1")) == []
    (u,) = fixed_subspace(build_Vx(RRepSpec(triangle(), 1)))
    assert u[0] == u[1] == u[2] != 0


def test_f_image_stays_in_minus_eigenspace():
    # on an R-representation with an order-3 edge r - t and v in V_r^-: t.v - v lies in V_t^-
    for name, rep in full_corpus():
        g = rep.graph
        if not g.simply_laced or not is_r_rep(rep):
            continue
        for r, t, m in g.edges():
            for a, b in ((r, t), (t, r)):
                (v,) = minus_eigenspace(rep, a)
                w = [p - q for p, q in zip(la.matvec(rep[b], v), v)]
                assert la.matvec(rep[b], w) == [-x for x in w], name
                assert any(w)


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_verdict_is_conjugation_invariant(seed):
    import random

    rng = random.Random(seed)
    m = rng.choice([3, 4, 6])
    kinds = irreducible_kinds(m)
    parts = [rng.choice(kinds) for _ in range(rng.randint(1, 3))]
    rep = direct_sum(*[irrep(m, k) for k in parts])
    conj = conjugate(rep, random_invertible(rep.dim, rep.conductor, rng))
    assert classify_a_value(rep).verdict == classify_a_value(conj).verdict
    assert ("sign" in parts) == (classify_a_value(rep).verdict == "greater_than_1")


def test_json_round_trip():
    for _, rep in full_corpus()[::7]:
        text = json.dumps(rep.to_json())
        back = MatrixRep.from_json(json.loads(text))
        assert back.matrices == rep.matrices
        assert back.conductor == rep.conductor
        assert check_relations(back) is None
        assert json.dumps(back.to_json()) == text


def test_from_json_errors():
    with pytest.raises(ValueError):
        MatrixRep.from_json({"graph": {"generators": ["r"]}, "matrices": {"r": [[1, 0]]}})
    with pytest.raises(ValueError):
        MatrixRep.from_json({"graph": {"generators": ["r"]}, "dim": 2, "matrices": {"r": [["1"]]}})
    with pytest.raises(ValueError):
        MatrixRep.from_json({"matrices": {}})
