from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import bordered_quivers, weighted_quivers
from surfalg.constructions import periodic_envelope, star
from surfalg.errors import EmptyBorder, NotTriangulation, TooShort, UnknownArrow, WeightTooSmall
from surfalg.iso import isomorphic
from surfalg.presentation import (
    Path,
    basis_paths,
    build,
    cartan_matrix,
    cycle_B,
    dimension,
    gabriel_quiver,
    path_A,
    relations_biserial,
    relations_border,
    relations_weighted_triangulation,
)
from surfalg.quiver import Quiver, validate
from surfalg.weighted import WeightedBiserialQuiver
from test_iso import relabelled


def words(p: Path) -> str:
    return " ".join(p.arrows)


def test_cycle_B_eight_vertex(load):
    w = load("eight_vertex")
    assert words(cycle_B(w, "alpha")) == "alpha gamma sigma beta omega delta"
    assert words(cycle_B(w, "beta")) == "beta omega delta alpha gamma sigma"
    assert words(cycle_B(w, "a")) == "a"
    with pytest.raises(UnknownArrow):
        cycle_B(w, "zzz")


def test_cycle_B_power_of_fixed_loop(load):
    w = load("loop_pair_swapped")  # m=2 on alpha, n=3 on beta
    assert words(cycle_B(w, "alpha")) == "alpha alpha"
    assert words(path_A(w, "beta")) == "beta beta"


def test_path_A_markov(load):
    w = load("markov")
    assert words(path_A(w, "alpha1")) == "alpha1 beta2 alpha3 beta1 alpha2"
    A, B = path_A(w, "alpha1"), cycle_B(w, "alpha1")
    assert A.arrows + (w.bq.g_inv["alpha1"],) == B.arrows


def test_path_A_too_short(load):
    w = load("loop_pair_swapped").with_(weights={"alpha": 1, "beta": 2})
    with pytest.raises(TooShort):
        path_A(w, "alpha")


def test_biserial_counts_and_virtual_loops(load):
    s = star(load("loop_pair_fixed"))
    p = relations_biserial(s)
    assert p.virtual_loops == {"eps_alpha", "eps_beta"}
    assert {a.id for a in gabriel_quiver(p).arrows} == set(s.arrow_ids) - {"eps_alpha", "eps_beta"}
    zeros = [r for r in p.relations if r.kind == "zero"]
    binomials = [r for r in p.relations if r.kind == "binomial"]
    assert len(zeros) == len(s.arrow_ids) and len(binomials) == len(s.vertices)


def test_gabriel_keeps_non_virtual_eps(load):
    s = star(load("loop_pair_swapped"))
    p = relations_biserial(s)
    assert p.virtual_loops == frozenset()
    assert gabriel_quiver(p) == s.bq.quiver


def test_border_relations(load):
    w = load("square_border")
    p = relations_border(w)
    text = set(p.text().splitlines())
    assert "rho*rho = 1 * rho*alpha*eta*beta*mu*gamma*xi*sigma" in text
    assert "eta*eta = -1 * eta*beta*mu*gamma*xi*sigma*rho*alpha" in text
    assert "mu*mu = 1/2 * mu*gamma*xi*sigma*rho*alpha*eta*beta" in text
    assert "xi*xi = 3 * xi*sigma*rho*alpha*eta*beta*mu*gamma" in text
    assert "alpha*beta = 0" in text
    zero = w.with_(border={})
    assert set(relations_border(zero).relations) == set(relations_biserial(zero).relations)
    with pytest.raises(EmptyBorder):
        relations_border(load("markov"))


def test_border_over_f2(load):
    w = load("square_border").with_(border={"1": "1 mod 2", "2": "3 mod 2"}, p=2)
    text = relations_border(w).text()
    assert "rho*rho = (1 mod 2) * rho*alpha" in text
    assert "eta*eta = (1 mod 2) * eta*beta" in text
    assert "mu*mu = 0" in text


PUNCTURED = {
    "xi*xi = 1 * alpha*eta*beta*delta*sigma*mu*omega*nu*gamma", "xi*xi*alpha = 0",
    "alpha*beta = 1 * xi*alpha*eta*beta*delta*sigma*mu*omega*nu", "alpha*beta*delta = 0",
    "nu*delta = 1 * theta*rho*theta", "nu*delta*sigma = 0",
    "eta*eta = 1 * beta*delta*sigma*mu*omega*nu*gamma*xi*alpha", "eta*eta*beta = 0",
    "beta*gamma = 1 * eta*beta*delta*sigma*mu*omega*nu*gamma*xi", "beta*gamma*xi = 0",
    "mu*mu = 1 * omega*nu*gamma*xi*alpha*eta*beta*delta*sigma", "mu*mu*omega = 0",
    "gamma*alpha = 1 * delta*sigma*mu*omega*nu*gamma*xi*alpha*eta", "gamma*alpha*eta = 0",
    "sigma*omega = 1 * rho*theta*rho", "sigma*omega*nu = 0",
    "delta*rho = 1 * gamma*xi*alpha*eta*beta*delta*sigma*mu*omega", "delta*rho*theta = 0",
    "omega*theta = 1 * mu*omega*nu*gamma*xi*alpha*eta*beta*delta",
    "omega*theta*rho = 0",  # the only path of the form omega f(omega) g(f(omega))
    "rho*nu = 1 * sigma*mu*omega*nu*gamma*xi*alpha*eta*beta", "rho*nu*gamma = 0",
    "theta*sigma = 1 * nu*gamma*xi*alpha*eta*beta*delta*sigma*mu", "theta*sigma*mu = 0",
}


def test_punctured_triangle_table(load):
    p = relations_weighted_triangulation(load("punctured_triangle"))
    assert set(p.text().splitlines()) == PUNCTURED
    assert len(p.relations) == 24


def test_weighted_parameters_appear(load):
    w = load("markov").with_(weights={"alpha1": 2}, params={"alpha1": "5/3"})
    p = relations_weighted_triangulation(w)
    assert all(r.scalar == Fraction(5, 3) for r in p.relations if r.kind == "binomial")


def test_weighted_preconditions(load):
    with pytest.raises(NotTriangulation):
        relations_weighted_triangulation(load("eight_vertex"))
    with pytest.raises(WeightTooSmall) as exc:
        relations_weighted_triangulation(load("disk").with_(weights={"alpha": 1, "beta": 1}))
    assert set(exc.value.arrows) == {"beta", "delta"}


def test_basis_of_truncated_polynomial_ring():
    bq = validate(Quiver(["1"], [("a", "1", "1"), ("b", "1", "1")]), {"a": "b", "b": "a"})
    for n in (2, 3, 5):
        w = WeightedBiserialQuiver(bq, {"a": 1, "b": n})
        p = relations_biserial(w)
        assert len(basis_paths(p)) == n + 1
        assert cartan_matrix(p) == ((n + 1,),)
        # the virtual loop contributes no proper prefixes
        assert not [q for q in basis_paths(p) if q.arrows[:1] == ("a",) and len(q) < 1]


def test_markov_basis_and_cartan(load):
    p = relations_biserial(load("markov"))
    basis = basis_paths(p)
    assert len(basis) == 36
    assert all(sum(1 for q in basis if q.start == v) == 12 for v in "123")
    assert all(sum(row) == 12 for row in cartan_matrix(p))


def test_dimensions(load):
    for m, n in ((1, 1), (1, 2), (3, 2)):
        w = load("disk").with_(weights={"alpha": m, "beta": n})
        assert dimension(relations_biserial(w)) == 36 * m + 4 * n
    for m in (1, 2, 4):
        assert dimension(relations_biserial(load("markov").with_(weights={"alpha1": m}))) == 36 * m
    s = star(load("loop_pair_swapped"))  # weights (2, 3, 1)
    assert dimension(relations_biserial(s)) == 4 * 2 + 4 * 3 + 4


def test_build_dispatch(load):
    assert build(load("markov"), "weighted").kind == "weighted-triangulation"
    assert build(load("square_border"), "border").kind == "border"


@settings(max_examples=100, deadline=None)
@given(weighted_quivers)
def test_relation_invariants(w):
    q = w.bq.quiver
    p = relations_biserial(w)
    assert len(p.relations) == len(q.arrows) + len(q.vertices)
    for r in p.relations:
        assert r.left.is_valid(q)
        if r.kind == "binomial":
            assert r.right.is_valid(q)
            assert r.left.start == r.right.start and r.left.end(q) == r.right.end(q)
    basis = basis_paths(p)
    assert len(basis) == dimension(p) == sum(map(sum, cartan_matrix(p)))
    assert all(b.is_valid(q) for b in basis)
    for i, v in enumerate(q.vertices):
        a, b = q.outgoing[v]
        assert sum(cartan_matrix(p)[i]) == w.mn(a) + w.mn(b)


@settings(max_examples=60, deadline=None)
@given(bordered_quivers)
def test_zero_border_equals_biserial(w):
    if not w.border:
        return
    zero = w.with_(border={v: "0" for v in w.border})
    assert set(relations_border(zero).relations) == set(relations_biserial(zero).relations)


@settings(max_examples=60, deadline=None)
@given(weighted_quivers)
def test_weighted_relation_count_and_shape(w):
    s, _ = periodic_envelope(w)
    p = relations_weighted_triangulation(s)
    assert len(p.relations) == 2 * len(s.arrow_ids)
    q = s.bq.quiver
    for r in p.relations:
        assert r.left.is_valid(q)
        if r.kind == "binomial":
            assert r.left.start == r.right.start and r.left.end(q) == r.right.end(q)


@settings(max_examples=40, deadline=None)
@given(weighted_quivers)
def test_dimension_invariant_under_isomorphism(w):
    other = relabelled(w, 11)
    assert isomorphic(w, other) is not None
    assert dimension(relations_biserial(w)) == dimension(relations_biserial(other))
