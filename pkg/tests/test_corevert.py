import warnings
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kcore.corevert import (
    CoreVariant,
    check_top_equalities,
    core_constraints,
    core_rays,
    dominates,
    domination_failures,
    expected_vertex_count_n_minus_1,
    find_ray,
    induced_game,
    induced_table,
    order_vertices,
    triangular_solve,
    verify_vertex,
    vertices_n_minus_1,
)
from kcore.errors import DomainError, StructureError
from kcore.oracle import enumerate_vertices, is_feasible
from kcore.orders import SubsetOrder, binary_order, iter_orders, order_from_permutation
from kcore.setfn import (
    GameTable,
    MobiusVector,
    card,
    inverse_mobius,
    is_k_monotone,
    mobius_transform,
    parse_label,
    random_game,
    random_totally_monotone_game,
    subsets_up_to,
)

REF_M = {"1": "1/10", "2": "1/10", "3": "1/10", "12": "1/5", "13": "1/5", "23": "1/5", "123": "1/10"}


def _game(n, coeffs):
    return inverse_mobius(MobiusVector(n, {parse_label(k): F(v) for k, v in coeffs.items()}))


@pytest.fixture
def ref_game():
    return _game(3, REF_M)


def _size_ordered(vec):
    value = dict(zip([parse_label(x) for x in ("1", "2", "3", "12", "13", "23")], map(F, vec)))
    return MobiusVector.from_vector(3, 2, [value[m] for m in subsets_up_to(3, 2)])


def test_plain_system_rows(ref_game):
    s = core_constraints(ref_game, 2)
    assert s.num_vars == 6 and len(s.rows) == 7
    assert [r.rhs for r in s.rows] == [F(1, 10), F(1, 10), F(2, 5), F(1, 10), F(2, 5), F(2, 5), 1]
    # m*(1) + m*(2) + m*(12) >= 0.4
    assert s.rows[2].coeffs == (1, 1, 1, 0, 0, 0) and s.rows[2].describe() == "dominance(12)"
    assert s.rows[-1].relation == "=" and s.rows[-1].coeffs == (1,) * 6


def test_row_counts():
    v = random_game(0, 4)
    plain = core_constraints(v, 2)
    assert plain.num_vars == 10
    assert len(plain.inequalities()) == 14 and len(plain.equalities()) == 1
    assert len(core_constraints(v, 2, "monotone").rows) == 15 + 4 * 8
    assert len(core_constraints(v, 3, "infinite").rows) == 15 + 6 + 4


def test_k1_is_classical_core(ref_game):
    s = core_constraints(ref_game, 1)
    assert s.variables == (1, 2, 4)
    assert s.rows[2].coeffs == (1, 1, 0)


def test_unknown_variant(ref_game):
    with pytest.raises(DomainError):
        core_constraints(ref_game, 2, "weird")
    with pytest.raises(DomainError):
        core_constraints(ref_game, 4)


def test_majority_game_feasibility():
    v = GameTable(3, {3: 1, 5: 1, 6: 1, 7: 1})
    assert not is_feasible(core_constraints(v, 1))
    assert is_feasible(core_constraints(v, 2))


def test_k_equal_n_always_feasible():
    for seed in range(5):
        v = random_game(seed, 3)
        s = core_constraints(v, 3)
        assert s.feasible(mobius_transform(v).vector(3))


def test_listed_point_is_feasible(ref_game):
    cert = verify_vertex(_size_ordered(("0.2", "0.1", "0.1", "0.2", "0.2", "0.2")), ref_game, 2)
    assert cert.feasible and not cert.violated_rows
    assert cert.is_vertex == (cert.rank == 6)
    assert not cert.is_vertex


def test_infeasible_point_reports_witness(ref_game):
    cert = verify_vertex(MobiusVector(3, {}), ref_game, 2)
    assert not cert.feasible and not cert.is_vertex
    assert cert.violated_rows


def test_midpoint_is_not_a_vertex(ref_game):
    a, b = [c.point for c in vertices_n_minus_1(ref_game)[:2]]
    mid = MobiusVector(3, [(x + y) / 2 for x, y in zip(a.coeffs, b.coeffs)])
    cert = verify_vertex(mid, ref_game, 2)
    assert cert.feasible and not cert.is_vertex


def test_verify_rejects_high_degree(ref_game):
    with pytest.raises(DomainError):
        verify_vertex(mobius_transform(ref_game), ref_game, 2)


def test_induced_game_example(ref_game):
    order = SubsetOrder.from_labels(3, 2, ["1", "2", "12", "13", "23", "3"])
    m = induced_game(order, ref_game)
    assert m.vector(2) == (F(1, 10), F(1, 10), F(1, 5), F(3, 5), 0, 0)


def test_k1_induced_game_is_marginal_vector(ref_game):
    for perm in [(1, 2, 3), (3, 1, 2), (2, 3, 1)]:
        m = induced_game(order_from_permutation(perm), ref_game)
        S = 0
        for i in perm:
            bit = 1 << (i - 1)
            assert m[bit] == ref_game[S | bit] - ref_game[S]
            S |= bit


def test_k_equal_n_gives_v(ref_game):
    for order in iter_orders(3, 3, "strongly_compatible"):
        assert induced_game(order, ref_game) == mobius_transform(ref_game)
    certs = order_vertices(ref_game, 3)
    assert len(certs) == 1 and certs[0].point == mobius_transform(ref_game)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_efficiency_and_top_equalities(seed):
    v = random_game(seed, 3)
    for order in iter_orders(3, 2, "compatible"):
        m = induced_game(order, v)
        assert m.total() == v.grand
        assert check_top_equalities(order, v)
        assert triangular_solve(order, v) == m


def test_top_equalities_binary_order(ref_game):
    assert check_top_equalities(binary_order(3, 2), ref_game)


def test_dominates_self_and_failures(ref_game):
    assert dominates(ref_game, ref_game)
    lower = GameTable(3, [x / 2 for x in ref_game.values[:-1]] + [ref_game.grand])
    assert dominates(ref_game, lower) and not dominates(lower, ref_game)
    assert domination_failures(lower, ref_game)


def test_necessity_witness():
    v = _game(3, {"1": 1, "2": 1, "3": 1, "12": 1, "13": 1, "23": 1, "123": "-1/2"})
    assert is_k_monotone(v, 2) and not is_k_monotone(v, 3)
    bad = [o for o in iter_orders(3, 2, "compatible") if not dominates(induced_table(o, v), v)]
    assert bad


def test_lattice_orders_give_nonnegative_higher_coefficients():
    v = random_totally_monotone_game(5, 3, 3)
    for order in iter_orders(3, 2, "compatible"):
        m = induced_game(order, v)
        assert all(m[B] >= 0 for B in range(1, 8) if card(B) >= 2)


def test_triangular_solve_rejects_non_lattice():
    v = random_game(1, 4)
    order = SubsetOrder.from_labels(4, 2, ["2", "3", "24", "12", "4", "13", "34", "1", "23", "14"])
    with pytest.raises(StructureError):
        triangular_solve(order, v)


def test_order_vertices_reference(ref_game):
    certs = order_vertices(ref_game, 2)
    assert len(certs) == 3 and all(c.is_vertex and c.rank == 6 for c in certs)
    assert {c.vector() for c in certs} == {c.vector() for c in vertices_n_minus_1(ref_game)}
    assert certs.orders_seen == 12 and not certs.truncated


def test_order_vertices_compatible_infinite(ref_game):
    certs = order_vertices(ref_game, 2, "compatible")
    assert certs and all(c.is_vertex and c.variant is CoreVariant.INFINITE for c in certs)
    oracle = enumerate_vertices(core_constraints(ref_game, 2, "infinite")).vertex_set()
    assert {c.vector() for c in certs} <= oracle


def test_order_vertices_warns_without_guarantee():
    v = _game(3, {"1": 1, "2": 1, "3": 1, "12": 1, "13": 1, "23": 1, "123": "-1/2"})
    with pytest.warns(UserWarning):
        certs = order_vertices(v, 2)
    assert all(c.guaranteed is False for c in certs)


def test_order_vertices_threads(ref_game):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        one = order_vertices(ref_game, 1)
        two = order_vertices(ref_game, 1, threads=2)
    assert [c.vector() for c in one] == [c.vector() for c in two]


def test_n_minus_1_formula(ref_game):
    certs = vertices_n_minus_1(ref_game)
    assert [c.source for c in certs] == ["B0=12", "B0=13", "B0=23"]
    first = certs[0].point
    assert first[parse_label("12")] == F(3, 10)
    assert first[parse_label("13")] == F(1, 5) and first[parse_label("123")] == 0


@pytest.mark.parametrize("n,sign,expected", [
    (2, 1, 2), (3, 1, 3), (4, 1, 8), (5, 1, 15),
    (2, -1, 0), (3, -1, 3), (4, -1, 6), (5, -1, 15),
    (3, 0, 1),
])
def test_vertex_count_formula(n, sign, expected):
    assert expected_vertex_count_n_minus_1(n, sign) == expected


@pytest.mark.parametrize("seed,top", [(1, "1/3"), (2, "-1/3"), (3, "0")])
def test_n_minus_1_against_oracle_n4(seed, top):
    base = random_totally_monotone_game(seed, 4, 3).mobius()
    coeffs = list(base.coeffs)
    coeffs[15] = F(top)
    v = inverse_mobius(MobiusVector(4, coeffs))
    certs = vertices_n_minus_1(v)
    oracle = enumerate_vertices(core_constraints(v, 3)).vertex_set()
    assert {c.vector() for c in certs} == oracle
    assert len(certs) == expected_vertex_count_n_minus_1(4, F(top))


def test_rays_reference(ref_game):
    rays = {r.direction for r in core_rays(ref_game, 2)}
    assert _size_ordered((1, 0, 0, -1, 0, 0)).vector(2) in rays
    assert all(sum(d) == 0 for d in rays)
    ray = find_ray(ref_game, 2)
    assert ray is not None and ray.as_mobius().vector(2) == ray.direction


def test_classical_core_has_no_ray(ref_game):
    assert find_ray(ref_game, 1) is None
    assert find_ray(random_totally_monotone_game(4, 4, 4), 1) is None


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10_000))
def test_rays_independent_of_game(seed):
    v = random_game(seed, 3)
    assert {r.direction for r in core_rays(v, 2)} == {r.direction for r in core_rays(_game(3, REF_M), 2)}


@pytest.mark.parametrize("seed", range(4))
def test_strong_order_vertices_are_monotone_core_vertices(seed):
    for n, cap in ((3, None), (4, 1000)):
        v = random_totally_monotone_game(seed, n, n)
        for cert in order_vertices(v, 2, cap=cap):
            assert verify_vertex(cert.point, v, 2, "monotone").is_vertex
