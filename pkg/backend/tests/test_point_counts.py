from fractions import Fraction

import pytest
import sympy

from app.core.exceptions import (
    ArithmeticInputError, IndexOutOfRangeError, InvalidAutomorphismError, NotSuperspecialError,
)
from app.models.coxeter import QPolynomial, TwistedCoxeterDiagram, q
from app.models.group import GroupContext
from app.services import point_counts, weyl_core


def test_twisted_flag_small_cases():
    assert point_counts.twisted_flag_polynomial(point_counts.symmetric_group(2)).coefficients == (1, 1)
    s3 = point_counts.symmetric_group(3)
    assert point_counts.twisted_flag_polynomial(s3, point_counts.flip(3)).coefficients == (1, 0, 0, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_poincare_polynomial_of_symmetric_group(n):
    expected = sympy.Integer(1)
    for d in range(1, n + 1):
        expected *= sum(q ** k for k in range(d))
    got = point_counts.poincare_polynomial(point_counts.symmetric_group(n))
    assert got == QPolynomial.from_sympy(expected)


@pytest.mark.parametrize("g", [1, 2, 3, 4, 5, 6])
def test_unitary_flag_identity(g):
    twisted = point_counts.twisted_flag_polynomial(point_counts.symmetric_group(g), point_counts.flip(g))
    assert twisted == point_counts.unitary_flag_polynomial(g)


@pytest.mark.parametrize("g, q_value, expected", [(1, 5, 1), (2, 2, 3), (3, 3, 28), (4, 2, 135)])
def test_unitary_flag_count(g, q_value, expected):
    assert point_counts.unitary_flag_count(g, q_value) == expected


def test_unitary_flag_count_rejects_small_q():
    with pytest.raises(ArithmeticInputError):
        point_counts.unitary_flag_count(2, 1)


def test_unitary_flag_polynomial_closed_form():
    assert point_counts.unitary_flag_polynomial(3) == QPolynomial((1, 0, 0, 1))
    assert point_counts.unitary_flag_polynomial(4).evaluate(2) == 135


def test_frobenius_stable_subsets():
    subsets = point_counts.frobenius_stable_subsets(point_counts.affine_c_diagram(2))
    assert subsets == [frozenset({1}), frozenset({0, 2}), frozenset({0, 1, 2})]
    assert point_counts.frobenius_stable_subsets(point_counts.cyclic_diagram(1, 2)) == [frozenset({0, 1, 2})]
    assert len(point_counts.frobenius_stable_subsets(point_counts.cyclic_diagram(2, 2))) == 3
    assert len(point_counts.frobenius_stable_subsets(point_counts.type_a_diagram(4))) == 7


def test_invalid_automorphisms():
    with pytest.raises(InvalidAutomorphismError):
        TwistedCoxeterDiagram((1, 2, 3), {frozenset((1, 2)): 3, frozenset((2, 3)): 3}, {1: 2, 2: 1, 3: 3})
    with pytest.raises(InvalidAutomorphismError):
        point_counts.twisted_flag_polynomial(point_counts.symmetric_group(3), {1: 1})


def test_affine_diagram_labels():
    d = point_counts.affine_c_diagram(3)
    assert d.label(0, 1) == 4
    assert d.label(1, 2) == 3
    assert d.label(0, 2) == 2
    assert point_counts.affine_c_diagram(1).label(0, 1) == 0


def test_parabolic_subgroup():
    assert point_counts.parabolic_subgroup(2, [1]).order() == 2
    assert point_counts.parabolic_subgroup(2, [0, 1]).order() == 8
    assert point_counts.parabolic_subgroup(3, [1, 2]).order() == 6
    with pytest.raises(IndexOutOfRangeError):
        point_counts.parabolic_subgroup(2, [0, 1, 2])


@pytest.mark.parametrize("g, letters, expected", [
    (2, [], {0, 1, 2}),
    (2, [1], {0, 2}),
    (3, [1], {0, 3}),
    (3, [0, 3], {1, 2}),
])
def test_minimal_stable_parabolic(g, letters, expected):
    w = weyl_core.evaluate_word(GroupContext.symplectic(g), letters)
    assert point_counts.minimal_stable_parabolic(w, g) == frozenset(expected)


def test_minimal_stable_parabolic_errors():
    ctx = GroupContext.symplectic(1)
    with pytest.raises(NotSuperspecialError):
        point_counts.minimal_stable_parabolic(weyl_core.evaluate_word(ctx, [0, 1]), 1)
    with pytest.raises(IndexOutOfRangeError):
        point_counts.minimal_stable_parabolic(weyl_core.tau(ctx), 1)


def test_dl_variety_stats():
    s3 = point_counts.symmetric_group(3)
    flip = point_counts.flip(3)
    e = s3.identity
    assert point_counts.dl_variety_stats(e, s3, flip, 2) == (0, 9)
    assert point_counts.dl_variety_stats(s3.evaluate([1]), s3, flip, 2) == (1, 1)
    assert point_counts.dl_variety_stats(s3.evaluate([1, 2, 1]), s3, flip, 2) == (3, 1)

    s2 = point_counts.symmetric_group(2)
    assert point_counts.dl_variety_stats(s2.identity, s2, {1: 1}, 3) == (0, 4)


def test_dl_irreducible_iff_no_stable_parabolic():
    s4 = point_counts.symmetric_group(4)
    flip = point_counts.flip(4)
    diagram = s4.diagram(flip)
    for w, (_, word) in s4.elements.items():
        _, components = point_counts.dl_variety_stats(w, s4, flip, 2)
        assert (components == 1) == (diagram.orbit_closure(word) == frozenset(s4.labels))


def test_stratum_dl_stats(ctx2):
    x = weyl_core.evaluate_word(ctx2, [0, 2], weyl_core.tau(ctx2))
    # s_0 s_2 is sigma-stable inside W_{1,1}, so X(w) is irreducible
    assert point_counts.stratum_dl_stats(x, 2) == (2, 1)
    with pytest.raises(NotSuperspecialError):
        point_counts.stratum_dl_stats(weyl_core.evaluate_word(ctx2, [0, 1], weyl_core.tau(ctx2)), 2)


@pytest.mark.parametrize("k, expected", [(0, Fraction(1)), (1, Fraction(1, 6)), (2, Fraction(-1, 30)), (3, Fraction(1, 42))])
def test_bernoulli_even(k, expected):
    assert point_counts.bernoulli_even(k) == expected


@pytest.mark.parametrize("i, expected", [(1, Fraction(-1, 12)), (2, Fraction(1, 120)), (3, Fraction(-1, 252)), (4, Fraction(1, 240))])
def test_zeta_negative_odd(i, expected):
    assert point_counts.zeta_negative_odd(i) == expected


@pytest.mark.parametrize("g, N, expected", [(1, 3, 24), (1, 4, 48), (2, 3, 51840)])
def test_sp_order(g, N, expected):
    assert point_counts.sp_order_mod_N(g, N) == expected


def test_sp_order_rejects_small_level():
    with pytest.raises(ArithmeticInputError):
        point_counts.sp_order_mod_N(1, 2)


@pytest.mark.parametrize("p", [13, 37, 73])
def test_mass_genus_one(p):
    assert point_counts.lambda_mass(1, p, 3) == Fraction(24 * (p - 1), 24)


@pytest.mark.parametrize("g, p, expected", [(1, 2, 1), (2, 2, 45), (3, 2, 110565)])
def test_mass_values(g, p, expected):
    assert point_counts.lambda_mass(g, p, 3) == expected


@pytest.mark.parametrize("p, N", [(4, 5), (3, 3), (5, 2)])
def test_mass_rejects_bad_inputs(p, N):
    with pytest.raises(ArithmeticInputError):
        point_counts.lambda_mass(2, p, N)


def test_a_tau_count():
    assert point_counts.a_tau_count(1, 13, 3) == 12
    assert point_counts.a_tau_count(2, 2, 3) == 45 * 3


def test_kr_connected_components(ctx2):
    e = weyl_core.identity(ctx2)
    s0, s1, _ = weyl_core.simple_reflections(ctx2)
    assert point_counts.kr_connected_components(e, 2, 2, 3) == point_counts.a_tau_count(2, 2, 3)
    assert point_counts.kr_connected_components(s1, 2, 2, 3) == 45
    # W_{0,2} twisted flag count is 1 + p^2
    assert point_counts.kr_connected_components(s0, 2, 2, 3) == 27


@pytest.mark.parametrize("g", [1, 2, 3, 4])
@pytest.mark.parametrize("p, N", [(2, 3), (3, 4), (5, 3)])
def test_component_counts_are_integral(g, p, N):
    entries = point_counts.superspecial_component_report(g, p, N)
    assert entries[0]["word"] == []
    assert entries[0]["component_count"] == point_counts.a_tau_count(g, p, N)
    assert all(isinstance(e["component_count"], int) and e["component_count"] > 0 for e in entries)
