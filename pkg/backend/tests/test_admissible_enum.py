import pytest

from app.core.config import settings
from app.core.exceptions import BudgetExceededError, GenusOutOfRangeError, IndexOutOfRangeError
from app.models.group import GroupContext
from app.services import admissible_enum, weyl_core

STRATA = {1: 3, 2: 13, 3: 79, 4: 633, 5: 6331, 6: 75973}
PRANK_ZERO = {1: 1, 2: 5, 3: 29, 4: 233, 5: 2329, 6: 27949}


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_strata_counts(g):
    records = admissible_enum.enumerate_admissible(g)
    assert len(records) == STRATA[g]
    assert admissible_enum.p_rank_histogram(g)[0] == PRANK_ZERO[g]


@pytest.mark.slow
@pytest.mark.parametrize("g", [5, 6])
def test_strata_counts_large(g):
    assert len(admissible_enum.enumerate_admissible(g)) == STRATA[g]
    assert admissible_enum.p_rank_histogram(g)[0] == PRANK_ZERO[g]


@pytest.mark.parametrize("g", [1, 2, 3])
def test_permissible_equals_admissible(g):
    permissible = {rec.element for rec in admissible_enum.enumerate_admissible(g)}
    assert permissible == admissible_enum.enumerate_admissible_oracle(g)


def test_oracle_budget():
    with pytest.raises(BudgetExceededError):
        admissible_enum.enumerate_admissible_oracle(settings.ORACLE_MAX_GENUS + 1)


@pytest.mark.parametrize("g", [0, 7])
def test_genus_out_of_range(g):
    with pytest.raises(GenusOutOfRangeError):
        admissible_enum.enumerate_admissible(g)


def test_enumeration_is_sorted_and_distinct():
    records = admissible_enum.enumerate_admissible(3)
    alcoves = [rec.alcove for rec in records]
    assert alcoves == sorted(alcoves)
    assert len({rec.element for rec in records}) == len(records)


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_length_extremes(g):
    histogram = admissible_enum.length_histogram(g)
    assert histogram[0] == 1
    assert histogram[-1] == 2 ** g
    assert sum(histogram) == STRATA[g]


def test_small_histograms():
    assert admissible_enum.length_histogram(1) == [1, 2]
    assert admissible_enum.p_rank_histogram(1) == {0: 1, 1: 2}


def test_maximal_elements_are_translations():
    g = 3
    elements = {rec.element for rec in admissible_enum.enumerate_admissible(g)}
    maximal = admissible_enum.maximal_elements(g)
    assert len(maximal) == 2 ** g
    for m in maximal:
        assert m in elements
        assert weyl_core.length(m) == g * (g + 1) // 2


def test_p_rank():
    ctx = GroupContext.symplectic(3)
    assert admissible_enum.p_rank(weyl_core.tau(ctx)) == 0
    assert admissible_enum.p_rank(weyl_core.identity(ctx)) == 3


@pytest.mark.parametrize("g, expected", [(1, 0), (2, 2), (3, 4), (4, 8)])
def test_prank_zero_dimension(g, expected):
    assert admissible_enum.prank_zero_dimension(g) == expected


@pytest.mark.slow
@pytest.mark.parametrize("g, expected", [(5, 12), (6, 18)])
def test_prank_zero_dimension_large(g, expected):
    assert admissible_enum.prank_zero_dimension(g) == expected


def test_component_count_a_j():
    assert admissible_enum.component_count_A_J(3, [0]) == 1
    assert admissible_enum.component_count_A_J(3, [0, 3]) == 4
    assert admissible_enum.component_count_A_J(3, [0, 1, 3]) == 6
    with pytest.raises(IndexOutOfRangeError):
        admissible_enum.component_count_A_J(3, [])
    with pytest.raises(IndexOutOfRangeError):
        admissible_enum.component_count_A_J(3, [0, 4])


def test_parallel_enumeration_matches_serial(monkeypatch):
    serial = sorted(admissible_enum.enumerate_permissible_chains(2))
    monkeypatch.setattr(settings, "ENUMERATION_WORKERS", 2)
    assert sorted(admissible_enum.enumerate_permissible_chains(2)) == serial


@pytest.mark.parametrize("g", [1, 2, 3])
def test_admissible_set_is_downward_closed(g):
    ctx = GroupContext.symplectic(g)
    elements = {rec.element for rec in admissible_enum.enumerate_admissible(g)}
    for x in elements:
        for i in weyl_core.left_descents(x):
            assert weyl_core.compose(weyl_core.simple_reflection(ctx, i), x) in elements


def test_bruhat_order_on_admissible_set():
    g = 2
    elements = [rec.element for rec in admissible_enum.enumerate_admissible(g)]
    t = weyl_core.tau(GroupContext.symplectic(g))
    maximal = admissible_enum.maximal_elements(g)
    leq = {(a, b): weyl_core.bruhat_leq(a, b) for a in elements for b in elements}
    for b in elements:
        below = weyl_core.subword_products(weyl_core.reduced_word(b))
        assert {a for a in elements if leq[(a, b)]} == below
    for a in elements:
        assert leq[(t, a)]
        assert any(weyl_core.bruhat_leq(a, m) for m in maximal)
        for b in elements:
            if a != b and leq[(a, b)]:
                assert not leq[(b, a)]
            for c in elements:
                if leq[(a, b)] and leq[(b, c)]:
                    assert leq[(a, c)]


@pytest.mark.parametrize("g", [2, 3])
def test_support_detects_finite_weyl_group(g):
    ctx = GroupContext.symplectic(g)
    finite = set(weyl_core.parabolic_elements(ctx, range(1, g)))
    tau_inv = weyl_core.inverse(weyl_core.tau(ctx))
    for rec in admissible_enum.enumerate_admissible(g):
        w = weyl_core.compose(rec.element, tau_inv)
        assert (weyl_core.support(w) <= set(range(1, g))) == (w in finite)
