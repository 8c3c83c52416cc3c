import numpy as np
import pytest

from app.core.config import settings
from app.core.exceptions import ArithmeticInputError, BudgetExceededError
from app.services import hermitian_oracle, point_counts


@pytest.mark.parametrize("q", [2, 3])
def test_field_tables(q):
    f = hermitian_oracle.build_fq_squared(q)
    idx = np.arange(f.size)
    assert np.array_equal(f.conj[f.conj], idx)
    assert sorted(int(x) for x in np.flatnonzero(f.conj == idx)) == list(range(q))
    assert all(f.mul[x, f.inv[x]] == 1 for x in range(1, f.size))
    assert all(f.add[x, f.neg[x]] == 0 for x in range(f.size))
    # Frobenius is multiplicative
    assert np.array_equal(f.conj[f.mul], f.mul[f.conj[:, None], f.conj[None, :]])


def test_field_requires_prime():
    with pytest.raises(ArithmeticInputError):
        hermitian_oracle.build_fq_squared(4)


@pytest.mark.parametrize("g, q, expected", [(2, 2, 3), (3, 2, 9), (3, 3, 28), (1, 3, 0)])
def test_isotropic_point_count(g, q, expected):
    assert hermitian_oracle.isotropic_point_count(g, q) == expected


@pytest.mark.parametrize("g, q", [(1, 2), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_isotropic_flags_match_unitary_flag_count(g, q):
    assert hermitian_oracle.isotropic_flag_count(g, q) == point_counts.unitary_flag_count(g, q)


def test_isotropic_flags_rank_four(monkeypatch):
    monkeypatch.setattr(settings, "HERMITIAN_MAX_FLAG_RANK", 4)
    assert hermitian_oracle.isotropic_flag_count(4, 2) == 135


def test_totally_isotropic_subspaces_are_isotropic():
    space = hermitian_oracle.hermitian_space(4, 2)
    planes = hermitian_oracle.totally_isotropic_subspaces(4, 2, 2)
    assert len(planes) == 27
    for V in planes:
        for a in V:
            for b in V:
                assert space.form(a, b) == 0
    assert len(hermitian_oracle.totally_isotropic_subspaces(2, 2, 1)) == 3


@pytest.mark.parametrize("g, q", [(3, 2), (4, 3)])
def test_sesquilinearity(g, q):
    assert hermitian_oracle.sesquilinearity_holds(hermitian_oracle.hermitian_space(g, q))


@pytest.mark.parametrize("g, q, error", [
    (2, 5, BudgetExceededError),
    (5, 2, BudgetExceededError),
    (2, 4, ArithmeticInputError),
])
def test_budget(g, q, error):
    with pytest.raises(error):
        hermitian_oracle.isotropic_point_count(g, q)


def test_flag_budget():
    with pytest.raises(BudgetExceededError):
        hermitian_oracle.isotropic_flag_count(settings.HERMITIAN_MAX_FLAG_RANK + 1, 2)
