import pytest

from collatz_formula.closed_form import equal_step_X
from collatz_formula.constructors import (
    construct_decreasing,
    construct_increasing,
    decreasing_multiplier,
)
from collatz_formula.errors import DomainError
from oracles import schoolbook_odd_orbit


def _oracle_run(x1, n):
    odd = schoolbook_odd_orbit(x1, n)
    return [x1] + [v for v, _ in odd], [m for _, m in odd]


def test_increasing_figure_curve():
    spec = construct_increasing(7, 1)
    assert spec.x1 == 255
    assert spec.sequence == (255, 383, 575, 863, 1295, 1943, 2915, 4373)
    assert spec.step_sizes == (1,) * 7
    assert spec.predicted_final == spec.final == 4373


def test_increasing_small():
    spec = construct_increasing(1, 1)
    assert (spec.x1, spec.predicted_final) == (3, 5)


def test_increasing_k3():
    spec = construct_increasing(7, 3)
    assert spec.x1 == 767 and spec.predicted_final == 13121
    seq, sizes = _oracle_run(767, 7)
    assert tuple(seq) == spec.sequence and sizes == [1] * 7


@pytest.mark.parametrize("n", range(1, 21))
@pytest.mark.parametrize("K", range(1, 11))
def test_increasing_sweep(n, K):
    spec = construct_increasing(n, K)
    seq, sizes = _oracle_run(spec.x1, n)
    assert tuple(seq) == spec.sequence
    assert sizes == [1] * n
    assert all(a < b for a, b in zip(seq, seq[1:]))
    assert all(v % 4 == 3 for v in seq[:-1])
    assert seq[-1] == 6 * K * 3 ** (n - 1) - 1
    assert equal_step_X(spec.x1, n, 1) == K * 3 ** (n - 1)


def test_increasing_domain():
    with pytest.raises(DomainError):
        construct_increasing(0, 1)
    with pytest.raises(DomainError):
        construct_increasing(3, 0)


def test_decreasing_examples():
    a = construct_decreasing(3, 2)
    assert a.sequence == (129, 97, 73, 55) and a.step_sizes == (2, 2, 2) and a.K == 2
    b = construct_decreasing(2, 3)
    assert b.sequence == (77, 29, 11) and b.step_sizes == (3, 3) and b.K == 6


def test_decreasing_single_step():
    spec = construct_decreasing(1, 2)
    assert spec.final < spec.x1
    assert 3 * spec.x1 + 1 == 4 * spec.final


@pytest.mark.parametrize("n", range(1, 13))
@pytest.mark.parametrize("m", range(2, 6))
def test_decreasing_sweep(n, m):
    spec = construct_decreasing(n, m)
    seq, sizes = _oracle_run(spec.x1, n)
    assert tuple(seq) == spec.sequence
    assert sizes == [m] * n
    assert all(a > b for a, b in zip(seq, seq[1:]))


def _brute_min_decreasing(n, m, limit):
    for x in range(3, limit, 2):
        seq, sizes = _oracle_run(x, n)
        if sizes == [m] * n and len(seq) == n + 1:
            yield x


@pytest.mark.parametrize("n, m", [(1, 2), (2, 2), (1, 3), (2, 3), (1, 4), (3, 2)])
def test_decreasing_family_members_are_genuine(n, m):
    # every start with n steps of exactly m (brute force) lies on the
    # progression x1 + t * 2^(mn+1) the family index walks
    period = 2 ** (m * n + 1)
    x0 = construct_decreasing(n, m).x1
    found = list(_brute_min_decreasing(n, m, x0 + 4 * period))
    assert found == [x0 + t * period for t in range(4)]
    assert [construct_decreasing(n, m, t).x1 for t in range(4)] == found


def test_decreasing_family_index_keeps_properties():
    for t in range(5):
        spec = construct_decreasing(4, 3, t)
        assert spec.step_sizes == (3,) * 4
        assert spec.K == decreasing_multiplier(4, 3) + 2 * 5 * t


def test_decreasing_domain():
    with pytest.raises(DomainError):
        construct_decreasing(2, 1)
    with pytest.raises(DomainError):
        construct_decreasing(2, 3, -1)
    with pytest.raises(DomainError):
        construct_decreasing(0, 3)
