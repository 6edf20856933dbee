import pytest
from hypothesis import given

from conftest import grid_partitions
from fcy.partitions import (Enhanced, PartitionError, blocks, check_config, delta, f, f_tilde,
                            from_compact, g, inverse_phi_l, inverse_phi_r, is_allowed,
                            kappa, kappa_total, mutable_set, nu, orbit_trace, p, p_defined,
                            parse_ints, phi_l, phi_r, q, right, left, shift_left, sigma_minus)


def test_compact_form():
    assert blocks((0, 2, 3, 7, 7)) == [(0, 1), (2, 1), (3, 1), (7, 2)]
    assert from_compact([2, 3], [2, 1], 5, "right", 1).values == (2, 2, 3, 5)
    assert mutable_set((0, 2, 3, 7, 7)) == [2, 3, 4]


def test_enhanced_validation():
    with pytest.raises(PartitionError):
        Enhanced((1, 2), 3, "right", 1)  # 2 != n behind the bar
    with pytest.raises(PartitionError):
        Enhanced((1, 0), 3)
    assert str(right((1, 3), 3, 1)) == "(1|3)"
    assert str(left((0, 2), 3, 1)) == "(0|2)"


def test_q_and_p():
    assert q((1, 1, 3), {1}) == (0, 0, 3)
    assert q((1, 1, 3), {1, 2}) == (0, 0, 2)
    with pytest.raises(PartitionError):
        q((0, 3), {1})
    assert p_defined((1, 1, 3), 1) and not p_defined((1, 3, 3), 1)
    assert p((1, 1, 3), 1) == (1, 3, 3)
    assert p((0, 2), 1) == (2, 2)


def test_allowed_subsets():
    assert is_allowed((1, 2), {2}) is False  # q_2 would collide with block 1
    assert is_allowed((1, 3), {2}) is True
    assert is_allowed((1, 2), {1, 2}) is True


def test_configurations():
    assert phi_r((0, 2, 3, 7, 7), 7) == (-4, 0, 2, 3, 7)
    assert inverse_phi_r((-4, 0, 2, 3, 7), 5, 7).plain == (0, 2, 3, 7, 7)
    assert sigma_minus((-1, 2), 2, 2, 3) == (-1, 1)
    with pytest.raises(PartitionError):
        sigma_minus((1, 2), 2, 2, 3)
    with pytest.raises(PartitionError):
        check_config((0, 0), 2, 2)
    assert shift_left((-2, 0), 2, 2) == (-1, 2)


def test_statistics():
    R = (-1, 0, 2, 3)
    assert kappa(R, 2) == 2 and kappa(R, 3) == 5
    assert nu(R, 0) == -1 and nu(R, 2) == 1
    assert kappa_total((1, 1, 3)) == 4


def test_parse_ints():
    assert parse_ints("0,2,3,7,7") == (0, 2, 3, 7, 7)
    assert parse_ints("(-1, 2)") == (-1, 2)


def test_worked_orbit():
    trace = orbit_trace((0, 2, 3, 7, 7), 7)
    assert [s for _, s in trace] == [3, 3, 2, 2, 2, 3, 2, 3, 3, 3, 3, 3, 3]
    assert trace[-1][0] == phi_r((0, 2, 3, 7, 7), 7)


@given(grid_partitions())
def test_phi_round_trips(data):
    alpha, m, n = data
    assert inverse_phi_r(phi_r(alpha, n), m, n).plain == alpha
    L = f(right(alpha, n))
    assert inverse_phi_l(phi_l(L), m, n) == L


@given(grid_partitions())
def test_g_inverts_f(data):
    alpha, m, n = data
    a = right(alpha, n)
    assert g(f(a)) == a


@given(grid_partitions())
def test_f_tilde_is_a_bead_shift(data):
    alpha, m, n = data
    assert phi_r(f_tilde(alpha, n)) == shift_left(phi_r(alpha, n), m, n)


@given(grid_partitions())
def test_delta_lowers_the_mutable_part(data):
    alpha, m, n = data
    d = delta(alpha, n)
    assert d.side == "left"
    assert d.plain == q(alpha, mutable_set(alpha))


@given(grid_partitions())
def test_orbit_certificate(data):
    alpha, m, n = data
    trace = orbit_trace(alpha, n)
    assert len(trace) == m + n + 1
    assert trace[-1][0] == phi_r(alpha, n)
    assert sum(s for _, s in trace) == m * n
