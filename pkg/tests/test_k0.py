import pytest

from fcy.k0 import (coxeter_order_check, coxeter_polynomial, multiplicative_order,
                    polynomial_string, serre_k0_matrix)
from fcy.lattice import build_lattice


def test_j11_by_hand():
    # Z = [[1,1],[0,1]], so Z^T Z^-1 = [[1,-1],[1,0]], of order 6 with cube -Id
    S = serre_k0_matrix(build_lattice(1, 1))
    assert S.to_list() == [[1, -1], [1, 0]]
    assert multiplicative_order(S.to_list(), 10) == 6
    rep = coxeter_order_check(1, 1)
    assert (rep["exponent"], rep["sign"], rep["holds"]) == (3, -1, True)


# characteristic polynomials of -M, computed independently with sympy.Matrix
CHARPOLYS = {
    (1, 1): [1, 1, 1],
    (2, 1): [1, 1, 1, 1],
    (2, 2): [1, 1, 0, 0, 0, 1, 1],
    (2, 3): [1, 1, 0, -1, -1, 0, -1, -1, 0, 1, 1],
}


@pytest.mark.parametrize("mn", sorted(CHARPOLYS))
def test_coxeter_polynomials(mn):
    assert coxeter_polynomial(build_lattice(*mn)) == CHARPOLYS[mn]


def test_polynomial_string():
    assert polynomial_string([1, 1, 0, 0, 0, 1, 1]) == "t**6 + t**5 + t + 1"


@pytest.mark.parametrize("m,n", [(1, 2), (2, 2), (3, 2), (2, 4), (4, 4)])
def test_fractional_cy_identity(m, n):
    rep = coxeter_order_check(m, n)
    assert rep["holds"] and rep["first_failure"] is None
    assert rep["sign"] == (-1) ** (m * n)


def test_j10_is_the_identity_order():
    # a single point: M = Id and the identity holds with sign +1
    assert serre_k0_matrix(build_lattice(1, 0)).to_list() == [[1]]
    assert coxeter_order_check(1, 0)["holds"]
