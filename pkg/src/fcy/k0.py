"""The Serre functor on K_0 and its Coxeter powers."""
from __future__ import annotations

from dataclasses import dataclass

from sympy import ZZ, Poly, symbols
from sympy.polys.matrices import DomainMatrix

from .lattice import GridLattice, build_lattice, leq, zeta_matrix


@dataclass(frozen=True)
class SerreK0Matrix:
    elements: tuple
    matrix: tuple  # rows of python ints

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.matrix]


def _dm(rows) -> DomainMatrix:
    return DomainMatrix([[ZZ(int(x)) for x in r] for r in rows], (len(rows), len(rows)), ZZ)


def _ints(M: DomainMatrix) -> list[list[int]]:
    return [[int(x) for x in row] for row in M.to_list()]


def serre_k0_matrix(L: GridLattice) -> SerreK0Matrix:
    """Z^T Z^-1 in the basis of simple classes."""
    Z = _dm(zeta_matrix(L))
    Zinv = Z.convert_to(ZZ).inv_den()
    inv, den = Zinv
    if den != 1 and den != -1:
        raise AssertionError("zeta matrix is not unimodular")
    Zi = inv * int(den)  # den is +-1
    M = Z.transpose() * Zi
    E = L.elements
    rows = _ints(M)
    # P_x must go to I_x: column x of Z to the indicator of {y >= x}
    for j, x in enumerate(E):
        img = [sum(rows[i][k] * int(leq(E[k], x)) for k in range(len(E))) for i in range(len(E))]
        if img != [int(leq(x, y)) for y in E]:
            raise AssertionError(f"[P_{x}] is not sent to [I_{x}]")
    return SerreK0Matrix(E, tuple(tuple(r) for r in rows))


def coxeter_order_check(m: int, n: int) -> dict:
    S = serre_k0_matrix(build_lattice(m, n))
    M = _dm(S.matrix)
    exponent = m + n + 1
    sign = -1 if (m * n) % 2 else 1
    P = _ints(M ** exponent)
    failure = None
    for i, row in enumerate(P):
        for j, x in enumerate(row):
            want = sign if i == j else 0
            if x != want:
                failure = {"row": i, "col": j, "value": x, "expected": want}
                break
        if failure:
            break
    return {"schema": "fcy/1", "m": m, "n": n, "exponent": exponent, "sign": sign,
            "holds": failure is None, "first_failure": failure}


def coxeter_polynomial(L: GridLattice) -> list[int]:
    """Coefficients (leading first) of the characteristic polynomial of -M."""
    M = _dm(serre_k0_matrix(L).matrix)
    return [int(c) for c in (-M).charpoly()]


def polynomial_string(coeffs: list[int]) -> str:
    t = symbols("t")
    return str(Poly(coeffs, t).as_expr())


def multiplicative_order(M: list[list[int]], bound: int) -> int | None:
    A = _dm(M)
    ident = [[int(i == j) for j in range(len(M))] for i in range(len(M))]
    P = A
    for k in range(1, bound + 1):
        if _ints(P) == ident:
            return k
        P = P * A
    return None


__all__ = ["SerreK0Matrix", "serre_k0_matrix", "coxeter_order_check", "coxeter_polynomial",
           "polynomial_string", "multiplicative_order"]
