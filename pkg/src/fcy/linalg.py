"""Exact rational linear algebra, on top of sympy's DomainMatrix."""
from __future__ import annotations

from fractions import Fraction

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix


def qmat(rows, nrows: int | None = None, ncols: int | None = None) -> DomainMatrix:
    rows = [list(r) for r in rows]
    if nrows is None:
        nrows = len(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    data = [[QQ(Fraction(x).numerator, Fraction(x).denominator) for x in r] for r in rows]
    if not data:
        return DomainMatrix.zeros((nrows, ncols), QQ)
    return DomainMatrix(data, (nrows, ncols), QQ)


def zmat(rows) -> DomainMatrix:
    rows = [list(r) for r in rows]
    return DomainMatrix([[ZZ(int(x)) for x in r] for r in rows], (len(rows), len(rows[0]) if rows else 0), ZZ)


def rank(M) -> int:
    if not isinstance(M, DomainMatrix):
        M = qmat(M)
    if 0 in M.shape:
        return 0
    return M.convert_to(QQ).rank()


def nullspace(M, ncols: int | None = None) -> list[list[Fraction]]:
    """Basis (as rows) of {v : M v = 0}."""
    if not isinstance(M, DomainMatrix):
        M = qmat(M, ncols=ncols)
    nc = M.shape[1]
    if nc == 0:
        return []
    if M.shape[0] == 0:
        return [[Fraction(int(i == j)) for j in range(nc)] for i in range(nc)]
    N = M.convert_to(QQ).nullspace()
    return [[to_fraction(x) for x in row] for row in N.to_list()] if N.shape[0] else []


def solve_in_span(rows, target) -> list[Fraction] | None:
    """Coefficients c with sum c_i rows_i == target, or None."""
    rows = [list(r) for r in rows]
    if not rows:
        return [] if all(x == 0 for x in target) else None
    k = len(rows)
    A = qmat([[rows[i][j] for i in range(k)] + [target[j]] for j in range(len(target))])
    N = nullspace(A)
    for v in N:
        if v[-1] != 0:
            return [-x / v[-1] for x in v[:-1]]
    return None


def to_fraction(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def matmul(A, B):
    """Plain nested-list product (entries may be Fractions or ints)."""
    if not A or not B:
        n = len(A)
        m = len(B[0]) if B else 0
        return [[0] * m for _ in range(n)]
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def zeros(r: int, c: int):
    return [[0] * c for _ in range(r)]


def same_row_space(A, B, ncols: int) -> bool:
    ra, rb = rank(qmat(A, ncols=ncols)), rank(qmat(B, ncols=ncols))
    return ra == rb == rank(qmat(list(A) + list(B), ncols=ncols))
