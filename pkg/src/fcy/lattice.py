"""The lattice J(m, n) of order ideals of an m x n grid.

Elements are non-decreasing sequences of length m with values in [0, n],
ordered termwise.  The canonical element order is lexicographic.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb
from typing import Sequence

from .partitions import check_partition

DEFAULT_CAP = 10**6
Partition = tuple


class LatticeError(ValueError):
    pass


class SizeError(LatticeError):
    pass


def leq(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        raise LatticeError("partitions of different lengths")
    return all(x <= y for x, y in zip(a, b))


def meet(a, b) -> tuple[int, ...]:
    if len(a) != len(b):
        raise LatticeError("partitions of different lengths")
    return tuple(map(min, a, b))


def join(a, b) -> tuple[int, ...]:
    if len(a) != len(b):
        raise LatticeError("partitions of different lengths")
    return tuple(map(max, a, b))


@dataclass(frozen=True)
class GridLattice:
    m: int
    n: int
    elements: tuple = field(repr=False)
    index: dict = field(repr=False, compare=False)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return tuple(x) in self.index

    @property
    def bottom(self):
        return self.elements[0]

    @property
    def top(self):
        return self.elements[-1]

    def check(self, x) -> tuple[int, ...]:
        x = tuple(x)
        if x not in self.index:
            raise LatticeError(f"{x} is not an element of J({self.m},{self.n})")
        return x

    def meet(self, a, b):
        return meet(self.check(a), self.check(b))

    def join(self, a, b):
        return join(self.check(a), self.check(b))

    def leq(self, a, b) -> bool:
        return leq(self.check(a), self.check(b))

    def down(self, x) -> list:
        return [y for y in self.elements if leq(y, x)]

    def up(self, x) -> list:
        return [y for y in self.elements if leq(x, y)]

    def covers(self) -> list[tuple]:
        """Pairs (x, y) with y covering x: raise one entry by one."""
        out = []
        for x in self.elements:
            for i in range(self.m):
                y = x[:i] + (x[i] + 1,) + x[i + 1:]
                if y in self.index:
                    out.append((x, y))
        return out

    def to_json(self) -> dict:
        return {"schema": "fcy/1", "m": self.m, "n": self.n,
                "elements": [list(x) for x in self.elements]}

    def to_dot(self) -> str:
        lines = [f'digraph "J_{self.m}_{self.n}" {{']
        for x in self.elements:
            lines.append(f'  "{label(x)}";')
        for x, y in self.covers():
            lines.append(f'  "{label(x)}" -> "{label(y)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def label(x) -> str:
    return ",".join(map(str, x))


def build_lattice(m: int, n: int, cap: int = DEFAULT_CAP) -> GridLattice:
    if m < 1 or n < 0:
        raise LatticeError("need m >= 1 and n >= 0")
    size = comb(m + n, m)
    if size > cap:
        raise SizeError(f"J({m},{n}) has {size} elements, above the cap {cap}")
    elements = tuple(combinations_with_replacement(range(n + 1), m))
    return GridLattice(m, n, elements, {x: i for i, x in enumerate(elements)})


def lattice_from_json(text: str) -> GridLattice:
    data = json.loads(text)
    L = build_lattice(data["m"], data["n"])
    if [list(x) for x in L.elements] != data["elements"]:
        raise LatticeError("element list does not match J(m,n)")
    return L


def zeta_matrix(L: GridLattice) -> list[list[int]]:
    """Z[y][x] = 1 iff y <= x; column x is the dimension vector of P_x."""
    E = L.elements
    return [[int(leq(y, x)) for x in E] for y in E]


@dataclass(frozen=True)
class Interval:
    lo: tuple
    hi: tuple

    def __post_init__(self):
        if not leq(self.lo, self.hi):
            raise LatticeError(f"{self.lo} is not below {self.hi}")

    def __contains__(self, x):
        return leq(self.lo, x) and leq(x, self.hi)


def interval(lo, hi) -> Interval:
    return Interval(tuple(lo), tuple(hi))


def interval_support(I: Interval, L: GridLattice | None = None) -> set:
    if L is None:
        L = build_lattice(len(I.hi), max(I.hi))
    return {x for x in L.elements if x in I}


def interval_hom_dim(I1: Interval, I2: Interval) -> int:
    """Hom between interval modules [a,b] -> [c,d] is k iff a <= c <= b <= d."""
    a, b, c, d = I1.lo, I1.hi, I2.lo, I2.hi
    return int(leq(a, c) and leq(c, b) and leq(b, d))


__all__ = ["GridLattice", "Interval", "build_lattice", "meet", "join", "leq",
           "zeta_matrix", "interval", "interval_support", "interval_hom_dim",
           "check_partition", "DEFAULT_CAP", "LatticeError", "SizeError"]
