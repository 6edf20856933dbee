"""Antichains below an element, their properties, supports and resolutions."""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from typing import Iterable

from .lattice import GridLattice, Interval, LatticeError, join, leq, meet


class AntichainError(ValueError):
    pass


@dataclass(frozen=True)
class Antichain:
    members: tuple
    top: tuple

    def __post_init__(self):
        ms = tuple(sorted(tuple(c) for c in self.members))
        object.__setattr__(self, "members", ms)
        object.__setattr__(self, "top", tuple(self.top))
        if len(set(ms)) != len(ms):
            raise AntichainError("repeated member")
        for c in ms:
            if not leq(c, self.top):
                raise AntichainError(f"{c} is not below {self.top}")
        for a, b in combinations(ms, 2):
            if leq(a, b) or leq(b, a):
                raise AntichainError(f"{a} and {b} are comparable")

    def __len__(self):
        return len(self.members)

    def subsets(self, size: int | None = None):
        """Index subsets in a fixed order: by size, then lexicographically."""
        r = len(self.members)
        sizes = range(r + 1) if size is None else [size]
        for k in sizes:
            yield from combinations(range(r), k)

    def meet_of(self, S: Iterable[int]) -> tuple:
        x = reduce(meet, (self.members[i] for i in S), self.top)
        assert leq(x, self.top)
        return x


@dataclass(frozen=True)
class PropertyFlags:
    strong: bool
    inclusive: bool
    intersective: bool
    boolean: bool


def _meet_table(C: Antichain) -> dict:
    return {S: C.meet_of(S) for S in C.subsets()}


def is_inclusive(C: Antichain, table=None) -> bool:
    table = table or _meet_table(C)
    for S, a in table.items():
        for T, b in table.items():
            if leq(a, b) and not set(T) <= set(S):
                return False
    return True


def is_strong(C: Antichain, table=None) -> bool:
    table = table or _meet_table(C)
    for S, a in table.items():
        for T, b in table.items():
            if S != T and len(S) == len(T) and leq(a, b):
                return False
    return True


def is_intersective(C: Antichain, table=None) -> bool:
    table = table or _meet_table(C)
    for S, a in table.items():
        for T, b in table.items():
            common = tuple(sorted(set(S) & set(T)))
            if join(a, b) != table[common]:
                return False
    return True


def classify(C: Antichain) -> PropertyFlags:
    table = _meet_table(C)
    inc = is_inclusive(C, table)
    itr = is_intersective(C, table)
    return PropertyFlags(is_strong(C, table), inc, itr, inc and itr)


def boolean_witness(C: Antichain) -> dict | None:
    """The table S -> meet(S) when it is a lattice anti-isomorphism onto its image."""
    table = _meet_table(C)
    if len(set(table.values())) != len(table):
        return None
    for S, a in table.items():
        for T, b in table.items():
            union = tuple(sorted(set(S) | set(T)))
            common = tuple(sorted(set(S) & set(T)))
            if meet(a, b) != table[union] or join(a, b) != table[common]:
                return None
    return {tuple(C.members[i] for i in S): x for S, x in table.items()}


def interval_antichain(I: Interval, L: GridLattice) -> Antichain:
    """Maxima of {x < hi : x not >= lo}."""
    cands = [x for x in L.elements if leq(x, I.hi) and x != I.hi and not leq(I.lo, x)]
    maxima = [x for x in cands if not any(y != x and leq(x, y) for y in cands)]
    return Antichain(tuple(maxima), I.hi)


def module_support(C: Antichain, L: GridLattice) -> set:
    return {x for x in L.elements
            if leq(x, C.top) and not any(leq(x, c) for c in C.members)}


def antichains_below(L: GridLattice, top) -> list[Antichain]:
    """Every antichain whose members lie below top (the empty one included)."""
    below = [x for x in L.elements if leq(x, top)]
    out: list[Antichain] = []

    def extend(start: int, chosen: list):
        out.append(Antichain(tuple(chosen), top))
        for j in range(start, len(below)):
            x = below[j]
            if all(not leq(x, c) and not leq(c, x) for c in chosen):
                chosen.append(x)
                extend(j + 1, chosen)
                chosen.pop()

    extend(0, [])
    return out


def lowering_antichain(alpha, n: int) -> Antichain:
    """C_alpha = {q_i(alpha) : i in S_alpha}, read as plain partitions."""
    from .partitions import Enhanced, mutable_set, q, right

    a = alpha if isinstance(alpha, Enhanced) else right(alpha, n)
    return Antichain(tuple(q(a, {i}).plain for i in mutable_set(a)), a.plain)


def build_resolution(C: Antichain):
    """Degree l holds P_meet(S) for |S| = l; see homalg.ProjectiveComplex."""
    from .homalg import ProjectiveComplex

    r = len(C)
    degrees, keys, bds = {}, {}, {}
    for l in range(r + 1):
        subs = list(C.subsets(l))
        keys[l] = subs
        degrees[l] = [C.meet_of(S) for S in subs]
    for l in range(1, r + 1):
        row_of = {T: i for i, T in enumerate(keys[l - 1])}
        B = [[0] * len(keys[l]) for _ in keys[l - 1]]
        for col, S in enumerate(keys[l]):
            for pos, i in enumerate(S):
                T = S[:pos] + S[pos + 1:]
                # (-1)^|i|_S with |i|_S = #{j in S : j <= i} = pos + 1
                B[row_of[T]][col] = 1 if pos % 2 else -1
        bds[l] = B
    cx = ProjectiveComplex(degrees, bds, keys=keys)
    cx.validate()
    return cx


__all__ = ["Antichain", "PropertyFlags", "classify", "boolean_witness",
           "interval_antichain", "module_support", "antichains_below",
           "lowering_antichain", "build_resolution", "AntichainError", "LatticeError"]
