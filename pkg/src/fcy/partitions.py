"""Partition and abacus calculus for the grid lattices J(m, n).

A plain partition is a non-decreasing tuple of m integers in [0, n].
Enhanced partitions carry a bar: on the right side the last ``bar``
entries are the value n sitting behind the bar, on the left side the
first ``bar`` entries are zeros sitting in front of it.

Configurations are sorted tuples of m distinct integers in the
alphabet {-m, ..., n}.  Block indices are 1-based throughout, matching
the usual (lambda_i ^ mu_i) notation.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from typing import Iterable, Sequence


class PartitionError(ValueError):
    pass


def blocks(values: Sequence[int]) -> list[tuple[int, int]]:
    """Compact form: list of (value, multiplicity)."""
    return [(v, len(list(g))) for v, g in groupby(values)]


def from_blocks(bl: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    out: list[int] = []
    for v, mu in bl:
        out.extend([v] * mu)
    return tuple(out)


def ending_indices(bl: Sequence[tuple[int, int]]) -> list[int]:
    xs, acc = [], 0
    for _, mu in bl:
        acc += mu
        xs.append(acc)
    return xs


def check_partition(values: Sequence[int], m: int, n: int) -> tuple[int, ...]:
    values = tuple(int(v) for v in values)
    if len(values) != m:
        raise PartitionError(f"expected {m} values, got {len(values)}")
    if any(v < 0 or v > n for v in values):
        raise PartitionError(f"values must lie in [0, {n}]")
    if any(a > b for a, b in zip(values, values[1:])):
        raise PartitionError("values must be non-decreasing")
    return values


@dataclass(frozen=True)
class Enhanced:
    values: tuple[int, ...]
    n: int
    side: str = "right"
    bar: int = 0

    def __post_init__(self):
        if self.side not in ("right", "left"):
            raise PartitionError(f"unknown side {self.side!r}")
        check_partition(self.values, len(self.values), self.n)
        if not 0 <= self.bar <= self.m:
            raise PartitionError("bar multiplicity out of range")
        if self.side == "right" and any(v != self.n for v in self.values[self.m - self.bar:]):
            raise PartitionError("values behind a right bar must equal n")
        if self.side == "left" and any(v != 0 for v in self.values[: self.bar]):
            raise PartitionError("values in front of a left bar must be 0")

    @property
    def m(self) -> int:
        return len(self.values)

    @property
    def free(self) -> tuple[int, ...]:
        """The values on the non-enhanced side of the bar."""
        if self.side == "right":
            return self.values[: self.m - self.bar]
        return self.values[self.bar:]

    @property
    def blocks(self) -> list[tuple[int, int]]:
        return blocks(self.free)

    @property
    def plain(self) -> tuple[int, ...]:
        return self.values

    def __str__(self):
        body = ",".join(map(str, self.free))
        rest = ",".join(map(str, self.values[: self.bar] if self.side == "left"
                            else self.values[self.m - self.bar:]))
        return f"({body}|{rest})" if self.side == "right" else f"({rest}|{body})"


def right(values: Sequence[int], n: int, bar: int = 0) -> Enhanced:
    return Enhanced(tuple(values), n, "right", bar)


def left(values: Sequence[int], n: int, bar: int = 0) -> Enhanced:
    return Enhanced(tuple(values), n, "left", bar)


def from_compact(coeffs: Sequence[int], mults: Sequence[int], n: int,
                 side: str = "right", bar: int = 0) -> Enhanced:
    """Build an enhanced partition from its coefficients and multiplicities."""
    free = from_blocks(zip(coeffs, mults))
    if side == "right":
        return Enhanced(free + (n,) * bar, n, "right", bar)
    return Enhanced((0,) * bar + free, n, "left", bar)


def _as_right(alpha, n: int | None = None) -> Enhanced:
    if isinstance(alpha, Enhanced):
        if alpha.side != "right":
            raise PartitionError("expected a right enhanced partition")
        return alpha
    if n is None:
        raise PartitionError("n is required for a plain partition")
    return right(alpha, n)


def _as_left(alpha, n: int | None = None) -> Enhanced:
    if isinstance(alpha, Enhanced):
        if alpha.side != "left":
            raise PartitionError("expected a left enhanced partition")
        return alpha
    if n is None:
        raise PartitionError("n is required for a plain partition")
    return left(alpha, n)


# --- mutable coefficients and the q / p transformations -------------------

def mutable_set(alpha) -> list[int]:
    """Indices of the nonzero coefficients in front of the bar (1-based)."""
    bl = alpha.blocks if isinstance(alpha, Enhanced) else blocks(alpha)
    return [i for i, (v, _) in enumerate(bl, 1) if v != 0]


def q(alpha, J: Iterable[int]):
    """Decrement the coefficients indexed by J; multiplicities are kept."""
    J = set(J)
    enh = alpha if isinstance(alpha, Enhanced) else None
    bl = enh.blocks if enh else blocks(alpha)
    if not J <= set(mutable_set(alpha)):
        raise PartitionError(f"{sorted(J)} is not a subset of the mutable set")
    free = from_blocks((v - 1 if i in J else v, mu) for i, (v, mu) in enumerate(bl, 1))
    if enh is None:
        return free
    if enh.side == "right":
        return Enhanced(free + enh.values[len(free):], enh.n, "right", enh.bar)
    raise PartitionError("q is defined on right enhanced partitions")


def p_defined(alpha, i: int) -> bool:
    bl = alpha.blocks if isinstance(alpha, Enhanced) else blocks(alpha)
    r = len(bl)
    if 1 <= i <= r - 1 and bl[i - 1][1] > 1:
        return True
    return i == 1 and r >= 2 and bl[0] == (0, 1)


def p(alpha, i: int):
    """Move one unit of multiplicity from block i to block i + 1."""
    if not p_defined(alpha, i):
        raise PartitionError(f"p_{i} is not defined here")
    enh = alpha if isinstance(alpha, Enhanced) else None
    bl = [list(b) for b in (enh.blocks if enh else blocks(alpha))]
    bl[i - 1][1] -= 1
    bl[i][1] += 1
    free = from_blocks((v, mu) for v, mu in bl if mu)
    if enh is None:
        return free
    return Enhanced(free + enh.values[len(free):], enh.n, enh.side, enh.bar)


def is_allowed(alpha, J: Iterable[int]) -> bool:
    J = set(J)
    S = set(mutable_set(alpha))
    if not J <= S:
        raise PartitionError("J must be a subset of the mutable set")
    bl = alpha.blocks if isinstance(alpha, Enhanced) else blocks(alpha)
    for i in J:
        if i - 1 in S - J and not bl[i - 2][0] < bl[i - 1][0] - 1:
            return False
    return True


# --- configurations ---------------------------------------------------------

def alphabet(m: int, n: int) -> range:
    return range(-m, n + 1)


def check_config(R: Iterable[int], m: int, n: int) -> tuple[int, ...]:
    R = tuple(sorted(int(k) for k in R))
    if len(R) != m or len(set(R)) != m:
        raise PartitionError(f"a configuration has {m} distinct beads")
    if R and (R[0] < -m or R[-1] > n):
        raise PartitionError(f"beads must lie in [{-m}, {n}]")
    return R


def phi_r(alpha, n: int | None = None) -> tuple[int, ...]:
    a = _as_right(alpha, n)
    bl = a.blocks
    removed = {-x for x in ending_indices(bl)}
    neg = [k for k in range(-a.m, 0) if k not in removed]
    return tuple(sorted(neg + [v for v, _ in bl]))


def phi_l(alpha, n: int | None = None) -> tuple[int, ...]:
    a = _as_left(alpha, n)
    bl = a.blocks
    starts, acc = [], a.bar
    for _, mu in bl:
        starts.append(acc + 1)
        acc += mu
    removed = {-s for s in starts}
    neg = [k for k in range(-a.m, 0) if k not in removed]
    return tuple(sorted(neg + [v for v, _ in bl]))


def inverse_phi_r(R: Iterable[int], m: int, n: int) -> Enhanced:
    R = check_config(R, m, n)
    pos = [k for k in R if k >= 0]
    removed = sorted(-k for k in range(-m, 0) if k not in R)
    if len(removed) != len(pos):
        raise PartitionError("not a right configuration")
    xs = [0] + removed
    mults = [b - a for a, b in zip(xs, xs[1:])]
    bar = m - xs[-1]
    if bar and -m not in R:
        raise PartitionError("not a right configuration")
    return from_compact(pos, mults, n, "right", bar)


def inverse_phi_l(R: Iterable[int], m: int, n: int) -> Enhanced:
    R = check_config(R, m, n)
    pos = [k for k in R if k >= 0]
    starts = sorted(-k for k in range(-m, 0) if k not in R)
    if len(starts) != len(pos):
        raise PartitionError("not a left configuration")
    if not pos:
        return Enhanced((0,) * m, n, "left", m)
    bar = starts[0] - 1
    bounds = starts + [m + 1]
    mults = [b - a for a, b in zip(bounds, bounds[1:])]
    return from_compact(pos, mults, n, "left", bar)


# --- f, g, delta and the cyclic shift -------------------------------------

def f(alpha, n: int | None = None) -> Enhanced:
    """(l1^u1, ..., lr^ur | n^u') -> (0^(u1-1) | l1^u2, ..., lr^(u'+1))."""
    a = _as_right(alpha, n)
    bl = a.blocks
    if not bl:
        return Enhanced((0,) * a.m, a.n, "left", a.m)
    mults = [mu for _, mu in bl[1:]] + [a.bar + 1]
    return from_compact([v for v, _ in bl], mults, a.n, "left", bl[0][1] - 1)


def g(alpha, n: int | None = None) -> Enhanced:
    """(0^u0 | l1^u1, ..., lr^ur) -> (l1^(u0+1), l2^u1, ..., lr^u(r-1) | n^(ur-1))."""
    a = _as_left(alpha, n)
    bl = a.blocks
    if not bl:
        return Enhanced((a.n,) * a.m, a.n, "right", a.m)
    mults = [a.bar + 1] + [mu for _, mu in bl[:-1]]
    return from_compact([v for v, _ in bl], mults, a.n, "right", bl[-1][1] - 1)


def delta(alpha, n: int | None = None) -> Enhanced:
    """Enhancement of q_S(alpha) read on the left, S the mutable set."""
    a = _as_right(alpha, n)
    bl = a.blocks
    tail = [(a.n, a.bar)] if a.bar else []
    if bl and bl[0][0] == 0:
        rest = [(v - 1, mu) for v, mu in bl[1:]] + tail
        return from_compact([v for v, _ in rest], [mu for _, mu in rest], a.n, "left", bl[0][1])
    rest = [(v - 1, mu) for v, mu in bl] + tail
    return from_compact([v for v, _ in rest], [mu for _, mu in rest], a.n, "left", 0)


def f_tilde(alpha, n: int | None = None) -> Enhanced:
    return g(delta(alpha, n))


def shift_left(R: Iterable[int], m: int, n: int) -> tuple[int, ...]:
    """Move every bead one column to the left, wrapping -m round to n."""
    return tuple(sorted(n if k == -m else k - 1 for k in R))


def nonzero_positive(R: Iterable[int]) -> int:
    return sum(1 for k in R if k > 0)


def orbit_trace(alpha, n: int | None = None) -> list[tuple[tuple[int, ...], int]]:
    """Iterate f~ m+n+1 times; record each configuration and its |S|."""
    a = _as_right(alpha, n)
    m, n = a.m, a.n
    trace, cur = [], a
    for _ in range(m + n + 1):
        cur = f_tilde(cur)
        R = phi_r(cur)
        trace.append((R, len(mutable_set(cur))))
    return trace


# --- moves on configurations -----------------------------------------------

def allowed_moves(R: Iterable[int], m: int, n: int) -> list[int]:
    R = set(check_config(R, m, n))
    return sorted(k for k in R if k - 1 >= -m and k - 1 not in R)


def is_allowed_config(R: Iterable[int], J: Iterable[int], m: int, n: int) -> bool:
    R = set(check_config(R, m, n))
    J = set(J)
    if not J <= R:
        raise PartitionError("J must be a subset of the configuration")
    return all(j - 1 >= -m and (j - 1 not in R or j - 1 in J) for j in J)


def sigma_minus(R: Iterable[int], k: int, m: int, n: int) -> tuple[int, ...]:
    R = set(check_config(R, m, n))
    if k not in R or k - 1 in R or k - 1 < -m:
        raise PartitionError(f"sigma_{k} is not defined on {sorted(R)}")
    return tuple(sorted((R - {k}) | {k - 1}))


def kappa(R: Iterable[int], l: int) -> int:
    return sum(x for x in R if 0 <= x <= l)


def nu(R: Iterable[int], k: int) -> int:
    return sum(x for x in R if x <= k)


def kappa_total(alpha) -> int:
    """Sum of the distinct coefficients."""
    bl = alpha.blocks if isinstance(alpha, Enhanced) else blocks(alpha)
    return sum(v for v, _ in bl)


def parse_ints(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()[]{}")
    return tuple(int(t) for t in text.replace(" ", "").split(",") if t)
