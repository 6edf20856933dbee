"""Higher Auslander algebras of type A, the tilting object built from the
P_alpha, and the comparisons between their presentations."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .lattice import build_lattice
from .partitions import PartitionError, kappa_total, phi_r
from .quiver import Arrow, QuiverPresentation, presentations_isomorphic, quadratic_dual
from .ycat import config_partition, hom_degree, plain_configurations, presentation


def auslander_vertices(s: int, d: int) -> list[tuple]:
    return list(combinations(range(1, d + s + 1), d + 1))


def sigma_plus(x, k: int, top: int):
    if k not in x or k + 1 in x or k + 1 > top:
        return None
    return tuple(sorted((set(x) - {k}) | {k + 1}))


def higher_auslander(s: int, d: int) -> QuiverPresentation:
    """Quiver x -> sigma_k^+(x) with commuting squares and consecutive zero paths.

    The algebra is the opposite of the path algebra quotient; the flag says so.
    """
    if s < 1 or d < 0:
        raise ValueError("need s >= 1 and d >= 0")
    top = d + s
    verts = auslander_vertices(s, d)
    aid = lambda x, k: f"a{k}@{','.join(map(str, x))}"
    arrows = [Arrow(aid(x, k), x, y) for x in verts for k in x
              if (y := sigma_plus(x, k, top)) is not None]
    rels = []
    for x in verts:
        movable = [k for k in x if sigma_plus(x, k, top) is not None]
        for k, l in combinations(movable, 2):
            xk, xl = sigma_plus(x, k, top), sigma_plus(x, l, top)
            rels.append({(aid(x, l), aid(xl, k)): Fraction(1), (aid(x, k), aid(xk, l)): Fraction(-1)})
        for k in x:
            if k + 1 in x and sigma_plus(x, k + 1, top) is not None:
                y = sigma_plus(x, k + 1, top)
                rels.append({(aid(x, k + 1), aid(y, k)): Fraction(1)})
    return QuiverPresentation(verts, arrows, rels, "op")


# --- the tilting object ---------------------------------------------------------

@dataclass(frozen=True)
class TiltingSummand:
    alpha: tuple
    kappa: int

    @property
    def shift(self) -> int:
        """Homological shift of the summand: P_alpha[-kappa]."""
        return -self.kappa


def tilting_summands(m: int, n: int) -> list[TiltingSummand]:
    return [TiltingSummand(a, kappa_total(a)) for a in build_lattice(m, n).elements]


def self_extension_report(m: int, n: int) -> dict:
    """Every nonzero Hom between summands should sit in degree zero."""
    T = tilting_summands(m, n)
    bad, count = [], 0
    for A in T:
        for B in T:
            h = hom_degree(A.alpha, B.alpha, n)
            if h is None:
                continue
            count += 1
            degree = h.degree - B.shift + A.shift
            if degree != 0:
                bad.append({"source": list(A.alpha), "target": list(B.alpha), "degree": degree})
    return {"schema": "fcy/1", "m": m, "n": n, "nonzero_homs": count,
            "holds": not bad, "failures": bad}


def end_tilting_presentation(m: int, n: int) -> QuiverPresentation:
    """Arrows and relations among the shifted summands, via the commuting generators."""
    Q = presentation(m, n, "v")
    for a in Q.arrows:
        src, tgt = config_partition(a.src, m, n), config_partition(a.tgt, m, n)
        h = hom_degree(src, tgt, n)
        if h is None or h.degree - kappa_total(src) + kappa_total(tgt) != 0:
            raise AssertionError(f"arrow {a.id} is not a degree zero map between summands")
    return QuiverPresentation(Q.vertices, Q.arrows, Q.relations, "alg")


def complement_shift(R, m: int, n: int) -> tuple:
    R = set(R)
    if -m in R:
        raise PartitionError("-m in the configuration: not a plain partition")
    return tuple(sorted(k + m for k in range(-m + 1, n + 1) if k not in R))


def translate(R, m: int) -> tuple:
    return tuple(sorted(k + m for k in R))


def complement_in(x, top: int) -> tuple:
    return tuple(k for k in range(1, top + 1) if k not in set(x))


def tilting_matches_auslander(m: int, n: int) -> bool:
    Q1 = end_tilting_presentation(m, n)
    Q2 = higher_auslander(m + 1, n - 1)
    return presentations_isomorphic(Q1, Q2, lambda R: complement_shift(R, m, n))


def anticommuting_matches_dual(m: int, n: int) -> bool:
    Q1 = presentation(m, n, "w")
    Q2 = quadratic_dual(higher_auslander(n + 1, m - 1))
    return presentations_isomorphic(Q1, Q2, lambda R: translate(R, m))


def auslander_self_dual(s: int, d: int) -> bool:
    """A_s^d against the dual of A_{d+2}^{s-2}, vertices matched by complements."""
    Q1 = higher_auslander(s, d)
    Q2 = quadratic_dual(higher_auslander(d + 2, s - 2))
    return presentations_isomorphic(Q1, Q2, lambda x: complement_in(x, d + s), modulate_signs=True)


def two_path_count(Q: QuiverPresentation) -> int:
    return len(Q.two_paths())


__all__ = ["higher_auslander", "auslander_vertices", "quadratic_dual", "tilting_summands",
           "TiltingSummand", "self_extension_report", "end_tilting_presentation",
           "complement_shift", "translate", "complement_in", "presentations_isomorphic",
           "tilting_matches_auslander", "anticommuting_matches_dual", "auslander_self_dual",
           "plain_configurations", "phi_r"]
