"""Morphisms between the objects P_alpha: degrees, factorizations, chain-level
realizations, formal word calculus and generator presentations.

Objects are the projective resolutions of the antichain modules of plain
partitions.  Configurations of plain partitions never contain -m, so the
moves k -> k-1 available inside the category need k - 1 >= -m + 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import chain, combinations

from .antichains import build_resolution, lowering_antichain
from .homalg import ChainMap, chain_map_basis, compose, derived_hom, is_null_homotopic
from .lattice import Interval, build_lattice, leq
from .partitions import (
    PartitionError, blocks, ending_indices, f, inverse_phi_r, is_allowed, kappa, kappa_total,
    mutable_set, nu, p, p_defined, phi_r, q, right, sigma_minus,
)
from .quiver import Arrow, QuiverPresentation


class HomError(ValueError):
    pass


def _subsets(xs):
    xs = list(xs)
    return chain.from_iterable(combinations(xs, k) for k in range(len(xs) + 1))


def target_interval(beta, n: int) -> Interval:
    return Interval(f(right(beta, n)).plain, tuple(beta))


# --- hom degrees -----------------------------------------------------------

@dataclass(frozen=True)
class HomDegree:
    J: tuple
    degree: int


def hom_degree(alpha, beta, n: int) -> HomDegree | None:
    alpha, beta = tuple(alpha), tuple(beta)
    I = target_interval(beta, n)
    hits = [J for J in _subsets(mutable_set(alpha)) if q(alpha, J) in I]
    if not hits:
        return None
    # the hits always form an interval of subsets; only a single hit gives a morphism
    lo, hi = set.intersection(*map(set, hits)), set.union(*map(set, hits))
    if len(hits) != 2 ** len(hi - lo):
        raise AssertionError(f"subsets landing in the interval do not form an interval: {hits}")
    return HomDegree(hits[0], len(hits[0])) if len(hits) == 1 else None


@lru_cache(maxsize=None)
def resolution(alpha, n: int):
    """The antichain resolution P_alpha."""
    return build_resolution(lowering_antichain(tuple(alpha), n))


def hom_oracle(alpha, beta, n: int) -> dict:
    """dim Hom(P_alpha, P_beta[p]) by linear algebra, zero entries dropped."""
    return derived_hom(resolution(tuple(alpha), n), target_interval(beta, n))


# --- degree zero ------------------------------------------------------------

def _item5(alpha, beta) -> bool:
    a, b = blocks(alpha), blocks(beta)
    lam, ls = [v for v, _ in a], [v for v, _ in b]
    xs, ys = [0] + ending_indices(a), [0] + ending_indices(b)
    m = len(alpha)
    Sa, Sb = mutable_set(alpha), mutable_set(beta)
    if not {lam[i - 1] for i in Sa} <= {ls[j - 1] for j in Sb}:
        return False
    for j in Sb:
        y_next = ys[j + 1] if j < len(b) else m + 1
        if not any(lam[i - 1] == ls[j - 1] and xs[i - 1] < ys[j] <= xs[i] < y_next for i in Sa):
            return False
    # a zero block in beta forces one in alpha, ending no earlier
    if ls[0] == 0 and not (lam[0] == 0 and ys[1] <= xs[1]):
        return False
    return True


def item5_literal(alpha, beta) -> bool:
    """The interlacing and value inclusion only, without the zero-block clause."""
    a, b = blocks(alpha), blocks(beta)
    lam, ls = [v for v, _ in a], [v for v, _ in b]
    xs, ys = [0] + ending_indices(a), [0] + ending_indices(b)
    m = len(alpha)
    Sa, Sb = mutable_set(alpha), mutable_set(beta)
    if not {lam[i - 1] for i in Sa} <= {ls[j - 1] for j in Sb}:
        return False
    for j in Sb:
        y_next = ys[j + 1] if j < len(b) else m + 1
        if not any(lam[i - 1] == ls[j - 1] and xs[i - 1] < ys[j] <= xs[i] < y_next for i in Sa):
            return False
    return True


def hom0_characterizations(alpha, beta, n: int) -> tuple[bool, bool, bool, bool, bool]:
    alpha, beta = tuple(alpha), tuple(beta)
    I = target_interval(beta, n)
    fa, fb = f(right(alpha, n)).plain, f(right(beta, n)).plain
    S = mutable_set(alpha)
    one = hom_oracle(alpha, beta, n).get(0, 0) == 1
    two = leq(fa, fb) and leq(fb, alpha) and leq(alpha, beta)
    three = alpha in I and all(q(alpha, J) not in I for J in _subsets(S) if J)
    lam = {blocks(alpha)[i - 1][0] for i in S}
    ls = {blocks(beta)[j - 1][0] for j in mutable_set(beta)}
    four = alpha in I and lam <= ls
    return one, two, three, four, _item5(alpha, beta)


# --- factorizations ---------------------------------------------------------

def degree_zero_word(alpha, beta) -> tuple[int, ...]:
    """Exponents d with beta = p_1^d1 ... p_r^dr (alpha), p_r applied first."""
    a, b = blocks(alpha), blocks(beta)
    xs, ys = ending_indices(a), ending_indices(b)
    d = []
    for i, (v, _) in enumerate(a):
        js = [j for j, (w, _) in enumerate(b) if w == v]
        if js:
            d.append(xs[i] - ys[js[0]])
        elif i == 0 and v == 0:
            d.append(a[0][1])
        else:
            raise HomError(f"value {v} of {alpha} does not occur in {beta}")
    return tuple(d)


def replay_degree_zero(alpha, d) -> tuple:
    cur = tuple(alpha)
    for i in range(len(d), 0, -1):
        for _ in range(d[i - 1]):
            if not p_defined(cur, i):
                raise HomError(f"p_{i} undefined on {cur}")
            cur = p(cur, i)
    return cur


def canonical_factorization(alpha, beta, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    h = hom_degree(alpha, beta, n)
    if h is None:
        raise HomError(f"no morphism from P{tuple(alpha)} to any shift of P{tuple(beta)}")
    mid = q(tuple(alpha), h.J)
    d = degree_zero_word(mid, beta)
    if replay_degree_zero(mid, d) != tuple(beta):
        raise AssertionError("degree zero word does not replay")
    word = canonical_list(alpha, beta, n)
    if word is None or compose_word(MorphismWord(phi_r(tuple(alpha), n), tuple(word)),
                                    len(alpha), n) is None:
        raise AssertionError("canonical list does not compose to a nonzero morphism")
    return tuple(sorted(h.J)), d


# --- formal words -------------------------------------------------------------

@dataclass(frozen=True)
class MorphismWord:
    start: tuple
    moves: tuple


def fold_moves(R, moves, m: int, n: int) -> list[tuple]:
    """Configurations visited by the word; raises if a move is undefined."""
    states = [tuple(R)]
    for k in moves:
        states.append(sigma_minus(states[-1], k, m, n))
    return states


def k_min(K, m: int, n: int) -> int:
    cands = [k for k in range(-m, 2) if k not in set(K)]
    return max(cands) if cands else 1


def f_order_key(K, m: int, n: int):
    base = k_min(K, m, n)
    size = m + n + 1
    return lambda k: (k - base) % size


def compose_word(w: MorphismWord, m: int, n: int):
    """None for the zero morphism, else (sign, sorted moves)."""
    fold_moves(w.start, w.moves, m, n)
    R0 = set(w.start)
    if any(k not in R0 for k in w.moves):
        return None
    key = f_order_key(w.moves, m, n)
    ks, sign = list(w.moves), 1
    for i in range(len(ks)):
        for j in range(len(ks) - 1 - i):
            if key(ks[j + 1]) < key(ks[j]):
                if ks[j] > 0 and ks[j + 1] > 0:
                    sign = -sign
                ks[j], ks[j + 1] = ks[j + 1], ks[j]
    fold_moves(w.start, ks, m, n)
    return sign, tuple(ks)


def canonical_list(alpha, beta, n: int):
    """Beads that move one step left to turn R(alpha) into R(beta), in <_f order."""
    m = len(alpha)
    R, T = phi_r(tuple(alpha), n), phi_r(tuple(beta), n)
    if any(t not in (r, r - 1) for r, t in zip(R, T)):
        return None
    K = [r for r, t in zip(R, T) if t == r - 1]
    key = f_order_key(K, m, n)
    K.sort(key=key)
    try:
        states = fold_moves(R, K, m, n)
    except PartitionError:
        return None
    if any(-m in s for s in states):
        return None
    return K


# --- chain level ----------------------------------------------------------------

def _summand_index(alpha, J, degree: int, n: int) -> int:
    S = mutable_set(alpha)
    pos = tuple(sorted(S.index(i) for i in J))
    return resolution(tuple(alpha), n).keys[degree].index(pos)


def canonical_map(alpha, beta, n: int) -> ChainMap:
    """The morphism P_alpha -> P_beta[d] whose coordinate at P_{q_J alpha} -> P_beta is 1."""
    alpha, beta = tuple(alpha), tuple(beta)
    h = hom_degree(alpha, beta, n)
    if h is None:
        raise HomError(f"Hom(P{alpha}, P{beta}[*]) = 0")
    C, D = resolution(alpha, n), resolution(beta, n)
    col = _summand_index(alpha, h.J, h.degree, n)
    for phi in chain_map_basis(C, D, h.degree):
        c = phi.comp(h.degree)[0][col]
        if c:
            return phi.scaled(Fraction(1) / c)
    raise AssertionError("no chain map realizes the predicted morphism")


def coordinate(phi: ChainMap, alpha, J, n: int) -> Fraction:
    """Homotopy-invariant coordinate of a map P_alpha -> P_beta[|J|]."""
    return Fraction(phi.comp(len(J))[0][_summand_index(alpha, J, len(J), n)])


def explicit_lift(alpha, J, n: int) -> ChainMap:
    """Closed-form chain map P_alpha -> P_{q_J alpha}[|J|]."""
    alpha, J = tuple(alpha), tuple(sorted(J))
    if not set(J) <= set(mutable_set(alpha)) or not is_allowed(alpha, J):
        raise HomError(f"{J} is not allowed for {alpha}")
    beta = q(alpha, J)
    C, D = resolution(alpha, n), resolution(beta, n)
    S = mutable_set(alpha)
    j = len(J)
    comps = {}
    for deg in C.support:
        k = deg - j
        M = [[0] * len(C.term(deg)) for _ in D.term(k)]
        for col, pos in enumerate(C.keys[deg]):
            I = {S[t] for t in pos}
            if not set(J) <= I:
                continue
            label = C.term(deg)[col]
            rows = [r for r, y in enumerate(D.term(k)) if y == label]
            if len(rows) != 1:
                raise AssertionError(f"summand {label} is not matched once in the target")
            e = sum(sum(1 for h in J if h <= i) for i in I - set(J)) + j * k
            M[rows[0]][col] = -1 if e % 2 else 1
        comps[deg] = M
    phi = ChainMap(C, D, j, comps)
    if not phi.is_chain_map():
        raise AssertionError(f"closed-form lift for {alpha}, {J} is not a chain map")
    return phi


def config_partition(R, m: int, n: int) -> tuple:
    a = inverse_phi_r(R, m, n)
    if a.bar:
        raise PartitionError(f"{R} is not the configuration of a plain partition")
    return a.plain


def arrow_map(R, k: int, m: int, n: int) -> ChainMap:
    R2 = sigma_minus(R, k, m, n)
    return canonical_map(config_partition(R, m, n), config_partition(R2, m, n), n)


def word_map(R, moves, m: int, n: int) -> ChainMap:
    states = fold_moves(R, moves, m, n)
    phi = None
    for S, k in zip(states, moves):
        u = arrow_map(S, k, m, n)
        phi = u if phi is None else compose(u, phi)
    return phi


def _movable(R, k: int, m: int) -> bool:
    return k in R and k - 1 not in R and k - 1 >= -m + 1


def square_sign(k: int, l: int) -> int:
    return -1 if k > 0 and l > 0 else 1


def verify_relation_chainlevel(R, k: int, l: int | None, m: int, n: int) -> bool:
    """Square rho_{k,l} (l given) or zero relation z_k (l None) at chain level."""
    R = tuple(sorted(R))
    if l is None:
        composite = word_map(R, (k, k - 1), m, n)
        return is_null_homotopic(composite)
    lhs = word_map(R, (k, l), m, n)
    rhs = word_map(R, (l, k), m, n)
    return is_null_homotopic(lhs - rhs.scaled(square_sign(k, l)))


# --- presentations ------------------------------------------------------------------

def plain_configurations(m: int, n: int) -> list[tuple]:
    return [phi_r(a, n) for a in build_lattice(m, n).elements]


def arrow_id(prefix: str, R, k: int) -> str:
    return f"{prefix}{k}@{','.join(map(str, R))}"


def squares(R, m: int) -> list[tuple[int, int]]:
    mv = [k for k in R if _movable(R, k, m)]
    return [(k, l) for k, l in combinations(mv, 2)]


def zero_relations(R, m: int) -> list[int]:
    return [k for k in R if _movable(R, k, m) and k - 2 not in R and k - 2 >= -m + 1]


def generator_scale(variant: str, R, k: int) -> int:
    """Sign c with (variant generator) = c * u_k^R."""
    if variant == "u":
        return 1
    if variant == "v":
        return -1 if kappa(R, k) % 2 else 1
    if variant == "w":
        if k <= 0:
            return -1 if (nu(R, k) + kappa(R, max(R))) % 2 else 1
        return 1
    raise ValueError(f"unknown variant {variant!r}")


def presentation(m: int, n: int, variant: str = "u") -> QuiverPresentation:
    if variant not in ("u", "v", "w"):
        raise ValueError(f"unknown variant {variant!r}")
    verts = plain_configurations(m, n)
    arrows = []
    for R in verts:
        for k in R:
            if _movable(R, k, m):
                arrows.append(Arrow(arrow_id(variant, R, k), R, sigma_minus(R, k, m, n)))

    def gen(R, k):
        return arrow_id(variant, R, k)

    def term(R, ks):
        """Path through ks from R and the factor turning u-words into generator words."""
        states = fold_moves(R, ks, m, n)
        c = 1
        for S, k in zip(states, ks):
            c *= generator_scale(variant, S, k)
        return (gen(states[0], ks[0]), gen(states[1], ks[1])), c

    rels = []
    for R in verts:
        for k, l in squares(R, m):
            p1, c1 = term(R, (k, l))
            p2, c2 = term(R, (l, k))
            # u_l u_k - eps u_k u_l = 0, with u = c * generator
            coeffs = {p1: Fraction(c1), p2: Fraction(-square_sign(k, l) * c2)}
            lead = coeffs[p1]
            rels.append({pp: cc / lead for pp, cc in coeffs.items()})
        for k in zero_relations(R, m):
            p1, _ = term(R, (k, k - 1))
            rels.append({p1: Fraction(1)})
    return QuiverPresentation(verts, arrows, rels, "alg")


def square_types(Q: QuiverPresentation) -> dict:
    """Count commuting (+1,-1) and anticommuting (+1,+1) two-term relations."""
    out = {"commuting": 0, "anticommuting": 0, "zero": 0, "other": 0}
    for rel in Q.relations:
        cs = sorted(rel.values())
        if len(cs) == 1:
            out["zero"] += 1
        elif cs == [-1, 1]:
            out["commuting"] += 1
        elif cs == [1, 1]:
            out["anticommuting"] += 1
        else:
            out["other"] += 1
    return out


def hom_table(m: int, n: int) -> list[tuple[tuple, tuple, HomDegree | None]]:
    L = build_lattice(m, n)
    return [(a, b, hom_degree(a, b, n)) for a in L.elements for b in L.elements]


__all__ = [
    "HomDegree", "HomError", "MorphismWord", "hom_degree", "hom_oracle", "hom0_characterizations",
    "item5_literal", "canonical_factorization", "degree_zero_word", "replay_degree_zero",
    "compose_word", "canonical_list", "canonical_map", "explicit_lift", "coordinate",
    "verify_relation_chainlevel", "presentation", "plain_configurations", "word_map",
    "arrow_map", "square_types", "hom_table", "resolution", "config_partition",
    "k_min", "kappa_total", "squares", "zero_relations", "generator_scale",
]
