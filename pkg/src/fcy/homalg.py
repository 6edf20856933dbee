"""Complexes of projectives over the incidence algebra of J(m, n).

Hom(P_x, P_y) is one-dimensional when x <= y and zero otherwise, and all
composites are scalar products, so a map between sums of indecomposable
projectives is just a scalar matrix supported on comparable label pairs.

Conventions: boundaries lower the degree; the matrix of d_k has one row
per summand of degree k-1 and one column per summand of degree k.  The
shift X[s] has X[s]_k = X_(k-s) and differential (-1)^s d_X.  A chain map
C -> D[s] has components C_k -> D_(k-s).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .lattice import GridLattice, Interval, leq
from .linalg import matmul, nullspace, qmat, rank, zeros


class ComplexError(ValueError):
    pass


@dataclass
class ProjectiveComplex:
    degrees: dict
    boundaries: dict = field(default_factory=dict)
    keys: dict | None = None
    kind: str = "projective"

    def __post_init__(self):
        self.degrees = {d: [tuple(x) for x in v] for d, v in self.degrees.items() if v}
        self.boundaries = {d: B for d, B in self.boundaries.items()
                           if self.term(d) and self.term(d - 1)}

    def term(self, d: int) -> list:
        return self.degrees.get(d, [])

    def bd(self, d: int):
        B = self.boundaries.get(d)
        if B is None:
            return zeros(len(self.term(d - 1)), len(self.term(d)))
        return B

    @property
    def support(self) -> list[int]:
        return sorted(self.degrees)

    def span(self) -> range:
        s = self.support
        return range(s[0], s[-1] + 1) if s else range(0)

    def validate(self):
        for d, B in self.boundaries.items():
            src, tgt = self.term(d), self.term(d - 1)
            if len(B) != len(tgt) or any(len(row) != len(src) for row in B):
                raise ComplexError(f"boundary {d} has the wrong shape")
            for t, row in enumerate(B):
                for s, c in enumerate(row):
                    if c and not leq(src[s], tgt[t]):
                        raise ComplexError(f"no map P{src[s]} -> P{tgt[t]}")
        for d in self.span():
            prod = matmul(self.bd(d - 1), self.bd(d))
            if any(x for row in prod for x in row):
                raise ComplexError(f"d o d != 0 at degree {d}")
        return self

    def shifted(self, s: int) -> "ProjectiveComplex":
        sign = -1 if s % 2 else 1
        return ProjectiveComplex(
            {d + s: v for d, v in self.degrees.items()},
            {d + s: [[sign * c for c in row] for row in B] for d, B in self.boundaries.items()},
            None if self.keys is None else {d + s: v for d, v in self.keys.items()},
            self.kind)

    def to_json(self) -> dict:
        span = list(self.span())
        return {
            "schema": "fcy/1",
            "kind": self.kind,
            "min_degree": span[0] if span else 0,
            "degrees": [[",".join(map(str, x)) for x in self.term(d)] for d in span],
            "boundaries": [[[t, s, str(c)] for t, row in enumerate(self.bd(d))
                            for s, c in enumerate(row) if c] for d in span[1:]],
        }


InjectiveComplex = ProjectiveComplex


def projective(x, degree: int = 0) -> ProjectiveComplex:
    return ProjectiveComplex({degree: [tuple(x)]})


# --- total hom into an interval module ------------------------------------

@dataclass
class CochainOfSpaces:
    bases: dict
    coboundaries: dict

    @property
    def dims(self) -> dict:
        return {d: len(b) for d, b in self.bases.items()}

    def cob(self, d: int):
        M = self.coboundaries.get(d)
        if M is None:
            return zeros(len(self.bases.get(d + 1, [])), len(self.bases.get(d, [])))
        return M


def total_hom(C: ProjectiveComplex, I: Interval) -> CochainOfSpaces:
    """Hom(C, M_I): one basis vector per summand whose label lies in I."""
    bases = {d: [i for i, x in enumerate(C.term(d)) if x in I] for d in C.span()}
    cobs = {}
    for d in C.span():
        src, tgt = bases[d], bases.get(d + 1, [])
        if not src or not tgt:
            continue
        B = C.bd(d + 1)
        cobs[d] = [[B[s][t] for s in src] for t in tgt]
    return CochainOfSpaces(bases, cobs)


def cohomology_dims(K: CochainOfSpaces) -> dict:
    out = {}
    for d, b in K.bases.items():
        out[d] = len(b) - rank(K.cob(d)) - rank(K.cob(d - 1))
    return out


def derived_hom(C: ProjectiveComplex, I: Interval, shift_range=None) -> dict:
    """dim Hom(C, M_I[p]) for each p; zero entries dropped."""
    dims = cohomology_dims(total_hom(C, I))
    if shift_range is not None:
        dims = {d: v for d, v in dims.items() if d in shift_range}
    return {d: v for d, v in dims.items() if v}


def predicted_hom(C, I: Interval):
    """Unique S with meet(S) in I, if the set of such S is a singleton.

    Returns (member tuple, |S|) or None.  The set of contributing subsets
    is certified to be an interval of the subset lattice.
    """
    from .antichains import AntichainError, classify

    if not classify(C).boolean:
        raise AntichainError("the prediction needs a boolean antichain")
    E = [S for S in C.subsets() if C.meet_of(S) in I]
    if not E:
        return None
    lo = set.intersection(*map(set, E))
    hi = set.union(*map(set, E))
    expected = {S for S in C.subsets() if lo <= set(S) <= hi}
    if expected != set(E):
        raise AssertionError("contributing subsets do not form an interval")
    if len(E) != 1:
        return None
    S = E[0]
    return tuple(C.members[i] for i in S), len(S)


# --- chain maps, homotopies ----------------------------------------------

@dataclass
class ChainMap:
    source: ProjectiveComplex
    target: ProjectiveComplex
    shift: int
    components: dict

    def comp(self, d: int):
        M = self.components.get(d)
        if M is None:
            return zeros(len(self.target.term(d - self.shift)), len(self.source.term(d)))
        return M

    def degrees(self) -> list[int]:
        return [d for d in self.source.support if self.target.term(d - self.shift)]

    def is_chain_map(self) -> bool:
        C, D, s = self.source, self.target, self.shift
        sign = -1 if s % 2 else 1
        for d in range(min(C.span(), default=0), max(C.span(), default=-1) + 2):
            lhs = matmul(D.bd(d - s), self.comp(d))
            rhs = matmul(self.comp(d - 1), C.bd(d))
            if any(sign * a != b for ra, rb in zip(lhs, rhs) for a, b in zip(ra, rb)):
                return False
        return True

    def check_support(self) -> bool:
        for d in self.degrees():
            src, tgt = self.source.term(d), self.target.term(d - self.shift)
            for t, row in enumerate(self.comp(d)):
                for s, c in enumerate(row):
                    if c and not leq(src[s], tgt[t]):
                        return False
        return True

    def scaled(self, c) -> "ChainMap":
        return ChainMap(self.source, self.target, self.shift,
                        {d: [[c * x for x in row] for row in M] for d, M in self.components.items()})

    def __sub__(self, other: "ChainMap") -> "ChainMap":
        return self + other.scaled(-1)

    def __add__(self, other: "ChainMap") -> "ChainMap":
        if other.shift != self.shift:
            raise ComplexError("shift mismatch")
        ds = set(self.components) | set(other.components)
        return ChainMap(self.source, self.target, self.shift,
                        {d: [[a + b for a, b in zip(ra, rb)]
                             for ra, rb in zip(self.comp(d), other.comp(d))] for d in ds})


def compose(v: ChainMap, u: ChainMap) -> ChainMap:
    """v[a] o u for u: C -> D[a] and v: D -> E[b]; lands in E[a+b]."""
    a = u.shift
    comps = {}
    for d in u.source.support:
        comps[d] = matmul(v.comp(d - a), u.comp(d))
    return ChainMap(u.source, v.target, a + v.shift, comps)


def _map_unknowns(C, D, s):
    """Index of the free scalars of a degree-s map C -> D[s]."""
    idx = {}
    for d in C.support:
        src, tgt = C.term(d), D.term(d - s)
        for si, x in enumerate(src):
            for ti, y in enumerate(tgt):
                if leq(x, y):
                    idx[(d, ti, si)] = len(idx)
    return idx


def _chain_equations(C, D, s, idx):
    sign = -1 if s % 2 else 1
    rows = []
    lo = min(C.support, default=0)
    hi = max(C.support, default=-1)
    for d in range(lo, hi + 2):
        tgt = D.term(d - 1 - s)
        src = C.term(d)
        if not tgt or not src:
            continue
        Bd = D.bd(d - s)      # D_(d-s) -> D_(d-s-1)
        Bc = C.bd(d)          # C_d -> C_(d-1)
        for t in range(len(tgt)):
            for c in range(len(src)):
                row = [0] * len(idx)
                for u in range(len(D.term(d - s))):
                    k = idx.get((d, u, c))
                    if k is not None and Bd[t][u]:
                        row[k] += sign * Bd[t][u]
                for w in range(len(C.term(d - 1))):
                    k = idx.get((d - 1, t, w))
                    if k is not None and Bc[w][c]:
                        row[k] -= Bc[w][c]
                if any(row):
                    rows.append(row)
    return rows


def _homotopy_images(C, D, s, idx):
    """Vectors (in map coordinates) of d h + h d for each elementary h."""
    sign = -1 if s % 2 else 1
    hidx = _map_unknowns(C, D, s - 1)   # h: C_d -> D_(d+1-s)
    vecs = []
    for (d, t, c) in hidx:
        v = [0] * len(idx)
        # d_D o h: C_d -> D_(d-s)
        Bd = D.bd(d + 1 - s)
        for u in range(len(D.term(d - s))):
            if Bd[u][t]:
                k = idx.get((d, u, c))
                if k is not None:
                    v[k] += sign * Bd[u][t]
        # h o d_C: C_(d+1) -> D_(d+1-s)
        Bc = C.bd(d + 1)
        for w in range(len(C.term(d + 1))):
            if Bc[c][w]:
                k = idx.get((d + 1, t, w))
                if k is not None:
                    v[k] += Bc[c][w]
        if any(v):
            vecs.append(v)
    return vecs


def _vector(f: ChainMap, idx) -> list:
    v = [0] * len(idx)
    for d in f.source.support:
        M = f.comp(d)
        for t, row in enumerate(M):
            for c, x in enumerate(row):
                if x:
                    k = idx.get((d, t, c))
                    if k is None:
                        raise ComplexError("component outside the allowed support")
                    v[k] = x
    return v


def _from_vector(C, D, s, idx, v) -> ChainMap:
    comps = {d: zeros(len(D.term(d - s)), len(C.term(d))) for d in C.support}
    for (d, t, c), k in idx.items():
        comps[d][t][c] = v[k]
    return ChainMap(C, D, s, comps)


def chain_map_basis(C, D, s: int) -> list[ChainMap]:
    idx = _map_unknowns(C, D, s)
    eqs = _chain_equations(C, D, s, idx)
    basis = nullspace(qmat(eqs, ncols=len(idx)), ncols=len(idx)) if eqs else \
        [[Fraction(int(i == j)) for j in range(len(idx))] for i in range(len(idx))]
    return [_from_vector(C, D, s, idx, v) for v in basis]


def homotopy_hom_dim(C: ProjectiveComplex, D: ProjectiveComplex, shift: int = 0) -> int:
    idx = _map_unknowns(C, D, shift)
    if not idx:
        return 0
    eqs = _chain_equations(C, D, shift, idx)
    maps = len(idx) - rank(qmat(eqs, ncols=len(idx)))
    hom = _homotopy_images(C, D, shift, idx)
    return maps - rank(qmat(hom, ncols=len(idx)))


def is_null_homotopic(f: ChainMap) -> bool:
    if not f.is_chain_map():
        raise ComplexError("not a chain map")
    C, D, s = f.source, f.target, f.shift
    idx = _map_unknowns(C, D, s)
    v = _vector(f, idx)
    if not any(v):
        return True
    hom = _homotopy_images(C, D, s, idx)
    return rank(qmat(hom, ncols=len(idx))) == rank(qmat(hom + [v], ncols=len(idx)))


def identity(C: ProjectiveComplex) -> ChainMap:
    return ChainMap(C, C, 0, {d: [[int(i == j) for j in range(len(C.term(d)))]
                                  for i in range(len(C.term(d)))] for d in C.support})


def mapping_cone(f: ChainMap) -> ProjectiveComplex:
    """Cone_k = C_(k-1) + D[s]_k with differential [[-d_C, 0], [f, d_D[s]]]."""
    C, Ds = f.source, f.target.shifted(f.shift)
    lo = min(C.support + [d + 1 for d in Ds.support], default=0)
    hi = max([d + 1 for d in C.support] + Ds.support, default=-1)
    degrees, bds = {}, {}
    for k in range(lo, hi + 1):
        degrees[k] = C.term(k - 1) + Ds.term(k)
    for k in range(lo + 1, hi + 1):
        a1, b1 = len(C.term(k - 1)), len(Ds.term(k))
        a0, b0 = len(C.term(k - 2)), len(Ds.term(k - 1))
        M = zeros(a0 + b0, a1 + b1)
        dc, dd, fk = C.bd(k - 1), Ds.bd(k), f.comp(k - 1)
        for i in range(a0):
            for j in range(a1):
                M[i][j] = -dc[i][j]
        for i in range(b0):
            for j in range(a1):
                M[a0 + i][j] = fk[i][j]
            for j in range(b1):
                M[a0 + i][a1 + j] = dd[i][j]
        bds[k] = M
    return ProjectiveComplex(degrees, bds).validate()


def stupid_truncation(C: ProjectiveComplex, i: int) -> ProjectiveComplex:
    """Keep the degrees >= i; the boundary leaving degree i is dropped."""
    return ProjectiveComplex({d: v for d, v in C.degrees.items() if d >= i},
                             {d: B for d, B in C.boundaries.items() if d > i},
                             None if C.keys is None else {d: v for d, v in C.keys.items() if d >= i},
                             C.kind)


def degree_term(C: ProjectiveComplex, d: int) -> ProjectiveComplex:
    """The degree-d term of C as a complex concentrated in degree 0."""
    return ProjectiveComplex({0: C.term(d)})


# --- Nakayama functor -----------------------------------------------------

def apply_nakayama(C: ProjectiveComplex) -> ProjectiveComplex:
    """Replace each P_x by I_x, keeping all scalars."""
    return ProjectiveComplex(dict(C.degrees), dict(C.boundaries), C.keys, "injective")


def injective_homology(IC: ProjectiveComplex, L: GridLattice) -> dict:
    """Per degree, the elements y where the homology is nonzero, with its dimension.

    I_x evaluated at e_y is one-dimensional exactly when x <= y.
    """
    out: dict = {}
    for y in L.elements:
        live = {d: [i for i, x in enumerate(IC.term(d)) if leq(x, y)] for d in IC.span()}

        def restricted(d):
            src, tgt = live.get(d, []), live.get(d - 1, [])
            B = IC.bd(d)
            return [[B[t][s] for s in src] for t in tgt]

        for d in IC.span():
            h = len(live[d]) - rank(qmat(restricted(d), len(live.get(d - 1, [])), len(live[d]))) \
                - rank(qmat(restricted(d + 1), len(live[d]), len(live.get(d + 1, []))))
            if h:
                out.setdefault(d, {})[y] = h
    return out


def homology_support(C: ProjectiveComplex, L: GridLattice) -> dict:
    """Homology of a complex of projectives evaluated at each e_y (P_x lives on y <= x)."""
    out: dict = {}
    for y in L.elements:
        live = {d: [i for i, x in enumerate(C.term(d)) if leq(y, x)] for d in C.span()}

        def restricted(d):
            src, tgt = live.get(d, []), live.get(d - 1, [])
            B = C.bd(d)
            return [[B[t][s] for s in src] for t in tgt]

        for d in C.span():
            h = len(live[d]) - rank(qmat(restricted(d), len(live.get(d - 1, [])), len(live[d]))) \
                - rank(qmat(restricted(d + 1), len(live[d]), len(live.get(d + 1, []))))
            if h:
                out.setdefault(d, {})[y] = h
    return out


__all__ = ["ProjectiveComplex", "InjectiveComplex", "CochainOfSpaces", "ChainMap",
           "projective", "total_hom", "cohomology_dims", "derived_hom", "predicted_hom",
           "homotopy_hom_dim", "is_null_homotopic", "chain_map_basis", "compose", "identity",
           "mapping_cone", "stupid_truncation", "degree_term", "apply_nakayama",
           "injective_homology", "homology_support"]
