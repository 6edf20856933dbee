"""Finite quivers with quadratic relations and their relation spaces."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import qmat, rank, same_row_space


class QuiverError(ValueError):
    pass


def vertex_label(v) -> str:
    if isinstance(v, (tuple, list)):
        return ",".join(map(str, v))
    return str(v)


@dataclass(frozen=True)
class Arrow:
    id: str
    src: tuple
    tgt: tuple


@dataclass
class QuiverPresentation:
    """Relations are dicts path -> coefficient; a path is (first, second) arrow ids."""
    vertices: list
    arrows: list
    relations: list = field(default_factory=list)
    orientation: str = "alg"

    def __post_init__(self):
        if self.orientation not in ("alg", "op"):
            raise QuiverError("orientation must be 'alg' or 'op'")
        self.vertices = [tuple(v) for v in self.vertices]
        self._by_id = {a.id: a for a in self.arrows}
        if len(self._by_id) != len(self.arrows):
            raise QuiverError("duplicate arrow id")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.src not in vs or a.tgt not in vs:
                raise QuiverError(f"arrow {a.id} leaves the vertex set")
        clean = []
        for rel in self.relations:
            rel = {tuple(p): Fraction(c) for p, c in rel.items() if c}
            for p1, p2 in rel:
                if self._by_id[p1].tgt != self._by_id[p2].src:
                    raise QuiverError(f"path {p1},{p2} does not compose")
            if rel:
                clean.append(rel)
        self.relations = clean

    def arrow(self, aid: str) -> Arrow:
        return self._by_id[aid]

    def two_paths(self) -> list[tuple[str, str]]:
        out = []
        for a in self.arrows:
            for b in self.arrows:
                if a.tgt == b.src:
                    out.append((a.id, b.id))
        return sorted(out)

    def relation_matrix(self, paths=None) -> tuple[list, list]:
        paths = paths or self.two_paths()
        pos = {p: i for i, p in enumerate(paths)}
        rows = []
        for rel in self.relations:
            row = [Fraction(0)] * len(paths)
            for p, c in rel.items():
                row[pos[p]] += c
            rows.append(row)
        return rows, paths

    def relation_dim(self) -> int:
        rows, paths = self.relation_matrix()
        return rank(qmat(rows, ncols=len(paths))) if rows else 0

    def to_json(self) -> dict:
        return {
            "schema": "fcy/1",
            "orientation": self.orientation,
            "vertices": [vertex_label(v) for v in self.vertices],
            "arrows": [{"id": a.id, "src": vertex_label(a.src), "tgt": vertex_label(a.tgt)}
                       for a in self.arrows],
            "relations": [[{"coeff": str(c), "path": list(p)} for p, c in sorted(rel.items())]
                          for rel in self.relations],
        }

    def to_dot(self, name: str = "Q") -> str:
        lines = [f'digraph "{name}" {{']
        for v in self.vertices:
            lines.append(f'  "{vertex_label(v)}";')
        for a in self.arrows:
            lines.append(f'  "{vertex_label(a.src)}" -> "{vertex_label(a.tgt)}" [label="{a.id}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _parse_vertex(s: str) -> tuple:
    return tuple(int(t) for t in s.split(",")) if s else ()


def presentation_from_json(data: dict) -> QuiverPresentation:
    arrows = [Arrow(a["id"], _parse_vertex(a["src"]), _parse_vertex(a["tgt"])) for a in data["arrows"]]
    rels = [{tuple(t["path"]): Fraction(t["coeff"]) for t in rel} for rel in data["relations"]]
    return QuiverPresentation([_parse_vertex(v) for v in data["vertices"]], arrows, rels,
                              data.get("orientation", "alg"))


def quadratic_dual(Q: QuiverPresentation) -> QuiverPresentation:
    """Reverse arrows; the new relations span the annihilator of the old ones.

    The pairing matches a path (a, b) with the reversed path (b*, a*).
    """
    from .linalg import nullspace

    rows, paths = Q.relation_matrix()
    if rows:
        perp = nullspace(qmat(rows, ncols=len(paths)), ncols=len(paths))
    else:
        perp = [[Fraction(int(i == j)) for j in range(len(paths))] for i in range(len(paths))]
    star = {a.id: a.id + "*" for a in Q.arrows}
    arrows = [Arrow(star[a.id], a.tgt, a.src) for a in Q.arrows]
    rels = []
    for v in perp:
        rels.append({(star[b], star[a]): c for (a, b), c in zip(paths, v) if c})
    flip = {"alg": "op", "op": "alg"}[Q.orientation]
    return QuiverPresentation(list(Q.vertices), arrows, rels, flip)


def _gf2_solve(equations: list[tuple[int, int]], nvars: int) -> list[int] | None:
    """Solve sum of bits in mask == rhs over GF(2); equations are (mask, rhs)."""
    pivots: dict[int, tuple[int, int]] = {}
    for mask, rhs in equations:
        for bit in sorted(pivots, reverse=True):
            if mask >> bit & 1:
                pm, pr = pivots[bit]
                mask ^= pm
                rhs ^= pr
        if mask == 0:
            if rhs:
                return None
            continue
        top = mask.bit_length() - 1
        for bit, (pm, pr) in list(pivots.items()):
            if pm >> top & 1:
                pivots[bit] = (pm ^ mask, pr ^ rhs)
        pivots[top] = (mask, rhs)
    sol = [0] * nvars
    for bit in sorted(pivots):
        mask, rhs = pivots[bit]
        acc = rhs
        for j in range(bit):
            if mask >> j & 1:
                acc ^= sol[j]
        sol[bit] = acc
    return sol


def _binomials(rels) -> dict:
    """frozenset({p, q}) -> ratio coeff(q)/coeff(p) with p < q."""
    out = {}
    for rel in rels:
        if len(rel) == 2:
            p, q = sorted(rel)
            out[frozenset((p, q))] = rel[q] / rel[p]
    return out


def presentations_isomorphic(Q1: QuiverPresentation, Q2: QuiverPresentation, vertex_map,
                             modulate_signs: bool = False) -> bool:
    """Does vertex_map (a dict or callable on Q1's vertices) induce an isomorphism?

    Arrows are matched by their endpoints.  With modulate_signs the arrows
    of Q1 may be rescaled by signs; the signs are found over GF(2) from the
    two-term relations and then checked by exact rank.
    """
    vm = vertex_map if callable(vertex_map) else (lambda v, d=vertex_map: d[tuple(v)])
    try:
        image = {v: tuple(vm(v)) for v in Q1.vertices}
    except KeyError as e:
        raise QuiverError(f"vertex map is not total: {e}") from None
    if sorted(image.values()) != sorted(Q2.vertices) or len(set(image.values())) != len(image):
        return False
    ends2 = {}
    for a in Q2.arrows:
        ends2.setdefault((a.src, a.tgt), []).append(a.id)
    if any(len(v) > 1 for v in ends2.values()):
        raise QuiverError("parallel arrows are not supported")
    amap = {}
    for a in Q1.arrows:
        key = (image[a.src], image[a.tgt])
        if key not in ends2:
            return False
        amap[a.id] = ends2[key][0]
    if len(set(amap.values())) != len(Q2.arrows) or len(amap) != len(Q2.arrows):
        return False

    def transport(signs):
        out = []
        for rel in Q1.relations:
            new = {}
            for (a, b), c in rel.items():
                s = -1 if signs.get(a, 0) ^ signs.get(b, 0) else 1
                new[(amap[a], amap[b])] = s * c
            out.append(new)
        return out

    signs: dict = {}
    if modulate_signs:
        ids = [a.id for a in Q1.arrows]
        bit = {a: i for i, a in enumerate(ids)}
        inv = {v: k for k, v in amap.items()}
        b1 = _binomials(transport({}))
        b2 = _binomials(Q2.relations)
        eqs = []
        for pair, c1 in b1.items():
            if pair in b2:
                p, q = sorted(pair)
                mask = 0
                for path in (p, q):
                    for x in path:
                        mask ^= 1 << bit[inv[x]]
                eqs.append((mask, int(c1 != b2[pair])))
        sol = _gf2_solve(eqs, len(ids))
        if sol is None:
            return False
        signs = {a: sol[bit[a]] for a in ids}

    paths = Q2.two_paths()
    pos = {p: i for i, p in enumerate(paths)}
    rows1 = []
    for rel in transport(signs):
        row = [Fraction(0)] * len(paths)
        for p, c in rel.items():
            row[pos[p]] += c
        rows1.append(row)
    rows2, _ = Q2.relation_matrix(paths)
    return same_row_space(rows1, rows2, len(paths))


__all__ = ["Arrow", "QuiverPresentation", "QuiverError", "quadratic_dual",
           "presentations_isomorphic", "presentation_from_json", "vertex_label"]
