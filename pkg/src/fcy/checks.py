"""Acceptance checks, shared by the test suite, the service and `fcy verify`.

Every check returns a CheckResult; none of them raise on a failed property.
"""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from math import comb

from .antichains import antichains_below, boolean_witness, classify, lowering_antichain
from .homalg import apply_nakayama, injective_homology, is_null_homotopic, predicted_hom
from .lattice import build_lattice, interval
from .partitions import f, f_tilde, mutable_set, orbit_trace, phi_r, right, sigma_minus

WORKED_ORBIT = ((0, 2, 3, 7, 7), 7)


@dataclass
class CheckResult:
    criterion: int
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.criterion:>2}: {self.name} ({self.seconds:.2f}s)"

    def to_json(self) -> dict:
        return asdict(self)


def _timed(criterion: int, name: str, fn) -> CheckResult:
    t = time.perf_counter()
    passed, detail = fn()
    return CheckResult(criterion, name, passed, detail, time.perf_counter() - t)


# 1 -------------------------------------------------------------------------------

def check_cardinality(pairs) -> CheckResult:
    def run():
        bad = [(m, n) for m, n in pairs if len(build_lattice(m, n)) != comb(m + n, m)]
        return not bad, {"instances": len(pairs), "failures": bad}
    return _timed(1, "lattice cardinality", run)


# 2 -------------------------------------------------------------------------------

def antichain_equivalences(m: int, n: int) -> tuple[int, list, int]:
    """Count, failures, and how many singletons {top} break inclusive <=> strong.

    For C = {top} the empty meet equals the meet of C, so C is strong but
    not inclusive; that degenerate case is excluded, as for the
    intersective implication.
    """
    L = build_lattice(m, n)
    count, bad, degenerate = 0, [], 0
    for top in L.elements:
        for C in antichains_below(L, top):
            count += 1
            fl = classify(C)
            singleton_top = C.members == (top,)
            if fl.inclusive != fl.strong:
                if singleton_top:
                    degenerate += 1
                else:
                    bad.append({"top": top, "members": C.members, "clause": "inclusive<=>strong"})
            if fl.intersective and not singleton_top and not fl.strong:
                bad.append({"top": top, "members": C.members, "clause": "intersective=>strong"})
            if fl.boolean != (boolean_witness(C) is not None):
                bad.append({"top": top, "members": C.members, "clause": "boolean<=>witness"})
    return count, bad, degenerate


def check_antichains(pairs) -> CheckResult:
    def run():
        total, bad, degenerate, tops = 0, [], 0, 0
        for m, n in pairs:
            c, b, d = antichain_equivalences(m, n)
            total += c
            bad += b
            degenerate += d
            tops += len(build_lattice(m, n))
        # the singleton exceptions must be exactly one per top element
        return not bad and degenerate == tops, {
            "antichains": total, "failures": bad[:10], "singleton_top_exceptions": degenerate}
    return _timed(2, "antichain property equivalences", run)


# 3, 4 ---------------------------------------------------------------------------

def hom_pair_ok(alpha, beta, n: int) -> bool:
    from .ycat import hom_degree, hom_oracle, target_interval

    dims = hom_oracle(alpha, beta, n)
    if len(dims) > 1 or any(v != 1 for v in dims.values()):
        return False
    h = hom_degree(alpha, beta, n)
    C = lowering_antichain(alpha, n)
    pred = predicted_hom(C, target_interval(beta, n))
    if h is None:
        return not dims and pred is None
    return dims == {h.degree: 1} and pred is not None and pred[1] == h.degree


def check_hom_oracle(pairs) -> CheckResult:
    def run():
        bad, count = [], 0
        for m, n in pairs:
            E = build_lattice(m, n).elements
            for a in E:
                for b in E:
                    count += 1
                    if not hom_pair_ok(a, b, n):
                        bad.append({"m": m, "n": n, "alpha": a, "beta": b})
        return not bad, {"pairs": count, "failures": bad[:10]}
    return _timed(3, "hom oracle agrees with hom_degree", run)


def check_hom0(pairs) -> CheckResult:
    from .ycat import hom0_characterizations

    def run():
        bad, count = [], 0
        for m, n in pairs:
            E = build_lattice(m, n).elements
            for a in E:
                for b in E:
                    count += 1
                    if len(set(hom0_characterizations(a, b, n))) != 1:
                        bad.append({"m": m, "n": n, "alpha": a, "beta": b})
        return not bad, {"pairs": count, "failures": bad[:10]}
    return _timed(4, "degree zero five-way equivalence", run)


# 5 -------------------------------------------------------------------------------

def orbit_certificate(alpha, n: int) -> dict:
    alpha = tuple(alpha)
    trace = orbit_trace(alpha, n)
    total = sum(s for _, s in trace)
    closes = trace[-1][0] == phi_r(alpha, n)
    m = len(alpha)
    return {"steps": len(trace), "sum": total, "closes": closes,
            "holds": closes and total == m * n}


def check_orbits(pairs, worked=WORKED_ORBIT) -> CheckResult:
    def run():
        bad = []
        for m, n in pairs:
            for a in build_lattice(m, n).elements:
                if not orbit_certificate(a, n)["holds"]:
                    bad.append({"m": m, "n": n, "alpha": a})
        detail = {"failures": bad[:10]}
        if worked is not None:
            cert = orbit_certificate(*worked)
            detail["worked_instance"] = cert
            ok = cert["holds"] and cert["steps"] == 13 and cert["sum"] == 35
        else:
            ok = True
        return not bad and ok, detail
    return _timed(5, "orbit certificate", run)


# 6 -------------------------------------------------------------------------------

def serre_step_ok(alpha, L) -> bool:
    from .ycat import resolution

    n = L.n
    ft = f_tilde(right(alpha, n))
    lo, hi = f(ft).plain, ft.plain
    H = injective_homology(apply_nakayama(resolution(tuple(alpha), n)), L)
    deg = len(mutable_set(alpha))
    if set(H) != {deg}:
        return False
    want = {y for y in L.elements if y in interval(lo, hi)}
    return set(H[deg]) == want and all(v == 1 for v in H[deg].values())


def check_serre_step(pairs) -> CheckResult:
    def run():
        bad = []
        for m, n in pairs:
            L = build_lattice(m, n)
            for a in L.elements:
                if not serre_step_ok(a, L):
                    bad.append({"m": m, "n": n, "alpha": a})
        return not bad, {"failures": bad}
    return _timed(6, "Serre functor on the family P_alpha", run)


# 7 -------------------------------------------------------------------------------

def check_k0(pairs) -> CheckResult:
    from .k0 import coxeter_order_check, serre_k0_matrix

    def run():
        reports, slowest = [], 0.0
        for m, n in pairs:
            t = time.perf_counter()
            reports.append(coxeter_order_check(m, n))
            slowest = max(slowest, time.perf_counter() - t)
        small = serre_k0_matrix(build_lattice(1, 1)).to_list() == [[1, -1], [1, 0]]
        bad = [(r["m"], r["n"]) for r in reports if not r["holds"]]
        return not bad and small, {"instances": len(reports), "failures": bad,
                                   "slowest_seconds": slowest}
    return _timed(7, "K0 Coxeter powers", run)


# 8, 9 -----------------------------------------------------------------------------

def relation_sweep(m: int, n: int) -> dict:
    from .ycat import plain_configurations, squares, verify_relation_chainlevel, zero_relations

    out = {"squares": 0, "zero": 0, "failures": []}
    for R in plain_configurations(m, n):
        for k, l in squares(R, m):
            out["squares"] += 1
            if not verify_relation_chainlevel(R, k, l, m, n):
                out["failures"].append({"R": R, "k": k, "l": l})
        for k in zero_relations(R, m):
            out["zero"] += 1
            if not verify_relation_chainlevel(R, k, None, m, n):
                out["failures"].append({"R": R, "k": k})
    return out


def check_relations(pairs) -> CheckResult:
    def run():
        detail = {f"{m},{n}": relation_sweep(m, n) for m, n in pairs}
        return all(not d["failures"] for d in detail.values()), detail
    return _timed(8, "relations at chain level", run)


def words_from(R, m: int, n: int, length: int):
    if length == 0:
        yield ()
        return
    for k in R:
        if k - 1 not in R and k - 1 >= -m + 1:
            for w in words_from(sigma_minus(R, k, m, n), m, n, length - 1):
                yield (k,) + w


def zero_word_sweep(m: int, n: int, max_len: int = 3) -> dict:
    from .ycat import MorphismWord, compose_word, plain_configurations, word_map

    count, bad = 0, []
    for R in plain_configurations(m, n):
        for length in range(1, max_len + 1):
            for w in words_from(R, m, n, length):
                count += 1
                formal = compose_word(MorphismWord(R, w), m, n)
                phi = word_map(R, w, m, n)
                zero = is_null_homotopic(phi)
                ok = zero == (formal is None)
                if ok and formal is not None:
                    sign, ks = formal
                    ok = is_null_homotopic(phi - word_map(R, ks, m, n).scaled(sign))
                if not ok:
                    bad.append({"R": R, "word": w})
    return {"words": count, "failures": bad}


def check_zero_words(pairs) -> CheckResult:
    def run():
        detail = {f"{m},{n}": zero_word_sweep(m, n) for m, n in pairs}
        return all(not d["failures"] for d in detail.values()), detail
    return _timed(9, "zero-word law", run)


# 10, 11 ---------------------------------------------------------------------------

def check_tilting(pairs) -> CheckResult:
    from .auslander import anticommuting_matches_dual, self_extension_report, tilting_matches_auslander

    def run():
        detail = {}
        for m, n in pairs:
            detail[f"{m},{n}"] = {
                "no_self_extensions": self_extension_report(m, n)["holds"],
                "end_T_is_auslander": tilting_matches_auslander(m, n),
                "anticommuting_is_dual": anticommuting_matches_dual(m, n),
            }
        return all(all(v.values()) for v in detail.values()), detail
    return _timed(10, "tilting object and its endomorphisms", run)


def check_duality(dim_range, iso_pairs) -> CheckResult:
    from .auslander import auslander_self_dual, higher_auslander
    from .quiver import quadratic_dual

    def run():
        dims = {}
        for s, d in dim_range:
            Q = higher_auslander(s, d)
            dims[f"{s},{d}"] = Q.relation_dim() + quadratic_dual(Q).relation_dim() == len(Q.two_paths())
        iso = {f"{s},{d}": auslander_self_dual(s, d) for s, d in iso_pairs}
        return all(dims.values()) and all(iso.values()), {"dimensions": dims, "isomorphisms": iso}
    return _timed(11, "quadratic duality", run)


# the full suite -------------------------------------------------------------------

FULL = {
    1: lambda: check_cardinality([(m, n) for m in range(1, 6) for n in range(0, 6)]),
    2: lambda: check_antichains([(m, n) for m in range(1, 7) for n in range(0, 7 - m)]),
    3: lambda: check_hom_oracle([(2, 2), (2, 3), (3, 3)]),
    4: lambda: check_hom0([(m, n) for m in range(1, 4) for n in range(0, 4)]),
    5: lambda: check_orbits([(m, n) for m in range(1, 5) for n in range(0, 5)]),
    6: lambda: check_serre_step([(2, 3)]),
    7: lambda: check_k0([(m, n) for m in range(1, 5) for n in range(1, 5)]),
    8: lambda: check_relations([(2, 2), (2, 3)]),
    9: lambda: check_zero_words([(2, 2)]),
    10: lambda: check_tilting([(1, 1), (2, 2), (2, 3), (3, 3)]),
    11: lambda: check_duality([(s, d) for s in range(1, 5) for d in range(0, 3)],
                              [(3, 1), (4, 1), (3, 2)]),
}


def scoped(m: int, n: int) -> dict:
    """The same checks restricted to the single instance J(m, n)."""
    mn = [(m, n)]
    s, d = m + 1, n - 1
    suite = {
        1: lambda: check_cardinality(mn),
        3: lambda: check_hom_oracle(mn),
        4: lambda: check_hom0(mn),
        5: lambda: check_orbits(mn, worked=None),
        6: lambda: check_serre_step(mn),
        8: lambda: check_relations(mn),
        9: lambda: check_zero_words(mn),
    }
    if m + n <= 6:
        suite[2] = lambda: check_antichains(mn)
    if n >= 1:
        suite[7] = lambda: check_k0(mn)
        suite[10] = lambda: check_tilting(mn)
        suite[11] = lambda: check_duality([(s, d)], [(s, d)] if s >= 3 else [])
    return dict(sorted(suite.items()))


def run_one(args) -> CheckResult:
    kind, key, m, n = args
    table = FULL if kind == "full" else scoped(m, n)
    return table[key]()


def run_suite(m: int | None = None, n: int | None = None, jobs: int = 1) -> list[CheckResult]:
    kind = "full" if m is None else "scoped"
    keys = list(FULL if kind == "full" else scoped(m, n))
    tasks = [(kind, k, m, n) for k in keys]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(run_one, tasks))
    return [run_one(t) for t in tasks]
