"""One handler per subcommand.  Each returns a flat JSON-able payload with
"schema", "command" and "ok"; renderers work from the payload alone, so a
remote server and an in-process call print the same bytes."""
from __future__ import annotations

from .. import SCHEMA
from ..antichains import (antichains_below, boolean_witness, build_resolution, classify,
                          module_support, lowering_antichain)
from ..homalg import homology_support
from ..k0 import coxeter_order_check, coxeter_polynomial, polynomial_string
from ..lattice import build_lattice, label
from ..partitions import check_partition, mutable_set, orbit_trace
from ..quiver import quadratic_dual


def _payload(command: str, ok: bool, **fields) -> dict:
    return {"schema": SCHEMA, "command": command, "ok": bool(ok), **fields}


def _alpha(alpha, m: int, n: int) -> tuple:
    if alpha is None:
        raise ValueError("--alpha is required")
    return check_partition(tuple(alpha), m, n)


def lattice(m: int, n: int, cap: int) -> dict:
    L = build_lattice(m, n, cap)
    return _payload("lattice", True, m=m, n=n, size=len(L),
                    elements=[label(x) for x in L.elements],
                    covers=[[label(x), label(y)] for x, y in L.covers()])


def antichain(m: int, n: int, cap: int, alpha=None) -> dict:
    L = build_lattice(m, n, cap)
    if alpha is not None:
        a = _alpha(alpha, m, n)
        C = lowering_antichain(a, n)
        fl = classify(C)
        w = boolean_witness(C)
        witness = None if w is None else [
            {"subset": [label(c) for c in S], "meet": label(x)} for S, x in w.items()]
        return _payload("antichain", fl.boolean, m=m, n=n, alpha=label(a),
                        mutable_set=mutable_set(a), members=[label(c) for c in C.members],
                        flags=vars(fl), witness=witness)
    from ..checks import antichain_equivalences

    rows = []
    for top in L.elements:
        for C in antichains_below(L, top):
            fl = classify(C)
            rows.append({"top": label(top), "members": [label(c) for c in C.members], **vars(fl)})
    count, bad, degenerate = antichain_equivalences(m, n)
    return _payload("antichain", not bad and degenerate == len(L), m=m, n=n, count=count,
                    singleton_top_exceptions=degenerate, failures=len(bad), antichains=rows)


def resolve(m: int, n: int, cap: int, alpha=None) -> dict:
    L = build_lattice(m, n, cap)
    a = _alpha(alpha, m, n)
    C = lowering_antichain(a, n)
    cx = build_resolution(C)
    hom = homology_support(cx, L)
    expected = {x: 1 for x in module_support(C, L)}
    ok = set(hom) <= {0} and hom.get(0, {}) == expected
    return _payload("resolve", ok, m=m, n=n, alpha=label(a),
                    antichain=[label(c) for c in C.members], complex=cx.to_json(),
                    homology_degrees=sorted(hom))


def hom(m: int, n: int, cap: int) -> dict:
    from ..checks import hom_pair_ok
    from ..ycat import hom_degree, hom_oracle

    L = build_lattice(m, n, cap)
    rows, ok = [], True
    for a in L.elements:
        for b in L.elements:
            h = hom_degree(a, b, n)
            agree = hom_pair_ok(a, b, n)
            ok &= agree
            rows.append({"alpha": label(a), "beta": label(b),
                         "degree": None if h is None else h.degree,
                         "J": None if h is None else list(h.J),
                         "oracle": {str(k): v for k, v in sorted(hom_oracle(a, b, n).items())},
                         "agrees": agree})
    return _payload("hom", ok, m=m, n=n, pairs=len(rows),
                    nonzero=sum(r["degree"] is not None for r in rows), table=rows)


def orbit(m: int, n: int, cap: int, alpha=None) -> dict:
    from ..checks import orbit_certificate

    build_lattice(m, n, cap)
    a = _alpha(alpha, m, n)
    cert = orbit_certificate(a, n)
    trace = [{"step": i + 1, "config": list(R), "size": s}
             for i, (R, s) in enumerate(orbit_trace(a, n))]
    return _payload("orbit", cert["holds"], m=m, n=n, alpha=label(a), trace=trace, **cert)


def coxeter(m: int, n: int, cap: int) -> dict:
    L = build_lattice(m, n, cap)
    rep = coxeter_order_check(m, n)
    coeffs = coxeter_polynomial(L)
    rep.pop("schema")
    return _payload("coxeter", rep["holds"], **rep, polynomial=coeffs,
                    polynomial_text=polynomial_string(coeffs))


_EXPECTED_SQUARES = {"v": "commuting", "w": "anticommuting"}


def presentation(m: int, n: int, cap: int, variant: str = "u") -> dict:
    from ..ycat import presentation as build, square_types

    build_lattice(m, n, cap)
    Q = build(m, n, variant)
    types = square_types(Q)
    want = _EXPECTED_SQUARES.get(variant)
    other = {"commuting": "anticommuting", "anticommuting": "commuting"}.get(want)
    ok = types["other"] == 0 and (want is None or types[other] == 0)
    quiver = Q.to_json()
    quiver.pop("schema")
    return _payload("presentation", ok, m=m, n=n, variant=variant, square_types=types,
                    quiver=quiver)


def auslander(s: int, d: int, dual: bool = False, m: int | None = None,
              n: int | None = None) -> dict:
    """Build A_s^d (or its quadratic dual) and run the checks that apply.

    With m and n the tilting comparison for J(m, n) is added.
    """
    from ..auslander import (anticommuting_matches_dual, auslander_self_dual, higher_auslander,
                             tilting_matches_auslander)

    A = higher_auslander(s, d)
    D = quadratic_dual(A)
    checks = {"dimensions": A.relation_dim() + D.relation_dim() == len(A.two_paths())}
    if s >= 3:
        checks["self_dual"] = auslander_self_dual(s, d)
    if m is not None and n is not None:
        if (m + 1, n - 1) != (s, d):
            raise ValueError(f"J({m},{n}) corresponds to s={m + 1}, d={n - 1}")
        checks["end_tilting"] = tilting_matches_auslander(m, n)
        checks["anticommuting_dual"] = anticommuting_matches_dual(m, n)
    quiver = (D if dual else A).to_json()
    quiver.pop("schema")
    return _payload("auslander", all(checks.values()), s=s, d=d, dual=dual,
                    two_paths=len(A.two_paths()), checks=checks, quiver=quiver)


def verify(m: int | None = None, n: int | None = None, jobs: int = 1,
           timings: bool = False) -> dict:
    from ..checks import run_suite

    if (m is None) != (n is None):
        raise ValueError("give both --m and --n, or neither for the full suite")
    if m is not None:
        build_lattice(m, n)
    results = []
    for r in run_suite(m, n, jobs=jobs):
        row = {"criterion": r.criterion, "name": r.name, "passed": r.passed}
        if timings:
            row["seconds"] = round(r.seconds, 3)
        results.append(row)
    return _payload("verify", all(r["passed"] for r in results), m=m, n=n,
                    scope="full" if m is None else "instance", results=results)


COMMANDS = {
    "lattice": lattice, "antichain": antichain, "resolve": resolve, "hom": hom,
    "orbit": orbit, "coxeter": coxeter, "presentation": presentation,
    "auslander": auslander, "verify": verify,
}


def dispatch(command: str, **params) -> dict:
    return COMMANDS[command](**params)
