"""Text, JSON, CSV and DOT renderings of handler payloads."""
from __future__ import annotations

import csv
import io
import json


class RenderError(ValueError):
    pass


def to_json(p: dict) -> str:
    return json.dumps(p, indent=2) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _quiver_dot(q: dict, name: str) -> str:
    lines = [f'digraph "{name}" {{']
    lines += [f'  "{v}";' for v in q["vertices"]]
    lines += [f'  "{a["src"]}" -> "{a["tgt"]}" [label="{a["id"]}"];' for a in q["arrows"]]
    return "\n".join(lines + ["}"]) + "\n"


def to_dot(p: dict) -> str:
    cmd = p["command"]
    if cmd == "lattice":
        lines = [f'digraph "J_{p["m"]}_{p["n"]}" {{']
        lines += [f'  "{x}";' for x in p["elements"]]
        lines += [f'  "{x}" -> "{y}";' for x, y in p["covers"]]
        return "\n".join(lines + ["}"]) + "\n"
    if cmd == "presentation":
        return _quiver_dot(p["quiver"], f'Y_{p["m"]}_{p["n"]}_{p["variant"]}')
    if cmd == "auslander":
        return _quiver_dot(p["quiver"], f'A_{p["s"]}_{p["d"]}' + ("_dual" if p["dual"] else ""))
    raise RenderError(f"no DOT rendering for {cmd}")


def _relation_text(rel) -> str:
    terms = []
    for t in rel:
        c = t["coeff"]
        sign = "-" if c.startswith("-") else "+"
        mag = c.lstrip("-")
        path = "".join(f"[{x}]" for x in t["path"])
        terms.append(f"{sign} {'' if mag == '1' else mag + '*'}{path}")
    s = " ".join(terms)
    return s[2:] if s.startswith("+ ") else s


def to_csv(p: dict) -> str:
    cmd = p["command"]
    if cmd == "lattice":
        return _csv(["index", "element"], enumerate(p["elements"]))
    if cmd == "antichain":
        if "antichains" in p:
            return _csv(["top", "members", "strong", "inclusive", "intersective", "boolean"],
                        [[r["top"], ";".join(r["members"]), r["strong"], r["inclusive"],
                          r["intersective"], r["boolean"]] for r in p["antichains"]])
        return _csv(["subset", "meet"], [[";".join(w["subset"]), w["meet"]]
                                         for w in p["witness"] or []])
    if cmd == "hom":
        return _csv(["alpha", "beta", "degree", "J", "agrees"],
                    [[r["alpha"], r["beta"], "" if r["degree"] is None else r["degree"],
                      "" if r["J"] is None else ",".join(map(str, r["J"])), r["agrees"]]
                     for r in p["table"]])
    if cmd == "orbit":
        return _csv(["step", "config", "size"],
                    [[r["step"], ",".join(map(str, r["config"])), r["size"]] for r in p["trace"]])
    if cmd == "coxeter":
        keys = ["m", "n", "exponent", "sign", "holds", "polynomial_text"]
        return _csv(keys, [[p[k] for k in keys]])
    if cmd in ("presentation", "auslander"):
        return _csv(["id", "src", "tgt"], [[a["id"], a["src"], a["tgt"]]
                                           for a in p["quiver"]["arrows"]])
    if cmd == "verify":
        return _csv(["criterion", "name", "passed"],
                    [[r["criterion"], r["name"], r["passed"]] for r in p["results"]])
    if cmd == "resolve":
        cx = p["complex"]
        return _csv(["degree", "term"], [[cx["min_degree"] + i, t]
                                         for i, ts in enumerate(cx["degrees"]) for t in ts])
    raise RenderError(f"no CSV rendering for {cmd}")


def _flag(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def to_text(p: dict) -> str:
    cmd = p["command"]
    out: list[str] = []
    if cmd == "lattice":
        out.append(f"J({p['m']},{p['n']}): {p['size']} elements, {len(p['covers'])} covers")
        out += [f"  {x}" for x in p["elements"]]
    elif cmd == "antichain":
        if "antichains" in p:
            out.append(f"J({p['m']},{p['n']}): {p['count']} antichains, "
                       f"{p['failures']} failures, {p['singleton_top_exceptions']} singleton-top exceptions")
            out.append("  flags: S strong, I inclusive, X intersective, B boolean")
            for r in p["antichains"]:
                fl = "".join(c if r[k] else "-" for c, k in
                             zip("SIXB", ("strong", "inclusive", "intersective", "boolean")))
                out.append(f"  {r['top']:<12} {fl}  {{{' | '.join(r['members'])}}}")
        else:
            out.append(f"C_alpha for alpha = {p['alpha']}, mutable set {p['mutable_set']}")
            out.append(f"  members: {' | '.join(p['members'])}")
            out.append("  flags: " + ", ".join(f"{k}={v}" for k, v in p["flags"].items()))
            for w in p["witness"] or []:
                out.append(f"  meet{{{' | '.join(w['subset'])}}} = {w['meet']}")
    elif cmd == "resolve":
        cx = p["complex"]
        out.append(f"resolution of M_C for alpha = {p['alpha']}, C = {{{' | '.join(p['antichain'])}}}")
        for i, ts in enumerate(cx["degrees"]):
            out.append(f"  degree {cx['min_degree'] + i}: " + " + ".join(f"P[{t}]" for t in ts))
        for i, entries in enumerate(cx["boundaries"]):
            d = cx["min_degree"] + i + 1
            out.append(f"  d{d}: " + ", ".join(f"({t},{s})={c}" for t, s, c in entries))
        out.append(f"  homology in degrees {p['homology_degrees']}")
    elif cmd == "hom":
        out.append(f"J({p['m']},{p['n']}): {p['pairs']} pairs, {p['nonzero']} nonzero")
        for r in p["table"]:
            if r["degree"] is not None or not r["agrees"]:
                j = ",".join(map(str, r["J"] or []))
                out.append(f"  {r['alpha']:<12} -> {r['beta']:<12} degree {r['degree']}"
                           f"  J={{{j}}}{'' if r['agrees'] else '  MISMATCH'}")
    elif cmd == "orbit":
        out.append(f"orbit of alpha = {p['alpha']} in J({p['m']},{p['n']})")
        for r in p["trace"]:
            out.append(f"  {r['step']:>3}  |S|={r['size']}  R={{{','.join(map(str, r['config']))}}}")
        out.append(f"steps: {p['steps']}  sum |S|: {p['sum']}  closes: {p['closes']}")
    elif cmd == "coxeter":
        out.append(f"J({p['m']},{p['n']}): M^{p['exponent']} = {p['sign']} * Id: {p['holds']}")
        out.append(f"  char poly of -M: {p['polynomial_text']}")
        if p["first_failure"]:
            out.append(f"  first failure: {p['first_failure']}")
    elif cmd in ("presentation", "auslander"):
        q = p["quiver"]
        if cmd == "presentation":
            out.append(f"variant {p['variant']} for J({p['m']},{p['n']}): "
                       + ", ".join(f"{k} {v}" for k, v in p["square_types"].items()))
        else:
            out.append(f"A_{p['s']}^{p['d']}{' (quadratic dual)' if p['dual'] else ''}: "
                       + ", ".join(f"{k}={v}" for k, v in p["checks"].items()))
        out.append(f"  {len(q['vertices'])} vertices, {len(q['arrows'])} arrows, "
                   f"{len(q['relations'])} relations ({q['orientation']})")
        out += [f"  {a['id']}: {a['src']} -> {a['tgt']}" for a in q["arrows"]]
        out += [f"  0 = {_relation_text(rel)}" for rel in q["relations"]]
    elif cmd == "verify":
        scope = "full suite" if p["scope"] == "full" else f"J({p['m']},{p['n']})"
        out.append(f"acceptance checks, {scope}")
        for r in p["results"]:
            t = f" ({r['seconds']:.2f}s)" if "seconds" in r else ""
            out.append(f"[{_flag(r['passed'])}] criterion {r['criterion']:>2}: {r['name']}{t}")
    else:
        raise RenderError(f"no text rendering for {cmd}")
    out.append(f"{_flag(p['ok'])}")
    return "\n".join(out) + "\n"


RENDERERS = {"text": to_text, "json": to_json, "csv": to_csv, "dot": to_dot}


def render(p: dict, fmt: str) -> str:
    return RENDERERS[fmt](p)
