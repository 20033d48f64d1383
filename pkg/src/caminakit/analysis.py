"""Whole-group analysis and the census driver behind the CLI.

Report documents are plain JSON-compatible dicts. :func:`dumps` is the one
serializer, so a parsed document re-serializes to identical bytes.
"""
from __future__ import annotations

import json
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import camina as cm
from .catalog import CatalogSpec, make_group, parse_spec
from .character import CharacterTable
from .errors import CaminaError, EquivalenceViolation, InternalError, TheoremViolation
from .group import DEFAULT_MAX_ORDER, ElementSet, Group, exponent, read_group_file
from .structure import FrobeniusStructure

log = logging.getLogger(__name__)

ALL_CHECKS = ("conditions", "theorem1", "theorem2", "lemmas", "hypothesisA",
              "pair-characterizations", "vanishing-off-global")

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2


@dataclass
class AnalyzeConfig:
    input: str
    output_format: str = "text"
    checks: tuple[str, ...] = ALL_CHECKS
    max_order: int = DEFAULT_MAX_ORDER
    extra: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        unknown = set(self.checks) - set(ALL_CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")


def load_group(source: str, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    """Resolve a spec string, or a path to a group file."""
    if ":" not in source and Path(source).exists():
        return read_group_file(source, max_order=max_order)
    return make_group(parse_spec(source), max_order=max_order)


# -- serialization -----------------------------------------------------------

def subgroup_doc(G: Group, H: ElementSet | None) -> dict | None:
    if H is None:
        return None
    m = H.array
    sub = G.table[np.ix_(m, m)]
    return {"order": len(H), "abelian": bool(np.array_equal(sub, sub.T)),
            "members": list(H.members)}


def _frobenius_doc(G: Group, K: ElementSet, fs: FrobeniusStructure) -> dict:
    # fs lives in the quotient M/K, so only its shape is reported
    return {
        "K": subgroup_doc(G, K),
        "kernel_order": len(fs.kernel),
        "complement_order": len(fs.complement),
        "complement_abelian": fs.complement_is_abelian,
        "complement_elementary_abelian_p": fs.complement_is_elementary_abelian_p,
        "kernel_elementary_abelian_p": fs.kernel_is_elementary_abelian_p,
    }


def triple_doc(G: Group, rep: cm.CaminaReport) -> dict:
    q = rep.query
    doc = {
        "N": subgroup_doc(G, q.N),
        "M": subgroup_doc(G, q.M),
        "pair": q.is_pair,
        "verdicts": {k: getattr(rep.verdicts, k) for k in
                     ("conjugacy", "centralizer", "vanishing", "vanishing_off",
                      "commutator", "consensus")},
    }
    t1 = rep.theorem1
    if t1 is not None:
        doc["theorem1"] = {
            "m_solvable": t1.m_solvable, "pi": list(t1.pi), "Q": subgroup_doc(G, t1.Q),
            "m_mod_q_nilpotent": t1.m_mod_q_nilpotent, "support_cover": t1.support_cover,
            "vanishing_outside": t1.vanishing_outside,
            "degree_divisibility": t1.degree_divisibility,
        }
    t2 = rep.theorem2
    if t2 is not None:
        frob = t2.alt3_frobenius_quotient
        doc["theorem2"] = {
            "alt1_pgroup": t2.alt1_pgroup,
            "alt2_nilpotent_quotient": subgroup_doc(G, t2.alt2_nilpotent_quotient),
            "alt3_frobenius_quotient": _frobenius_doc(G, *frob) if frob else None,
            "alt3_complement_elementary_abelian": t2.alt3_complement_elementary_abelian,
            "alt3_kernel_is_derived_elementary_abelian": t2.alt3_kernel_is_derived_elementary_abelian,
            "alt4_abelian": t2.alt4_abelian,
            "disjunction_holds": t2.disjunction_holds,
        }
    if rep.lemmas:
        doc["lemmas"] = dict(rep.lemmas)
    return doc


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


# -- single group --------------------------------------------------------------

class _Suites:
    def __init__(self, checks: Sequence[str]) -> None:
        self.status = {c: ("pass" if c in checks else "skipped") for c in ALL_CHECKS}
        self.violations: list[str] = []

    def run(self, check: str, fn, *args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (EquivalenceViolation, TheoremViolation) as exc:
            self.status[check] = "fail"
            self.violations.append(f"{check}: {exc}")
            log.error("%s: %s", check, exc)
            return None


def analyze_group(G: Group, checks: Sequence[str] = ALL_CHECKS,
                  T: CharacterTable | None = None) -> dict:
    ctx = cm.GroupContext(G, T)
    T = ctx.table
    suites = _Suites(checks)
    ser = ctx.series

    queries = cm.valid_queries(G, ctx.normals)
    found = []
    for q in queries:
        v = suites.run("conditions", cm.is_camina_triple, q, T, ctx=ctx)
        if v is not None and v.consensus:
            found.append((q, v))
    triples = [q for q, _ in found]

    reports = []
    for q, v in found:
        t1 = suites.run("theorem1", cm.verify_theorem1, q, T, ctx=ctx) if "theorem1" in checks else None
        t2 = suites.run("theorem2", cm.classify_theorem2, q, T, ctx=ctx) if "theorem2" in checks else None
        lem = (suites.run("lemmas", cm.verify_lemma_suite, q, triples, T, ctx=ctx)
               if "lemmas" in checks else None)
        reports.append(cm.CaminaReport(q, v, t1, t2, lem or {}))

    pairs = []
    for rep in reports:
        if not rep.query.is_pair:
            continue
        N = rep.query.N
        entry: dict = {"N": subgroup_doc(G, N)}
        if "hypothesisA" in checks:
            h = suites.run("hypothesisA", cm.verify_camina_hypothesis, G, N, T, ctx=ctx)
            if h is not None:
                entry["hypothesis"] = {
                    "vanishing_set_is_irr_over": h.vanishing_set_is_irr_over,
                    "constant_value": h.constant_value, "index": h.index,
                    "unique_constituent": h.unique_constituent,
                    "induced_is_multiple": h.induced_is_multiple,
                    "induced_matches_inertia_formula": h.induced_matches_inertia_formula,
                    "induced_vanishes_off_n": h.induced_vanishes_off_n,
                    "inertia_indices": list(h.inertia_indices),
                }
        pairs.append(entry)

    characterized = 0
    if "pair-characterizations" in checks:
        for N in ctx.normals:
            if not 1 < len(N) < G.order:
                continue
            rec = suites.run("pair-characterizations", cm.verify_pair_characterizations,
                             G, N, T, ctx=ctx)
            characterized += 1
            if rec is not None and rec.pair:
                for e in pairs:
                    if e["N"]["members"] == list(N.members):
                        e["characterization"] = {
                            "vanishing_off_equals_n": rec.vanishing_off_equals_n,
                            "zero_pattern": rec.zero_pattern,
                            "n_is_p_group": rec.n_is_p_group,
                            "quotient_is_p_group": rec.quotient_is_p_group,
                            "frobenius_with_kernel_n": rec.frobenius_with_kernel_n,
                        }

    global_v = None
    if "vanishing-off-global" in checks and not G.is_abelian:
        rec = suites.run("vanishing-off-global", cm.vanishing_off_global, G, T, ctx=ctx)
        if rec is not None:
            global_v = {"V": subgroup_doc(G, rec.V), "derived": subgroup_doc(G, rec.derived),
                     "proper": rec.proper,
                     "triple": rec.verdicts.consensus if rec.verdicts else None}

    return {
        "group": {
            "name": G.name, "order": G.order, "exponent": exponent(G),
            "abelian": G.is_abelian, "nilpotent": ser.is_nilpotent,
            "solvable": ser.is_solvable, "class_sizes": list(G.classes.sizes),
        },
        "normal_subgroups": len(ctx.normals),
        "queries_checked": len(queries),
        "triples": [triple_doc(G, r) for r in reports],
        "pairs": pairs,
        "pairs_characterized": characterized,
        "vanishing_off_global": global_v,
        "suites": suites.status,
        "violations": suites.violations,
        "status": "violation" if suites.violations else "ok",
    }


def run_analyze(cfg: AnalyzeConfig) -> tuple[int, dict]:
    try:
        G = load_group(cfg.input, cfg.max_order)
    except CaminaError as exc:
        return EXIT_INPUT, {"input": cfg.input, "status": "error",
                            "error": f"{type(exc).__name__}: {exc}"}
    try:
        doc = analyze_group(G, cfg.checks)
    except InternalError as exc:
        return EXIT_VIOLATION, {"input": cfg.input, "status": "violation",
                                "error": f"{type(exc).__name__}: {exc}"}
    return (EXIT_VIOLATION if doc["status"] == "violation" else EXIT_OK), doc


# -- census ----------------------------------------------------------------------

def _census_entry(args: tuple[str, tuple[str, ...], int]) -> dict:
    spec, checks, max_order = args
    try:
        G = load_group(spec, max_order)
    except CaminaError as exc:
        return {"name": spec, "status": "error", "error": f"{type(exc).__name__}: {exc}"}
    try:
        doc = analyze_group(G, checks)
    except InternalError as exc:
        return {"name": spec, "status": "violation", "error": f"{type(exc).__name__}: {exc}"}
    tally = Counter()
    for t in doc["triples"]:
        for k, v in t.get("theorem2", {}).items():
            if k.startswith("alt") and v not in (None, False):
                tally[k] += 1
    return {
        "name": spec,
        "order": doc["group"]["order"],
        "status": doc["status"],
        "normal_subgroups": doc["normal_subgroups"],
        "queries_checked": doc["queries_checked"],
        "triple_count": len(doc["triples"]),
        "pairs": [p["N"]["members"] for p in doc["pairs"]],
        "pair_orders": [p["N"]["order"] for p in doc["pairs"]],
        "theorem2_tally": dict(sorted(tally.items())),
        "v_global_proper": (doc["vanishing_off_global"] or {}).get("proper"),
        "suites": doc["suites"],
        "violations": doc["violations"],
    }


def run_census(catalog: Iterable[CatalogSpec | str], jobs: int = 1,
               checks: Sequence[str] = ALL_CHECKS,
               max_order: int = DEFAULT_MAX_ORDER) -> dict:
    specs = [str(s) for s in catalog]
    work = [(s, tuple(checks), max_order) for s in specs]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(_census_entry, work))
    else:
        entries = [_census_entry(w) for w in work]
    entries.sort(key=lambda e: e["name"])

    tally = Counter()
    suite_totals = {c: Counter() for c in ALL_CHECKS}
    for e in entries:
        tally.update(e.get("theorem2_tally", {}))
        for c, st in e.get("suites", {}).items():
            suite_totals[c][st] += 1
    return {
        "catalog_size": len(entries),
        "groups": entries,
        "pair_list": [{"group": e["name"], "N_order": o, "N": m}
                      for e in entries for o, m in zip(e.get("pair_orders", []), e.get("pairs", []))],
        "theorem2_tally": dict(sorted(tally.items())),
        "suites": {c: dict(sorted(v.items())) for c, v in suite_totals.items()},
        "errored": [e["name"] for e in entries if e["status"] == "error"],
        "violated": [e["name"] for e in entries if e["status"] == "violation"],
    }


def census_exit_code(doc: dict) -> int:
    return EXIT_VIOLATION if doc["violated"] else EXIT_OK


# -- text rendering ----------------------------------------------------------------

def _sg(d: dict | None) -> str:
    if d is None:
        return "-"
    return f"<order {d['order']}{', abelian' if d['abelian'] else ''}: {d['members']}>"


def render_analysis(doc: dict) -> str:
    if "group" not in doc:
        return f"{doc.get('input')}: {doc['status']}: {doc.get('error')}\n"
    g = doc["group"]
    flags = ["abelian" if g["abelian"] else "nonabelian"]
    flags += ["nilpotent"] if g["nilpotent"] else []
    flags += ["solvable"] if g["solvable"] else ["nonsolvable"]
    out = [f"group {g['name']}  order {g['order']}  exponent {g['exponent']}  {' '.join(flags)}",
           f"class sizes: {g['class_sizes']}",
           f"normal subgroups: {doc['normal_subgroups']}  (N, M) queries checked: {doc['queries_checked']}",
           f"Camina triples: {len(doc['triples'])}"]
    for t in doc["triples"]:
        kind = "pair  " if t["pair"] else "triple"
        line = f"  {kind} N={_sg(t['N'])}  M={_sg(t['M'])}"
        if "theorem2" in t:
            alts = [k.split("_")[0] for k in ("alt1_pgroup", "alt2_nilpotent_quotient",
                                              "alt3_complement_elementary_abelian", "alt4_abelian")
                    if t["theorem2"][k] not in (None, False)]
            line += f"  holds: {','.join(alts)}"
        out.append(line)
    if doc["vanishing_off_global"]:
        lw = doc["vanishing_off_global"]
        out.append(f"V(G) = {_sg(lw['V'])}  proper: {lw['proper']}")
    out.append("suites:")
    out += [f"  {c:24s} {st}" for c, st in doc["suites"].items()]
    out += [f"  ! {v}" for v in doc["violations"]]
    out.append(f"status: {doc['status']}")
    return "\n".join(out) + "\n"


def render_census(doc: dict) -> str:
    out = [f"census of {doc['catalog_size']} groups"]
    for e in doc["groups"]:
        if e["status"] == "error":
            out.append(f"  {e['name']:24s} ERROR {e['error']}")
            continue
        out.append(f"  {e['name']:24s} order {e['order']:4d}  triples {e['triple_count']:3d}  "
                   f"pairs {e['pair_orders']}  {e['status']}")
    out.append(f"theorem2 alternatives: {doc['theorem2_tally']}")
    for c, v in doc["suites"].items():
        out.append(f"  {c:24s} {v}")
    out.append(f"errored: {doc['errored']}  violated: {doc['violated']}")
    return "\n".join(out) + "\n"


def chartab_doc(T: CharacterTable) -> dict:
    G = T.group
    return {
        "group": G.name, "order": G.order, "exponent": T.e, "prime": T.prime,
        "classes": [{"rep": rep, "size": size, "element_order": int(G.element_orders[rep]),
                     "centralizer_order": G.order // size}
                    for rep, size in zip(T.classes.reps, T.classes.sizes)],
        "characters": [{"degree": T.degrees[i],
                        "values": [str(v) for v in T.row(i)],
                        "coefficients": T.values[i].tolist()}
                       for i in range(len(T))],
    }


def render_chartab(doc: dict) -> str:
    cells = [[f"{c['rep']}" for c in doc["classes"]]]
    cells.append([f"{c['size']}" for c in doc["classes"]])
    cells.append([f"{c['element_order']}" for c in doc["classes"]])
    cells += [ch["values"] for ch in doc["characters"]]
    width = [max(len(row[k]) for row in cells) for k in range(len(doc["classes"]))]
    labels = ["rep", "size", "order"] + [f"X.{i + 1}" for i in range(len(doc["characters"]))]
    out = [f"character table of {doc['group']} (order {doc['order']}, values in Q(zeta_{doc['exponent']}))"]
    for lab, row in zip(labels, cells):
        out.append(f"{lab:>6}  " + "  ".join(v.rjust(w) for v, w in zip(row, width)))
        if lab == "order":
            out.append("")
    return "\n".join(out) + "\n"
