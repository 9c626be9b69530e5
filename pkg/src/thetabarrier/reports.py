"""JSON-ready analysis documents for a single graph and θ."""

from __future__ import annotations

from .barrier_lab import (
    enumerate_barrier_sets,
    intersect_maximal_barriers,
    theta_deficiency,
)
from .exact_poly import ThetaSpec, find_theta_candidates, root_multiplicity
from .graph_core import Graph, bits, parse_edge_list, parse_graph6, to_edge_list, to_graph6
from .matching_engine import MatchingTable
from .theta_analysis import view


def _vs(mask: int) -> list[int]:
    return sorted(bits(mask))


def graph_section(G: Graph, fmt: str) -> dict:
    text = to_graph6(G) if fmt == "graph6" else to_edge_list(G)
    return {"format": fmt, "text": text, "n": G.n, "labels": [G.label(v) for v in range(G.n)]}


def load_graph(section: dict) -> Graph:
    if section["format"] == "graph6":
        return parse_graph6(section["text"])
    return parse_edge_list(section["text"])


def analysis_document(
    G: Graph,
    theta: ThetaSpec,
    fmt: str = "edgelist",
    barriers: bool = True,
    force: bool = False,
) -> dict:
    T = MatchingTable(G)
    V = view(T, theta)
    dec = V.decompose()
    mu = T.poly()
    classes = []
    for v in range(G.n):
        c = dec.vertex_class(v)
        classes.append({"vertex": v, "label": G.label(v), "class": c.kind.value, "special": c.special})
    d = theta_deficiency(T, theta, force=force)
    doc = {
        "graph": graph_section(G, fmt),
        "theta": {"minpoly": theta.to_text(), "label": theta.label},
        "mu": mu.to_text(),
        "mu_display": str(mu),
        "mult": dec.mult,
        "critical": G.n > 0 and V.is_critical(),
        "classes": classes,
        "decomposition": {"D": _vs(dec.D), "A": _vs(dec.A), "N": _vs(dec.N), "P": _vs(dec.P)},
        "deficiency": {"value": d.value, "witness": _vs(d.witness)},
        "barriers": None,
    }
    if barriers:
        reports = enumerate_barrier_sets(T, theta, force=force)
        inter = intersect_maximal_barriers(T, theta, force=force)
        doc["barriers"] = {
            "all": [_vs(r.X) for r in reports],
            "maximal": [_vs(r.X) for r in reports if r.is_maximal_theta_barrier],
            "intersection_of_maximal": _vs(inter.mask),
            "equals_A_theta": inter.equals_special,
            "N_theta_empty": inter.n_theta_empty,
        }
    return doc


def reanalyze(doc: dict) -> dict:
    """Rebuild a document from its own graph and θ sections."""
    G = load_graph(doc["graph"])
    theta = ThetaSpec.from_text(doc["theta"]["minpoly"], doc["theta"]["label"])
    return analysis_document(G, theta, doc["graph"]["format"], barriers=doc["barriers"] is not None, force=True)


def analysis_text(doc: dict) -> str:
    g = doc["graph"]
    labels = g["labels"]

    def names(vs):
        return "{" + ", ".join(labels[v] for v in vs) + "}"

    lines = [
        f"graph: n={g['n']} ({g['format']})",
        f"theta: {doc['theta']['label']}  (minimal polynomial {doc['theta']['minpoly']})",
        f"mu(G, x) = {doc['mu_display']}",
        f"mult = {doc['mult']}{'  (theta-critical)' if doc['critical'] else ''}",
    ]
    for key in ("D", "A", "N", "P"):
        lines.append(f"{key} = {names(doc['decomposition'][key])}")
    lines.append(f"deficiency = {doc['deficiency']['value']}, witness {names(doc['deficiency']['witness'])}")
    b = doc["barriers"]
    if b is not None:
        lines.append(f"barrier sets ({len(b['all'])}): " + ", ".join(names(x) for x in b["all"]))
        lines.append("maximal: " + ", ".join(names(x) for x in b["maximal"]))
        lines.append(
            f"intersection of maximal = {names(b['intersection_of_maximal'])}; "
            f"equals A: {b['equals_A_theta']}; N empty: {b['N_theta_empty']}"
        )
    return "\n".join(lines)


def roots_document(G: Graph, fmt: str = "edgelist") -> dict:
    mu = MatchingTable(G).poly()
    roots = [
        {"minpoly": t.to_text(), "factor": str(t.minpoly), "label": t.label, "multiplicity": root_multiplicity(mu, t)}
        for t in find_theta_candidates(mu, 2)
    ]
    return {"graph": graph_section(G, fmt), "mu": mu.to_text(), "mu_display": str(mu), "roots": roots}


def roots_text(doc: dict) -> str:
    lines = [f"mu(G, x) = {doc['mu_display']}"]
    lines.extend(f"{r['factor']}: {r['multiplicity']}" for r in doc["roots"])
    return "\n".join(lines)
