"""Shared JSON schema for combinatorial types and parametrized curves.

Schema: {"vertices": [{"index", "weight"}], "edges": [{"endpoints", "slope",
"length"?}], "legs": [{"order", "anchor", "slope"}], "positions"?: [[x, y]]}.
Rationals are serialized bit-exactly as "p/q" strings.
"""

from __future__ import annotations

from .exactq import qq_parse, qq_str
from .graphs import CombinatorialType, Graph, ParamTropicalCurve


def type_to_json(t: CombinatorialType, lengths=None, positions=None) -> dict:
    doc = {
        "vertices": [{"index": v, "weight": t.weights[v]} for v in range(t.graph.n)],
        "edges": [],
        "legs": [
            {"order": i, "anchor": a, "slope": list(t.leg_slopes[i])}
            for i, a in enumerate(t.graph.legs)
        ],
    }
    for i, (u, v) in enumerate(t.graph.edges):
        e = {"endpoints": [u, v], "slope": list(t.edge_slopes[i])}
        if lengths is not None:
            e["length"] = qq_str(lengths[i])
        doc["edges"].append(e)
    if positions is not None:
        doc["positions"] = [[qq_str(p[0]), qq_str(p[1])] for p in positions]
    return doc


def curve_to_json(curve: ParamTropicalCurve) -> dict:
    return type_to_json(curve.ctype, curve.lengths, curve.positions)


def type_from_json(doc: dict):
    """Returns (CombinatorialType, lengths-or-None, positions-or-None)."""
    n = len(doc["vertices"])
    weights = [0] * n
    for v in doc["vertices"]:
        weights[v["index"]] = v["weight"]
    edges, slopes, lengths = [], [], []
    have_lengths = all("length" in e for e in doc["edges"]) and doc["edges"]
    for e in doc["edges"]:
        edges.append(tuple(e["endpoints"]))
        slopes.append(tuple(e["slope"]))
        if have_lengths:
            lengths.append(qq_parse(e["length"]))
    legs = sorted(doc["legs"], key=lambda L: L["order"])
    anchors = [L["anchor"] for L in legs]
    leg_slopes = [tuple(L["slope"]) for L in legs]
    t = CombinatorialType(Graph(n, edges, anchors), weights, slopes, leg_slopes)
    positions = None
    if "positions" in doc:
        positions = [(qq_parse(p[0]), qq_parse(p[1])) for p in doc["positions"]]
    return t, (lengths if have_lengths else None), positions


def curve_from_json(doc: dict) -> ParamTropicalCurve:
    t, lengths, positions = type_from_json(doc)
    if lengths is None or positions is None:
        raise ValueError("curve document needs lengths and positions")
    return ParamTropicalCurve(t, lengths, positions)
