"""Weighted graphs with ordered legs, tropical curves, and combinatorial types.

Conventions.  Legs are always oriented away from their anchor vertex; edges
are stored once with endpoints (u, v), u <= v, and their slope is recorded on
the orientation u -> v (reversing orientation negates the slope).  The star of
a vertex contains two oriented edges for every loop, so a loop contributes
both s and -s to the balancing sum and 2 to the valency.

A combinatorial type is a weighted graph with ordered legs together with
integer slopes on edges and legs; it is balanced when the outgoing slopes at
every vertex sum to zero.  Genus is 1 - chi + sum of vertex weights, with
chi = b0 - b1 of the underlying graph.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from gmpy2 import mpq

from .polygons import TropicalDegree, Vec, vneg


class Graph:
    """Finite multigraph with loops and an ordered sequence of legs."""

    def __init__(self, n_vertices: int, edges: Sequence[tuple[int, int]], legs: Sequence[int]):
        self.n = int(n_vertices)
        es = []
        for (u, v) in edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) has an invalid endpoint")
            es.append((u, v) if u <= v else (v, u))
        self.edges: tuple[tuple[int, int], ...] = tuple(es)
        for a in legs:
            if not 0 <= a < self.n:
                raise ValueError(f"leg anchor {a} is not a vertex")
        self.legs: tuple[int, ...] = tuple(legs)

    def valence(self, v: int) -> int:
        val = sum(1 for a in self.legs if a == v)
        for (u, w) in self.edges:
            if u == v:
                val += 1
            if w == v:
                val += 1
        return val

    def component_ids(self) -> list[int]:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (u, v) in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        roots = {}
        ids = []
        for v in range(self.n):
            r = find(v)
            if r not in roots:
                roots[r] = len(roots)
            ids.append(roots[r])
        return ids

    @property
    def b0(self) -> int:
        return len(set(self.component_ids())) if self.n else 0

    @property
    def b1(self) -> int:
        return len(self.edges) - self.n + self.b0

    @property
    def euler(self) -> int:
        return self.b0 - self.b1


class TropicalCurve:
    """Weighted metric graph with ordered legs: positive rational edge lengths."""

    def __init__(self, graph: Graph, weights: Sequence[int], lengths: Sequence):
        if len(weights) != graph.n or len(lengths) != len(graph.edges):
            raise ValueError("weights/lengths do not match the graph")
        if any(w < 0 for w in weights):
            raise ValueError("vertex weights must be non-negative")
        lens = tuple(mpq(x) for x in lengths)
        if any(x <= 0 for x in lens):
            raise ValueError("edge lengths must be strictly positive")
        self.graph = graph
        self.weights = tuple(int(w) for w in weights)
        self.lengths = lens


class CombinatorialType:
    """Weighted graph with ordered legs and integer slopes on edges and legs."""

    def __init__(
        self,
        graph: Graph,
        weights: Sequence[int],
        edge_slopes: Sequence[Vec],
        leg_slopes: Sequence[Vec],
    ):
        if len(weights) != graph.n:
            raise ValueError("weights do not match the vertex count")
        if len(edge_slopes) != len(graph.edges) or len(leg_slopes) != len(graph.legs):
            raise ValueError("slopes do not match the graph")
        self.graph = graph
        self.weights = tuple(int(w) for w in weights)
        self.edge_slopes = tuple((int(s[0]), int(s[1])) for s in edge_slopes)
        self.leg_slopes = tuple((int(s[0]), int(s[1])) for s in leg_slopes)

    def star(self, v: int) -> list[Vec]:
        """Outgoing slopes at v; loops contribute both orientations."""
        out = []
        for i, (a, b) in enumerate(self.graph.edges):
            s = self.edge_slopes[i]
            if a == v and b == v:
                out.extend([s, vneg(s)])
            elif a == v:
                out.append(s)
            elif b == v:
                out.append(vneg(s))
        for i, a in enumerate(self.graph.legs):
            if a == v:
                out.append(self.leg_slopes[i])
        return out

    @property
    def is_weightless(self) -> bool:
        return all(w == 0 for w in self.weights)

    @property
    def is_trivalent(self) -> bool:
        return all(self.graph.valence(v) == 3 for v in range(self.graph.n))

    def contracted_legs(self) -> list[int]:
        return [i for i, s in enumerate(self.leg_slopes) if s == (0, 0)]

    def extended_degree(self) -> tuple[Vec, ...]:
        return self.leg_slopes

    def __repr__(self):
        return (
            f"CombinatorialType(V={self.graph.n}, E={list(zip(self.graph.edges, self.edge_slopes))}, "
            f"L={list(zip(self.graph.legs, self.leg_slopes))}, w={self.weights})"
        )


class ParamTropicalCurve:
    """A combinatorial type realized in the plane: rational edge lengths and
    vertex positions with pos(head) - pos(tail) = length * slope on every edge."""

    def __init__(self, ctype: CombinatorialType, lengths: Sequence, positions: Sequence):
        self.ctype = ctype
        self.lengths = tuple(mpq(x) for x in lengths)
        self.positions = tuple((mpq(p[0]), mpq(p[1])) for p in positions)
        if len(self.lengths) != len(ctype.graph.edges):
            raise ValueError("length count mismatch")
        if len(self.positions) != ctype.graph.n:
            raise ValueError("position count mismatch")

    def check(self) -> None:
        if any(x <= 0 for x in self.lengths):
            raise ValueError("edge lengths must be strictly positive")
        for i, (u, v) in enumerate(self.ctype.graph.edges):
            s = self.ctype.edge_slopes[i]
            x = self.lengths[i]
            pu, pv = self.positions[u], self.positions[v]
            if pv[0] - pu[0] != x * s[0] or pv[1] - pu[1] != x * s[1]:
                raise ValueError(f"edge {i} violates the edge relation")

    def leg_position(self, leg: int) -> tuple:
        return self.positions[self.ctype.graph.legs[leg]]


def genus(obj) -> int:
    """1 - chi(G) + sum of vertex weights."""
    if isinstance(obj, CombinatorialType):
        g, w = obj.graph, obj.weights
    elif isinstance(obj, TropicalCurve):
        g, w = obj.graph, obj.weights
    else:
        raise TypeError("genus expects a TropicalCurve or CombinatorialType")
    return 1 - g.euler + sum(w)


def is_stable(curve) -> bool:
    """2*g(v) - 2 + val(v) >= 1 at every vertex."""
    g, w = curve.graph, curve.weights
    return all(2 * w[v] - 2 + g.valence(v) >= 1 for v in range(g.n))


def check_balancing(t: CombinatorialType) -> bool:
    for v in range(t.graph.n):
        sx = sum(s[0] for s in t.star(v))
        sy = sum(s[1] for s in t.star(v))
        if (sx, sy) != (0, 0):
            return False
    return True


def degree(t: CombinatorialType) -> TropicalDegree:
    """Multiset of the nonzero leg slopes (contracted legs excluded)."""
    return TropicalDegree([s for s in t.leg_slopes if s != (0, 0)])


def contract(t: CombinatorialType, edge_indices: Iterable[int]) -> CombinatorialType:
    """Weighted edge contraction: each connected component of the selected
    subgraph collapses to a vertex of genus b1(component) + sum of weights."""
    sel = sorted(set(edge_indices))
    for i in sel:
        if not 0 <= i < len(t.graph.edges):
            raise ValueError(f"no edge with index {i}")
    g = t.graph
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in sel:
        u, v = g.edges[i]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    classes: dict[int, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(find(v), []).append(v)
    ordered = sorted(classes.values(), key=min)
    new_id = {}
    for idx, cls in enumerate(ordered):
        for v in cls:
            new_id[v] = idx
    weights = []
    for cls in ordered:
        internal = sum(1 for i in sel if new_id[g.edges[i][0]] == new_id[cls[0]])
        b1 = internal - len(cls) + 1
        weights.append(b1 + sum(t.weights[v] for v in cls))
    edges, slopes = [], []
    sel_set = set(sel)
    for i, (u, v) in enumerate(g.edges):
        if i in sel_set:
            continue
        a, b = new_id[u], new_id[v]
        s = t.edge_slopes[i]
        if a <= b:
            edges.append((a, b))
            slopes.append(s)
        else:
            edges.append((b, a))
            slopes.append(vneg(s))
    legs = [new_id[a] for a in g.legs]
    return CombinatorialType(Graph(len(ordered), edges, legs), weights, slopes, t.leg_slopes)


def mikhalkin_multiplicity(t: CombinatorialType) -> int:
    """Product over trivalent vertices not adjacent to contracted legs of the
    lattice area |det| of two of the three outgoing slopes (balancing makes
    the choice of pair immaterial).  Defined only for weightless trivalent
    types."""
    if not t.is_weightless:
        raise ValueError("Mikhalkin multiplicity needs a weightless type")
    if not t.is_trivalent:
        raise ValueError("Mikhalkin multiplicity needs a trivalent type")
    mult = 1
    for v in range(t.graph.n):
        if any(
            t.graph.legs[i] == v and t.leg_slopes[i] == (0, 0)
            for i in range(len(t.graph.legs))
        ):
            continue
        star = t.star(v)
        s1, s2 = star[0], star[1]
        mult *= abs(s1[0] * s2[1] - s1[1] * s2[0])
    return mult


def expected_dimension(t: CombinatorialType, r: int | None = None) -> int:
    """|degree| + r + (rank N - 3)*chi - overvalency, instantiated at rank 2."""
    r0 = len(t.contracted_legs())
    if r is not None and r != r0:
        raise ValueError(f"type has {r0} contracted legs, not {r}")
    nd = len(t.leg_slopes) - r0
    ov = sum(max(0, t.graph.valence(v) - 3) for v in range(t.graph.n))
    return nd + r0 + (2 - 3) * t.graph.euler - ov


# ---------------------------------------------------------------------------
# Isomorphism machinery: canonical forms and automorphism counts.
#
# Legs can be treated two ways: "ordered" (the marking: isomorphisms fix each
# leg, the paper's convention) or "slope" (legs of equal slope at a vertex are
# interchangeable; used to normalize the unordered boundary legs).


def _initial_colors(t: CombinatorialType, legs: str) -> list:
    cols = []
    for v in range(t.graph.n):
        if legs == "ordered":
            leg_data = tuple(sorted(i for i, a in enumerate(t.graph.legs) if a == v))
        else:
            leg_data = tuple(sorted(t.leg_slopes[i] for i, a in enumerate(t.graph.legs) if a == v))
        cols.append((t.weights[v], tuple(sorted(t.star(v))), leg_data))
    return cols


def _refine(t: CombinatorialType, colors: list) -> list[int]:
    n = t.graph.n
    ids = _normalize(colors)
    while True:
        new = []
        for v in range(n):
            nbr = []
            for i, (a, b) in enumerate(t.graph.edges):
                s = t.edge_slopes[i]
                if a == v and b == v:
                    nbr.append((s, ids[v]))
                    nbr.append((vneg(s), ids[v]))
                elif a == v:
                    nbr.append((s, ids[b]))
                elif b == v:
                    nbr.append((vneg(s), ids[a]))
            new.append((ids[v], tuple(sorted(nbr))))
        new_ids = _normalize(new)
        if new_ids == ids:
            return ids
        ids = new_ids


def _normalize(colors: list) -> list[int]:
    order = sorted(set(colors))
    rank = {c: i for i, c in enumerate(order)}
    return [rank[c] for c in colors]


def _edge_dict(t: CombinatorialType) -> dict[tuple[int, int], list[Vec]]:
    d: dict[tuple[int, int], list[Vec]] = {}
    for i, (u, v) in enumerate(t.graph.edges):
        d.setdefault((u, v), []).append(t.edge_slopes[i])
    return d


def _encode(t: CombinatorialType, label: list[int], legs: str) -> tuple:
    weights = [0] * t.graph.n
    for v in range(t.graph.n):
        weights[label[v]] = t.weights[v]
    edges = []
    for i, (u, v) in enumerate(t.graph.edges):
        lu, lv = label[u], label[v]
        s = t.edge_slopes[i]
        if lu < lv:
            edges.append((lu, lv, s))
        elif lu > lv:
            edges.append((lv, lu, vneg(s)))
        else:
            edges.append((lu, lu, max(s, vneg(s))))
    if legs == "ordered":
        leg_enc = tuple((label[a], t.leg_slopes[i]) for i, a in enumerate(t.graph.legs))
    else:
        leg_enc = tuple(sorted((label[a], t.leg_slopes[i]) for i, a in enumerate(t.graph.legs)))
    return (tuple(weights), tuple(sorted(edges)), leg_enc)


def canonical_key(t: CombinatorialType, legs: str = "ordered") -> tuple:
    """Canonical form under isomorphism (individualization-refinement);
    equal keys characterize isomorphic types in the chosen leg mode."""
    ids = _refine(t, _initial_colors(t, legs))
    best: list = [None]

    def rec(ids):
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(ids):
            cells.setdefault(c, []).append(v)
        split = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                split = cells[c]
                break
        if split is None:
            label = [0] * t.graph.n
            for v in range(t.graph.n):
                label[v] = ids[v]
            enc = _encode(t, label, legs)
            if best[0] is None or enc < best[0]:
                best[0] = enc
            return
        for v in split:
            branched = list(ids)
            branched[v] = -1  # individualize: strictly smallest color
            rec(_refine(t, _normalize([(c,) for c in branched])))

    rec(ids)
    return best[0]


def automorphism_count(t: CombinatorialType, legs: str = "ordered") -> int:
    """Order of the automorphism group: isomorphisms of the type to itself.

    With legs="ordered" the legs are pointwise fixed (the marking).  Parallel
    edges with identical endpoints and slopes contribute factorials, as do
    same-slope legs at one vertex in "slope" mode.
    """
    n = t.graph.n
    ids = _refine(t, _initial_colors(t, legs))
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(ids):
        cells.setdefault(c, []).append(v)
    edict = _edge_dict(t)
    order = sorted(range(n), key=lambda v: (ids[v], v))
    count = 0

    def slopes_between(a, b, img_a, img_b) -> bool:
        # orient both multisets a->b and img_a->img_b before comparing
        def oriented(lo_hi_list, lo, a_):
            return sorted(s if lo == a_ else vneg(s) for s in lo_hi_list)

        left = oriented(edict.get((min(a, b), max(a, b)), []), min(a, b), a)
        right = oriented(edict.get((min(img_a, img_b), max(img_a, img_b)), []), min(img_a, img_b), img_a)
        return left == right

    def loops_at(v):
        return sorted(max(s, vneg(s)) for s in edict.get((v, v), []))

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def rec(i: int):
        nonlocal count
        if i == n:
            count += 1
            return
        v = order[i]
        for w in cells[ids[v]]:
            if w in used:
                continue
            ok = loops_at(v) == loops_at(w)
            if ok:
                for u in mapping:
                    if u == v:
                        continue
                    if not slopes_between(v, u, w, mapping[u]):
                        ok = False
                        break
            if ok:
                mapping[v] = w
                used.add(w)
                rec(i + 1)
                used.discard(w)
                del mapping[v]

    rec(0)
    # multiplicity factors: identical parallel edges / loops, and in slope
    # mode identical legs at one vertex, permute freely
    factor = 1
    for (u, v), slopes in edict.items():
        groups: dict = {}
        if u == v:
            for s in slopes:
                key = max(s, vneg(s))
                groups[key] = groups.get(key, 0) + 1
        else:
            for s in slopes:
                groups[s] = groups.get(s, 0) + 1
        for m in groups.values():
            factor *= math.factorial(m)
    if legs == "slope":
        per_vertex: dict = {}
        for i, a in enumerate(t.graph.legs):
            key = (a, t.leg_slopes[i])
            per_vertex[key] = per_vertex.get(key, 0) + 1
        for m in per_vertex.values():
            factor *= math.factorial(m)
    return count * factor
