"""Enumeration of connected weightless trivalent types with no contracted legs.

A "shape" is what remains of a counted curve after forgetting its marked
points: a connected weightless trivalent type whose legs realize the degree
and none of whose edges or legs are contracted.  Marked types arise from
shapes by subdividing segments, so enumerating shapes (finitely many, thanks
to the admissible-slope bound) is the combinatorial half of the count.

Genus 0 shapes are trees: once the tree on the legs is chosen, balancing
forces every edge slope to be the sum of the leg slopes behind it.  Genus 1
shapes are a cycle with rooted trees hanging off it; the cycle slopes are
determined by one free admissible slope and the hanging sums.  Genus >= 2
shapes retract onto a trivalent skeleton with 2g-2 vertices whose edges are
subdivided by hang vertices; the skeleton edge slopes form a g-dimensional
affine family enumerated over the admissible set.

The admissible slope set consists of the 90-degree rotations of differences
of lattice points of the polygon: the finiteness device for generation,
inherited from the duality between plane tropical curves and subdivisions of
the Newton polygon.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import CombinatorialType, Graph, automorphism_count, canonical_key, check_balancing, genus as type_genus, mikhalkin_multiplicity
from .polygons import LatticePolygon, TropicalDegree, Vec, cross, rot90, vadd, vneg, vsub


def admissible_slopes(poly: LatticePolygon) -> frozenset[Vec]:
    """Rotations of differences of lattice points of the polygon (nonzero)."""
    pts = sorted(poly.lattice_points())
    out = set()
    for a in pts:
        for b in pts:
            if a != b:
                out.add(rot90(vsub(a, b)))
    return frozenset(out)


# Rooted-tree structures: ("L", slope) or ("N", sigma, child1, child2) with
# child1 <= child2 as tuples and sigma the sum of the leg slopes below.


def _sigma(tree) -> Vec:
    return tree[1]


def _counts_key(counts: dict) -> tuple:
    return tuple(sorted((s, c) for s, c in counts.items() if c > 0))


def _sub_multisets(counts: dict):
    """All nonempty proper sub-multisets, as dicts."""
    slopes = sorted(counts)
    ranges = [range(counts[s] + 1) for s in slopes]
    total = sum(counts.values())
    for combo in itertools.product(*ranges):
        size = sum(combo)
        if size == 0 or size == total:
            continue
        yield {s: c for s, c in zip(slopes, combo) if c > 0}


class _TreeEnumerator:
    """Memoized enumeration of rooted trivalent trees over slope multisets."""

    def __init__(self, admissible: frozenset[Vec], prune_parallel: bool):
        self.admissible = admissible
        self.prune_parallel = prune_parallel
        self.memo: dict[tuple, list] = {}

    def rooted(self, counts: dict) -> list:
        key = _counts_key(counts)
        if key in self.memo:
            return self.memo[key]
        out = []
        if sum(counts.values()) == 1:
            (slope,) = [s for s, c in counts.items() if c == 1]
            out.append(("L", slope))
        else:
            seen_splits = set()
            for sub in _sub_multisets(counts):
                rest = {s: counts[s] - sub.get(s, 0) for s in counts}
                rest = {s: c for s, c in rest.items() if c > 0}
                k1, k2 = _counts_key(sub), _counts_key(rest)
                if k1 > k2 or (min(k1, k2), max(k1, k2)) in seen_splits:
                    continue
                seen_splits.add((k1, k2))
                out.extend(self._join(sub, rest))
        self.memo[key] = out
        return out

    def _viable_child(self, counts: dict, tree) -> bool:
        if tree[0] == "L":
            return True
        s = _sigma(tree)
        return s != (0, 0) and s in self.admissible

    def _join(self, c1: dict, c2: dict) -> list:
        t1s = [t for t in self.rooted(c1) if self._viable_child(c1, t)]
        t2s = [t for t in self.rooted(c2) if self._viable_child(c2, t)]
        out = []
        same = _counts_key(c1) == _counts_key(c2)
        for i, t1 in enumerate(t1s):
            for t2 in (t1s[i:] if same else t2s):
                s1, s2 = _sigma(t1), _sigma(t2)
                if self.prune_parallel and cross(s1, s2) == 0:
                    continue
                a, b = (t1, t2) if t1 <= t2 else (t2, t1)
                sig = vadd(s1, s2)
                out.append(("N", sig, a, b))
        return out


class _ShapeBuilder:
    """Accumulates vertices, edges and legs while materializing a shape."""

    def __init__(self):
        self.edges: list[tuple[int, int]] = []
        self.slopes: list[Vec] = []
        self.legs: list[tuple[int, Vec]] = []
        self.n = 0

    def new_vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def add_edge(self, u: int, v: int, slope_uv: Vec) -> None:
        if u <= v:
            self.edges.append((u, v))
            self.slopes.append(slope_uv)
        else:
            self.edges.append((v, u))
            self.slopes.append(vneg(slope_uv))

    def add_leg(self, v: int, slope: Vec) -> None:
        self.legs.append((v, slope))

    def attach(self, parent: int, tree) -> None:
        """Attach a rooted tree below ``parent``: a leaf becomes a leg, a node
        becomes a new vertex joined by an edge of slope sigma(tree)."""
        if tree[0] == "L":
            self.add_leg(parent, tree[1])
            return
        v = self.new_vertex()
        self.add_edge(parent, v, _sigma(tree))
        self.attach(v, tree[2])
        self.attach(v, tree[3])

    def build(self) -> CombinatorialType:
        legs_sorted = sorted(self.legs, key=lambda al: (al[1], al[0]))
        graph = Graph(self.n, self.edges, [a for a, _ in legs_sorted])
        return CombinatorialType(
            graph, [0] * self.n, self.slopes, [s for _, s in legs_sorted]
        )


@dataclass(frozen=True)
class Shape:
    ctype: CombinatorialType
    key: tuple
    aut: int
    mult: int
    genus: int


def _finish(ctype: CombinatorialType, seen: dict) -> None:
    key = canonical_key(ctype, legs="slope")
    if key in seen:
        return
    assert check_balancing(ctype), "generated shape is unbalanced"
    seen[key] = Shape(
        ctype=ctype,
        key=key,
        aut=automorphism_count(ctype, legs="slope"),
        mult=mikhalkin_multiplicity(ctype),
        genus=type_genus(ctype),
    )


def tree_shapes(degree: TropicalDegree, admissible: frozenset[Vec], prune_parallel: bool) -> list[Shape]:
    entries = degree.entries()
    if len(entries) < 3:
        raise NotImplementedError("degrees with fewer than 3 entries have no trivalent shapes")
    enum = _TreeEnumerator(admissible, prune_parallel)
    root_slope = entries[0]
    counts = dict(degree.counts)
    counts[root_slope] -= 1
    counts = {s: c for s, c in counts.items() if c > 0}
    seen: dict = {}
    split_seen = set()
    for sub in _sub_multisets(counts):
        rest = {s: counts[s] - sub.get(s, 0) for s in counts}
        rest = {s: c for s, c in rest.items() if c > 0}
        k1, k2 = _counts_key(sub), _counts_key(rest)
        if (min(k1, k2), max(k1, k2)) in split_seen:
            continue
        split_seen.add((min(k1, k2), max(k1, k2)))
        for joined in enum._join(sub, rest):
            s1, s2 = _sigma(joined[2]), _sigma(joined[3])
            if prune_parallel and cross(s1, s2) == 0:
                continue
            b = _ShapeBuilder()
            top = b.new_vertex()
            b.add_leg(top, root_slope)
            b.attach(top, joined[2])
            b.attach(top, joined[3])
            _finish(b.build(), seen)
    return sorted(seen.values(), key=lambda sh: sh.key)


def cycle_shapes(degree: TropicalDegree, admissible: frozenset[Vec], prune_parallel: bool) -> list[Shape]:
    """Genus-1 shapes: a cycle of length >= 2, one hanging rooted tree per
    cycle vertex.  Walking the cycle, the edge slope drops by the hanging
    sum at each vertex; one free admissible slope closes the system."""
    enum = _TreeEnumerator(admissible, prune_parallel)
    counts = dict(degree.counts)
    seen: dict = {}
    lex_min = min(counts)

    def walk(remaining: dict, u_prev: Vec, u0: Vec, parts: list, first: bool):
        if not remaining:
            if len(parts) >= 2 and u_prev == u0:
                _materialize(parts)
            return
        for sub in _sub_multisets_or_all(remaining):
            if first and sub.get(lex_min, 0) == 0:
                continue  # fix the part containing the lex-min slope first
            sigma = _multiset_sum(sub)
            for tree in enum.rooted(sub):
                if tree[0] == "N" and (sigma == (0, 0) or sigma not in admissible):
                    continue
                u_next = vsub(u_prev, sigma)
                if u_next == (0, 0) or u_next not in admissible:
                    continue
                if prune_parallel and cross(u_prev, u_next) == 0:
                    continue
                rest = {s: remaining[s] - sub.get(s, 0) for s in remaining}
                rest = {s: c for s, c in rest.items() if c > 0}
                walk(rest, u_next, u0, parts + [(tree, u_next)], False)

    def _materialize(parts: list):
        # vertex i carries hang parts[i][0]; edge i -> i+1 has slope parts[i][1]
        c = len(parts)
        b = _ShapeBuilder()
        vs = [b.new_vertex() for _ in range(c)]
        for i in range(c):
            b.add_edge(vs[i], vs[(i + 1) % c], parts[i][1])
        for i in range(c):
            b.attach(vs[i], parts[i][0])
        _finish(b.build(), seen)

    for u0 in sorted(admissible):
        walk(counts, u0, u0, [], True)
    return sorted(seen.values(), key=lambda sh: sh.key)


def _sub_multisets_or_all(counts: dict):
    """Nonempty sub-multisets including the full multiset."""
    slopes = sorted(counts)
    ranges = [range(counts[s] + 1) for s in slopes]
    for combo in itertools.product(*ranges):
        if sum(combo) == 0:
            continue
        yield {s: c for s, c in zip(slopes, combo) if c > 0}


def _multiset_sum(counts: dict) -> Vec:
    sx = sum(s[0] * c for s, c in counts.items())
    sy = sum(s[1] * c for s, c in counts.items())
    return (sx, sy)


def _trivalent_skeletons(nv: int) -> list[list[tuple[int, int]]]:
    """Connected multigraphs on nv vertices with every valence 3 (loops count
    twice), up to isomorphism, as sorted edge lists."""
    slots = [(i, j) for i in range(nv) for j in range(i, nv)]
    results = {}

    def rec(idx: int, deg: list[int], chosen: list[tuple[int, int]]):
        if idx == len(slots):
            if any(d != 3 for d in deg):
                return
            ids = Graph(nv, chosen, []).component_ids()
            if len(set(ids)) != 1:
                return
            best = min(
                tuple(sorted(tuple(sorted((p[i], p[j]))) for (i, j) in chosen))
                for p in itertools.permutations(range(nv))
            )
            results.setdefault(best, [tuple(e) for e in sorted(chosen)])
            return
        i, j = slots[idx]
        inc = 2 if i == j else 1
        m = 0
        while deg[i] + inc * m <= 3 and deg[j] + (inc if i != j else 2) * m <= 3:
            rec(
                idx + 1,
                [d + (inc * m if v == i else 0) + (m if v == j and i != j else 0) for v, d in enumerate(deg)],
                chosen + [(i, j)] * m,
            )
            m += 1

    rec(0, [0] * nv, [])
    return sorted(results.values())


def skeleton_shapes(degree: TropicalDegree, g: int, admissible: frozenset[Vec], prune_parallel: bool) -> list[Shape]:
    """Genus >= 2 shapes: a trivalent skeleton on 2g-2 vertices, each edge
    subdivided by hang vertices carrying rooted trees, slopes solved from the
    skeleton balancing with g free admissible vectors."""
    if g < 2:
        raise ValueError("skeleton enumeration applies to genus >= 2")
    enum = _TreeEnumerator(admissible, prune_parallel)
    counts = dict(degree.counts)
    seen: dict = {}
    for skel in _trivalent_skeletons(2 * g - 2):
        _skeleton_fill(skel, counts, enum, admissible, prune_parallel, seen)
    return sorted(seen.values(), key=lambda sh: sh.key)


def _skeleton_fill(skel, counts, enum, admissible, prune_parallel, seen):
    ne = len(skel)

    # Step 1: distribute the legs into hang sequences along the skeleton edges.
    # hangs[k] is the ordered list of (tree, sigma) on edge k; loops need >= 1.
    def assign(k: int, remaining: dict, hangs: list):
        if k == ne:
            if not remaining:
                _skeleton_slopes(skel, hangs, enum, admissible, prune_parallel, seen)
            return
        is_loop = skel[k][0] == skel[k][1]
        for seq in _hang_sequences(remaining, minimum=1 if is_loop else 0):
            rest = dict(remaining)
            for sub, _tree, _sig in seq:
                for s, c in sub.items():
                    rest[s] -= c
            rest = {s: c for s, c in rest.items() if c > 0}
            assign(k + 1, rest, hangs + [[(t, sig) for _sub, t, sig in seq]])

    def _hang_sequences(remaining: dict, minimum: int):
        """All ordered sequences of disjoint hangs drawn from ``remaining``
        (possibly empty when minimum is 0)."""
        out = [[]] if minimum == 0 else []
        stack = [([], remaining)]
        while stack:
            seq, rem = stack.pop()
            if seq and len(seq) >= minimum:
                out.append(seq)
            if not rem:
                continue
            for sub in _sub_multisets_or_all(rem):
                sigma = _multiset_sum(sub)
                for tree in enum.rooted(sub):
                    if tree[0] == "N" and (sigma == (0, 0) or sigma not in admissible):
                        continue
                    nxt = {s: rem[s] - sub.get(s, 0) for s in rem}
                    nxt = {s: c for s, c in nxt.items() if c > 0}
                    stack.append((seq + [(sub, tree, sigma)], nxt))
        return out

    assign(0, counts, [])


def _skeleton_slopes(skel, hangs, enum, admissible, prune_parallel, seen):
    """Enumerate first-segment slopes w_k per skeleton edge so that every
    skeleton vertex balances, then materialize."""
    ne = len(skel)
    nv = max(max(e) for e in skel) + 1
    sigtot = [_vecsum([sig for _t, sig in hangs[k]]) for k in range(ne)]
    # vertex equation: sum_{k starts at a} w_k - sum_{k ends at a} w_k
    #                = -(sum_{k ends at a} sigtot_k) - sum_{loops at a} sigtot_k
    incid = [[] for _ in range(nv)]
    rhs = [(0, 0)] * nv
    for k, (u, v) in enumerate(skel):
        if u == v:
            rhs[u] = vadd(rhs[u], vneg(sigtot[k]))
        else:
            incid[u].append((k, 1))
            incid[v].append((k, -1))
            rhs[v] = vadd(rhs[v], vneg(sigtot[k]))
    # rhs moved so the equation reads  sum sign*w = rhs
    for a in range(nv):
        rhs[a] = vneg(rhs[a])

    w: list = [None] * ne
    sorted_adm = sorted(admissible)

    def check_vertex(a) -> bool:
        total = (0, 0)
        for k, sign in incid[a]:
            if w[k] is None:
                return True
            total = vadd(total, w[k] if sign == 1 else vneg(w[k]))
        return total == rhs[a]

    def propagate() -> tuple[bool, list[int]]:
        changed: list[int] = []
        progress = True
        while progress:
            progress = False
            for a in range(nv):
                unknown = [(k, sign) for k, sign in incid[a] if w[k] is None]
                if len(unknown) == 1:
                    k, sign = unknown[0]
                    total = (0, 0)
                    for k2, s2 in incid[a]:
                        if w[k2] is not None:
                            total = vadd(total, w[k2] if s2 == 1 else vneg(w[k2]))
                    val = vsub(rhs[a], total)
                    if sign == -1:
                        val = vneg(val)
                    if val == (0, 0) or val not in admissible:
                        return False, changed
                    w[k] = val
                    changed.append(k)
                    progress = True
                elif not unknown:
                    if not check_vertex(a):
                        return False, changed
        return True, changed

    def rec():
        free = next((k for k in range(ne) if w[k] is None), None)
        if free is None:
            _skeleton_materialize(skel, hangs, sigtot, w, prune_parallel, admissible, seen)
            return
        for val in sorted_adm:
            w[free] = val
            ok, changed = propagate()
            if ok:
                rec()
            for k in changed:
                w[k] = None
            w[free] = None

    ok, changed = propagate()
    if ok:
        rec()
    for k in changed:
        w[k] = None


def _vecsum(vecs) -> Vec:
    total = (0, 0)
    for v in vecs:
        total = vadd(total, v)
    return total


def _skeleton_materialize(skel, hangs, sigtot, w, prune_parallel, admissible, seen):
    ne = len(skel)
    # segment slopes along each edge; all must be admissible and nonzero
    segs = []
    for k in range(ne):
        cur = w[k]
        path = [cur]
        for _t, sig in hangs[k]:
            cur = vsub(cur, sig)
            if cur == (0, 0) or cur not in admissible:
                return
            path.append(cur)
        if vsub(w[k], sigtot[k]) != path[-1]:
            return
        segs.append(path)
        if prune_parallel:
            prev = path[0]
            for nxt in path[1:]:
                if cross(prev, nxt) == 0:
                    return
                prev = nxt
    nv = max(max(e) for e in skel) + 1
    if prune_parallel:
        # skeleton vertices: any parallel pair among the three incident
        # end-slopes kills the multiplicity
        ends: list[list[Vec]] = [[] for _ in range(nv)]
        for k, (u, v) in enumerate(skel):
            ends[u].append(segs[k][0])
            ends[v].append(vneg(segs[k][-1]))
        for a in range(nv):
            if len(ends[a]) >= 2 and cross(ends[a][0], ends[a][1]) == 0:
                return
    b = _ShapeBuilder()
    verts = [b.new_vertex() for _ in range(nv)]
    for k, (u, v) in enumerate(skel):
        chain = [verts[u]] + [b.new_vertex() for _ in hangs[k]] + [verts[v]]
        for j in range(len(chain) - 1):
            b.add_edge(chain[j], chain[j + 1], segs[k][j])
        for j, (tree, _sig) in enumerate(hangs[k]):
            b.attach(chain[j + 1], tree)
    _finish(b.build(), seen)


def connected_shapes(
    degree: TropicalDegree,
    g: int,
    admissible: frozenset[Vec],
    prune_parallel: bool = True,
) -> list[Shape]:
    """All connected weightless trivalent shapes of the degree and genus up
    to isomorphism; with prune_parallel only multiplicity > 0 shapes."""
    if not degree.is_balanced:
        raise ValueError("degree must sum to zero")
    if g < 0:
        return []
    if g == 0:
        return tree_shapes(degree, admissible, prune_parallel)
    if g == 1:
        return cycle_shapes(degree, admissible, prune_parallel)
    return skeleton_shapes(degree, g, admissible, prune_parallel)


def balanced_partitions(degree: TropicalDegree) -> list[tuple[tuple, ...]]:
    """Partitions of the degree multiset into balanced nonempty parts, each
    part as a counts-key; the supports of reducible curves."""
    results: list[tuple[tuple, ...]] = []

    def rec(remaining: dict, parts: list):
        if not remaining:
            results.append(tuple(sorted(parts)))
            return
        least = min(remaining)
        for sub in _sub_multisets_or_all(remaining):
            if sub.get(least, 0) == 0:
                continue
            if _multiset_sum(sub) != (0, 0):
                continue
            rest = {s: remaining[s] - sub.get(s, 0) for s in remaining}
            rest = {s: c for s, c in rest.items() if c > 0}
            rec(rest, parts + [_counts_key(sub)])

    rec(dict(degree.counts), [])
    return sorted(set(results))
