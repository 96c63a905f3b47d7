"""Lattice polygons and the toric data derived from them.

A convex lattice polygon determines a polarized toric surface; everything the
enumeration needs from that surface is combinatorial: lattice point counts on
the boundary and in the interior, primitive inner normals with the integral
lengths of the sides, and the dual (reduced) tropical degree consisting of the
outer normals counted with side lengths.  The Severi dimension formula
|boundary points| + g - 1 and the delta-invariant |interior points| - g are
provided as computed quantities.
"""

from __future__ import annotations

import math
from typing import Iterable, NamedTuple

Vec = tuple[int, int]


def vsub(a: Vec, b: Vec) -> Vec:
    return (a[0] - b[0], a[1] - b[1])


def vadd(a: Vec, b: Vec) -> Vec:
    return (a[0] + b[0], a[1] + b[1])


def vneg(a: Vec) -> Vec:
    return (-a[0], -a[1])


def cross(a: Vec, b: Vec) -> int:
    return a[0] * b[1] - a[1] * b[0]


def dot(a: Vec, b: Vec) -> int:
    return a[0] * b[0] + a[1] * b[1]


def rot90(a: Vec) -> Vec:
    """Counterclockwise quarter turn; maps a CCW edge direction to its inner normal."""
    return (-a[1], a[0])


def content(a: Vec) -> int:
    """gcd of the coordinates: the integral length of the vector."""
    return math.gcd(abs(a[0]), abs(a[1]))


def primitive(a: Vec) -> Vec:
    g = content(a)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return (a[0] // g, a[1] // g)


class PolygonSide(NamedTuple):
    index: int
    start: Vec
    end: Vec
    inner_normal: Vec      # primitive, points into the polygon
    integral_length: int   # number of lattice segments on the side


class TropicalDegree:
    """Multiset of nonzero integer vectors summing to zero.

    Dual to a polygon when the entries are the primitive outer normals of the
    sides, each with multiplicity the integral length of its side.
    """

    def __init__(self, entries: Iterable[Vec]):
        counts: dict[Vec, int] = {}
        for v in entries:
            v = (int(v[0]), int(v[1]))
            if v == (0, 0):
                raise ValueError("degree entries must be nonzero")
            counts[v] = counts.get(v, 0) + 1
        self._counts = dict(sorted(counts.items()))

    @property
    def counts(self) -> dict[Vec, int]:
        return dict(self._counts)

    def entries(self) -> list[Vec]:
        out = []
        for v, m in self._counts.items():
            out.extend([v] * m)
        return out

    def __len__(self) -> int:
        return sum(self._counts.values())

    def __eq__(self, other) -> bool:
        return isinstance(other, TropicalDegree) and self._counts == other._counts

    def __hash__(self):
        return hash(tuple(self._counts.items()))

    def __repr__(self):
        inner = ", ".join(f"{v}x{m}" if m > 1 else f"{v}" for v, m in self._counts.items())
        return f"TropicalDegree({inner})"

    def key(self) -> tuple:
        return tuple(self._counts.items())

    def total(self) -> Vec:
        tx = sum(v[0] * m for v, m in self._counts.items())
        ty = sum(v[1] * m for v, m in self._counts.items())
        return (tx, ty)

    @property
    def is_balanced(self) -> bool:
        return self.total() == (0, 0)

    @property
    def is_reduced(self) -> bool:
        return all(content(v) == 1 for v in self._counts)


class LatticePolygon:
    """Convex polygon with vertices in ZZ^2.

    Input vertices may come in any order; construction takes the convex hull,
    strips collinear points, and stores the vertex cycle counterclockwise
    starting from the lexicographically smallest vertex.  Degenerate input
    (zero area, or points strictly inside the hull of the others) is rejected.
    """

    def __init__(self, vertices: Iterable[Vec]):
        pts = [(int(p[0]), int(p[1])) for p in vertices]
        if len(set(pts)) < 3:
            raise ValueError("a lattice polygon needs at least 3 distinct vertices")
        hull = _convex_hull(sorted(set(pts)))
        if len(hull) < 3:
            raise ValueError("degenerate polygon: all points collinear")
        for p in set(pts) - set(hull):
            if not _on_hull_boundary(hull, p):
                raise ValueError(f"vertex {p} lies strictly inside the polygon")
        self.vertices: tuple[Vec, ...] = tuple(hull)

    def __repr__(self):
        return f"LatticePolygon({list(self.vertices)})"

    def __eq__(self, other):
        return isinstance(other, LatticePolygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    @classmethod
    def from_string(cls, text: str) -> "LatticePolygon":
        """Parse "x1,y1;x2,y2;..." (the inline CLI form)."""
        pts = []
        for chunk in text.strip().split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            xy = chunk.split(",")
            if len(xy) != 2:
                raise ValueError(f"bad vertex {chunk!r}: expected 'x,y'")
            pts.append((int(xy[0].strip()), int(xy[1].strip())))
        return cls(pts)

    @classmethod
    def from_text_file(cls, path) -> "LatticePolygon":
        """Parse the polygon file format: one whitespace-separated pair per line."""
        pts = []
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                parts = line.replace(",", " ").split()
                if len(parts) != 2:
                    raise ValueError(f"bad vertex line {line!r}")
                pts.append((int(parts[0]), int(parts[1])))
        return cls(pts)

    def area2(self) -> int:
        """Twice the Euclidean area (always a positive integer)."""
        v = self.vertices
        return sum(cross(v[i], v[(i + 1) % len(v)]) for i in range(len(v)))

    def sides(self) -> list[PolygonSide]:
        out = []
        v = self.vertices
        for i in range(len(v)):
            a, b = v[i], v[(i + 1) % len(v)]
            d = vsub(b, a)
            out.append(
                PolygonSide(
                    index=i,
                    start=a,
                    end=b,
                    inner_normal=primitive(rot90(d)),
                    integral_length=content(d),
                )
            )
        return out

    def boundary_lattice_points(self) -> frozenset[Vec]:
        pts = set()
        for s in self.sides():
            step = primitive(vsub(s.end, s.start))
            p = s.start
            for _ in range(s.integral_length):
                pts.add(p)
                p = vadd(p, step)
        return frozenset(pts)

    def contains_strictly(self, p: Vec) -> bool:
        v = self.vertices
        return all(
            cross(vsub(v[(i + 1) % len(v)], v[i]), vsub(p, v[i])) > 0
            for i in range(len(v))
        )

    def interior_lattice_points(self) -> frozenset[Vec]:
        xs = [p[0] for p in self.vertices]
        ys = [p[1] for p in self.vertices]
        pts = set()
        for x in range(min(xs) + 1, max(xs)):
            for y in range(min(ys) + 1, max(ys)):
                if self.contains_strictly((x, y)):
                    pts.add((x, y))
        return frozenset(pts)

    def lattice_points(self) -> frozenset[Vec]:
        return self.boundary_lattice_points() | self.interior_lattice_points()


def _convex_hull(pts: list[Vec]) -> list[Vec]:
    """Monotone chain; strictly convex output (collinear points dropped),
    counterclockwise, starting at the lexicographically smallest point."""
    if len(pts) <= 2:
        return pts

    def half(points):
        chain = []
        for p in points:
            while len(chain) >= 2 and cross(vsub(chain[-1], chain[-2]), vsub(p, chain[-2])) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(pts[::-1])
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        return hull
    # monotone chain with lex-sorted input already starts at the smallest vertex
    return hull


def _on_hull_boundary(hull: list[Vec], p: Vec) -> bool:
    n = len(hull)
    for i in range(n):
        a, b = hull[i], hull[(i + 1) % n]
        if cross(vsub(b, a), vsub(p, a)) == 0:
            if min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]):
                return True
    return False


def boundary_points(poly: LatticePolygon) -> tuple[int, frozenset[Vec]]:
    """Lattice points on the boundary; the count equals the sum of the
    integral side lengths."""
    pts = poly.boundary_lattice_points()
    return len(pts), pts


def interior_points(poly: LatticePolygon) -> tuple[int, frozenset[Vec]]:
    """Lattice points strictly inside; equals the arithmetic genus of a curve
    in the associated linear system."""
    pts = poly.interior_lattice_points()
    return len(pts), pts


def dual_degree(poly: LatticePolygon) -> TropicalDegree:
    """Reduced tropical degree dual to the polygon: each side contributes its
    primitive outer normal with multiplicity the side's integral length."""
    entries = []
    for s in poly.sides():
        entries.extend([vneg(s.inner_normal)] * s.integral_length)
    deg = TropicalDegree(entries)
    assert deg.is_balanced and deg.is_reduced
    return deg


def severi_dimension(poly: LatticePolygon, g: int) -> int:
    """Dimension of the genus-g Severi variety: |boundary points| + g - 1."""
    return len(poly.boundary_lattice_points()) + g - 1


def delta_invariant(poly: LatticePolygon, g: int) -> int:
    """Arithmetic genus minus geometric genus: |interior points| - g."""
    return len(poly.interior_lattice_points()) - g


def d_triangle(d: int) -> LatticePolygon:
    """The triangle (0,0), (d,0), (0,d): degree-d plane curves."""
    if d < 1:
        raise ValueError("d must be positive")
    return LatticePolygon([(0, 0), (d, 0), (0, d)])


def kite(k: int, kp: int) -> LatticePolygon:
    """The kite with vertices (0,0), (1,k), (0,k+k'), (-1,k)."""
    if not (kp >= k >= 0 and kp > 0):
        raise ValueError("kite needs k' >= k >= 0 and k' > 0")
    return LatticePolygon([(0, 0), (1, k), (0, k + kp), (-1, k)])
