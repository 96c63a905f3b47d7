"""Sublattice lower bounds on the number of Severi-variety components.

The number of irreducible components of the genus-g Severi variety of a
polygon is bounded below by the number of affine sublattices M of ZZ^2 with
(a) the boundary lattice points of the polygon all in M, i.e. the polygon,
    translated so one boundary lattice point is the origin, meets M in the
    same boundary points as ZZ^2, and
(b) at least g interior lattice points in M.
Affine sublattices are normalized by translating the polygon so that its
first canonical vertex is the origin; condition (a) then pins the coset, so
it suffices to enumerate linear sublattices via Hermite normal forms
{(a,0), (b,d)} with 0 <= b < a.  By Pick's theorem a qualifying sublattice
with an interior point has index at most 2*Area, which bounds the search.

For kites there is a finer bound: each qualifying sublattice of odd index is
counted with multiplicity the number of integers 0 <= kappa <= min(I-g, g)
with the same parity as I-g, where I is its interior point count; even-index
sublattices count once.
"""

from __future__ import annotations

from typing import NamedTuple

from .polygons import LatticePolygon, Vec, kite, vsub


class Sublattice(NamedTuple):
    """Index-`index` sublattice of ZZ^2 with Hermite basis {(a,0),(b,d)}."""

    a: int
    b: int
    d: int

    @property
    def index(self) -> int:
        return self.a * self.d

    @property
    def basis(self) -> tuple[Vec, Vec]:
        return ((self.a, 0), (self.b, self.d))

    def contains(self, p: Vec) -> bool:
        x, y = p
        if y % self.d != 0:
            return False
        return (x - (y // self.d) * self.b) % self.a == 0


def _hnf_sublattices(max_index: int):
    for k in range(1, max_index + 1):
        for d in range(1, k + 1):
            if k % d:
                continue
            a = k // d
            for b in range(a):
                yield Sublattice(a, b, d)


def _qualifying_sublattices(poly: LatticePolygon, g: int) -> list[tuple[Sublattice, int]]:
    origin = poly.vertices[0]
    boundary = [vsub(p, origin) for p in poly.boundary_lattice_points()]
    interior = [vsub(p, origin) for p in poly.interior_lattice_points()]
    out = []
    for lat in _hnf_sublattices(poly.area2()):
        if not all(lat.contains(p) for p in boundary):
            continue
        inside = sum(1 for p in interior if lat.contains(p))
        if inside >= g:
            out.append((lat, inside))
    return out


def component_lower_bound(poly: LatticePolygon, g: int) -> tuple[int, list[Sublattice]]:
    """Number of sublattices satisfying (a) and (b); a lower bound for the
    number of irreducible components of the genus-g Severi variety."""
    if g < 1:
        raise ValueError("the sublattice bound requires g >= 1")
    found = _qualifying_sublattices(poly, g)
    return len(found), [lat for lat, _ in found]


def kite_lower_bound(k: int, kp: int, g: int) -> int:
    """Refined component bound for the kite (0,0),(1,k),(0,k+k'),(-1,k)."""
    if g < 1:
        raise ValueError("the kite bound requires g >= 1")
    poly = kite(k, kp)
    total = 0
    for lat, inside in _qualifying_sublattices(poly, g):
        if lat.index % 2 == 0:
            total += 1
        else:
            excess = inside - g
            total += sum(
                1 for kappa in range(min(excess, g) + 1) if (kappa - excess) % 2 == 0
            )
    return total
