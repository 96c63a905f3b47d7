"""Moduli strata of combinatorial types as exact linear systems.

A type with vertex positions n(v) in QQ^2 and edge lengths x(e) > 0 is cut
out by the equalities n(head) - n(tail) = x(e) * slope(e); the open stratum
consists of the solutions with every length strictly positive.  Point
conditions pin the anchor of the i-th contracted leg to the i-th point of a
configuration.  All linear algebra is exact; a configuration that leads to a
boundary solution (a zero length) or to a positive-dimensional set of honest
solutions is not certified generic and raises DegenerateConfiguration.
"""

from __future__ import annotations

from typing import Sequence

from gmpy2 import mpq

from .exactq import Q0, Q1, solve_affine, strictly_feasible
from .graphs import CombinatorialType, ParamTropicalCurve, expected_dimension
from .rng import CounterRng


class DegenerateConfiguration(Exception):
    """The point configuration is not certified generic for this type."""


class PointConfiguration:
    """Ordered rational points, one per contracted leg, plus their seed."""

    def __init__(self, points: Sequence, seed: int = 0, attempt: int = 0):
        self.points = tuple((mpq(p[0]), mpq(p[1])) for p in points)
        self.seed = int(seed)
        self.attempt = int(attempt)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @classmethod
    def sample(cls, seed: int, r: int, attempt: int = 0) -> "PointConfiguration":
        """Uniform integer coordinates in [-B, B], B = 2^(10 + attempt)."""
        rng = CounterRng(seed, f"points:{attempt}")
        bound = 2 ** (10 + attempt)
        pts = [(rng.randint(-bound, bound), rng.randint(-bound, bound)) for _ in range(r)]
        return cls(pts, seed=seed, attempt=attempt)


def _unknown_count(t: CombinatorialType) -> int:
    return 2 * t.graph.n + len(t.graph.edges)


def edge_rows(t: CombinatorialType):
    """Two equality rows per edge over the unknowns
    (pos_x(0), pos_y(0), ..., len(e_0), ...)."""
    n = t.graph.n
    cols = _unknown_count(t)
    rows, rhs = [], []
    for i, (u, v) in enumerate(t.graph.edges):
        s = t.edge_slopes[i]
        for coord in range(2):
            row = [Q0] * cols
            row[2 * v + coord] += Q1
            row[2 * u + coord] -= Q1
            row[2 * n + i] -= mpq(s[coord])
            rows.append(row)
            rhs.append(Q0)
    return rows, rhs


def point_rows(t: CombinatorialType, config: PointConfiguration):
    contracted = t.contracted_legs()
    if len(contracted) != len(config):
        raise ValueError(
            f"type has {len(contracted)} contracted legs, configuration has {len(config)} points"
        )
    cols = _unknown_count(t)
    rows, rhs = [], []
    for i, leg in enumerate(contracted):
        anchor = t.graph.legs[leg]
        q = config.points[i]
        for coord in range(2):
            row = [Q0] * cols
            row[2 * anchor + coord] = Q1
            rows.append(row)
            rhs.append(mpq(q[coord]))
    return rows, rhs


def stratum_dimension(t: CombinatorialType) -> int:
    """Dimension of the solution space of the edge equalities (the affine
    hull of the closed stratum)."""
    rows, rhs = edge_rows(t)
    if not rows:
        return _unknown_count(t)
    status, _, basis = solve_affine(rows, rhs)
    assert status != "inconsistent"  # homogeneous
    return len(basis)


def stratum_nonempty(t: CombinatorialType) -> bool:
    """Is there a solution of the edge equalities with every length > 0?"""
    rows, rhs = edge_rows(t)
    ne = len(t.graph.edges)
    if ne == 0:
        return True
    if not rows:
        return True
    status, x0, basis = solve_affine(rows, rhs)
    n2 = 2 * t.graph.n
    ineqs = []
    for i in range(ne):
        coeffs = [vec[n2 + i] for vec in basis]
        ineqs.append((coeffs, x0[n2 + i]))
    return strictly_feasible(ineqs, len(basis))


def is_regular(t: CombinatorialType) -> bool:
    """A type is regular when its stratum has the expected dimension."""
    return stratum_dimension(t) == expected_dimension(t)


def solve_through_points(
    t: CombinatorialType, config: PointConfiguration
) -> list[ParamTropicalCurve]:
    """All realizations of the type whose i-th contracted leg maps to the
    i-th configuration point and whose edge lengths are strictly positive.

    Raises DegenerateConfiguration when the configuration is not certified
    generic for this type: a solution has a zero length, or the honest
    solutions form a positive-dimensional family.  An affine solution family
    that contains no all-positive point is empty, not degenerate.
    """
    rows, rhs = edge_rows(t)
    prow, prhs = point_rows(t, config)
    rows += prow
    rhs += prhs
    n2 = 2 * t.graph.n
    ne = len(t.graph.edges)
    if not rows:
        return []
    status, x0, basis = solve_affine(rows, rhs)
    if status == "inconsistent":
        return []
    if status == "unique":
        lengths = x0[n2:]
        if any(x < 0 for x in lengths):
            return []
        if any(x == 0 for x in lengths):
            raise DegenerateConfiguration("boundary solution: zero edge length")
        positions = [(x0[2 * v], x0[2 * v + 1]) for v in range(t.graph.n)]
        return [ParamTropicalCurve(t, lengths, positions)]
    # positive-dimensional affine family: degenerate only if it meets the
    # open cone of strictly positive lengths
    ineqs = []
    for i in range(ne):
        coeffs = [vec[n2 + i] for vec in basis]
        ineqs.append((coeffs, x0[n2 + i]))
    if strictly_feasible(ineqs, len(basis)):
        raise DegenerateConfiguration("positive-dimensional solution family")
    return []
