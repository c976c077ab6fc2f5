"""Exact rational convex geometry: H-polytopes, canonical points, hull
intersection, and generic straight-line crossing parity.

Every predicate here is exact; there are no tolerance parameters.  Convex
sets are H-polytopes {x : Ax <= b} with Fraction entries (boxes are sugar),
which keeps nerve membership and disjointness verification decidable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DimensionMismatchError,
    EmptyPolytopeError,
    GenericityError,
    UnboundedPolytopeError,
)
from .linprog import INFEASIBLE, ONE, OPTIMAL, UNBOUNDED, ZERO, frac, gauss_solve, solve_lp

Point = tuple[Fraction, ...]


def make_point(coords) -> Point:
    return tuple(frac(v) for v in coords)


@dataclass(frozen=True)
class HPolytope:
    """The solution set {x : Ax <= b}; possibly empty, possibly unbounded."""

    ambient: int
    A: tuple[tuple[Fraction, ...], ...]
    b: tuple[Fraction, ...]

    @classmethod
    def from_rows(cls, A, b, ambient: int | None = None) -> "HPolytope":
        rows = tuple(tuple(frac(v) for v in row) for row in A)
        rhs = tuple(frac(v) for v in b)
        if len(rows) != len(rhs):
            raise DimensionMismatchError(
                f"{len(rows)} constraint rows but {len(rhs)} right-hand sides"
            )
        if ambient is None:
            if not rows:
                raise DimensionMismatchError("ambient dimension required for a row-free polytope")
            ambient = len(rows[0])
        for row in rows:
            if len(row) != ambient:
                raise DimensionMismatchError(
                    f"constraint row has {len(row)} columns, ambient is {ambient}"
                )
        return cls(ambient, rows, rhs)

    @classmethod
    def box(cls, lo, hi) -> "HPolytope":
        """Axis-aligned box [lo_1, hi_1] x ... (empty when some lo_i > hi_i)."""
        lo = [frac(v) for v in lo]
        hi = [frac(v) for v in hi]
        if len(lo) != len(hi):
            raise DimensionMismatchError("box corners have different lengths")
        m = len(lo)
        rows = []
        rhs = []
        for i in range(m):
            upper = [ZERO] * m
            upper[i] = ONE
            rows.append(tuple(upper))
            rhs.append(hi[i])
            lower = [ZERO] * m
            lower[i] = -ONE
            rows.append(tuple(lower))
            rhs.append(-lo[i])
        return cls(m, tuple(rows), tuple(rhs))

    @staticmethod
    def stack(polys) -> "HPolytope":
        """Intersection of polytopes that share one ambient dimension."""
        polys = list(polys)
        if not polys:
            raise ValueError("cannot stack an empty collection")
        ambient = polys[0].ambient
        for p in polys:
            if p.ambient != ambient:
                raise DimensionMismatchError("stacked polytopes must share the ambient dimension")
        A = tuple(row for p in polys for row in p.A)
        b = tuple(v for p in polys for v in p.b)
        return HPolytope(ambient, A, b)

    @property
    def n_rows(self) -> int:
        return len(self.A)

    def contains(self, point) -> bool:
        return self.violated_row(point) is None

    def violated_row(self, point) -> int | None:
        """Index of the first constraint the point breaks, or None."""
        p = make_point(point)
        if len(p) != self.ambient:
            raise DimensionMismatchError(
                f"point has {len(p)} coordinates, ambient is {self.ambient}"
            )
        for i, (row, bi) in enumerate(zip(self.A, self.b)):
            if sum((a * x for a, x in zip(row, p)), ZERO) > bi:
                return i
        return None


def polytope_is_empty(P: HPolytope) -> bool:
    """Exact emptiness of {x : Ax <= b} via Phase-I feasibility."""
    res = solve_lp([ZERO] * P.ambient, A_ub=P.A, b_ub=P.b)
    return res.status == INFEASIBLE


def inscribed_ball(P: HPolytope) -> tuple[Fraction, Point]:
    """Largest inscribed L-infinity ball, then the lex-least center.

    Stage 1 maximizes r subject to A x + r * ||a_i||_1 <= b.  Stage 2 walks
    the coordinates in order, minimizing each over the stage-1 optimal face,
    which makes the result unique even for degenerate polytopes.  Raises for
    empty or unbounded input.
    """
    m = P.ambient
    norms = [sum(abs(a) for a in row) for row in P.A]
    rows = [list(row) + [norm] for row, norm in zip(P.A, norms)]
    res = solve_lp(
        [ZERO] * m + [ONE], A_ub=rows, b_ub=P.b, maximize=True
    )
    if res.status == INFEASIBLE:
        raise EmptyPolytopeError("polytope is empty")
    if res.status == UNBOUNDED:
        raise UnboundedPolytopeError("inscribed radius is unbounded")
    radius = res.objective
    if radius < 0:
        raise EmptyPolytopeError("polytope is empty")
    shrunk_b = [bi - radius * ni for bi, ni in zip(P.b, norms)]
    fixed: list[Fraction] = []
    for j in range(m):
        cost = [ZERO] * m
        cost[j] = ONE
        A_eq = []
        b_eq = []
        for i, v in enumerate(fixed):
            row = [ZERO] * m
            row[i] = ONE
            A_eq.append(row)
            b_eq.append(v)
        step = solve_lp(cost, A_ub=P.A, b_ub=shrunk_b, A_eq=A_eq, b_eq=b_eq)
        if step.status == UNBOUNDED:
            raise UnboundedPolytopeError(f"coordinate {j} is unbounded below")
        if step.status != OPTIMAL:
            raise AssertionError("stage-2 restriction of a nonempty polytope went infeasible")
        fixed.append(step.objective)
    point = tuple(fixed)
    if not P.contains(point):
        raise AssertionError("canonical point escaped its polytope")
    return radius, point


def canonical_point(P: HPolytope) -> Point:
    """Deterministic member of a nonempty bounded polytope (see inscribed_ball)."""
    return inscribed_ball(P)[1]


def _check_points(pts, name: str) -> list[Point]:
    pts = [make_point(p) for p in pts]
    if not pts:
        raise ValueError(f"{name} needs at least one point")
    ambient = len(pts[0])
    for p in pts:
        if len(p) != ambient:
            raise DimensionMismatchError(f"{name} mixes ambient dimensions")
    return pts


def hulls_intersect(a_pts, b_pts) -> bool:
    """Exact test conv(a_pts) n conv(b_pts) != {} via LP feasibility."""
    a = _check_points(a_pts, "first hull")
    b = _check_points(b_pts, "second hull")
    if len(a[0]) != len(b[0]):
        raise DimensionMismatchError("hulls live in different ambient dimensions")
    m = len(a[0])
    na, nb = len(a), len(b)
    A_eq = []
    b_eq = []
    for k in range(m):
        A_eq.append([p[k] for p in a] + [-q[k] for q in b])
        b_eq.append(ZERO)
    A_eq.append([ONE] * na + [ZERO] * nb)
    b_eq.append(ONE)
    A_eq.append([ZERO] * na + [ONE] * nb)
    b_eq.append(ONE)
    res = solve_lp(
        [ZERO] * (na + nb), A_eq=A_eq, b_eq=b_eq, nonneg=[True] * (na + nb)
    )
    return res.status == OPTIMAL


@dataclass(frozen=True)
class Crossing:
    """Outcome of a generic crossing query; point is set when parity is 1."""

    parity: int
    point: Point | None
    sigma_coords: tuple[Fraction, ...] | None
    tau_coords: tuple[Fraction, ...] | None


def crossing(sigma_pts, tau_pts) -> Crossing:
    """Solve the square barycentric system for two placed d-simplices in R^2d.

    Parity 1 means the unique common affine point has strictly positive
    coordinates on both sides; strictly negative coordinates give parity 0,
    as do disjoint affine hulls.  Degenerate data (overlapping hulls of the
    wrong dimension, or a boundary intersection) raises GenericityError.
    """
    s = _check_points(sigma_pts, "sigma")
    t = _check_points(tau_pts, "tau")
    ambient = len(s[0])
    if len(t[0]) != ambient:
        raise DimensionMismatchError("simplices live in different ambient dimensions")
    if ambient % 2 != 0 or ambient == 0:
        raise DimensionMismatchError(f"ambient dimension must be 2d, got {ambient}")
    d = ambient // 2
    if len(s) != d + 1 or len(t) != d + 1:
        raise DimensionMismatchError(
            f"need d+1 = {d + 1} points per simplex, got {len(s)} and {len(t)}"
        )
    ns, nt = len(s), len(t)
    M = []
    rhs = []
    for k in range(ambient):
        M.append([p[k] for p in s] + [-q[k] for q in t])
        rhs.append(ZERO)
    M.append([ONE] * ns + [ZERO] * nt)
    rhs.append(ONE)
    M.append([ZERO] * ns + [ONE] * nt)
    rhs.append(ONE)
    kind, z = gauss_solve(M, rhs)
    if kind == "inconsistent":
        return Crossing(0, None, None, None)
    if kind == "underdetermined":
        raise GenericityError(
            "affine hulls meet degenerately; perturb the placement and retry"
        )
    lam = tuple(z[:ns])
    mu = tuple(z[ns:])
    if any(v == 0 for v in z):
        raise GenericityError(
            "intersection lies on a simplex boundary; perturb the placement and retry"
        )
    if all(v > 0 for v in z):
        point = tuple(
            sum((lam[i] * s[i][k] for i in range(ns)), ZERO) for k in range(ambient)
        )
        return Crossing(1, point, lam, mu)
    return Crossing(0, None, lam, mu)


def generic_crossing_parity(sigma_pts, tau_pts) -> int:
    """Mod-2 intersection count of two placed d-simplices in R^2d."""
    return crossing(sigma_pts, tau_pts).parity


@dataclass(frozen=True)
class SimplexImage:
    """A union of linear simplex images, one vertex tuple per piece."""

    ambient: int
    pieces: tuple[tuple[Point, ...], ...]

    def __post_init__(self) -> None:
        for piece in self.pieces:
            for p in piece:
                if len(p) != self.ambient:
                    raise DimensionMismatchError(
                        f"piece point has {len(p)} coordinates, ambient is {self.ambient}"
                    )
