"""Mod-2 embeddability obstruction via a straight-line crossing cocycle.

Vertices go onto the moment curve in R^2d (distinct parameters give a
generic straight-line map), the crossing parities over all unordered
disjoint d-simplex pairs form a GF(2) cochain, and the obstruction vanishes
exactly when that cochain is a combination of the elementary coboundary
rows.  Both verdicts come with re-checkable certificates: a cobounding row
combination, or a functional orthogonal to every row but not to the
cochain.

Unordered-pair indexing bakes the swap symmetry of the deleted product into
the data; bit rows are plain ints, so elimination is ordinary integer xor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .complexes import Face, SimplicialComplex, disjoint_simplex_pairs
from .convex import Point, crossing
from .errors import GenericityError
from .linprog import frac

PairKey = tuple[Face, Face]


@dataclass(frozen=True)
class Placement:
    """Moment-curve placement of a complex's vertices in R^2d."""

    d: int
    params: tuple[tuple[int, Fraction], ...]  # (vertex, t), sorted by vertex

    @cached_property
    def points(self) -> dict[int, Point]:
        k = 2 * self.d
        return {
            v: tuple(t ** e for e in range(1, k + 1)) for v, t in self.params
        }

    def point(self, v: int) -> Point:
        return self.points[v]


def moment_curve_placement(K: SimplicialComplex, d: int, params=None) -> Placement:
    """Place each vertex at (t, t^2, ..., t^2d); parameters must be distinct.

    ``params`` is a mapping vertex -> rational or a sequence aligned with the
    sorted vertex list; the default is 1..n.
    """
    if d < 1:
        raise ValueError(f"d must be at least 1, got {d}")
    if K.dim > d:
        raise ValueError(
            f"complex has dimension {K.dim}, placement expects dimension <= {d}"
        )
    verts = sorted(K.vertices)
    if params is None:
        assigned = {v: Fraction(i + 1) for i, v in enumerate(verts)}
    elif isinstance(params, dict):
        assigned = {v: frac(t) for v, t in params.items()}
    else:
        params = list(params)
        if len(params) != len(verts):
            raise ValueError(
                f"{len(params)} parameters for {len(verts)} vertices"
            )
        assigned = {v: frac(t) for v, t in zip(verts, params)}
    if set(assigned) != set(verts):
        raise ValueError("parameters must cover exactly the vertex set")
    values = list(assigned.values())
    if len(set(values)) != len(values):
        raise GenericityError("placement parameters must be distinct; reseed and retry")
    return Placement(d, tuple((v, assigned[v]) for v in verts))


@dataclass(frozen=True)
class Cochain2:
    """A mod-2 vector over the canonically ordered disjoint d-pair index."""

    index: tuple[PairKey, ...]
    bits: int

    def bit(self, pair) -> int:
        g, h = (tuple(pair[0]), tuple(pair[1]))
        key = (g, h) if (len(g), g) <= (len(h), h) else (h, g)
        return (self.bits >> self.index.index(key)) & 1

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> list[PairKey]:
        return [pair for i, pair in enumerate(self.index) if (self.bits >> i) & 1]


@dataclass(frozen=True)
class GF2Matrix:
    """Elementary coboundary generators as bit rows over the pair index.

    Row (rho, tau) has a one in column {sigma, tau'} exactly when tau' = tau
    and sigma is a d-face containing rho and disjoint from tau.
    """

    row_keys: tuple[tuple[Face, Face], ...]
    columns: tuple[PairKey, ...]
    rows: tuple[int, ...]

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.columns)


def intersection_cocycle(K: SimplicialComplex, d: int, placement: Placement) -> Cochain2:
    """Crossing parity of every unordered disjoint d-pair under the placement."""
    index = tuple(disjoint_simplex_pairs(K, d))
    bits = 0
    for pos, (gamma, delta) in enumerate(index):
        try:
            parity = crossing(
                [placement.point(v) for v in gamma],
                [placement.point(v) for v in delta],
            ).parity
        except GenericityError as exc:
            raise GenericityError(f"pair ({gamma}, {delta}): {exc}") from exc
        if parity:
            bits |= 1 << pos
    return Cochain2(index, bits)


def coboundary_matrix(K: SimplicialComplex, d: int) -> GF2Matrix:
    """All elementary coboundary rows, in canonical (rho, tau) order."""
    columns = tuple(disjoint_simplex_pairs(K, d))
    col_pos = {pair: i for i, pair in enumerate(columns)}
    rhos = K.faces_of_dim(d - 1)
    taus = K.faces_of_dim(d)
    row_keys = []
    rows = []
    for rho in rhos:
        rho_set = set(rho)
        for tau in taus:
            if rho_set & set(tau):
                continue
            bits = 0
            for sigma in taus:
                if sigma == tau or not rho_set < set(sigma):
                    continue
                if set(sigma) & set(tau):
                    continue
                key = (sigma, tau) if (len(sigma), sigma) <= (len(tau), tau) else (tau, sigma)
                bits ^= 1 << col_pos[key]
            row_keys.append((rho, tau))
            rows.append(bits)
    return GF2Matrix(tuple(row_keys), columns, tuple(rows))


@dataclass(frozen=True)
class GF2Solution:
    """Row combination c with c.M = v (bitmask over matrix rows)."""

    combination: int
    rank: int


@dataclass(frozen=True)
class GF2Infeasible:
    """Witness that v is outside the row space.

    ``witness`` is a column functional orthogonal to every row of M but
    pairing to 1 with v; ``rank`` is the row-space dimension.
    """

    rank: int
    witness: int


def _low_bit(x: int) -> int:
    return (x & -x).bit_length() - 1


def gf2_solve(M: GF2Matrix, v: Cochain2) -> GF2Solution | GF2Infeasible:
    """Express v over M's rows, or certify that this is impossible."""
    if v.index != M.columns:
        raise ValueError("cochain index disagrees with the matrix columns")
    # Gauss-Jordan with combination tracking; pivots[col] = (row, combo).
    pivots: dict[int, tuple[int, int]] = {}
    for idx, row in enumerate(M.rows):
        r, c = row, 1 << idx
        for col in sorted(pivots):
            if (r >> col) & 1:
                pr, pc = pivots[col]
                r ^= pr
                c ^= pc
        if r == 0:
            continue
        col = _low_bit(r)
        for other, (pr, pc) in list(pivots.items()):
            if (pr >> col) & 1:
                pivots[other] = (pr ^ r, pc ^ c)
        pivots[col] = (r, c)

    target, combo = v.bits, 0
    for col in sorted(pivots):
        if (target >> col) & 1:
            pr, pc = pivots[col]
            target ^= pr
            combo ^= pc
    if target == 0:
        acc = 0
        for i, row in enumerate(M.rows):
            if (combo >> i) & 1:
                acc ^= row
        if acc != v.bits:
            raise AssertionError("row combination failed to reproduce the cochain")
        return GF2Solution(combo, len(pivots))

    free_col = _low_bit(target)
    witness = 1 << free_col
    for col, (pr, _) in pivots.items():
        if (pr >> free_col) & 1:
            witness |= 1 << col
    for row in M.rows:
        if (row & witness).bit_count() & 1:
            raise AssertionError("infeasibility witness is not orthogonal to the rows")
    if not (v.bits & witness).bit_count() & 1:
        raise AssertionError("infeasibility witness does not separate the cochain")
    return GF2Infeasible(len(pivots), witness)


@dataclass(frozen=True)
class ObstructionCertificate:
    """Verdict plus a re-checkable proof object.

    vanishes: ``combination`` xors matrix rows to the cocycle.  nonvanishing:
    ``witness`` is orthogonal to every row yet pairs to 1 with the cocycle.
    """

    vanishes: bool
    cocycle: Cochain2
    rank: int
    n_rows: int
    combination: int | None
    witness: int | None

    def verify(self, M: GF2Matrix) -> bool:
        if M.columns != self.cocycle.index or M.n_rows != self.n_rows:
            return False
        if self.vanishes:
            acc = 0
            for i, row in enumerate(M.rows):
                if (self.combination >> i) & 1:
                    acc ^= row
            return acc == self.cocycle.bits
        if any((row & self.witness).bit_count() & 1 for row in M.rows):
            return False
        return bool((self.cocycle.bits & self.witness).bit_count() & 1)


def obstruction_vanishes(
    K: SimplicialComplex, d: int, placement: Placement | None = None
) -> ObstructionCertificate:
    """Decide whether the crossing cocycle is a coboundary; certify either way."""
    if placement is None:
        placement = moment_curve_placement(K, d)
    cocycle = intersection_cocycle(K, d, placement)
    M = coboundary_matrix(K, d)
    outcome = gf2_solve(M, cocycle)
    if isinstance(outcome, GF2Solution):
        cert = ObstructionCertificate(
            True, cocycle, outcome.rank, M.n_rows, outcome.combination, None
        )
    else:
        cert = ObstructionCertificate(
            False, cocycle, outcome.rank, M.n_rows, None, outcome.witness
        )
    if not cert.verify(M):
        raise AssertionError("obstruction certificate failed self-verification")
    return cert
