"""Exact linear programming and linear solving over the rationals.

A two-phase primal simplex on dense Fraction tableaus, pivoting with Bland's
rule, so termination is guaranteed, every verdict is exact, and every run is
bit-for-bit deterministic.  No tolerances exist anywhere.  Also houses the
exact Gauss solver used for square crossing systems.

The standard-form core minimizes c.x subject to A x = b, x >= 0.  The public
wrapper accepts free variables (split internally), inequality rows (slacked
internally), and either optimization sense.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def frac(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass Fraction, int, or a 'p/q' string")
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class LPResult:
    status: str
    objective: Fraction | None
    x: tuple[Fraction, ...] | None


def _pivot(T: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    piv = T[row][col]
    if piv != ONE:
        inv = ONE / piv
        T[row] = [v * inv for v in T[row]]
    prow = T[row]
    for i in range(len(T)):
        if i == row:
            continue
        f = T[i][col]
        if f:
            T[i] = [a - f * b for a, b in zip(T[i], prow)]
    basis[row] = col


def _bland_entering(obj: list[Fraction], ncols: int) -> int | None:
    for j in range(ncols):
        if obj[j] < 0:
            return j
    return None


def _bland_leaving(T: list[list[Fraction]], basis: list[int], col: int, m: int) -> int | None:
    best_ratio = None
    best_row = None
    for i in range(m):
        a = T[i][col]
        if a > 0:
            ratio = T[i][-1] / a
            if (
                best_ratio is None
                or ratio < best_ratio
                or (ratio == best_ratio and basis[i] < basis[best_row])
            ):
                best_ratio = ratio
                best_row = i
    return best_row


def _run_simplex(T: list[list[Fraction]], basis: list[int]) -> str:
    """Pivot to optimality; T's last row is the reduced-cost row."""
    m = len(T) - 1
    ncols = len(T[0]) - 1
    while True:
        col = _bland_entering(T[-1], ncols)
        if col is None:
            return OPTIMAL
        row = _bland_leaving(T, basis, col, m)
        if row is None:
            return UNBOUNDED
        _pivot(T, basis, row, col)


def _solve_standard(
    A: list[list[Fraction]], b: list[Fraction], c: list[Fraction]
) -> tuple[str, list[Fraction] | None]:
    """min c.x subject to A x = b, x >= 0; returns (status, x)."""
    m = len(A)
    n = len(c)
    rows = []
    rhs = []
    for i in range(m):
        if b[i] < 0:
            rows.append([-v for v in A[i]])
            rhs.append(-b[i])
        else:
            rows.append(list(A[i]))
            rhs.append(b[i])

    # Phase 1: one artificial per row, minimize their sum.
    T: list[list[Fraction]] = []
    for i in range(m):
        art = [ZERO] * m
        art[i] = ONE
        T.append(rows[i] + art + [rhs[i]])
    basis = [n + i for i in range(m)]
    obj = [ZERO] * (n + m + 1)
    for j in range(n):
        obj[j] = -sum(T[i][j] for i in range(m))
    obj[-1] = -sum(rhs)
    T.append(obj)
    _run_simplex(T, basis)  # bounded below by zero, never unbounded
    if T[-1][-1] != ZERO:
        return INFEASIBLE, None

    # Drive artificials out of the (degenerate) basis; drop redundant rows.
    drop: list[int] = []
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if T[i][j] != 0), None)
            if col is None:
                drop.append(i)
            else:
                _pivot(T, basis, i, col)
    keep = [i for i in range(m) if i not in drop]
    T = [[T[i][j] for j in range(n)] + [T[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    # Phase 2: true objective, reduced against the current basis.
    m2 = len(T)
    obj = list(c) + [ZERO]
    for i in range(m2):
        cb = c[basis[i]]
        if cb:
            obj = [a - cb * t for a, t in zip(obj, T[i])]
    T.append(obj)
    status = _run_simplex(T, basis)
    if status != OPTIMAL:
        return status, None
    x = [ZERO] * n
    for i in range(m2):
        x[basis[i]] = T[i][-1]
    return OPTIMAL, x


def solve_lp(
    c,
    A_ub=(),
    b_ub=(),
    A_eq=(),
    b_eq=(),
    nonneg=None,
    maximize: bool = False,
) -> LPResult:
    """Optimize c.x subject to A_ub x <= b_ub and A_eq x = b_eq.

    ``nonneg`` flags which variables are sign-restricted (default: all free).
    Free variables are split internally; the reported optimizer is in the
    original variables.
    """
    c = [frac(v) for v in c]
    n = len(c)
    A_ub = [[frac(v) for v in row] for row in A_ub]
    b_ub = [frac(v) for v in b_ub]
    A_eq = [[frac(v) for v in row] for row in A_eq]
    b_eq = [frac(v) for v in b_eq]
    if nonneg is None:
        nonneg = [False] * n
    if len(nonneg) != n:
        raise ValueError(f"nonneg has {len(nonneg)} flags for {n} variables")
    for row in list(A_ub) + list(A_eq):
        if len(row) != n:
            raise ValueError(f"constraint row has {len(row)} entries, expected {n}")
    if len(b_ub) != len(A_ub) or len(b_eq) != len(A_eq):
        raise ValueError("right-hand side length disagrees with constraint count")

    # Column layout: per original variable one or two standard columns,
    # then one slack per inequality.
    cols: list[tuple[int, int]] = []  # (variable, sign)
    for j in range(n):
        cols.append((j, 1))
        if not nonneg[j]:
            cols.append((j, -1))
    nslack = len(A_ub)

    def widen(row: list[Fraction]) -> list[Fraction]:
        return [row[j] * s for j, s in cols]

    A_std: list[list[Fraction]] = []
    b_std: list[Fraction] = []
    for i, row in enumerate(A_ub):
        slack = [ZERO] * nslack
        slack[i] = ONE
        A_std.append(widen(row) + slack)
        b_std.append(b_ub[i])
    for i, row in enumerate(A_eq):
        A_std.append(widen(row) + [ZERO] * nslack)
        b_std.append(b_eq[i])

    sense = -1 if maximize else 1
    c_std = [sense * c[j] * s for j, s in cols] + [ZERO] * nslack
    status, xs = _solve_standard(A_std, b_std, c_std)
    if status != OPTIMAL:
        return LPResult(status, None, None)
    x = [ZERO] * n
    for (j, s), v in zip(cols, xs):
        x[j] += s * v
    objective = sum((ci * xi for ci, xi in zip(c, x)), ZERO)
    return LPResult(OPTIMAL, objective, tuple(x))


def gauss_solve(
    M, rhs
) -> tuple[str, list[Fraction] | None]:
    """Exact Gaussian elimination for M x = rhs.

    Returns ("unique", x), ("inconsistent", None), or ("underdetermined",
    None); the latter means consistent with more than one solution.
    """
    if len(M) != len(rhs):
        raise ValueError("row count and right-hand side length disagree")
    A = [[frac(v) for v in row] + [frac(r)] for row, r in zip(M, rhs)]
    nrows = len(A)
    ncols = len(A[0]) - 1 if nrows else 0
    pivot_of_col: dict[int, int] = {}
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if A[i][col] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = ONE / A[r][col]
        A[r] = [v * inv for v in A[r]]
        for i in range(nrows):
            if i != r and A[i][col] != 0:
                f = A[i][col]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivot_of_col[col] = r
        r += 1
    for i in range(r, nrows):
        if A[i][-1] != 0:
            return "inconsistent", None
    if r < ncols:
        return "underdetermined", None
    x = [ZERO] * ncols
    for col, row in pivot_of_col.items():
        x[col] = A[row][-1]
    return "unique", x
