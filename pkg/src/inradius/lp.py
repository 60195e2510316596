"""Small dense simplex for LPs with a handful of free variables.

Problems have the form::

    maximize    c . z
    subject to  A z <= b          (z free, len(z) <= 4, many rows)

and are solved through their dual, ``minimize b . lam`` subject to
``A.T lam = c, lam >= 0``, whose tableau has only ``len(c)`` rows.  A pivot
therefore costs O(rows(A) * len(c)).  Pricing is Dantzig's rule, falling back
to Bland's rule after a run of degenerate pivots, so the result is fully
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import Infeasible, NumericalFailure, Unbounded

DEGENERATE_STREAK = 25


@dataclass(frozen=True)
class LPSolution:
    z: np.ndarray
    value: float
    basis: tuple[int, ...]
    iterations: int


def _pivot(T: np.ndarray, row: int, col: int) -> None:
    T[row] /= T[row, col]
    others = np.arange(len(T)) != row
    T[others] -= np.outer(T[others, col], T[row])


def _run(T, basis, cost, n_cols, tol, piv_tol, max_iter, it0=0):
    """Minimize ``cost . x`` over the tableau; columns >= n_cols never enter."""
    it = it0
    streak = 0
    scale = 1.0 + np.max(np.abs(cost))
    while True:
        if it >= max_iter:
            raise NumericalFailure(f"simplex did not converge in {max_iter} pivots")
        reduced = cost[:n_cols] - cost[basis] @ T[:, :n_cols]
        candidates = np.nonzero(reduced < -tol * scale)[0]
        if len(candidates) == 0:
            return it
        if streak >= DEGENERATE_STREAK:
            col = int(candidates[0])
        else:
            col = int(candidates[np.argmin(reduced[candidates])])
        column = T[:, col]
        rows = np.nonzero(column > piv_tol)[0]
        if len(rows) == 0:
            return -1 - col
        ratios = T[rows, -1] / column[rows]
        best = ratios.min()
        tied = rows[ratios <= best + tol * (1.0 + abs(best))]
        row = int(min(tied, key=lambda r: basis[r]))
        streak = streak + 1 if T[row, -1] <= tol else 0
        _pivot(T, row, col)
        basis[row] = col
        it += 1


def maximize(c, A, b, *, tol: float = 1e-11, piv_tol: float = 1e-9, max_iter: int | None = None) -> LPSolution:
    """Maximize ``c . z`` subject to ``A z <= b`` over free ``z``.

    Raises Unbounded when the objective is unbounded above or the constraint
    rows do not span the variable space, Infeasible when no ``z`` satisfies
    the constraints.
    """
    c = np.asarray(c, dtype=float)
    A = np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float)
    m, k = A.shape
    if max_iter is None:
        max_iter = 50 * (m + k) + 100

    M = A.T.copy()
    rhs = c.copy()
    flip = rhs < 0
    M[flip] *= -1
    rhs[flip] *= -1
    T = np.hstack([M, np.eye(k), rhs[:, None]])
    basis = list(range(m, m + k))

    # phase 1: drive the artificial columns to zero
    cost1 = np.concatenate([np.zeros(m), np.ones(k)])
    it = _run(T, basis, cost1, m, tol, piv_tol, max_iter)
    if it < 0:
        raise NumericalFailure("phase 1 reported an unbounded auxiliary problem")
    if T[:, -1] @ cost1[basis] > tol * (1.0 + np.max(np.abs(c))):
        raise Unbounded("objective is unbounded: no multiplier certificate exists")
    for row in range(k):
        if basis[row] >= m:
            nz = np.nonzero(np.abs(T[row, :m]) > piv_tol)[0]
            if len(nz) == 0:
                raise Unbounded("constraint normals do not span the variable space")
            col = int(nz[0])
            _pivot(T, row, col)
            basis[row] = col

    # phase 2 on the original columns only
    T = np.hstack([T[:, :m], T[:, -1:]])
    cost2 = b.copy()
    it2 = _run(T, basis, cost2, m, tol, piv_tol, max_iter, it)
    if it2 < 0:
        raise Infeasible("constraints admit no feasible point")

    B = np.array(basis)
    try:
        z = np.linalg.solve(A[B], b[B])
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure("optimal basis is singular") from exc
    if not np.all(np.isfinite(z)):
        raise NumericalFailure("non-finite solution")
    return LPSolution(z=z, value=float(c @ z), basis=tuple(int(i) for i in basis), iterations=it2)


def is_feasible(A, b, **kw) -> bool:
    """True when ``A z <= b`` has a solution."""
    A = np.asarray(A, dtype=float)
    try:
        maximize(np.zeros(A.shape[1]), A, b, **kw)
    except Infeasible:
        return False
    except Unbounded:
        # zero objective: only raised when rows do not span; feasibility then
        # reduces to the spanned subspace, which this solver does not handle
        raise
    return True
