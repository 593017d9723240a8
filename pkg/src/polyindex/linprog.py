"""Dense two-phase simplex with Bland's pivot rule.

The solver is deliberately small: the programs it faces (support checks,
extremality tests, per-facet min-max problems) have at most a few dozen
variables, but they are routinely degenerate and — on the rational
backend — must be solved bit-exactly. Bland's smallest-index rule
guarantees termination on degenerate instances; all tableau arithmetic
happens in the scalar type selected by the context, so rational inputs
yield rational optima with no rounding anywhere.

Problem form::

    minimize    c . x
    subject to  A x <= b        (inequality rows)
                E x  = d        (equality rows)
                x_j >= 0        for j with nonneg[j] (others are free)

Free variables are split internally as x = u - w with u, w >= 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ComputationError, InputError
from .linalg import dot
from .scalars import Context, EXACT, Scalar

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LinearProgram:
    """minimize objective . x subject to ineq_lhs x <= ineq_rhs, eq_lhs x = eq_rhs."""

    objective: tuple
    ineq_lhs: tuple = ()
    ineq_rhs: tuple = ()
    eq_lhs: tuple = ()
    eq_rhs: tuple = ()
    nonneg: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "objective", tuple(self.objective))
        object.__setattr__(self, "ineq_lhs", tuple(map(tuple, self.ineq_lhs)))
        object.__setattr__(self, "ineq_rhs", tuple(self.ineq_rhs))
        object.__setattr__(self, "eq_lhs", tuple(map(tuple, self.eq_lhs)))
        object.__setattr__(self, "eq_rhs", tuple(self.eq_rhs))
        if self.nonneg is not None:
            object.__setattr__(self, "nonneg", tuple(map(bool, self.nonneg)))
        n = len(self.objective)
        if n < 1:
            raise InputError("linear program needs at least one variable")
        if len(self.ineq_lhs) != len(self.ineq_rhs):
            raise InputError("inequality rows and right-hand sides differ in count")
        if len(self.eq_lhs) != len(self.eq_rhs):
            raise InputError("equality rows and right-hand sides differ in count")
        for row in self.ineq_lhs + self.eq_lhs:
            if len(row) != n:
                raise InputError(f"constraint row has {len(row)} coefficients, expected {n}")
        if self.nonneg is not None and len(self.nonneg) != n:
            raise InputError("nonneg flags must match the variable count")

    @property
    def n_vars(self) -> int:
        return len(self.objective)


@dataclass(frozen=True)
class LPSolution:
    """status is 'optimal', 'infeasible' or 'unbounded'.

    When optimal, ``point`` satisfies every constraint (exactly on the
    rational backend) and ``value == objective . point``. ``basis`` lists
    the basic column indices of the internal standard form at termination.
    """

    status: str
    value: Optional[Scalar] = None
    point: Optional[tuple] = None
    basis: tuple = ()

    @property
    def is_optimal(self) -> bool:
        return self.status == OPTIMAL


def _pivot(rows, objs, basis, r, c):
    piv = rows[r][c]
    rows[r] = [x / piv for x in rows[r]]
    prow = rows[r]
    for i, row in enumerate(rows):
        if i != r and row[c] != 0:
            f = row[c]
            rows[i] = [x - f * y for x, y in zip(row, prow)]
    for k, obj in enumerate(objs):
        if obj[c] != 0:
            f = obj[c]
            objs[k] = [x - f * y for x, y in zip(obj, prow)]
    basis[r] = c


def _simplex(rows, objs, basis, allowed, ctx, max_pivots):
    """Run Bland-rule simplex on objs[0]; returns 'optimal' or 'unbounded'."""
    for _ in range(max_pivots):
        obj = objs[0]
        enter = None
        for j in allowed:
            if ctx.sign(obj[j]) < 0:
                enter = j
                break
        if enter is None:
            return OPTIMAL
        leave = None
        best = None
        for i, row in enumerate(rows):
            a = row[enter]
            if ctx.sign(a) > 0:
                ratio = row[-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return UNBOUNDED
        _pivot(rows, objs, basis, leave, enter)
    raise ComputationError("simplex exceeded its pivot budget (cycling?)")


def solve_lp(lp: LinearProgram, ctx: Context = EXACT) -> LPSolution:
    """Solve a linear program on the backend selected by ``ctx``.

    Two-phase simplex: phase 1 minimizes the sum of one artificial
    variable per row and declares infeasibility when that sum cannot be
    driven to zero; phase 2 minimizes the real objective. Bland's rule is
    used throughout, so the method terminates on degenerate input.
    """
    n = lp.n_vars
    nonneg = lp.nonneg or (False,) * n
    zero, one = ctx.coerce(0), ctx.coerce(1)

    # Structural columns: x_j (and its negative part when the variable is free).
    col_of_plus = []
    col_of_minus = []
    ncols = 0
    for j in range(n):
        col_of_plus.append(ncols)
        ncols += 1
        if nonneg[j]:
            col_of_minus.append(None)
        else:
            col_of_minus.append(ncols)
            ncols += 1
    n_struct = ncols
    n_slack = len(lp.ineq_lhs)
    n_rows = len(lp.ineq_lhs) + len(lp.eq_lhs)
    total = n_struct + n_slack + n_rows  # + artificials

    def expand(coeffs):
        row = [zero] * total
        for j, a in enumerate(coeffs):
            a = ctx.coerce(a)
            row[col_of_plus[j]] = a
            if col_of_minus[j] is not None:
                row[col_of_minus[j]] = -a
        return row

    rows = []
    rhs_list = list(lp.ineq_rhs) + list(lp.eq_rhs)
    for i, coeffs in enumerate(lp.ineq_lhs + lp.eq_lhs):
        row = expand(coeffs)
        if i < n_slack:
            row[n_struct + i] = one
        row.append(ctx.coerce(rhs_list[i]))
        if row[-1] < 0:
            row = [-x for x in row]
        rows.append(row)
    # Insert artificial columns (identity block) just before the RHS.
    for i, row in enumerate(rows):
        body, rhs = row[:-1], row[-1]
        art = [zero] * n_rows
        art[i] = one
        rows[i] = body[: n_struct + n_slack] + art + [rhs]

    basis = [n_struct + n_slack + i for i in range(n_rows)]

    # Phase-1 objective (sum of artificials) and the real objective, both
    # kept reduced with respect to the current basis while pivoting.
    phase1 = [zero] * (total + 1)
    for i in range(n_rows):
        phase1[basis[i]] = one
    for i, row in enumerate(rows):
        phase1 = [x - y for x, y in zip(phase1, row)]
        phase1[basis[i]] = zero
    phase2 = [zero] * (total + 1)
    for j in range(n):
        c = ctx.coerce(lp.objective[j])
        phase2[col_of_plus[j]] = c
        if col_of_minus[j] is not None:
            phase2[col_of_minus[j]] = -c
    objs = [phase1, phase2]

    max_pivots = 40 * (total + 1) * (n_rows + 1) + 1000
    # Artificial columns never re-enter the basis; restricting the entering
    # candidates to structural and slack columns is the standard safe choice.
    allowed = list(range(n_struct + n_slack))
    status = _simplex(rows, objs, basis, allowed, ctx, max_pivots)
    if status != OPTIMAL:
        raise ComputationError("phase 1 cannot be unbounded")  # sum of artificials >= 0
    if ctx.sign(-objs[0][-1]) > 0:  # residual infeasibility
        return LPSolution(status=INFEASIBLE)

    # Drive leftover artificial variables out of the basis (degenerate rows).
    art_start = n_struct + n_slack
    drop = []
    for i in range(n_rows):
        if basis[i] >= art_start:
            pivot_col = None
            for j in allowed:
                if not ctx.is_zero(rows[i][j]):
                    pivot_col = j
                    break
            if pivot_col is None:
                drop.append(i)  # redundant constraint
            else:
                _pivot(rows, objs, basis, i, pivot_col)
    if drop:
        rows = [row for i, row in enumerate(rows) if i not in drop]
        basis = [b for i, b in enumerate(basis) if i not in drop]

    objs = [objs[1]]
    status = _simplex(rows, objs, basis, allowed, ctx, max_pivots)
    if status == UNBOUNDED:
        return LPSolution(status=UNBOUNDED)

    values = {b: rows[i][-1] for i, b in enumerate(basis)}
    point = []
    for j in range(n):
        x = values.get(col_of_plus[j], zero)
        if col_of_minus[j] is not None:
            x = x - values.get(col_of_minus[j], zero)
        point.append(x)
    point = tuple(point)
    value = dot(tuple(map(ctx.coerce, lp.objective)), point)
    return LPSolution(status=OPTIMAL, value=value, point=point, basis=tuple(sorted(basis)))
