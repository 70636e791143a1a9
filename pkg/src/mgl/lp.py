"""Exact rational linear programming via two-phase simplex with Bland's rule.

All arithmetic is over ``fractions.Fraction``; no floating point enters any
predicate.  Bland's pivot rule guarantees termination.
"""

from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


class SimplexError(RuntimeError):
    """Internal solver inconsistency; always a bug, never expected input."""


def _pivot(tableau, basis, row, col):
    piv = tableau[row][col]
    if piv == 0:
        raise SimplexError("pivot on zero entry")
    inv = Fraction(1) / piv
    tableau[row] = [v * inv for v in tableau[row]]
    for r, line in enumerate(tableau):
        if r != row and line[col] != 0:
            factor = line[col]
            tableau[r] = [a - factor * b for a, b in zip(line, tableau[row])]
    basis[row] = col


def _bland_step(tableau, basis, ncols, allowed):
    """One simplex step on a maximization tableau; objective is the last row.

    Returns 'optimal', 'unbounded', or 'pivoted'.
    """
    obj = tableau[-1]
    enter = None
    for j in range(ncols):
        if j in allowed and obj[j] < 0:
            enter = j
            break
    if enter is None:
        return OPTIMAL
    leave = None
    best = None
    for r in range(len(tableau) - 1):
        a = tableau[r][enter]
        if a > 0:
            ratio = tableau[r][-1] / a
            if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                best = ratio
                leave = r
    if leave is None:
        return UNBOUNDED
    _pivot(tableau, basis, leave, enter)
    return "pivoted"


def simplex_maximize(A, b, c):
    """Maximize c.x subject to A x = b, x >= 0, exactly.

    ``A`` is a list of rows, ``b`` the right-hand sides, ``c`` the objective.
    Returns (status, x, value); x and value are None unless status is optimal.
    """
    m = len(A)
    n = len(c)
    A = [[Fraction(v) for v in row] for row in A]
    b = [Fraction(v) for v in b]
    c = [Fraction(v) for v in c]
    for r in range(m):
        if b[r] < 0:
            A[r] = [-v for v in A[r]]
            b[r] = -b[r]

    # Phase 1: artificial variable per row, minimize their sum.
    ncols = n + m
    tableau = []
    for r in range(m):
        row = A[r] + [Fraction(1) if k == r else Fraction(0) for k in range(m)] + [b[r]]
        tableau.append(row)
    basis = [n + r for r in range(m)]
    obj = [Fraction(0)] * (ncols + 1)
    for r in range(m):
        for j in range(ncols + 1):
            obj[j] -= tableau[r][j]
    for r in range(m):
        obj[n + r] = Fraction(0)
    tableau.append(obj)

    allowed = set(range(ncols))
    while True:
        status = _bland_step(tableau, basis, ncols, allowed)
        if status == OPTIMAL:
            break
        if status == UNBOUNDED:
            raise SimplexError("phase-1 objective unbounded")
    if tableau[-1][-1] != 0:
        return INFEASIBLE, None, None

    # Drive remaining artificials out of the basis or drop redundant rows.
    keep = []
    for r in range(m):
        if basis[r] >= n:
            pivot_col = None
            for j in range(n):
                if tableau[r][j] != 0:
                    pivot_col = j
                    break
            if pivot_col is None:
                continue  # redundant row
            _pivot(tableau, basis, r, pivot_col)
        keep.append(r)
    tableau = [tableau[r] for r in keep] + [tableau[-1]]
    basis = [basis[r] for r in keep]

    # Phase 2: restore the true objective over the original columns.
    rows = [row[:n] + [row[-1]] for row in tableau[:-1]]
    obj = [-v for v in c] + [Fraction(0)]
    for r, bcol in enumerate(basis):
        if obj[bcol] != 0:
            factor = obj[bcol]
            obj = [a - factor * b2 for a, b2 in zip(obj, rows[r])]
    rows.append(obj)
    allowed = set(range(n))
    while True:
        status = _bland_step(rows, basis, n, allowed)
        if status == OPTIMAL:
            break
        if status == UNBOUNDED:
            return UNBOUNDED, None, None
    x = [Fraction(0)] * n
    for r, bcol in enumerate(basis):
        x[bcol] = rows[r][-1]
    value = sum(ci * xi for ci, xi in zip(c, x))
    return OPTIMAL, x, value


def solve_free_lp(num_vars, equalities, inequalities, objective):
    """Maximize objective.x over free variables with equality and >= constraints.

    Constraints are (coeffs, rhs) with ``coeffs`` a dict var->Fraction:
    equalities mean coeffs.x == rhs, inequalities mean coeffs.x >= rhs.
    Free variables are split into positive and negative parts internally.
    Returns (status, x) with x a list of Fractions when optimal.
    """
    # Columns: u_i, v_i per free variable (x_i = u_i - v_i), then one surplus
    # variable per inequality.
    n_ineq = len(inequalities)
    ncols = 2 * num_vars + n_ineq
    A, b = [], []
    for coeffs, rhs in equalities:
        row = [Fraction(0)] * ncols
        for var, cf in coeffs.items():
            row[2 * var] += Fraction(cf)
            row[2 * var + 1] -= Fraction(cf)
        A.append(row)
        b.append(Fraction(rhs))
    for k, (coeffs, rhs) in enumerate(inequalities):
        row = [Fraction(0)] * ncols
        for var, cf in coeffs.items():
            row[2 * var] += Fraction(cf)
            row[2 * var + 1] -= Fraction(cf)
        row[2 * num_vars + k] = Fraction(-1)
        A.append(row)
        b.append(Fraction(rhs))
    c = [Fraction(0)] * ncols
    for var, cf in objective.items():
        c[2 * var] += Fraction(cf)
        c[2 * var + 1] -= Fraction(cf)
    status, x, _ = simplex_maximize(A, b, c)
    if status != OPTIMAL:
        return status, None
    point = [x[2 * i] - x[2 * i + 1] for i in range(num_vars)]
    return OPTIMAL, point
