"""Exact rational linear algebra: Gaussian elimination and strict feasibility.

Everything runs over gmpy2.mpq; there are no tolerances anywhere.  Pivots are
chosen structurally (first nonzero in column order), which is deterministic
and sufficient in exact arithmetic.
"""

from gmpy2 import mpq

QQ = mpq
Q0 = mpq(0)
Q1 = mpq(1)


def qq(x) -> mpq:
    return mpq(x)


def qq_str(x) -> str:
    """Serialize a rational bit-exactly as "p/q" (or "p" for integers)."""
    x = mpq(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def qq_parse(s: str) -> mpq:
    s = s.strip()
    if "/" in s:
        num, den = s.split("/")
        return mpq(int(num), int(den))
    return mpq(int(s))


def echelonize(rows, rhs=None):
    """Reduce ``rows`` (list of lists of mpq, modified in place) to row echelon
    form, carrying ``rhs`` along when given.  Returns (rank, pivot_cols).
    """
    if not rows:
        return 0, []
    ncols = len(rows[0])
    piv_cols = []
    piv_r = 0
    for col in range(ncols):
        pivot = None
        for r in range(piv_r, len(rows)):
            if rows[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        rows[piv_r], rows[pivot] = rows[pivot], rows[piv_r]
        if rhs is not None:
            rhs[piv_r], rhs[pivot] = rhs[pivot], rhs[piv_r]
        inv = 1 / rows[piv_r][col]
        rows[piv_r] = [v * inv for v in rows[piv_r]]
        if rhs is not None:
            rhs[piv_r] = rhs[piv_r] * inv
        for r in range(len(rows)):
            if r != piv_r and rows[r][col] != 0:
                f = rows[r][col]
                prow = rows[piv_r]
                rows[r] = [a - f * b for a, b in zip(rows[r], prow)]
                if rhs is not None:
                    rhs[r] = rhs[r] - f * rhs[piv_r]
        piv_cols.append(col)
        piv_r += 1
        if piv_r == len(rows):
            break
    return piv_r, piv_cols


def matrix_rank(rows) -> int:
    work = [list(map(mpq, row)) for row in rows]
    rank, _ = echelonize(work)
    return rank


def solve_affine(rows, rhs):
    """Solve ``rows * x = rhs`` exactly.

    Returns a tuple (status, particular, basis):
      - ("inconsistent", None, None)
      - ("unique", x, [])
      - ("underdetermined", x0, basis) with the solution set x0 + span(basis).
    """
    work = [list(map(mpq, row)) for row in rows]
    b = [mpq(v) for v in rhs]
    ncols = len(work[0]) if work else 0
    rank, piv_cols = echelonize(work, b)
    for r in range(rank, len(work)):
        if b[r] != 0:
            return "inconsistent", None, None
    piv_set = set(piv_cols)
    free_cols = [c for c in range(ncols) if c not in piv_set]
    x0 = [Q0] * ncols
    for r, c in enumerate(piv_cols):
        x0[c] = b[r]
    if not free_cols:
        return "unique", x0, []
    basis = []
    for fc in free_cols:
        vec = [Q0] * ncols
        vec[fc] = Q1
        for r, c in enumerate(piv_cols):
            vec[c] = -work[r][fc]
        basis.append(vec)
    return "underdetermined", x0, basis


def strictly_feasible(ineqs, nvars) -> bool:
    """Decide whether a system of strict inequalities has a solution.

    Each inequality is (coeffs, const) and reads ``coeffs . y + const > 0``
    with ``y`` ranging over all of QQ^nvars.  Decided exactly by maximizing a
    common slack variable with a small simplex (Bland's rule).
    """
    if not ineqs:
        return True
    # LP: maximize t  s.t.  coeffs.y - t >= -const,  y free, t free.
    # Free variables are split into differences of nonnegatives.
    # Columns: y+ (nvars), y- (nvars), t+ , t-, one slack per row.
    m = len(ineqs)
    n = 2 * nvars + 2 + m
    tableau = []
    rhss = []
    for i, (coeffs, const) in enumerate(ineqs):
        # -coeffs.y + t <= const
        row = [Q0] * n
        for j, c in enumerate(coeffs):
            row[j] = -mpq(c)
            row[nvars + j] = mpq(c)
        row[2 * nvars] = Q1
        row[2 * nvars + 1] = -Q1
        row[2 * nvars + 2 + i] = Q1
        tableau.append(row)
        rhss.append(mpq(const))
    # Make the right-hand sides nonnegative so the slack basis is feasible:
    # rows with negative rhs are flipped, turning the slack into a surplus;
    # run a phase-1 with artificial variables instead.  Simpler: shift t so
    # that t <= min(const) is feasible -- the all-zero y with t = min(const)
    # satisfies every row, so substitute t = t' + t_shift.
    t_shift = min(rhss)
    for i in range(m):
        rhss[i] = rhss[i] - t_shift
    # objective: maximize t = t' + shift -> maximize t'
    obj = [Q0] * n
    obj[2 * nvars] = Q1
    obj[2 * nvars + 1] = -Q1
    basis = [2 * nvars + 2 + i for i in range(m)]
    # Standard primal simplex on: maximize obj.x s.t. tableau x = rhs, x >= 0.
    zrow = [Q0] * n
    zval = Q0
    for j in range(n):
        zrow[j] = -obj[j]
    while True:
        enter = -1
        for j in range(n):
            if zrow[j] < 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best = None
        for i in range(m):
            if tableau[i][enter] > 0:
                ratio = rhss[i] / tableau[i][enter]
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            return True  # unbounded slack: strictly feasible
        piv = tableau[leave][enter]
        tableau[leave] = [v / piv for v in tableau[leave]]
        rhss[leave] = rhss[leave] / piv
        for i in range(m):
            if i != leave and tableau[i][enter] != 0:
                f = tableau[i][enter]
                tableau[i] = [a - f * b for a, b in zip(tableau[i], tableau[leave])]
                rhss[i] = rhss[i] - f * rhss[leave]
        if zrow[enter] != 0:
            f = zrow[enter]
            zrow = [a - f * b for a, b in zip(zrow, tableau[leave])]
            zval = zval - f * rhss[leave]
        basis[leave] = enter
        if zval + t_shift > 0:
            return True  # early exit: any positive slack certifies feasibility
    return zval + t_shift > 0
