"""Exact rational two-phase simplex with Bland's anti-cycling rule.

All arithmetic is over fractions.Fraction; there is no floating point in
this module, so sign decisions at degenerate points are exact.
"""

from dataclasses import dataclass, field
from fractions import Fraction

GE = ">="
LE = "<="
EQ = "=="

OPTIMAL = "Optimal"
UNBOUNDED = "Unbounded"
INFEASIBLE = "Infeasible"


@dataclass
class LinearProgram:
    """Minimize objective . x subject to rows (a, rel, b) and optional
    per-variable (lower, upper) bounds; a bound of None means unbounded."""
    objective: list
    constraints: list
    bounds: list = None

    def __post_init__(self):
        self.objective = [Fraction(c) for c in self.objective]
        self.constraints = [
            ([Fraction(a) for a in row], rel, Fraction(b))
            for row, rel, b in self.constraints
        ]
        n = len(self.objective)
        if self.bounds is None:
            self.bounds = [(None, None)] * n
        else:
            self.bounds = [
                (None if lo is None else Fraction(lo),
                 None if hi is None else Fraction(hi))
                for lo, hi in self.bounds
            ]
        for row, _, _ in self.constraints:
            if len(row) != n:
                raise ValueError("constraint dimension mismatch")
        if len(self.bounds) != n:
            raise ValueError("bounds dimension mismatch")


@dataclass
class LpResult:
    status: str
    optimal_value: Fraction = None
    solution: list = None
    tight_constraints: list = field(default_factory=list)


def _to_standard_form(lp: LinearProgram):
    """Rewrite as min c.y, A y (rel) b with y >= 0.

    Returns (c, rows, recover) where recover maps a standard-form solution
    back to the original variables.
    """
    n = len(lp.objective)
    var_terms = []   # per original var: list of (std index, sign)
    var_shift = []   # constant added to the variable expression
    extra_rows = []  # upper-bound rows in standard variables
    nstd = 0
    for k, (lo, hi) in enumerate(lp.bounds):
        if lo is not None:
            var_terms.append([(nstd, 1)])
            var_shift.append(lo)
            if hi is not None:
                extra_rows.append(({nstd: Fraction(1)}, LE, hi - lo))
            nstd += 1
        elif hi is not None:
            # x = hi - y with y >= 0
            var_terms.append([(nstd, -1)])
            var_shift.append(hi)
            nstd += 1
        else:
            var_terms.append([(nstd, 1), (nstd + 1, -1)])
            var_shift.append(Fraction(0))
            nstd += 2

    def expand(row):
        out = {}
        const = Fraction(0)
        for k, a in enumerate(row):
            if a == 0:
                continue
            const += a * var_shift[k]
            for idx, sign in var_terms[k]:
                out[idx] = out.get(idx, Fraction(0)) + sign * a
        return out, const

    c = [Fraction(0)] * nstd
    obj_map, obj_const = expand(lp.objective)
    for idx, a in obj_map.items():
        c[idx] = a
    rows = []
    for row, rel, b in lp.constraints:
        coeffs, const = expand(row)
        rows.append((coeffs, rel, b - const))
    rows.extend(extra_rows)

    def recover(y):
        xs = []
        for k in range(n):
            val = var_shift[k]
            for idx, sign in var_terms[k]:
                val += sign * y[idx]
            xs.append(val)
        return xs

    return c, nstd, rows, obj_const, recover


def lp_solve(lp: LinearProgram) -> LpResult:
    c, nstd, rows, obj_const, recover = _to_standard_form(lp)
    m = len(rows)

    # Assemble rows with slack/surplus columns; track a starting basis,
    # adding artificial columns where no natural basic variable exists.
    ncols = nstd
    slack_col = {}
    for ridx, (_, rel, _) in enumerate(rows):
        if rel in (LE, GE):
            slack_col[ridx] = ncols
            ncols += 1
    body = []
    rhs = []
    for ridx, (coeffs, rel, b) in enumerate(rows):
        row = [Fraction(0)] * ncols
        for idx, a in coeffs.items():
            row[idx] = a
        if rel == LE:
            row[slack_col[ridx]] = Fraction(1)
        elif rel == GE:
            row[slack_col[ridx]] = Fraction(-1)
        if b < 0:
            row = [-a for a in row]
            b = -b
        body.append(row)
        rhs.append(b)
    basis = [None] * m
    for ridx in range(m):
        col = slack_col.get(ridx)
        if col is not None and body[ridx][col] == 1:
            basis[ridx] = col
    n_art = sum(1 for b in basis if b is None)
    total = ncols + n_art
    tableau = []
    art_idx = ncols
    for ridx in range(m):
        row = body[ridx] + [Fraction(0)] * n_art + [rhs[ridx]]
        if basis[ridx] is None:
            row[art_idx] = Fraction(1)
            basis[ridx] = art_idx
            art_idx += 1
        tableau.append(row)

    def run(zrow, allowed):
        """Minimize zrow (reduced in place); Bland's rule; returns status."""
        while True:
            col = None
            for j in range(total):
                if j in allowed and zrow[j] < 0:
                    col = j
                    break
            if col is None:
                return OPTIMAL
            r_pick, best = None, None
            for r in range(m):
                a = tableau[r][col]
                if a > 0:
                    ratio = tableau[r][-1] / a
                    if best is None or ratio < best or \
                            (ratio == best and basis[r] < basis[r_pick]):
                        r_pick, best = r, ratio
            if r_pick is None:
                return UNBOUNDED
            _pivot_full(tableau, zrow, basis, r_pick, col)

    def reduced_cost_row(cost):
        z = cost + [Fraction(0)] * (total - len(cost)) + [Fraction(0)]
        for r in range(m):
            f = z[basis[r]]
            if f != 0:
                z = [a - f * b for a, b in zip(z, tableau[r])]
        return z

    art_cols = set(range(ncols, total))
    if n_art:
        z1 = reduced_cost_row([Fraction(0)] * ncols + [Fraction(1)] * n_art)
        status = run(z1, set(range(total)))
        assert status == OPTIMAL
        if -z1[-1] != 0:
            return LpResult(status=INFEASIBLE)
        # Drive any artificial still basic out of the basis, or confirm its
        # row is redundant (all non-artificial coefficients zero).
        for r in range(m):
            if basis[r] in art_cols:
                for j in range(ncols):
                    if tableau[r][j] != 0:
                        _pivot_full(tableau, z1, basis, r, j)
                        break

    z2 = reduced_cost_row(list(c))
    allowed = set(range(ncols))  # artificials stay out in phase 2
    status = run(z2, allowed)
    if status == UNBOUNDED:
        return LpResult(status=UNBOUNDED)
    y = [Fraction(0)] * total
    for r in range(m):
        y[basis[r]] = tableau[r][-1]
    xs = recover(y)
    value = sum(ci * xi for ci, xi in zip(lp.objective, xs))
    tight = []
    for idx, (row, rel, b) in enumerate(lp.constraints):
        lhs = sum(a * x for a, x in zip(row, xs))
        if lhs == b:
            tight.append(idx)
    return LpResult(status=OPTIMAL, optimal_value=value, solution=xs,
                    tight_constraints=tight)


def _pivot_full(tableau, zrow, basis, r, col):
    piv = tableau[r][col]
    inv = Fraction(1) / piv
    tableau[r] = [v * inv for v in tableau[r]]
    prow = tableau[r]
    for rr in range(len(tableau)):
        if rr == r:
            continue
        f = tableau[rr][col]
        if f != 0:
            tableau[rr] = [a - f * b for a, b in zip(tableau[rr], prow)]
    f = zrow[col]
    if f != 0:
        zrow[:] = [a - f * b for a, b in zip(zrow, prow)]
    basis[r] = col
