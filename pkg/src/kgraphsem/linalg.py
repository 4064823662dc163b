"""Exact linear algebra over the integers and rationals.

Everything here is deterministic and tolerance-free. Matrices are sequences
of row sequences holding ints or Fractions; results are tuples. The three
nontrivial pieces are a rational kernel-basis routine (Gaussian elimination),
a phase-one simplex feasibility solver with Bland's rule, and a Smith normal
form with unimodular transforms, used for integer lattice membership with
witness recovery.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import InternalCheckError

Matrix = tuple[tuple[int, ...], ...]


def freeze(rows) -> Matrix:
    return tuple(tuple(row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(a):
    return tuple(tuple(row[j] for row in a) for j in range(len(a[0]))) if a else ()


def mat_mul(a, b):
    if not a or not b:
        return ()
    bt = transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(a, x):
    return tuple(sum(v * w for v, w in zip(row, x)) for row in a)


def vec_add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def kernel_basis(rows) -> list[tuple[Fraction, ...]]:
    """Basis of the rational nullspace of the given matrix.

    Plain reduced row echelon form; free columns yield the basis vectors.
    The basis is deterministic: free columns are scanned left to right.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    a = [[Fraction(v) for v in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pivot_row = next((i for i in range(r, m) if a[i][c] != 0), None)
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        pv = a[r][c]
        a[r] = [v / pv for v in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [v - f * w for v, w in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    basis = []
    pivot_set = set(pivots)
    for c in range(n):
        if c in pivot_set:
            continue
        vec = [Fraction(0)] * n
        vec[c] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -a[i][c]
        basis.append(tuple(vec))
    return basis


def feasible_point(rows, rhs):
    """Some x >= 0 with rows.x = rhs exactly, or None if there is none.

    Phase-one simplex over Fractions. Bland's rule (smallest index enters,
    smallest basis variable leaves on ties) rules out cycling, so this
    terminates on every input. The returned point is rechecked exactly.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    if m == 0:
        return (Fraction(0),) * n
    tab = []
    for i in range(m):
        r = [Fraction(v) for v in rows[i]]
        bi = Fraction(rhs[i])
        if bi < 0:
            r = [-v for v in r]
            bi = -bi
        r.extend(Fraction(1) if j == i else Fraction(0) for j in range(m))
        r.append(bi)
        tab.append(r)
    width = n + m + 1
    basis = [n + i for i in range(m)]
    # Reduced costs for minimizing the artificial sum; slot -1 carries -objective.
    red = []
    for j in range(width):
        s = sum(tab[i][j] for i in range(m))
        if j == width - 1:
            red.append(-s)
        else:
            red.append((Fraction(0) if j < n else Fraction(1)) - s)
    while True:
        enter = next((j for j in range(n + m) if red[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            coeff = tab[i][enter]
            if coeff > 0:
                ratio = tab[i][-1] / coeff
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave is None:
            raise InternalCheckError(
                "phase-one simplex objective unbounded; the artificial sum "
                "is bounded below by zero, so this cannot happen"
            )
        piv = tab[leave][enter]
        tab[leave] = [v / piv for v in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [v - f * w for v, w in zip(tab[i], tab[leave])]
        if red[enter] != 0:
            f = red[enter]
            red = [v - f * w for v, w in zip(red, tab[leave])]
        basis[leave] = enter
    if red[-1] != 0:
        return None
    x = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        if bv < n:
            x[bv] = tab[i][-1]
    for i in range(m):
        lhs = sum(Fraction(rows[i][j]) * x[j] for j in range(n))
        if lhs != Fraction(rhs[i]):
            raise InternalCheckError("simplex produced a point violating a row")
    if any(v < 0 for v in x):
        raise InternalCheckError("simplex produced a negative coordinate")
    return tuple(x)


def positive_combination(columns):
    """A strictly positive vector in the column span, scaled so min entry >= 1.

    columns is a list of vectors (the span generators). Positivity is a cone
    condition, so x_v >= 1 loses no generality. Returns the vector or None.
    """
    d = len(columns)
    if d == 0:
        return None
    dim = len(columns[0])
    rows = []
    for v in range(dim):
        row = [columns[j][v] for j in range(d)]
        row += [-columns[j][v] for j in range(d)]
        row += [Fraction(-1) if u == v else Fraction(0) for u in range(dim)]
        rows.append(row)
    sol = feasible_point(rows, [Fraction(1)] * dim)
    if sol is None:
        return None
    coeff = [sol[j] - sol[d + j] for j in range(d)]
    x = tuple(
        sum(Fraction(columns[j][v]) * coeff[j] for j in range(d)) for v in range(dim)
    )
    if any(v < 1 for v in x):
        raise InternalCheckError("positive-combination output not >= 1")
    return x


def nonneg_sum_one_in_span(gen_rows):
    """x in the column span of the matrix with x >= 0 and sum(x) = 1, or None.

    gen_rows is the generator matrix by rows (m x n). The slack block makes
    x >= 0 explicit, and the final row pins the normalization.
    """
    m = len(gen_rows)
    n = len(gen_rows[0]) if m else 0
    if m == 0:
        return None
    rows = []
    for r in range(m):
        row = list(gen_rows[r])
        row += [-v for v in gen_rows[r]]
        row += [-1 if u == r else 0 for u in range(m)]
        rows.append(row)
    colsum = [sum(gen_rows[r][j] for r in range(m)) for j in range(n)]
    rows.append(list(colsum) + [-v for v in colsum] + [0] * m)
    rhs = [0] * m + [1]
    sol = feasible_point(rows, rhs)
    if sol is None:
        return None
    x = tuple(sol[2 * n + r] for r in range(m))
    if any(v < 0 for v in x) or sum(x) != 1:
        raise InternalCheckError("span feasibility output violates x >= 0, sum 1")
    return x


def smith_normal_form(a_rows):
    """(D, U, V) with D = U.A.V, U and V unimodular, D diagonal, d1 | d2 | ...

    Classic elimination: pick the absolutely smallest nonzero pivot, clear its
    row and column by Euclidean steps, then repair divisibility by folding an
    offending row into the pivot row. Deterministic pivot choice throughout.
    """
    m = len(a_rows)
    n = len(a_rows[0]) if m else 0
    d = [list(row) for row in a_rows]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row dst += q * row src
        d[dst] = [x + q * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in d:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if d[i][j] != 0 and (
                    pivot is None or abs(d[i][j]) < abs(d[pivot[0]][pivot[1]])
                ):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        dirty = False
        for i in range(t + 1, m):
            if d[i][t] != 0:
                add_row(i, t, -(d[i][t] // d[t][t]))
                if d[i][t] != 0:
                    dirty = True
        for j in range(t + 1, n):
            if d[t][j] != 0:
                add_col(j, t, -(d[t][j] // d[t][t]))
                if d[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        bad = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if d[i][j] % d[t][t] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            add_row(t, bad, 1)
            continue
        t += 1

    dt = freeze(d)
    ut = freeze(u)
    vt = freeze(v)
    if mat_mul(mat_mul(ut, freeze(a_rows)), vt) != dt:
        raise InternalCheckError("Smith normal form transform check failed")
    return dt, ut, vt


def scaled_lattice_solve(gen_rows, target):
    """Smallest m >= 1 with gen.z = m*target solvable over the integers.

    target must lie in the rational column span of gen (the caller guarantees
    this; violations raise). Returns (m, z) with z an integer tuple.
    """
    m_rows = len(gen_rows)
    n_cols = len(gen_rows[0]) if m_rows else 0
    dmat, umat, vmat = smith_normal_form(gen_rows)
    t = mat_vec(umat, target)
    diag = [dmat[i][i] for i in range(min(m_rows, n_cols))]
    rank = sum(1 for x in diag if x != 0)
    for i in range(rank, m_rows):
        if t[i] != 0:
            raise InternalCheckError(
                "lattice solve target lies outside the rational span"
            )
    coords = [Fraction(t[i], diag[i]) for i in range(rank)]
    mult = 1
    for c in coords:
        mult = lcm(mult, c.denominator)
    w = [int(c * mult) for c in coords] + [0] * (n_cols - rank)
    z = mat_vec(vmat, tuple(w))
    check = mat_vec(freeze(gen_rows), z)
    if check != tuple(mult * x for x in target):
        raise InternalCheckError("lattice solve recheck failed")
    return mult, tuple(int(x) for x in z)


def vector_content(vec):
    """gcd of the entries, 0 for the zero vector."""
    g = 0
    for x in vec:
        g = gcd(g, abs(int(x)))
    return g
