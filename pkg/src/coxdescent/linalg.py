"""Small exact linear algebra helpers.

Row reduction over the coefficient tower (for graded pieces and fixed
spaces) and over the rationals (for grading compatibility checks).
Vectors are plain lists; coefficients use the tower's raw representation.
"""

from __future__ import annotations

from fractions import Fraction


def echelon_basis(tower, rows):
    """Reduced row echelon form over the field; returns the nonzero rows.

    Pivots are monic and are the leftmost nonzero coordinates; the result is
    a canonical basis of the row span.
    """
    zero, sub, mul, inv = tower.c_zero, tower.c_sub, tower.c_mul, tower.c_inv
    basis = []  # list of (pivot index, row)
    for row in rows:
        row = list(row)
        for piv, b in basis:
            c = row[piv]
            if c != zero:
                row = [sub(x, mul(c, y)) for x, y in zip(row, b)]
        piv = next((i for i, c in enumerate(row) if c != zero), None)
        if piv is None:
            continue
        ic = inv(row[piv])
        row = [mul(ic, x) for x in row]
        # back-substitute into existing rows
        for j, (piv2, b) in enumerate(basis):
            c = b[piv]
            if c != zero:
                basis[j] = (piv2, [sub(x, mul(c, y)) for x, y in zip(b, row)])
        basis.append((piv, row))
    basis.sort(key=lambda pr: pr[0])
    return [row for _, row in basis]


def reduce_against(tower, row, basis):
    """Reduce a vector against an echelon basis.

    Returns (coords, residual): coords[i] is the coefficient of basis[i]
    used, residual is what remains (zero iff row is in the span).
    """
    zero, sub, mul = tower.c_zero, tower.c_sub, tower.c_mul
    row = list(row)
    coords = []
    for b in basis:
        piv = next(i for i, c in enumerate(b) if c != zero)
        c = row[piv]
        coords.append(c)
        if c != zero:
            row = [sub(x, mul(c, y)) for x, y in zip(row, b)]
    return coords, row


def kernel_gfp(p, mat):
    """Kernel basis of a matrix over GF(p); rows of the result span it.

    ``mat`` is a list of rows (the matrix acts on column vectors).  The
    basis is the canonical RREF free-variable basis, deterministic.
    """
    if not mat:
        return []
    nrows, ncols = len(mat), len(mat[0])
    m = [list(row) for row in mat]
    pivots = []
    r = 0
    for c in range(ncols):
        sel = next((i for i in range(r, nrows) if m[i][c] % p), None)
        if sel is None:
            continue
        m[r], m[sel] = m[sel], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] % p:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-m[i][fc]) % p
        basis.append(v)
    return basis


def rational_rref(rows):
    """RREF over the rationals; returns (rref rows, pivot columns)."""
    m = [[Fraction(x) for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        sel = next((i for i in range(r, nrows) if m[i][c]), None)
        if sel is None:
            continue
        m[r], m[sel] = m[sel], m[r]
        m[r] = [x / m[r][c] for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def rational_kernel(rows):
    """Kernel basis (list of columns vectors as lists of Fractions)."""
    if not rows:
        return []
    ncols = len(rows[0])
    rref, pivots = rational_rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rref[i][fc]
        basis.append(v)
    return basis


def rational_solve(rows, rhs):
    """One solution of A x = b over the rationals, or None."""
    if not rows:
        return None
    ncols = len(rows[0])
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    rref, pivots = rational_rref(aug)
    x = [Fraction(0)] * ncols
    for row, pc in zip(rref, pivots):
        if pc == ncols:  # inconsistent system
            return None
        x[pc] = row[-1]
    return x
