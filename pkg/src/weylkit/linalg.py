"""Small exact linear algebra kernel over Fraction and over the integers.

Matrices are tuples of tuples (rows) so they can be hashed and used as
dictionary keys; vectors are tuples.  Everything is dense and intended
for ranks up to about nine.
"""

from fractions import Fraction
from math import gcd


def identity_mat(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(m)) for j in range(p))
        for i in range(n)
    )


def mat_vec(a, v):
    return tuple(sum(row[k] * v[k] for k in range(len(v))) for row in a)


def vec_add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def vec_sub(u, v):
    return tuple(x - y for x, y in zip(u, v))


def vec_scale(c, v):
    return tuple(c * x for x in v)


def transpose(a):
    return tuple(zip(*a))


def mat_pow(a, k):
    n = len(a)
    result = identity_mat(n)
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


def mat_inv(a):
    """Inverse of a square matrix over Fraction (exact Gauss-Jordan)."""
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def mat_inv_int(a):
    """Inverse of an integer matrix with determinant +-1, as integers."""
    inv = mat_inv(a)
    out = []
    for row in inv:
        out_row = []
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
            out_row.append(int(x))
        out.append(tuple(out_row))
    return tuple(out)


def row_reduce(rows):
    """Reduced row echelon form; returns (rref rows, pivot columns)."""
    mat = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    ncols = len(mat[0]) if mat else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return tuple(tuple(row) for row in mat), tuple(pivots)


def rank(rows):
    if not rows:
        return 0
    _, pivots = row_reduce(rows)
    return len(pivots)


def nullspace(rows):
    """Basis of the right kernel of the matrix given by `rows`."""
    if not rows:
        return ()
    ncols = len(rows[0])
    rref, pivots = row_reduce(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rref[r][fc]
        basis.append(tuple(v))
    return tuple(basis)


def solve(a, b):
    """One solution x of a x = b over Fraction, or None if inconsistent."""
    n = len(a)
    ncols = len(a[0])
    aug = [list(row) + [b[i]] for i, row in enumerate(a)]
    rref, pivots = row_reduce(aug)
    for row in rref:
        if all(x == 0 for x in row[:ncols]) and row[ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        if pc == ncols:
            return None
        x[pc] = rref[r][ncols]
    return tuple(x)


def in_span(rows, v):
    """Whether v lies in the row span of `rows`."""
    if all(x == 0 for x in v):
        return True
    if not rows:
        return False
    return rank(list(rows) + [v]) == rank(rows)


def hnf(rows):
    """Row-style Hermite normal form of an integer matrix.

    Returns the canonical basis (as rows, zero rows dropped) of the
    lattice spanned by the input rows: row echelon, positive pivots,
    entries above each pivot reduced into [0, pivot).
    """
    mat = [list(row) for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    r = 0
    for c in range(ncols):
        # Clear column c below row r with the Euclidean algorithm.
        while True:
            nz = [i for i in range(r, nrows) if mat[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(mat[i][c]))
            mat[r], mat[i0] = mat[i0], mat[r]
            if mat[r][c] < 0:
                mat[r] = [-x for x in mat[r]]
            done = True
            for i in range(r + 1, nrows):
                if mat[i][c] != 0:
                    q = mat[i][c] // mat[r][c]
                    mat[i] = [x - q * y for x, y in zip(mat[i], mat[r])]
                    if mat[i][c] != 0:
                        done = False
            if done:
                break
        if r < nrows and mat[r][c] != 0:
            for i in range(r):
                q = mat[i][c] // mat[r][c]
                if q:
                    mat[i] = [x - q * y for x, y in zip(mat[i], mat[r])]
            r += 1
            if r == nrows:
                break
    # Reduce entries above pivots (needed when later pivots appear).
    pivots = []
    for i in range(r):
        c = next(j for j in range(ncols) if mat[i][j] != 0)
        pivots.append((i, c))
    for i, c in pivots:
        for k in range(i):
            q = mat[k][c] // mat[i][c]
            if q:
                mat[k] = [x - q * y for x, y in zip(mat[k], mat[i])]
    return tuple(tuple(row) for row in mat[:r])


def snf_diag(rows):
    """Diagonal of the Smith normal form of an integer matrix.

    Returns the nonzero invariant factors d_1 | d_2 | ... as positive
    integers.
    """
    mat = [list(row) for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    diag = []
    top = 0
    while top < min(nrows, ncols):
        if all(mat[i][j] == 0 for i in range(top, nrows) for j in range(top, ncols)):
            break
        while True:
            # Move a minimal nonzero entry to the (top, top) position.
            best = None
            for i in range(top, nrows):
                for j in range(top, ncols):
                    if mat[i][j] != 0 and (best is None or abs(mat[i][j]) < best[0]):
                        best = (abs(mat[i][j]), i, j)
            _, bi, bj = best
            mat[top], mat[bi] = mat[bi], mat[top]
            for row in mat:
                row[top], row[bj] = row[bj], row[top]
            if mat[top][top] < 0:
                mat[top] = [-x for x in mat[top]]
            dirty = False
            for i in range(top + 1, nrows):
                q = mat[i][top] // mat[top][top]
                if q:
                    mat[i] = [x - q * y for x, y in zip(mat[i], mat[top])]
                if mat[i][top] != 0:
                    dirty = True
            for j in range(top + 1, ncols):
                q = mat[top][j] // mat[top][top]
                if q:
                    for row in mat:
                        row[j] -= q * row[top]
                if mat[top][j] != 0:
                    dirty = True
            if dirty:
                continue
            # Enforce divisibility of the remaining block.
            d = mat[top][top]
            offender = None
            for i in range(top + 1, nrows):
                for j in range(top + 1, ncols):
                    if mat[i][j] % d != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            mat[top] = [x + y for x, y in zip(mat[top], mat[offender])]
        diag.append(mat[top][top])
        top += 1
    return tuple(diag)


def lcm(a, b):
    return a * b // gcd(a, b)
