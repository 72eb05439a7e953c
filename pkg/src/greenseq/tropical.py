"""c-matrix and g-matrix calculus.

Columns of the c-matrix are the c-vectors (the frozen block of an
extended exchange matrix reachable from a framed quiver); columns of the
g-matrix are the degrees of the cluster variables under the principal
grading.  The two determine each other by inverse transpose.  All
arithmetic is exact integer; the matrix inverse goes through the
adjugate, never floating point.
"""

from __future__ import annotations

from greenseq.quiver import ExtMatrix, QuiverError

IntMatrix = tuple[tuple[int, ...], ...]


def identity(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def c_matrix_of(r: ExtMatrix) -> IntMatrix:
    """The frozen block of a matrix in the mutation class of a framed
    quiver: row i is (c_{i1},..,c_{in})."""
    if r.m != r.n:
        raise QuiverError(
            f"c-matrix needs one frozen vertex per mutable one, got m={r.m}, n={r.n}"
        )
    return r.bottom


def column(mat: IntMatrix, j: int) -> tuple[int, ...]:
    return tuple(row[j] for row in mat)


def check_sign_coherence(c: IntMatrix) -> tuple[bool, int | None]:
    """Every column entrywise >= 0 or entrywise <= 0; on failure returns
    the first offending column (1-based)."""
    n = len(c[0]) if c else 0
    for j in range(n):
        col = column(c, j)
        if any(e > 0 for e in col) and any(e < 0 for e in col):
            return False, j + 1
    return True, None


def mutate_c(c: IntMatrix, b_r: ExtMatrix, i: int) -> IntMatrix:
    """c-matrix after mutating at vertex i (1-based).

    Column i flips sign; every other column l gains
    [c_{ji}]+ [b_{il}]+ - [-c_{ji}]+ [-b_{il}]+.  (The sign flip of
    column i is forced by the framed-A2 mutation values; a literal
    "unchanged column" reading contradicts them.)
    """
    n = b_r.n
    if b_r.m != n:
        raise QuiverError("expected an extended matrix with m = n")
    if not (1 <= i <= n):
        raise QuiverError(f"mutation index {i} out of range 1..{n}")
    if tuple(tuple(row) for row in c) != b_r.bottom:
        raise QuiverError("c-matrix does not match the frozen block of the exchange matrix")
    k = i - 1
    out = []
    for j in range(n):
        cji_row = c[j]
        new_row = []
        for l in range(n):
            if l == k:
                new_row.append(-cji_row[k])
            else:
                v = cji_row[l]
                cji = cji_row[k]
                bil = b_r.rows[k][l]
                if cji > 0 and bil > 0:
                    v += cji * bil
                elif cji < 0 and bil < 0:
                    v -= cji * bil
                new_row.append(v)
        out.append(tuple(new_row))
    return tuple(out)


def mutate_g(
    g: IntMatrix, b_r: ExtMatrix, b0_top: IntMatrix, i: int
) -> IntMatrix:
    """g-matrix after mutating at vertex i (1-based).

    Only column i changes:
        g'_i = -g_i + sum_m [b_{mi}]+ g_m - sum_l [c_{li}]+ B0 e_l
    with b the current extended matrix and c_{li} = b_{n+l,i} its frozen
    block.  The last sum runs over the positive parts of the c-entries;
    the A2 g-matrix values and duality with the c-matrix both force this
    sign (flipping it reproduces neither).
    """
    n = b_r.n
    if b_r.m != n:
        raise QuiverError("expected an extended matrix with m = n")
    if not (1 <= i <= n):
        raise QuiverError(f"mutation index {i} out of range 1..{n}")
    k = i - 1
    new_col = [-g[r][k] for r in range(n)]
    for m_ in range(n):
        b_mi = b_r.rows[m_][k]
        if b_mi > 0:
            for r in range(n):
                new_col[r] += b_mi * g[r][m_]
    for l in range(n):
        c_li = b_r.rows[n + l][k]
        if c_li > 0:
            for r in range(n):
                new_col[r] -= c_li * b0_top[r][l]
    return tuple(
        tuple(new_col[r] if j == k else g[r][j] for j in range(n))
        for r in range(n)
    )


def det(mat: IntMatrix) -> int:
    """Exact integer determinant (fraction-free elimination)."""
    n = len(mat)
    if n == 0:
        return 1
    a = [list(row) for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _minor(mat: IntMatrix, drop_row: int, drop_col: int) -> IntMatrix:
    return tuple(
        tuple(e for j, e in enumerate(row) if j != drop_col)
        for i, row in enumerate(mat)
        if i != drop_row
    )


def tropical_dual(g: IntMatrix) -> IntMatrix:
    """Inverse transpose of a unimodular integer matrix: maps the
    g-matrix to the c-matrix of the same cluster."""
    n = len(g)
    d = det(g)
    if d not in (1, -1):
        raise QuiverError(f"matrix is not unimodular (det = {d})")
    dual = []
    for i in range(n):
        row = []
        for j in range(n):
            cof = det(_minor(g, i, j))
            if (i + j) % 2:
                cof = -cof
            row.append(cof // d)
        dual.append(tuple(row))
    return tuple(dual)


def trajectory(
    q: ExtMatrix, seq, b0_top: IntMatrix | None = None
) -> list[tuple[ExtMatrix, IntMatrix, IntMatrix]]:
    """States (R, C, G) from the framed quiver along a mutation sequence,
    including the initial state."""
    from greenseq.quiver import framed, mutate

    if q.m == 0:
        state = framed(q)
        b0 = q.rows if b0_top is None else b0_top
    else:
        state = q
        if b0_top is None:
            raise QuiverError("framed input needs the initial top block")
        b0 = b0_top
    c = c_matrix_of(state)
    g = identity(q.n)
    out = [(state, c, g)]
    for i in seq:
        c = mutate_c(c, state, i)
        g = mutate_g(g, state, b0, i)
        state = mutate(state, i)
        out.append((state, c, g))
    return out
