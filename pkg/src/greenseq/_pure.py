"""Pure-Python mutation and canonicalization kernels.

These are the hot inner loops of exchange-graph exploration.  A compiled
twin lives in ``greenseq._speedups``; ``greenseq._kernels`` picks one at
import time.  Both implementations must agree entry-for-entry; the pure
versions here are the reference.

Matrices are tuples of (n+m) row tuples with n integer columns each,
0-based indices throughout this module.  All arithmetic is on Python
ints, so entries may grow without bound.
"""

from __future__ import annotations

IMPL_NAME = "pure"


def mutate_rows(rows: tuple, n: int, k: int) -> tuple:
    """Mutate the extended exchange matrix at mutable vertex k (0-based).

    Rule, applied to every row i (mutable and frozen) and column j < n:
    entries in row/column k flip sign, and otherwise
    b[i][j] += [b[i][k]]+ * [b[k][j]]+  -  [-b[i][k]]+ * [-b[k][j]]+.
    """
    rk = rows[k]
    out = []
    for i, ri in enumerate(rows):
        bik = ri[k]
        new = []
        for j in range(n):
            if i == k or j == k:
                new.append(-ri[j])
            else:
                v = ri[j]
                bkj = rk[j]
                if bik > 0 and bkj > 0:
                    v += bik * bkj
                elif bik < 0 and bkj < 0:
                    v -= bik * bkj
                new.append(v)
        out.append(tuple(new))
    return tuple(out)


def _shell(rows, n, m, order, v):
    # Entries newly determined when v is placed after the vertices in
    # `order`: v's column against earlier rows, v's row against earlier
    # columns (plus the zero diagonal), then v's frozen column.
    sh = [rows[a][v] for a in order]
    sh.append(rows[v][v])
    sh.extend(rows[v][a] for a in order)
    sh.extend(rows[n + f][v] for f in range(m))
    return tuple(sh)


def _dedup_equivalent(rows, n, kept):
    # Orders with the same used set whose placed vertices look identical
    # from every unplaced vertex have identical completion minima; one
    # representative suffices.  Collapses the beam on symmetric quivers.
    seen = {}
    for order in kept:
        used = set(order)
        rest = [u for u in range(n) if u not in used]
        sig = (
            frozenset(used),
            tuple(
                tuple(rows[a][u] for u in rest) + tuple(rows[u][a] for u in rest)
                for a in order
            ),
        )
        if sig not in seen:
            seen[sig] = order
    return list(seen.values())


def canonical_min(rows: tuple, n: int, m: int) -> tuple:
    """Canonical form of an ice-quiver matrix under mutable relabelling.

    Minimizes the shell serialization over all permutations of the
    mutable vertices (frozen vertices stay fixed).  Exact search: at each
    position only the candidates achieving the minimal shell survive, so
    every surviving partial order has the same serialization prefix.

    Returns (canon_rows, order) where order[new_pos] = old index and
    canon_rows is the relabelled matrix.
    """
    orders = [()]
    for _ in range(n):
        best_shell = None
        kept = []
        for order in orders:
            used = set(order)
            for v in range(n):
                if v in used:
                    continue
                sh = _shell(rows, n, m, order, v)
                if best_shell is None or sh < best_shell:
                    best_shell = sh
                    kept = [order + (v,)]
                elif sh == best_shell:
                    kept.append(order + (v,))
        orders = _dedup_equivalent(rows, n, kept) if len(kept) > 1 else kept
    order = orders[0] if orders else ()
    canon = [tuple(rows[order[i]][order[j]] for j in range(n)) for i in range(n)]
    canon.extend(tuple(rows[n + f][order[j]] for j in range(n)) for f in range(m))
    return tuple(canon), order
