# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled mutation and canonicalization kernels.

Fast C paths cover the common case: entries small enough that the
mutation update cannot overflow 64-bit arithmetic, and (for the
canonical form) n small enough for a pruned permutation DFS.  Anything
outside that envelope is delegated to the pure-Python reference in
``greenseq._pure``, which runs on arbitrary-precision ints.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

cdef extern from "Python.h":
    long long PyLong_AsLongLongAndOverflow(object, int *) except? -1

from greenseq import _pure

IMPL_NAME = "speedups"

cdef long long _INF = 0x7FFFFFFFFFFFFFFF
cdef long long _BOUND = 1073741824  # 2**30: keeps a + b*c inside int64

cdef Py_ssize_t _CANON_DFS_MAX_N = 9


cdef long long* _load(rows, Py_ssize_t size, Py_ssize_t n):
    """Copy entries into a C buffer; NULL if any entry is too large."""
    cdef long long *buf = <long long *> malloc(size * n * sizeof(long long))
    cdef Py_ssize_t i, j
    cdef long long v
    cdef int overflow
    if buf == NULL:
        raise MemoryError()
    for i in range(size):
        row = rows[i]
        for j in range(n):
            v = PyLong_AsLongLongAndOverflow(row[j], &overflow)
            if overflow or not (-_BOUND < v < _BOUND):
                free(buf)
                return NULL
            buf[i * n + j] = v
    return buf


def mutate_rows(rows, Py_ssize_t n, Py_ssize_t k):
    cdef Py_ssize_t size = len(rows)
    cdef long long *buf = _load(rows, size, n)
    if buf == NULL:
        return _pure.mutate_rows(rows, n, k)
    cdef long long *out = <long long *> malloc(size * n * sizeof(long long))
    cdef Py_ssize_t i, j
    cdef long long bik, bkj, v
    if out == NULL:
        free(buf)
        raise MemoryError()
    try:
        for i in range(size):
            bik = buf[i * n + k]
            for j in range(n):
                if i == k or j == k:
                    out[i * n + j] = -buf[i * n + j]
                else:
                    v = buf[i * n + j]
                    bkj = buf[k * n + j]
                    if bik > 0 and bkj > 0:
                        v += bik * bkj
                    elif bik < 0 and bkj < 0:
                        v -= bik * bkj
                    out[i * n + j] = v
        result = []
        for i in range(size):
            row_out = [0] * n
            for j in range(n):
                row_out[j] = out[i * n + j]
            result.append(tuple(row_out))
        return tuple(result)
    finally:
        free(buf)
        free(out)


cdef struct _CanonState:
    long long *mat        # (n+m) x n entries
    long long *best       # best-known shell serialization, _INF-padded
    Py_ssize_t *best_perm
    Py_ssize_t *order     # current partial assignment
    bint *used
    Py_ssize_t n, m, total


cdef void _canon_dfs(_CanonState *st, Py_ssize_t depth, Py_ssize_t offset):
    # Invariant: the current path's serialization prefix (length offset)
    # equals best[0:offset].  A candidate whose shell exceeds the stored
    # best is pruned; one that beats it overwrites best from that point
    # on (the stale tail is reset to +inf and rebuilt by the subtree).
    cdef Py_ssize_t n = st.n, m = st.m
    cdef Py_ssize_t v, a, pos, shell_len
    cdef long long e
    cdef bint improved, pruned
    if depth == n:
        for a in range(n):
            st.best_perm[a] = st.order[a]
        return
    shell_len = 2 * depth + 1 + m
    for v in range(n):
        if st.used[v]:
            continue
        improved = False
        pruned = False
        pos = offset
        for a in range(shell_len):
            if a < depth:
                e = st.mat[st.order[a] * n + v]
            elif a == depth:
                e = st.mat[v * n + v]
            elif a < 2 * depth + 1:
                e = st.mat[v * n + st.order[a - depth - 1]]
            else:
                e = st.mat[(n + (a - 2 * depth - 1)) * n + v]
            if improved:
                st.best[pos] = e
            elif e > st.best[pos]:
                pruned = True
                break
            elif e < st.best[pos]:
                improved = True
                st.best[pos] = e
            pos += 1
        if pruned:
            continue
        if improved:
            for a in range(pos, st.total):
                st.best[a] = _INF
        st.order[depth] = v
        st.used[v] = True
        _canon_dfs(st, depth + 1, pos)
        st.used[v] = False


def canonical_min(rows, Py_ssize_t n, Py_ssize_t m):
    if n > _CANON_DFS_MAX_N:
        return _pure.canonical_min(rows, n, m)
    cdef Py_ssize_t size = n + m
    cdef long long *buf = _load(rows, size, n)
    if buf == NULL:
        return _pure.canonical_min(rows, n, m)
    cdef Py_ssize_t total = n * n + n * m
    cdef Py_ssize_t alloc_n = n if n > 0 else 1
    cdef _CanonState st
    cdef Py_ssize_t i, f
    st.mat = buf
    st.n = n
    st.m = m
    st.total = total
    st.best = <long long *> malloc((total if total else 1) * sizeof(long long))
    st.best_perm = <Py_ssize_t *> malloc(alloc_n * sizeof(Py_ssize_t))
    st.order = <Py_ssize_t *> malloc(alloc_n * sizeof(Py_ssize_t))
    st.used = <bint *> malloc(alloc_n * sizeof(bint))
    if st.best == NULL or st.best_perm == NULL or st.order == NULL \
            or st.used == NULL:
        free(buf)
        if st.best != NULL:
            free(st.best)
        if st.best_perm != NULL:
            free(st.best_perm)
        if st.order != NULL:
            free(st.order)
        if st.used != NULL:
            free(st.used)
        raise MemoryError()
    try:
        for i in range(total):
            st.best[i] = _INF
        memset(st.used, 0, alloc_n * sizeof(bint))
        for i in range(n):
            st.best_perm[i] = i
        _canon_dfs(&st, 0, 0)
        order = tuple(st.best_perm[i] for i in range(n))
        canon = [
            tuple(buf[order[i] * n + order[j]] for j in range(n))
            for i in range(n)
        ]
        canon.extend(
            tuple(buf[(n + f) * n + order[j]] for j in range(n))
            for f in range(m)
        )
        return tuple(canon), order
    finally:
        free(buf)
        free(st.best)
        free(st.best_perm)
        free(st.order)
        free(st.used)
