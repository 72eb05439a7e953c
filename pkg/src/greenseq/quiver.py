"""Ice quivers as integer exchange matrices.

An ice quiver with n mutable and m frozen vertices is encoded by its
(n+m) x n matrix b with b[i][j] = #arrows(i -> j) - #arrows(j -> i).
Loops and 2-cycles do not occur (the encoding cannot express them and
mutation never produces them), and frozen-frozen arrows are dropped, so
the matrix determines the quiver.

Mutable vertices are 1..n and frozen vertices n+1..n+m in every public
index argument; internals are 0-based.  ExtMatrix values are immutable;
all operations are pure functions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import permutations

from greenseq import _kernels

CANONICAL_MAX_N = 12

Rows = tuple[tuple[int, ...], ...]


class QuiverError(ValueError):
    """Invalid quiver data or an operation outside its domain."""


class VertexColor(enum.Enum):
    GREEN = "green"
    RED = "red"
    NEITHER = "neither"


@dataclass(frozen=True)
class ExtMatrix:
    """Extended exchange matrix of an ice quiver."""

    n: int
    m: int
    rows: Rows

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise QuiverError("vertex counts must be non-negative")
        if len(self.rows) != self.n + self.m:
            raise QuiverError(
                f"expected {self.n + self.m} rows, got {len(self.rows)}"
            )
        for r, row in enumerate(self.rows):
            if len(row) != self.n:
                raise QuiverError(f"row {r + 1} has {len(row)} entries, expected {self.n}")
            if not all(isinstance(e, int) for e in row):
                raise QuiverError(f"row {r + 1} has a non-integer entry")
        for i in range(self.n):
            if self.rows[i][i] != 0:
                raise QuiverError(f"loop at vertex {i + 1}: diagonal entry nonzero")
            for j in range(i + 1, self.n):
                if self.rows[i][j] != -self.rows[j][i]:
                    raise QuiverError(
                        f"top block not skew-symmetric at ({i + 1},{j + 1})"
                    )

    @classmethod
    def from_rows(cls, n: int, m: int, rows) -> "ExtMatrix":
        return cls(n, m, tuple(tuple(int(e) for e in row) for row in rows))

    @classmethod
    def _trusted(cls, n: int, m: int, rows: Rows) -> "ExtMatrix":
        # for rows produced by the kernels, which preserve the invariants;
        # skips __post_init__ validation on the mutation hot path
        q = object.__new__(cls)
        object.__setattr__(q, "n", n)
        object.__setattr__(q, "m", m)
        object.__setattr__(q, "rows", rows)
        return q

    @property
    def top(self) -> Rows:
        """The n x n mutable block."""
        return self.rows[: self.n]

    @property
    def bottom(self) -> Rows:
        """The m x n frozen block."""
        return self.rows[self.n :]

    def entry(self, i: int, j: int) -> int:
        """Net arrow count i -> j, 1-based, j mutable."""
        return self.rows[i - 1][j - 1]

    def __str__(self) -> str:
        width = max((len(str(e)) for row in self.rows for e in row), default=1)
        lines = [" ".join(str(e).rjust(width) for e in row) for row in self.rows]
        if self.m:
            lines.insert(self.n, "-" * (self.n * (width + 1) - 1))
        return "\n".join(lines)


def _check_mutable(q: ExtMatrix, k: int, what: str = "mutation index"):
    if not isinstance(k, int) or not (1 <= k <= q.n):
        raise QuiverError(f"{what} {k} out of range 1..{q.n} (frozen vertices cannot be used)")


def mutate(q: ExtMatrix, k: int) -> ExtMatrix:
    """Mutation at mutable vertex k (1-based).  Involutive."""
    _check_mutable(q, k)
    return ExtMatrix._trusted(q.n, q.m, _kernels.mutate_rows(q.rows, q.n, k - 1))


def mutate_seq(q: ExtMatrix, seq) -> ExtMatrix:
    for k in seq:
        q = mutate(q, k)
    return q


def framed(q: ExtMatrix) -> ExtMatrix:
    """Add one frozen vertex j' per mutable j with an arrow j' -> j."""
    if q.m != 0:
        raise QuiverError("framed() expects a quiver without frozen vertices")
    rows = list(q.rows)
    for j in range(q.n):
        rows.append(tuple(1 if c == j else 0 for c in range(q.n)))
    return ExtMatrix(q.n, q.n, tuple(rows))


def coframed(q: ExtMatrix) -> ExtMatrix:
    """Add one frozen vertex j' per mutable j with an arrow j -> j'."""
    if q.m != 0:
        raise QuiverError("coframed() expects a quiver without frozen vertices")
    rows = list(q.rows)
    for j in range(q.n):
        rows.append(tuple(-1 if c == j else 0 for c in range(q.n)))
    return ExtMatrix(q.n, q.n, tuple(rows))


def vertex_color(q: ExtMatrix, i: int) -> VertexColor:
    """Colour of mutable vertex i: green iff no arrow i -> frozen,
    red iff no arrow frozen -> i."""
    _check_mutable(q, i, "vertex index")
    col = [q.rows[q.n + f][i - 1] for f in range(q.m)]
    has_in = any(e > 0 for e in col)    # frozen -> i
    has_out = any(e < 0 for e in col)   # i -> frozen
    if has_out and has_in:
        return VertexColor.NEITHER
    if has_out:
        return VertexColor.RED
    # no arrows to the frozen part at all counts as green (vacuous case,
    # only reachable for degenerate inputs such as m = 0)
    return VertexColor.GREEN


def colors(q: ExtMatrix) -> list[VertexColor]:
    return [vertex_color(q, i) for i in range(1, q.n + 1)]


def green_vertices(q: ExtMatrix) -> list[int]:
    return [i for i in range(1, q.n + 1) if vertex_color(q, i) is VertexColor.GREEN]


def all_red(q: ExtMatrix) -> bool:
    return all(vertex_color(q, i) is VertexColor.RED for i in range(1, q.n + 1))


def apply_perm(q: ExtMatrix, sigma: tuple[int, ...]) -> ExtMatrix:
    """Relabel mutable vertices: sigma[i-1] is the new 1-based label of
    vertex i.  Frozen vertices keep their labels."""
    if sorted(sigma) != list(range(1, q.n + 1)):
        raise QuiverError(f"not a permutation of 1..{q.n}: {sigma}")
    s = [x - 1 for x in sigma]
    rows = [[0] * q.n for _ in range(q.n + q.m)]
    for i in range(q.n):
        for j in range(q.n):
            rows[s[i]][s[j]] = q.rows[i][j]
    for f in range(q.m):
        for j in range(q.n):
            rows[q.n + f][s[j]] = q.rows[q.n + f][j]
    return ExtMatrix.from_rows(q.n, q.m, rows)


def is_isomorphic(q: ExtMatrix, other: ExtMatrix):
    """Witness permutation sigma (1-based, sigma[i-1] = image of i) with
    apply_perm(q, sigma) == other, or None.  Frozen vertices are fixed."""
    if q.n != other.n or q.m != other.m:
        return None
    if q.n > CANONICAL_MAX_N:
        raise QuiverError(f"isomorphism search capped at n <= {CANONICAL_MAX_N}")
    # cheap invariant: multiset of column signatures must match
    if sorted(_column_signature(q, j) for j in range(q.n)) != sorted(
        _column_signature(other, j) for j in range(q.n)
    ):
        return None
    for perm in permutations(range(q.n)):
        ok = True
        for i in range(q.n):
            for j in range(q.n):
                if other.rows[perm[i]][perm[j]] != q.rows[i][j]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            for f in range(q.m):
                for j in range(q.n):
                    if other.rows[q.n + f][perm[j]] != q.rows[q.n + f][j]:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            return tuple(p + 1 for p in perm)
    return None


def _column_signature(q: ExtMatrix, j: int):
    top = sorted(q.rows[i][j] for i in range(q.n))
    frozen = tuple(q.rows[q.n + f][j] for f in range(q.m))
    return (tuple(top), frozen)


def canonical_form(q: ExtMatrix) -> tuple[ExtMatrix, tuple[int, ...]]:
    """Canonical representative of the iso-class plus a witness
    relabelling taking q to it."""
    if q.n > CANONICAL_MAX_N:
        raise QuiverError(f"canonicalization capped at n <= {CANONICAL_MAX_N}")
    canon_rows, order = _kernels.canonical_min(q.rows, q.n, q.m)
    canon = ExtMatrix._trusted(q.n, q.m, canon_rows)
    # order[new] = old; the witness maps old labels to new ones
    sigma = [0] * q.n
    for new, old in enumerate(order):
        sigma[old] = new + 1
    return canon, tuple(sigma)


def matrix_key(q: ExtMatrix) -> bytes:
    """Byte key of the matrix exactly as labelled (no canonicalization)."""
    body = ";".join(",".join(str(e) for e in row) for row in q.rows)
    return f"{q.n}|{q.m}|{body}".encode()


def canonical_key(q: ExtMatrix) -> bytes:
    """Stable byte key identifying the iso-class under mutable
    relabelling.  Equal keys iff is_isomorphic finds a witness."""
    canon, _ = canonical_form(q)
    return matrix_key(canon)
