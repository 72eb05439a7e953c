"""Cluster seeds with principal coefficients.

A seed pairs an ice quiver (n mutable + n frozen vertices) with the n
mutable cluster variables, stored fully expanded as Laurent polynomials
in the 2n initial variables.  The frozen variables x_{n+1}..x_{2n} are
implicit monomials and never mutate.
"""

from __future__ import annotations

from dataclasses import dataclass

from greenseq.laurent import LaurentPoly, laurent_div_exact
from greenseq.quiver import ExtMatrix, QuiverError, framed, mutate

Rows = tuple[tuple[int, ...], ...]


class NotHomogeneous(ValueError):
    """Input is not homogeneous for the principal-coefficients grading."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness  # pair of (exps, degree) disagreeing


@dataclass(frozen=True)
class Seed:
    quiver: ExtMatrix
    vars: tuple[LaurentPoly, ...]

    def __post_init__(self):
        if self.quiver.m != self.quiver.n:
            raise QuiverError("seed quiver must have one frozen vertex per mutable one")
        if len(self.vars) != self.quiver.n:
            raise QuiverError("seed needs one variable per mutable vertex")
        if len(set(self.vars)) != len(self.vars):
            raise QuiverError("cluster variables must be pairwise distinct")


def initial_seed(q: ExtMatrix) -> Seed:
    """The seed (x_1,..,x_n; framed(q)) of a mutable-only quiver."""
    n = q.n
    return Seed(framed(q), tuple(LaurentPoly.variable(n, i) for i in range(1, n + 1)))


def mutate_seed(s: Seed, i: int) -> Seed:
    """Exchange relation at mutable vertex i (1-based):
    the new variable is (prod over arrows out of i + prod over arrows
    into i) / old variable, products with multiplicity, frozen endpoints
    contributing the frozen variables x_{n+1}..x_{2n}."""
    q = s.quiver
    n = q.n
    if not (1 <= i <= n):
        raise QuiverError(f"mutation index {i} out of range 1..{n}")
    k = i - 1
    out_prod = LaurentPoly.const(n, 1)
    in_prod = LaurentPoly.const(n, 1)
    for j in range(n):
        b = q.rows[k][j]
        if b > 0:
            out_prod = out_prod * s.vars[j] ** b
        elif b < 0:
            in_prod = in_prod * s.vars[j] ** (-b)
    for f in range(n):
        b = q.rows[n + f][k]
        if b > 0:  # arrows frozen -> i
            in_prod = in_prod * LaurentPoly.variable(n, n + f + 1) ** b
        elif b < 0:  # arrows i -> frozen
            out_prod = out_prod * LaurentPoly.variable(n, n + f + 1) ** (-b)
    new_var = laurent_div_exact(out_prod + in_prod, s.vars[k])
    new_vars = list(s.vars)
    new_vars[k] = new_var
    return Seed(mutate(q, i), tuple(new_vars))


def mutate_seed_seq(s: Seed, seq) -> Seed:
    for i in seq:
        s = mutate_seed(s, i)
    return s


def cluster_fingerprint(s: Seed) -> tuple[str, ...]:
    """Order-free canonical serialization of the cluster (the n mutable
    variables); seeds with equal fingerprints carry the same cluster."""
    return tuple(sorted(v.text() for v in s.vars))


def _seed_fingerprint(s: Seed) -> tuple:
    """Cluster fingerprint plus the quiver relabelled by the variable
    sort order; equal clusters must yield equal values (a seed is
    determined by its cluster)."""
    order = sorted(range(s.quiver.n), key=lambda j: s.vars[j].text())
    n, m = s.quiver.n, s.quiver.m
    top = tuple(
        tuple(s.quiver.rows[order[a]][order[b]] for b in range(n)) for a in range(n)
    )
    bottom = tuple(
        tuple(s.quiver.rows[n + f][order[b]] for b in range(n)) for f in range(m)
    )
    return (cluster_fingerprint(s), top + bottom)


class ClusterConsistencyError(AssertionError):
    """Two distinct seeds carried the same cluster (should be impossible)."""


@dataclass(frozen=True)
class ClusterEnumeration:
    seeds: tuple[Seed, ...]
    complete: bool


def enumerate_clusters(q: ExtMatrix, max_seeds: int = 1000) -> ClusterEnumeration:
    """BFS over seed mutation from the initial seed, deduplicating by the
    set of cluster variables."""
    if q.m != 0:
        raise QuiverError("enumerate_clusters() expects a quiver without frozen vertices")
    if q.n < 1:
        raise QuiverError("enumerate_clusters() needs a mutable vertex")
    start = initial_seed(q)
    seen: dict[tuple[str, ...], tuple] = {cluster_fingerprint(start): _seed_fingerprint(start)}
    seeds = [start]
    complete = True
    frontier = [start]
    while frontier and complete:
        next_frontier = []
        for s in frontier:
            for i in range(1, q.n + 1):
                nxt = mutate_seed(s, i)
                fp = cluster_fingerprint(nxt)
                if fp in seen:
                    if seen[fp] != _seed_fingerprint(nxt):
                        raise ClusterConsistencyError(
                            f"distinct seeds share the cluster {fp}"
                        )
                    continue
                if len(seeds) >= max_seeds:
                    # a class was refused, so the run is already truncated;
                    # stop before the variables grow further
                    return ClusterEnumeration(tuple(seeds), False)
                seen[fp] = _seed_fingerprint(nxt)
                seeds.append(nxt)
                next_frontier.append(nxt)
        frontier = next_frontier
    return ClusterEnumeration(tuple(seeds), complete)


def g_vector(p: LaurentPoly, b_top: Rows) -> tuple[int, ...]:
    """Degree of a homogeneous Laurent polynomial under the grading
    deg(x_i) = e_i, deg(x_{n+i}) = -(column i of the initial top block).
    Raises NotHomogeneous with a witness pair otherwise."""
    n = p.n
    if p.is_zero():
        raise NotHomogeneous("the zero polynomial has no degree")
    deg = None
    deg_witness = None
    for exps, _ in p.items():
        d = [exps[i] for i in range(n)]
        for i in range(n):
            e = exps[n + i]
            if e:
                for r in range(n):
                    d[r] -= e * b_top[r][i]
        d = tuple(d)
        if deg is None:
            deg, deg_witness = d, exps
        elif d != deg:
            raise NotHomogeneous(
                f"monomial degrees differ: {deg_witness} has degree {deg}, {exps} has degree {d}",
                witness=((deg_witness, deg), (exps, d)),
            )
    return deg


def f_polynomial(p: LaurentPoly) -> LaurentPoly:
    """Specialize x_1 = .. = x_n = 1 and read x_{n+i} as y_i.

    The result is supported on the frozen slots; render it with
    y-names via ``f_text``."""
    n = p.n
    terms: dict[tuple[int, ...], int] = {}
    for exps, coeff in p.items():
        e = (0,) * n + exps[n:]
        c = terms.get(e, 0) + coeff
        if c:
            terms[e] = c
        else:
            terms.pop(e, None)
    return LaurentPoly(n, terms)


def f_text(f: LaurentPoly) -> str:
    names = [f"x{i + 1}" for i in range(f.n)] + [f"y{i + 1}" for i in range(f.n)]
    return f.text(names)


def y_hat(b_top: Rows, i: int) -> LaurentPoly:
    """The monomial x_{n+i} * prod_j x_j^{b_ji} (1-based i)."""
    n = len(b_top)
    exps = [b_top[j][i - 1] for j in range(n)] + [0] * n
    exps[n + i - 1] = 1
    return LaurentPoly.monomial(n, exps)


def separation_product(b_top: Rows, g: tuple[int, ...], f: LaurentPoly) -> LaurentPoly:
    """x^g * F(y_1 -> y_hat_1, ..).  F must be supported on frozen slots."""
    n = len(b_top)
    hats = [y_hat(b_top, i) for i in range(1, n + 1)]
    total = LaurentPoly.zero(n)
    for exps, coeff in f.items():
        if any(exps[i] for i in range(n)):
            raise ValueError("F-polynomial must only involve the y variables")
        term = LaurentPoly.const(n, coeff)
        for i in range(n):
            d = exps[n + i]
            if d:
                term = term * hats[i] ** d
        total = total + term
    g_mono = LaurentPoly.monomial(n, tuple(g) + (0,) * n)
    return g_mono * total


def verify_separation(
    p: LaurentPoly, b_top: Rows, g: tuple[int, ...], f: LaurentPoly
) -> bool:
    """Does p equal x^g * F(y_hat) as a Laurent polynomial?"""
    return separation_product(b_top, g, f) == p
