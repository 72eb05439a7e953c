"""Oriented exchange graphs and maximal green sequences.

The oriented exchange graph of a cluster quiver has one vertex per
isomorphism class of ice quivers reachable from the framed quiver, and
one arrow per green vertex of a class representative.  Enumeration is a
breadth-first search deduplicated by canonical key; green-sequence
search is a depth-first walk of the (unquotiented) mutation tree.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from greenseq.quiver import (
    ExtMatrix,
    QuiverError,
    all_red,
    canonical_form,
    canonical_key,
    coframed,
    framed,
    green_vertices,
    matrix_key,
    mutate,
)

DEFAULT_MAX_LEN = 64
DEFAULT_MAX_ENTRY = 10**6


@dataclass(frozen=True)
class GraphVertex:
    key: bytes
    rep: ExtMatrix  # canonical representative of the iso-class


@dataclass(frozen=True)
class OrientedExchangeGraph:
    vertices: tuple[GraphVertex, ...]
    edges: tuple[tuple[int, int, int], ...]  # (source, target, mutated vertex)
    complete: bool

    def index_of(self, key: bytes) -> int | None:
        for i, v in enumerate(self.vertices):
            if v.key == key:
                return i
        return None

    def out_degree(self, v: int) -> int:
        return sum(1 for e in self.edges if e[0] == v)

    def in_degree(self, v: int) -> int:
        return sum(1 for e in self.edges if e[1] == v)


@dataclass(frozen=True)
class GreenSequenceReport:
    sequences: tuple[tuple[int, ...], ...]
    exhausted: bool
    frontier_remaining: int


def _expand_classes(item: tuple[int, ExtMatrix]):
    idx, rep = item
    results = []
    for i in green_vertices(rep):
        canon, _ = canonical_form(mutate(rep, i))
        results.append((idx, i, canon))
    return results


def _expand_raw(item: tuple[int, ExtMatrix]):
    idx, rep = item
    return [(idx, i, mutate(rep, i)) for i in green_vertices(rep)]


def explore(
    q: ExtMatrix,
    max_vertices: int = 10_000,
    max_depth: int = 10_000,
    jobs: int = 1,
    identify_isomorphic: bool = True,
) -> OrientedExchangeGraph:
    """BFS over iso-classes reachable from framed(q) by green mutations.

    Limits never raise; hitting one is reported as complete=False.  Runs
    are deterministic for fixed limits: each BFS layer is processed in
    key order, regardless of the worker count.

    identify_isomorphic=False keeps the raw label-distinguishing graph
    (one vertex per matrix instead of per iso-class); debugging aid.
    """
    if q.m != 0:
        raise QuiverError("explore() expects a quiver without frozen vertices")
    if q.n < 1:
        raise QuiverError("explore() needs at least one mutable vertex")
    _expand = _expand_classes if identify_isomorphic else _expand_raw
    root = canonical_form(framed(q))[0] if identify_isomorphic else framed(q)
    vertices = [GraphVertex(matrix_key(root), root)]
    index = {vertices[0].key: 0}
    edges: list[tuple[int, int, int]] = []
    complete = True

    layer = [(0, root)]
    depth = 0
    pool = ThreadPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        while layer:
            if depth >= max_depth:
                # unexpanded classes with green vertices remain
                if any(green_vertices(rep) for _, rep in layer):
                    complete = False
                break
            if pool is not None:
                expansions = list(pool.map(_expand, layer))
            else:
                expansions = [_expand(item) for item in layer]

            discovered: dict[bytes, ExtMatrix] = {}
            pending: list[tuple[int, int, bytes]] = []
            for results in expansions:
                for src, i, canon in results:
                    key = matrix_key(canon)
                    if key not in index and key not in discovered:
                        discovered[key] = canon
                    pending.append((src, i, key))

            next_layer = []
            for key in sorted(discovered):
                if len(vertices) >= max_vertices:
                    complete = False
                    break
                idx = len(vertices)
                vertices.append(GraphVertex(key, discovered[key]))
                index[key] = idx
                next_layer.append((idx, discovered[key]))

            for src, i, key in pending:
                dst = index.get(key)
                if dst is None:
                    complete = False  # edge to a class beyond the cap
                else:
                    edges.append((src, dst, i))

            layer = next_layer
            depth += 1
    finally:
        if pool is not None:
            pool.shutdown()
    return OrientedExchangeGraph(tuple(vertices), tuple(edges), complete)


def sources_and_sinks(g: OrientedExchangeGraph) -> tuple[list[int], list[int]]:
    """Vertices of in-degree 0 and of out-degree 0 (vertex indices)."""
    n_v = len(g.vertices)
    indeg = [0] * n_v
    outdeg = [0] * n_v
    for src, dst, _ in g.edges:
        outdeg[src] += 1
        indeg[dst] += 1
    sources = [v for v in range(n_v) if indeg[v] == 0]
    sinks = [v for v in range(n_v) if outdeg[v] == 0]
    return sources, sinks


def maximal_green_sequences(
    q: ExtMatrix,
    max_len: int = DEFAULT_MAX_LEN,
    max_entry: int = DEFAULT_MAX_ENTRY,
) -> GreenSequenceReport:
    """DFS over green mutations from framed(q).

    A branch that reaches an all-red quiver is recorded as a maximal
    green sequence.  Branches are cut when the sequence length exceeds
    max_len or any matrix entry exceeds max_entry in absolute value;
    each cut is counted in frontier_remaining.
    """
    if q.m != 0:
        raise QuiverError("green-sequence search expects no frozen vertices")
    if q.n < 1:
        raise QuiverError("green-sequence search needs a mutable vertex")
    sequences: list[tuple[int, ...]] = []
    cuts = 0

    def walk(state: ExtMatrix, prefix: tuple[int, ...]):
        nonlocal cuts
        greens = green_vertices(state)
        if not greens:
            if all_red(state):
                sequences.append(prefix)
            return
        if len(prefix) >= max_len:
            cuts += 1
            return
        for i in greens:
            nxt = mutate(state, i)
            if any(abs(e) > max_entry for row in nxt.rows for e in row):
                cuts += 1
                continue
            walk(nxt, prefix + (i,))

    walk(framed(q), ())
    return GreenSequenceReport(tuple(sequences), cuts == 0, cuts)


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    passed: bool
    witness: str = ""


@dataclass(frozen=True)
class AxiomReport:
    checks: tuple[AxiomCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)


def verify_exchange_axioms(g: OrientedExchangeGraph) -> AxiomReport:
    """Check the ordered-exchange-graph axioms on a complete graph:
    n-regularity of the underlying graph, acyclicity of the orientation,
    a unique source, and at most one sink."""
    if not g.complete:
        raise QuiverError("axiom checks need a complete exchange graph")
    checks = []

    n = g.vertices[0].rep.n if g.vertices else 0
    degree = [0] * len(g.vertices)
    for src, dst, _ in g.edges:
        degree[src] += 1
        degree[dst] += 1
    bad = [v for v, d in enumerate(degree) if d != n]
    checks.append(
        AxiomCheck(
            "n-regular",
            not bad,
            "" if not bad else f"vertex {bad[0]} has degree {degree[bad[0]]}, expected {n}",
        )
    )

    cycle = _find_cycle(len(g.vertices), g.edges)
    checks.append(
        AxiomCheck(
            "acyclic",
            cycle is None,
            "" if cycle is None else "directed cycle through vertices " + "->".join(map(str, cycle)),
        )
    )

    sources, sinks = sources_and_sinks(g)
    checks.append(
        AxiomCheck(
            "unique-source",
            len(sources) == 1,
            "" if len(sources) == 1 else f"sources: {sources}",
        )
    )
    checks.append(
        AxiomCheck(
            "at-most-one-sink",
            len(sinks) <= 1,
            "" if len(sinks) <= 1 else f"sinks: {sinks}",
        )
    )
    return AxiomReport(tuple(checks))


def _find_cycle(n_vertices: int, edges) -> list[int] | None:
    adj: dict[int, list[int]] = {v: [] for v in range(n_vertices)}
    for src, dst, _ in edges:
        adj[src].append(dst)
    WHITE, GREY, BLACK = 0, 1, 2
    color = [WHITE] * n_vertices
    parent: dict[int, int] = {}
    for start in range(n_vertices):
        if color[start] != WHITE:
            continue
        stack = [(start, iter(adj[start]))]
        color[start] = GREY
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if color[w] == WHITE:
                    color[w] = GREY
                    parent[w] = v
                    stack.append((w, iter(adj[w])))
                    advanced = True
                    break
                if color[w] == GREY:
                    cycle = [w, v]
                    u = v
                    while u != w and u in parent:
                        u = parent[u]
                        cycle.append(u)
                    return list(reversed(cycle))
            if not advanced:
                color[v] = BLACK
                stack.pop()
    return None


def replay_green_sequence(q: ExtMatrix, seq) -> ExtMatrix:
    """Apply a sequence from framed(q), requiring every step green."""
    state = framed(q)
    for pos, i in enumerate(seq):
        if i not in green_vertices(state):
            raise QuiverError(f"step {pos + 1}: vertex {i} is not green")
        state = mutate(state, i)
    return state


def sink_class_key(q: ExtMatrix) -> bytes:
    """Canonical key of the coframed quiver, the only possible sink."""
    return canonical_key(coframed(q))
