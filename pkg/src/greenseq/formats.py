"""Stable file formats shared by the CLI, the HTTP service and the tests.

All schemas are JSON with a reserved version field ``"v": 1`` (omitted on
input for convenience, always written on output).  Serialization is
canonical: sorted keys, compact separators, integers only.  Schemas are
documented in docs/formats.md.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path
from typing import Any

from greenseq.cluster import Seed
from greenseq.exchange import GraphVertex, GreenSequenceReport, OrientedExchangeGraph
from greenseq.laurent import LaurentPoly
from greenseq.potential import Arrow, GinzburgQuiver, PathQuiver, PathExpr
from greenseq.quiver import ExtMatrix, QuiverError, VertexColor, colors


class FormatError(ValueError):
    """Schema violation with a field diagnostic."""


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _expect(doc: dict, field: str, kind, where: str):
    if field not in doc:
        raise FormatError(f"{where}: missing field {field!r}")
    value = doc[field]
    if kind is int and isinstance(value, bool):
        raise FormatError(f"{where}: field {field!r} must be an integer")
    if not isinstance(value, kind):
        raise FormatError(f"{where}: field {field!r} has wrong type {type(value).__name__}")
    return value


def _check_version(doc: dict, where: str):
    if "v" in doc and doc["v"] != 1:
        raise FormatError(f"{where}: unsupported format version {doc['v']!r}")


# quiver

def quiver_to_obj(q: ExtMatrix) -> dict:
    return {"v": 1, "n": q.n, "m": q.m, "b": [list(row) for row in q.rows]}


def quiver_from_obj(doc: Any, where: str = "quiver") -> ExtMatrix:
    if not isinstance(doc, dict):
        raise FormatError(f"{where}: expected an object")
    _check_version(doc, where)
    n = _expect(doc, "n", int, where)
    m = _expect(doc, "m", int, where)
    b = _expect(doc, "b", list, where)
    for r, row in enumerate(b):
        if not isinstance(row, list) or not all(
            isinstance(e, int) and not isinstance(e, bool) for e in row
        ):
            raise FormatError(f"{where}: row {r + 1} of 'b' must be a list of integers")
    try:
        return ExtMatrix.from_rows(n, m, b)
    except QuiverError as exc:
        raise FormatError(f"{where}: {exc}") from exc


def serialize_quiver(q: ExtMatrix) -> str:
    return dumps(quiver_to_obj(q))


def parse_quiver(text: str) -> ExtMatrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"quiver: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    return quiver_from_obj(doc)


# laurent polynomials

def laurent_to_obj(p: LaurentPoly) -> list:
    return [[coeff, list(exps)] for exps, coeff in p.items()]


def laurent_from_obj(doc: Any, n: int, where: str = "laurent") -> LaurentPoly:
    if not isinstance(doc, list):
        raise FormatError(f"{where}: expected a list of [coeff, exps] pairs")
    terms: dict[tuple[int, ...], int] = {}
    for t, pair in enumerate(doc):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not isinstance(pair[0], int)
            or not isinstance(pair[1], list)
        ):
            raise FormatError(f"{where}: term {t + 1} must be [coeff, [exps]]")
        exps = tuple(pair[1])
        if exps in terms:
            raise FormatError(f"{where}: duplicate exponent vector in term {t + 1}")
        terms[exps] = pair[0]
    try:
        return LaurentPoly(n, terms)
    except ValueError as exc:
        raise FormatError(f"{where}: {exc}") from exc


# seeds

def seed_to_obj(s: Seed) -> dict:
    return {
        "v": 1,
        "quiver": quiver_to_obj(s.quiver),
        "vars": [laurent_to_obj(v) for v in s.vars],
    }


def seed_from_obj(doc: Any, where: str = "seed") -> Seed:
    if not isinstance(doc, dict):
        raise FormatError(f"{where}: expected an object")
    _check_version(doc, where)
    quiver = quiver_from_obj(_expect(doc, "quiver", dict, where), f"{where}.quiver")
    raw_vars = _expect(doc, "vars", list, where)
    vars_ = tuple(
        laurent_from_obj(rv, quiver.n, f"{where}.vars[{i}]")
        for i, rv in enumerate(raw_vars)
    )
    try:
        return Seed(quiver, vars_)
    except QuiverError as exc:
        raise FormatError(f"{where}: {exc}") from exc


def serialize_seed(s: Seed) -> str:
    return dumps(seed_to_obj(s))


def parse_seed(text: str) -> Seed:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"seed: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    return seed_from_obj(doc)


# exchange graphs

def graph_to_obj(g: OrientedExchangeGraph) -> dict:
    return {
        "v": 1,
        "vertices": [
            {"key": v.key.decode("ascii"), "b": [list(row) for row in v.rep.rows]}
            for v in g.vertices
        ],
        "edges": [[src, dst, i] for src, dst, i in g.edges],
        "complete": g.complete,
    }


def graph_from_obj(doc: Any, where: str = "graph") -> OrientedExchangeGraph:
    if not isinstance(doc, dict):
        raise FormatError(f"{where}: expected an object")
    _check_version(doc, where)
    raw_vertices = _expect(doc, "vertices", list, where)
    raw_edges = _expect(doc, "edges", list, where)
    complete = _expect(doc, "complete", bool, where)
    vertices = []
    for i, rv in enumerate(raw_vertices):
        if not isinstance(rv, dict):
            raise FormatError(f"{where}: vertex {i} must be an object")
        key = _expect(rv, "key", str, f"{where}.vertices[{i}]")
        b = _expect(rv, "b", list, f"{where}.vertices[{i}]")
        try:
            n_str, m_str, _ = key.split("|", 2)
            n, m = int(n_str), int(m_str)
        except ValueError as exc:
            raise FormatError(f"{where}: vertex {i} has a malformed key") from exc
        rep = ExtMatrix.from_rows(n, m, b)
        vertices.append(GraphVertex(key.encode("ascii"), rep))
    edges = []
    for i, re_ in enumerate(raw_edges):
        if not (isinstance(re_, list) and len(re_) == 3 and all(isinstance(x, int) for x in re_)):
            raise FormatError(f"{where}: edge {i} must be [src, dst, vertex]")
        edges.append(tuple(re_))
    return OrientedExchangeGraph(tuple(vertices), tuple(edges), complete)


def serialize_graph(g: OrientedExchangeGraph) -> str:
    return dumps(graph_to_obj(g))


def parse_graph(text: str) -> OrientedExchangeGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"graph: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    return graph_from_obj(doc)


# green-sequence reports

def report_to_obj(r: GreenSequenceReport) -> dict:
    return {
        "v": 1,
        "sequences": [list(s) for s in r.sequences],
        "exhausted": r.exhausted,
        "frontier_remaining": r.frontier_remaining,
    }


def report_from_obj(doc: Any, where: str = "report") -> GreenSequenceReport:
    if not isinstance(doc, dict):
        raise FormatError(f"{where}: expected an object")
    _check_version(doc, where)
    seqs = _expect(doc, "sequences", list, where)
    return GreenSequenceReport(
        tuple(tuple(s) for s in seqs),
        _expect(doc, "exhausted", bool, where),
        _expect(doc, "frontier_remaining", int, where),
    )


# path quivers / ginzburg output

def path_quiver_to_obj(q: PathQuiver) -> dict:
    return {
        "v": 1,
        "vertices": q.vertex_count,
        "arrows": [
            {"name": a.name, "source": a.source, "target": a.target, "degree": a.degree}
            for a in q.arrows
        ],
    }


def path_quiver_from_obj(doc: Any, where: str = "path-quiver") -> PathQuiver:
    if not isinstance(doc, dict):
        raise FormatError(f"{where}: expected an object")
    _check_version(doc, where)
    count = _expect(doc, "vertices", int, where)
    raw = _expect(doc, "arrows", list, where)
    arrows = []
    for i, ra in enumerate(raw):
        if not isinstance(ra, dict):
            raise FormatError(f"{where}: arrow {i} must be an object")
        arrows.append(
            Arrow(
                _expect(ra, "name", str, f"{where}.arrows[{i}]"),
                _expect(ra, "source", int, f"{where}.arrows[{i}]"),
                _expect(ra, "target", int, f"{where}.arrows[{i}]"),
                ra.get("degree", 0),
            )
        )
    try:
        return PathQuiver(count, tuple(arrows))
    except ValueError as exc:
        raise FormatError(f"{where}: {exc}") from exc


def parse_path_quiver(text: str) -> PathQuiver:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(
            f"path-quiver: invalid JSON at line {exc.lineno}: {exc.msg}"
        ) from exc
    return path_quiver_from_obj(doc)


def ginzburg_to_obj(g: GinzburgQuiver) -> dict:
    return {
        "v": 1,
        "vertices": g.quiver.vertex_count,
        "arrows": [
            {
                "name": a.name,
                "source": a.source,
                "target": a.target,
                "degree": a.degree,
                "differential": g.d(a.name).text(),
            }
            for a in g.quiver.arrows
        ],
    }


# DOT export

_COLOR_STYLE = {
    VertexColor.GREEN: "color=green2 fontcolor=black",
    VertexColor.RED: "color=red2 fontcolor=black",
    VertexColor.NEITHER: "color=grey fontcolor=black",
}


def quiver_to_dot(q: ExtMatrix) -> str:
    lines = ["digraph quiver {"]
    cols = colors(q)
    for i in range(q.n):
        style = _COLOR_STYLE[cols[i]]
        lines.append(f'  v{i + 1} [label="{i + 1}" shape=circle style=filled {style}];')
    for f in range(q.m):
        lines.append(
            f'  v{q.n + f + 1} [label="{q.n + f + 1}" shape=box style=filled color=lightblue];'
        )
    for i in range(q.n + q.m):
        for j in range(q.n):
            c = q.rows[i][j]
            if c > 0:
                lines.append(f'  v{i + 1} -> v{j + 1} [label="{c}"];')
            elif c < 0 and i >= q.n:
                lines.append(f'  v{j + 1} -> v{i + 1} [label="{-c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_dot(g: OrientedExchangeGraph) -> str:
    lines = ["digraph exchange {"]
    for i, v in enumerate(g.vertices):
        lines.append(f'  c{i} [label="{i}" shape=circle];')
    for src, dst, k in g.edges:
        lines.append(f'  c{src} -> c{dst} [label="{k}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(obj) -> str:
    if isinstance(obj, ExtMatrix):
        return quiver_to_dot(obj)
    if isinstance(obj, OrientedExchangeGraph):
        return graph_to_dot(obj)
    raise FormatError(f"cannot render {type(obj).__name__} as DOT")


# workspace

_KIND_SERIALIZERS = {
    "quiver": (quiver_to_obj, quiver_from_obj),
    "seed": (seed_to_obj, seed_from_obj),
    "graph": (graph_to_obj, graph_from_obj),
    "report": (report_to_obj, report_from_obj),
}


def atomic_write_text(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=str(path.parent), prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


class Workspace:
    """A directory of named quivers, seeds and exploration results with a
    manifest; every write is atomic (write-temp-then-rename)."""

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self.manifest_path = self.root / "manifest.json"
        if self.manifest_path.exists():
            doc = json.loads(self.manifest_path.read_text())
            _check_version(doc, "manifest")
            self.entries: dict[str, dict] = doc.get("entries", {})
        else:
            self.entries = {}

    def _flush(self) -> None:
        atomic_write_text(
            self.manifest_path, dumps({"v": 1, "entries": self.entries})
        )

    def save(self, name: str, kind: str, value) -> Path:
        if kind not in _KIND_SERIALIZERS:
            raise FormatError(f"unknown workspace kind {kind!r}")
        if not name or "/" in name or name.startswith("."):
            raise FormatError(f"bad workspace entry name {name!r}")
        to_obj, _ = _KIND_SERIALIZERS[kind]
        filename = f"{name}.{kind}.json"
        atomic_write_text(self.root / filename, dumps(to_obj(value)))
        self.entries[name] = {"kind": kind, "file": filename}
        self._flush()
        return self.root / filename

    def load(self, name: str):
        if name not in self.entries:
            raise FormatError(f"no workspace entry named {name!r}")
        meta = self.entries[name]
        _, from_obj = _KIND_SERIALIZERS[meta["kind"]]
        doc = json.loads((self.root / meta["file"]).read_text())
        return from_obj(doc)

    def kind_of(self, name: str) -> str:
        if name not in self.entries:
            raise FormatError(f"no workspace entry named {name!r}")
        return self.entries[name]["kind"]

    def names(self) -> list[str]:
        return sorted(self.entries)
