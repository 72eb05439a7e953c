"""Command-line front door.

Subcommands: mutate, explore, green-seqs, clusters, cmat, gmat,
ginzburg, verify, serve.  Exit codes: 0 success, 1 domain error, 2 usage
error.  Errors go to stderr with a machine-parsable prefix
(``error[domain]:`` / ``error[usage]:``).  Data output is deterministic:
identical invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

from greenseq import cluster as cl
from greenseq import exchange as ex
from greenseq import formats as fmt
from greenseq import potential as pot
from greenseq import tropical as tr
from greenseq.laurent import NonExactDivision
from greenseq.quiver import ExtMatrix, QuiverError, colors, framed, mutate

class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc.strerror}") from exc


def _load_quiver(path: str) -> ExtMatrix:
    try:
        return fmt.parse_quiver(_read_text(path))
    except fmt.FormatError as exc:
        raise DomainError(str(exc)) from exc


def _parse_seq(text: str, n: int) -> list[int]:
    try:
        seq = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise UsageError(f"bad mutation sequence {text!r}: {exc}") from exc
    for k in seq:
        if not (1 <= k <= n):
            raise UsageError(f"mutation index {k} out of range 1..{n}")
    return seq


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        fmt.atomic_write_text(Path(args.output), text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _matrix_lines(mat) -> str:
    width = max((len(str(e)) for row in mat for e in row), default=1)
    return "\n".join(" ".join(str(e).rjust(width) for e in row) for row in mat)


def _jobs(args) -> int:
    if args.jobs is not None:
        return max(1, args.jobs)
    env = os.environ.get("GREENSEQ_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError as exc:
            raise UsageError(f"GREENSEQ_JOBS must be an integer, got {env!r}") from exc
    return os.cpu_count() or 1


def cmd_mutate(args) -> int:
    q = _load_quiver(args.file)
    if q.m == 0 and args.frame:
        q = framed(q)
    seq = _parse_seq(args.k, q.n)
    for k in seq:
        q = mutate(q, k)
    if args.json:
        _emit(args, fmt.serialize_quiver(q))
    elif args.dot:
        _emit(args, fmt.export_dot(q))
    else:
        lines = [str(q)]
        if q.m:
            lines.append("colors: " + " ".join(c.value for c in colors(q)))
        _emit(args, "\n".join(lines))
    return 0


def cmd_explore(args) -> int:
    q = _load_quiver(args.file)
    if q.m != 0:
        raise DomainError("explore expects a quiver without frozen vertices")
    g = ex.explore(
        q,
        args.max_vertices,
        args.max_depth,
        jobs=_jobs(args),
        identify_isomorphic=not args.raw,
    )
    if args.json:
        _emit(args, fmt.serialize_graph(g))
        return 0
    if args.dot:
        _emit(args, fmt.export_dot(g))
        return 0
    lines = [
        f"classes: {len(g.vertices)}",
        f"edges: {len(g.edges)}",
        f"complete: {str(g.complete).lower()}",
    ]
    sources, sinks = ex.sources_and_sinks(g)
    if g.complete:
        lines.append(
            "source: "
            + " ".join(str(s) for s in sources)
            + (" (the framed quiver)" if sources == [0] else "")
        )
        sink_names = []
        for s in sinks:
            tag = " (the coframed quiver)" if g.vertices[s].key == ex.sink_class_key(q) else ""
            sink_names.append(f"{s}{tag}")
        lines.append("sink: " + (" ".join(sink_names) if sink_names else "none"))
    _emit(args, "\n".join(lines))
    return 0


def cmd_green_seqs(args) -> int:
    q = _load_quiver(args.file)
    if q.m != 0:
        raise DomainError("green-seqs expects a quiver without frozen vertices")
    report = ex.maximal_green_sequences(q, args.max_len, args.max_entry)
    if args.json:
        _emit(args, fmt.dumps(fmt.report_to_obj(report)))
        return 0
    lines = [" ".join(str(i) for i in seq) for seq in report.sequences]
    lines.append(f"count: {len(report.sequences)}")
    lines.append(f"exhausted: {str(report.exhausted).lower()}")
    if not report.exhausted:
        lines.append(f"cut branches: {report.frontier_remaining}")
    _emit(args, "\n".join(lines))
    return 0


def cmd_clusters(args) -> int:
    q = _load_quiver(args.file)
    if q.m != 0:
        raise DomainError("clusters expects a quiver without frozen vertices")
    try:
        enum = cl.enumerate_clusters(q, args.max_seeds)
    except NonExactDivision as exc:
        raise DomainError(f"exchange relation failed: {exc}") from exc
    if args.json:
        doc = {
            "v": 1,
            "complete": enum.complete,
            "clusters": [
                sorted(v.text() for v in s.vars) for s in enum.seeds
            ],
        }
        _emit(args, fmt.dumps(doc))
        return 0
    lines = []
    for s in enum.seeds:
        lines.append("{ " + ", ".join(sorted(v.fraction_text() for v in s.vars)) + " }")
    lines.append(f"count: {len(enum.seeds)}")
    lines.append(f"complete: {str(enum.complete).lower()}")
    _emit(args, "\n".join(lines))
    return 0


def _trajectory(args):
    q = _load_quiver(args.file)
    if q.m != 0:
        raise DomainError("trajectories start from an unframed quiver")
    seq = _parse_seq(args.seq, q.n) if args.seq else []
    return q, tr.trajectory(q, seq)


def cmd_cmat(args) -> int:
    _, states = _trajectory(args)
    if args.json:
        _emit(args, fmt.dumps({"v": 1, "cmatrices": [[list(r) for r in c] for _, c, _ in states]}))
        return 0
    blocks = [_matrix_lines(c) for _, c, _ in states]
    _emit(args, "\n\n".join(blocks))
    return 0


def cmd_gmat(args) -> int:
    _, states = _trajectory(args)
    if args.json:
        _emit(args, fmt.dumps({"v": 1, "gmatrices": [[list(r) for r in g] for _, _, g in states]}))
        return 0
    blocks = [_matrix_lines(g) for _, _, g in states]
    _emit(args, "\n\n".join(blocks))
    return 0


def cmd_ginzburg(args) -> int:
    try:
        pq = fmt.parse_path_quiver(_read_text(args.file))
        w = pot.parse_potential(pq, args.potential)
        g = pot.ginzburg(pq, w)
    except (fmt.FormatError, pot.PathAlgebraError) as exc:
        raise DomainError(str(exc)) from exc
    if args.json:
        _emit(args, fmt.dumps(fmt.ginzburg_to_obj(g)))
        return 0
    lines = []
    for a in g.quiver.arrows:
        lines.append(
            f"{a.name}: {a.source} -> {a.target}  degree {a.degree}  d = {g.d(a.name).text()}"
        )
    _emit(args, "\n".join(lines))
    return 0


def cmd_verify(args) -> int:
    q = _load_quiver(args.file)
    if q.m != 0:
        raise DomainError("verify expects a quiver without frozen vertices")
    rng = random.Random(args.seed)
    results: list[tuple[str, bool, str]] = []

    g = ex.explore(q, args.max_vertices, args.max_depth, jobs=_jobs(args))
    if g.complete:
        report = ex.verify_exchange_axioms(g)
        for check in report.checks:
            results.append((f"axiom {check.name}", check.passed, check.witness))
    else:
        results.append(
            (
                "axiom checks",
                True,
                f"skipped: class not exhausted within limits ({len(g.vertices)} classes)",
            )
        )

    ok_traj = True
    witness = ""
    for _ in range(args.trajectories):
        seq = [rng.randint(1, q.n) for _ in range(args.depth)]
        for state, c, gmat in tr.trajectory(q, seq):
            coherent, bad = tr.check_sign_coherence(c)
            if not coherent:
                ok_traj, witness = False, f"column {bad} after {seq}"
                break
            if tr.tropical_dual(gmat) != c:
                ok_traj, witness = False, f"duality broken after {seq}"
                break
            if c != tr.c_matrix_of(state):
                ok_traj, witness = False, f"c-extraction mismatch after {seq}"
                break
        if not ok_traj:
            break
    results.append(("sign-coherence and tropical duality", ok_traj, witness))

    ok_sep = True
    witness = ""
    if q.n <= args.symbolic_cap:
        try:
            enum = cl.enumerate_clusters(q, args.max_seeds)
            for s in enum.seeds:
                for v in s.vars:
                    gvec = cl.g_vector(v, q.rows)
                    fpol = cl.f_polynomial(v)
                    if not cl.verify_separation(v, q.rows, gvec, fpol):
                        ok_sep, witness = False, v.text()
                        break
                if not ok_sep:
                    break
        except (NonExactDivision, cl.NotHomogeneous) as exc:
            ok_sep, witness = False, str(exc)
        results.append(("laurent / separation identity", ok_sep, witness))
    else:
        results.append(
            ("laurent / separation identity", True, f"skipped: n > {args.symbolic_cap}")
        )

    lines = []
    failed = False
    for name, passed, note in results:
        status = "PASS" if passed else "FAIL"
        failed = failed or not passed
        lines.append(f"{status} {name}" + (f" ({note})" if note else ""))
    _emit(args, "\n".join(lines))
    return 1 if failed else 0


def cmd_serve(args) -> int:
    import uvicorn

    from greenseq.service import create_app

    app = create_app(data_dir=args.data_dir, ui_dir=args.ui_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="greenseq",
        description="ice-quiver mutation, exchange graphs and green sequences",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, jobs=False):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("-o", "--output", help="write output to a file instead of stdout")
        if jobs:
            p.add_argument(
                "--jobs",
                type=int,
                default=None,
                help="worker threads (default: GREENSEQ_JOBS or all cores)",
            )

    p = sub.add_parser("mutate", help="apply a mutation sequence to a quiver")
    p.add_argument("file", help="quiver JSON file")
    p.add_argument("-k", required=True, help="comma-separated 1-based vertex sequence")
    p.add_argument("--frame", action="store_true", help="frame the quiver first")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of a grid")
    add_common(p)
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("explore", help="enumerate the oriented exchange graph")
    p.add_argument("file")
    p.add_argument("--max-vertices", type=int, default=10_000)
    p.add_argument("--max-depth", type=int, default=10_000)
    p.add_argument("--dot", action="store_true")
    p.add_argument(
        "--raw",
        action="store_true",
        help="keep the label-distinguishing graph (no isomorphism dedup)",
    )
    add_common(p, jobs=True)
    p.set_defaults(func=cmd_explore)

    p = sub.add_parser("green-seqs", help="search for maximal green sequences")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, default=ex.DEFAULT_MAX_LEN)
    p.add_argument("--max-entry", type=int, default=ex.DEFAULT_MAX_ENTRY)
    add_common(p)
    p.set_defaults(func=cmd_green_seqs)

    p = sub.add_parser("clusters", help="enumerate clusters of the principal seed")
    p.add_argument("file")
    p.add_argument("--max-seeds", type=int, default=1000)
    add_common(p)
    p.set_defaults(func=cmd_clusters)

    for name, func in (("cmat", cmd_cmat), ("gmat", cmd_gmat)):
        p = sub.add_parser(name, help=f"{name[0]}-matrices along a mutation sequence")
        p.add_argument("file")
        p.add_argument("--seq", default="", help="comma-separated 1-based vertex sequence")
        add_common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("ginzburg", help="Ginzburg graded quiver of (Q, W)")
    p.add_argument("file", help="path-quiver JSON file")
    p.add_argument("--potential", default="0", help="potential in text form, e.g. 'c.b.a'")
    add_common(p)
    p.set_defaults(func=cmd_ginzburg)

    p = sub.add_parser("verify", help="axioms + duality + separation suite")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized runs")
    p.add_argument("--max-vertices", type=int, default=2000)
    p.add_argument("--max-depth", type=int, default=64)
    p.add_argument("--max-seeds", type=int, default=60)
    p.add_argument("--trajectories", type=int, default=25)
    p.add_argument("--depth", type=int, default=10)
    p.add_argument("--symbolic-cap", type=int, default=6)
    add_common(p, jobs=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP workbench service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8777)
    p.add_argument("--data-dir", default=None, help="session persistence directory")
    p.add_argument("--ui-dir", default=None, help="static workbench files to serve at /")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error[usage]: {exc}", file=sys.stderr)
        return 2
    except (DomainError, QuiverError, fmt.FormatError, NonExactDivision) as exc:
        print(f"error[domain]: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
