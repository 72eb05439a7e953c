"""Symbolic path-algebra layer: potentials, cyclic derivatives and the
Ginzburg graded quiver.

Paths are stored in written (right-to-left composition) order: the path
"cba" is the tuple ("c", "b", "a") and acts by a first, then b, then c;
a product p*q requires s(p) = t(q).  Unlike the exchange-matrix side,
quivers here may have loops and 2-cycles, and arrows carry degrees
(non-positive integers).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

class PathAlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int
    degree: int = 0


@dataclass(frozen=True)
class PathQuiver:
    """Finite graded quiver with named arrows, vertices 1..vertex_count."""

    vertex_count: int
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise PathAlgebraError("vertex count must be non-negative")
        names = set()
        for a in self.arrows:
            if not (1 <= a.source <= self.vertex_count):
                raise PathAlgebraError(f"arrow {a.name}: source {a.source} out of range")
            if not (1 <= a.target <= self.vertex_count):
                raise PathAlgebraError(f"arrow {a.name}: target {a.target} out of range")
            if a.name in names:
                raise PathAlgebraError(f"duplicate arrow name {a.name!r}")
            if a.degree > 0:
                raise PathAlgebraError(f"arrow {a.name}: degree must be <= 0")
            names.add(a.name)

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise PathAlgebraError(f"unknown arrow {name!r}")

    def has_arrow(self, name: str) -> bool:
        return any(a.name == name for a in self.arrows)


@dataclass(frozen=True)
class Path:
    """A composable path; empty ``arrows`` is the trivial path e_source."""

    source: int
    target: int
    arrows: tuple[str, ...]

    def is_trivial(self) -> bool:
        return not self.arrows

    def is_cycle(self) -> bool:
        return bool(self.arrows) and self.source == self.target

    def text(self) -> str:
        if not self.arrows:
            return f"e{self.source}"
        return ".".join(self.arrows)


def trivial_path(vertex: int) -> Path:
    return Path(vertex, vertex, ())


def make_path(quiver: PathQuiver, names) -> Path:
    """Build and validate a path from arrow names in written order."""
    names = tuple(names)
    if not names:
        raise PathAlgebraError("a non-trivial path needs at least one arrow; use trivial_path")
    arrows = [quiver.arrow(nm) for nm in names]
    for left, right in zip(arrows, arrows[1:]):
        if left.source != right.target:
            raise PathAlgebraError(
                f"arrows {left.name!r} and {right.name!r} do not compose: "
                f"s({left.name}) = {left.source} but t({right.name}) = {right.target}"
            )
    return Path(arrows[-1].source, arrows[0].target, names)


def path_degree(quiver: PathQuiver, p: Path) -> int:
    return sum(quiver.arrow(nm).degree for nm in p.arrows)


class PathExpr:
    """Finite integer combination of composable paths; immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Path, int] | None = None):
        self._terms = {p: c for p, c in (terms or {}).items() if c != 0}

    @classmethod
    def zero(cls) -> "PathExpr":
        return cls()

    @classmethod
    def of(cls, p: Path, coeff: int = 1) -> "PathExpr":
        return cls({p: coeff})

    def items(self):
        return iter(sorted(self._terms.items(), key=lambda t: (t[0].arrows, t[0].source)))

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "PathExpr") -> "PathExpr":
        terms = dict(self._terms)
        for p, c in other._terms.items():
            v = terms.get(p, 0) + c
            if v:
                terms[p] = v
            else:
                terms.pop(p, None)
        return PathExpr(terms)

    def __neg__(self) -> "PathExpr":
        return PathExpr({p: -c for p, c in self._terms.items()})

    def __sub__(self, other: "PathExpr") -> "PathExpr":
        return self + (-other)

    def scale(self, k: int) -> "PathExpr":
        return PathExpr({p: k * c for p, c in self._terms.items()})

    def __mul__(self, other: "PathExpr") -> "PathExpr":
        """Bilinear extension of path concatenation; non-composable
        products vanish."""
        terms: dict[Path, int] = {}
        for p, cp in self._terms.items():
            for q, cq in other._terms.items():
                if p.source != q.target:
                    continue
                prod = Path(q.source, p.target, p.arrows + q.arrows)
                v = terms.get(prod, 0) + cp * cq
                if v:
                    terms[prod] = v
                else:
                    terms.pop(prod, None)
        return PathExpr(terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, PathExpr) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for p, c in self.items():
            body = p.text() if abs(c) == 1 else f"{abs(c)}*{p.text()}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"PathExpr({self.text()!r})"


def check_potential(quiver: PathQuiver, w: PathExpr) -> None:
    """A potential is a combination of non-trivial cycles."""
    for p, _ in w.items():
        if not p.is_cycle():
            raise PathAlgebraError(f"potential term {p.text()!r} is not a non-trivial cycle")
        make_path(quiver, p.arrows)  # re-validates composability


def cyclic_derivative(quiver: PathQuiver, w: PathExpr, rho: str) -> PathExpr:
    """d/d rho of a potential: sum of vu over decompositions c = u rho v
    of each cycle, coefficients carried through, extended linearly."""
    arrow = quiver.arrow(rho)
    check_potential(quiver, w)
    out = PathExpr.zero()
    for cycle, coeff in w.items():
        for idx, nm in enumerate(cycle.arrows):
            if nm != rho:
                continue
            u = cycle.arrows[:idx]
            v = cycle.arrows[idx + 1 :]
            vu = v + u
            if vu:
                term = make_path(quiver, vu)
            else:
                term = trivial_path(arrow.target)  # = source, the cycle was rho alone
            out = out + PathExpr.of(term, coeff)
    return out


@dataclass(frozen=True)
class GinzburgQuiver:
    """The graded double: original arrows (degree 0), reversed starred
    arrows (degree -1), one loop per vertex (degree -2), with the
    differential value attached to every arrow."""

    quiver: PathQuiver
    differential: dict[str, PathExpr] = field(compare=False)

    def d(self, name: str) -> PathExpr:
        if name not in self.differential:
            raise PathAlgebraError(f"unknown arrow {name!r}")
        return self.differential[name]


def star_name(name: str) -> str:
    return name + "*"


def loop_name(i: int) -> str:
    return f"t{i}"


def ginzburg(quiver: PathQuiver, w: PathExpr) -> GinzburgQuiver:
    """Ginzburg graded quiver of (Q, W) with its differential values:
    d(rho) = 0, d(rho*) = cyclic derivative of W by rho, and
    d(t_i) = e_i (sum over arrows of rho rho* - rho* rho) e_i."""
    for a in quiver.arrows:
        if a.degree != 0:
            raise PathAlgebraError("ginzburg() expects an ungraded (degree-0) quiver")
    check_potential(quiver, w)

    arrows = list(quiver.arrows)
    reserved = {a.name for a in quiver.arrows}
    for a in quiver.arrows:
        sn = star_name(a.name)
        if sn in reserved:
            raise PathAlgebraError(f"arrow name {sn!r} collides with the starred double")
        reserved.add(sn)
        arrows.append(Arrow(sn, a.target, a.source, -1))
    for i in range(1, quiver.vertex_count + 1):
        ln = loop_name(i)
        if ln in reserved:
            raise PathAlgebraError(f"arrow name {ln!r} collides with the degree -2 loops")
        reserved.add(ln)
        arrows.append(Arrow(ln, i, i, -2))
    tilde = PathQuiver(quiver.vertex_count, tuple(arrows))

    differential: dict[str, PathExpr] = {}
    for a in quiver.arrows:
        differential[a.name] = PathExpr.zero()
        differential[star_name(a.name)] = cyclic_derivative(quiver, w, a.name)
    for i in range(1, quiver.vertex_count + 1):
        val = PathExpr.zero()
        for a in quiver.arrows:
            rho = PathExpr.of(make_path(tilde, (a.name,)))
            rho_star = PathExpr.of(make_path(tilde, (star_name(a.name),)))
            if a.target == i:
                val = val + rho * rho_star
            if a.source == i:
                val = val - rho_star * rho
        differential[loop_name(i)] = val

    _check_differential(tilde, differential)
    return GinzburgQuiver(tilde, differential)


def _check_differential(tilde: PathQuiver, differential: dict[str, PathExpr]) -> None:
    # every value raises degree by exactly 1 and runs parallel to its arrow
    for name, val in differential.items():
        a = tilde.arrow(name)
        for p, _ in val.items():
            if path_degree(tilde, p) != a.degree + 1:
                raise PathAlgebraError(
                    f"d({name}) term {p.text()} has degree {path_degree(tilde, p)},"
                    f" expected {a.degree + 1}"
                )
            if (p.source, p.target) != (a.source, a.target):
                raise PathAlgebraError(
                    f"d({name}) term {p.text()} runs {p.source}->{p.target},"
                    f" expected {a.source}->{a.target}"
                )


def jacobian_presentation(quiver: PathQuiver, w: PathExpr) -> list[PathExpr]:
    """The relations cutting out the Jacobian algebra: the nonzero cyclic
    derivatives of the potential, one per arrow."""
    check_potential(quiver, w)
    out = []
    for a in quiver.arrows:
        rel = cyclic_derivative(quiver, w, a.name)
        if not rel.is_zero():
            out.append(rel)
    return out


# text format: summands "k*a.b.c" joined by + and -

_TERM_RE = re.compile(r"^(?:(\d+)\*)?([A-Za-z_][\w]*(?:\.[A-Za-z_][\w]*)*)$")


def parse_potential(quiver: PathQuiver, text: str) -> PathExpr:
    """Parse the potential text format: integer-weighted dot-separated
    cycles, e.g. ``c.b.a - 2*f.e.d``."""
    text = text.strip()
    if not text or text == "0":
        return PathExpr.zero()
    out = PathExpr.zero()
    pos = 0
    sign = 1
    # leading sign
    if text[0] in "+-":
        sign = -1 if text[0] == "-" else 1
        pos = 1
    while pos < len(text):
        nxt_plus = text.find("+", pos)
        nxt_minus = text.find("-", pos)
        ends = [e for e in (nxt_plus, nxt_minus) if e != -1]
        end = min(ends) if ends else len(text)
        chunk = text[pos:end].strip()
        match = _TERM_RE.match(chunk)
        if not match:
            raise PathAlgebraError(f"cannot parse potential term {chunk!r}")
        coeff = int(match.group(1)) if match.group(1) else 1
        path = make_path(quiver, match.group(2).split("."))
        if not path.is_cycle():
            raise PathAlgebraError(f"potential term {chunk!r} is not a cycle")
        out = out + PathExpr.of(path, sign * coeff)
        if end == len(text):
            break
        sign = -1 if text[end] == "-" else 1
        pos = end + 1
    return out
