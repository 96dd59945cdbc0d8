"""Exact rational plane geometry for line arrangements.

Lines are affine rational lines a*x + b*y = c.  All predicates run over
``fractions.Fraction``; there is no floating point anywhere, so coincidence
detection (several lines through one point) is exact rather than a tolerance
judgement call.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations


class ArrangementError(ValueError):
    """Parse or construction failure, tagged with a stable error code."""

    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class Line:
    """The line a*x + b*y = c, normalized so the first nonzero of (a, b) is 1."""

    a: Fraction
    b: Fraction
    c: Fraction

    @staticmethod
    def make(a, b, c) -> "Line":
        a, b, c = Fraction(a), Fraction(b), Fraction(c)
        if a == 0 and b == 0:
            raise ArrangementError("degenerate-line", f"degenerate line 0*x + 0*y = {c}")
        lead = a if a != 0 else b
        return Line(a / lead, b / lead, c / lead)

    def value_at(self, x: Fraction, y: Fraction) -> Fraction:
        return self.a * x + self.b * y - self.c

    def contains(self, x: Fraction, y: Fraction) -> bool:
        return self.value_at(x, y) == 0

    @property
    def is_vertical(self) -> bool:
        return self.b == 0

    @property
    def slope(self) -> Fraction:
        if self.b == 0:
            raise ValueError("vertical line has no slope")
        return -self.a / self.b

    def __str__(self):
        return f"{self.a}*x + {self.b}*y = {self.c}"


@dataclass(frozen=True)
class Arrangement:
    """An ordered collection of pairwise distinct lines."""

    lines: tuple

    def __len__(self):
        return len(self.lines)

    def __iter__(self):
        return iter(self.lines)


def _parse_rational(token: str, lineno: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ArrangementError(
            "malformed-rational", f"line {lineno}: cannot parse rational {token!r}"
        ) from None


def parse_arrangement(text: str) -> Arrangement:
    """Parse the arrangement file format.

    One line per arrangement line, three whitespace-separated rational tokens
    ``a b c`` meaning a*x + b*y = c.  ``#`` starts a comment, blank lines are
    skipped.  Lines are normalized; the file order is preserved.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        tokens = body.split()
        if len(tokens) != 3:
            raise ArrangementError(
                "malformed-rational",
                f"line {lineno}: expected 3 tokens, got {len(tokens)}",
            )
        a, b, c = (_parse_rational(t, lineno) for t in tokens)
        line = Line.make(a, b, c)
        if line in lines:
            raise ArrangementError("duplicate-line", f"line {lineno}: duplicate of {line}")
        lines.append(line)
    return Arrangement(tuple(lines))


@dataclass(frozen=True)
class IntersectionPoint:
    x: Fraction
    y: Fraction
    incident: tuple  # sorted 1-based line indices
    multiplicity: int


@dataclass(frozen=True)
class IntersectionLattice:
    points: tuple
    n: int  # number of lines
    p: int  # number of multiple points (multiplicity >= 3)


def _intersect(l1: Line, l2: Line):
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        return None  # parallel (or equal, which Arrangement forbids)
    x = (l1.c * l2.b - l2.c * l1.b) / det
    y = (l1.a * l2.c - l2.a * l1.c) / det
    return x, y


def compute_lattice(arr: Arrangement) -> IntersectionLattice:
    """All pairwise intersections, merged exactly into lattice points.

    Parallel pairs contribute no point.  Indices in ``incident`` are 1-based
    positions in the arrangement's line order.
    """
    if len(arr) == 0:
        raise ArrangementError("empty-arrangement", "arrangement has no lines")
    seen = {}
    for (i, l1), (j, l2) in combinations(enumerate(arr.lines, 1), 2):
        pt = _intersect(l1, l2)
        if pt is None:
            continue
        seen.setdefault(pt, set()).update((i, j))
    points = tuple(
        IntersectionPoint(x, y, tuple(sorted(inc)), len(inc))
        for (x, y), inc in sorted(seen.items())
    )
    p = sum(1 for pt in points if pt.multiplicity >= 3)
    return IntersectionLattice(points, len(arr), p)


@dataclass(frozen=True)
class MultipleGraph:
    """The graph on multiple points: edges are the segments between
    consecutive multiple points along each line that carries at least two of
    them."""

    vertices: tuple  # indices into lattice.points
    edges: tuple     # pairs (v1, v2) of vertex ids, tagged with the line index
    betti: int


def multiple_point_graph(lat: IntersectionLattice) -> MultipleGraph:
    vertices = tuple(i for i, pt in enumerate(lat.points) if pt.multiplicity >= 3)
    vset = set(vertices)
    edges = []
    for line_idx in range(1, lat.n + 1):
        on_line = [i for i in vertices if line_idx in lat.points[i].incident]
        if len(on_line) < 2:
            continue
        on_line.sort(key=lambda i: _line_param(lat.points[i]))
        for u, v in zip(on_line, on_line[1:]):
            edges.append((u, v, line_idx))
    betti = _betti(vertices, edges)
    return MultipleGraph(vertices, tuple(edges), betti)


def _line_param(pt: IntersectionPoint):
    # Lexicographic (x, y) is a valid order along any single line: on a
    # non-vertical line x is strictly monotone; on a vertical one x is constant
    # and y is strictly monotone.
    return (pt.x, pt.y)


def _betti(vertices, edges) -> int:
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v, _ in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    components = len({find(v) for v in vertices})
    return len(edges) - len(vertices) + components


def graph_betti(g: MultipleGraph) -> int:
    """First Betti number |E| - |V| + #components; zero exactly for forests."""
    return g.betti
