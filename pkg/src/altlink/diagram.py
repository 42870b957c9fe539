"""Oriented link diagrams from PD codes.

A PD code lists, for each crossing, the four incident arc labels in
counterclockwise order starting with the incoming under-strand.  Slot 0 is
therefore the incoming under-arc and slot 2 the outgoing under-arc; the
over-strand occupies slots 1 and 3.

Quadrant (corner) ``q`` of a crossing is the sector between slots ``q`` and
``q + 1``.  Faces are recovered from this rotation system alone: walking
out of corner ``q`` along slot ``q + 1`` lands in corner ``s`` of the
crossing at the far end, where ``s`` is the slot we arrive through.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    ArcMultiplicityError,
    ColoringError,
    DisconnectedDiagram,
    EmbeddingError,
    EmptyDiagram,
    OrientationInconsistency,
    PDSyntaxError,
    UnknownEdge,
)

__all__ = [
    "Crossing",
    "Region",
    "LinkDiagram",
    "DecoratedDiagram",
    "parse_pd",
    "from_code",
    "trace_components",
    "crossing_signs",
    "compute_faces",
    "checkerboard",
    "decorate",
    "mirror",
    "format_pd",
]

Code = tuple[tuple[int, int, int, int], ...]
Corner = tuple[int, int]

BLACK = "black"
WHITE = "white"


@dataclass(frozen=True)
class Crossing:
    id: int
    slots: tuple[int, int, int, int]
    sign: int
    # incoming[s] is True when the arc at slot s points into the crossing
    incoming: tuple[bool, bool, bool, bool]

    @property
    def over_in(self) -> int:
        """Slot of the incoming over-strand (1 or 3)."""
        return 1 if self.incoming[1] else 3

    # Quadrant indices by class.  S lies between the two incoming slots,
    # N between the two outgoing ones, E to the right of the under-strand.
    @property
    def south(self) -> int:
        return 0 if self.over_in == 1 else 3

    @property
    def north(self) -> int:
        return (self.south + 2) % 4

    @property
    def east(self) -> int:
        return (self.south + 1) % 4

    @property
    def west(self) -> int:
        return (self.south + 3) % 4


@dataclass(frozen=True)
class Region:
    id: int
    boundary: tuple[Corner, ...]
    color: str


@dataclass(frozen=True)
class LinkDiagram:
    code: Code
    crossings: tuple[Crossing, ...]
    arcs: tuple[int, ...]
    faces: tuple[Region, ...]
    components: tuple[tuple[int, ...], ...]
    corner_face: dict = field(repr=False, compare=False)
    arc_ends: dict = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.crossings)

    @property
    def n_components(self) -> int:
        return len(self.components)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(x.sign for x in self.crossings)

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    def face_of(self, crossing: int, quadrant: int) -> int:
        return self.corner_face[crossing, quadrant % 4]

    def other_end(self, crossing: int, slot: int) -> Corner:
        a, b = self.arc_ends[self.code[crossing][slot]]
        return b if a == (crossing, slot) else a

    def to_json(self) -> dict:
        return {
            "crossings": [list(x.slots) for x in self.crossings],
            "arcs": list(self.arcs),
            "faces": [
                {"id": f.id, "color": f.color, "corners": [list(c) for c in f.boundary]}
                for f in self.faces
            ],
            "components": [list(c) for c in self.components],
            "signs": list(self.signs),
            "writhe": self.writhe,
        }


@dataclass(frozen=True)
class DecoratedDiagram:
    diagram: LinkDiagram
    marked_edge: int
    region_a: int  # black face flanking the marked edge
    region_b: int  # white face flanking the marked edge

    @property
    def marked(self) -> frozenset[int]:
        return frozenset((self.region_a, self.region_b))


_TOKEN_RE = re.compile(r"X\s*[\(\[]([^\)\]]*)[\)\]]")


def _parse_text(text: str) -> list[tuple[int, ...]]:
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise PDSyntaxError(f"invalid JSON PD code: {exc}") from None
        return [_check_tuple(row, i) for i, row in enumerate(data)]
    rows = []
    pos = 0
    for m in _TOKEN_RE.finditer(stripped):
        gap = stripped[pos:m.start()]
        if gap.strip(" \t\r\n,"):
            raise PDSyntaxError(f"unexpected text {gap.strip()!r} in PD code")
        parts = [p.strip() for p in m.group(1).split(",")]
        if not all(re.fullmatch(r"\d+", p) for p in parts):
            raise PDSyntaxError(f"malformed crossing token {m.group(0)!r}")
        rows.append(_check_tuple([int(p) for p in parts], len(rows)))
        pos = m.end()
    tail = stripped[pos:]
    if tail.strip(" \t\r\n,"):
        raise PDSyntaxError(f"unexpected text {tail.strip()!r} in PD code")
    return rows


def _check_tuple(row, index: int) -> tuple[int, ...]:
    if not isinstance(row, (list, tuple)) or len(row) != 4:
        raise PDSyntaxError(f"crossing {index} must have exactly 4 arc labels, got {row!r}")
    for a in row:
        if not isinstance(a, int) or isinstance(a, bool) or a <= 0:
            raise PDSyntaxError(f"crossing {index} has a non-positive or non-integer label {a!r}")
    return tuple(row)


def _arc_ends(code: Code) -> dict[int, list[Corner]]:
    ends: dict[int, list[Corner]] = {}
    for c, row in enumerate(code):
        for s, a in enumerate(row):
            ends.setdefault(a, []).append((c, s))
    bad = sorted(a for a, e in ends.items() if len(e) != 2)
    if bad:
        raise ArcMultiplicityError(
            f"arc labels must each appear exactly twice; offending: {bad}"
        )
    return ends


def _check_connected(code: Code, ends: dict[int, list[Corner]]) -> None:
    parent = list(range(len(code)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (c1, _), (c2, _) in ends.values():
        parent[find(c1)] = find(c2)
    if len({find(c) for c in range(len(code))}) > 1:
        raise DisconnectedDiagram("the underlying 4-valent graph is not connected")


def _orient(
    code: Code, ends: dict[int, list[Corner]], known: Sequence[Sequence[bool]] | None = None
) -> list[list[bool]]:
    """Return incoming flags per (crossing, slot) for a PD code.

    ``known`` pins flags that the code alone cannot determine (components
    that only pass over); it is checked for consistency like any other
    constraint.
    """
    head: dict[Corner, bool] = {}
    queue: deque[tuple[Corner, bool]] = deque()
    for c in range(len(code)):
        queue.append(((c, 0), True))
        queue.append(((c, 2), False))
    if known is not None:
        for c, flags in enumerate(known):
            for s, val in enumerate(flags):
                queue.append(((c, s), bool(val)))

    def drain():
        while queue:
            (c, s), val = queue.popleft()
            old = head.get((c, s))
            if old is not None:
                if old != val:
                    raise OrientationInconsistency(
                        f"arc {code[c][s]} at crossing {c} slot {s} must be both "
                        "incoming and outgoing"
                    )
                continue
            head[c, s] = val
            a, b = ends[code[c][s]]
            queue.append((b if a == (c, s) else a, not val))
            if s in (1, 3):
                queue.append(((c, 4 - s), not val))

    drain()
    for c, row in enumerate(code):
        if (c, 1) in head:
            continue
        # over-strand direction is free here; follow label succession
        b, d = row[1], row[3]
        if d == b + 1 or (b > d + 1):
            queue.append(((c, 1), True))
        else:
            queue.append(((c, 3), True))
        drain()
    return [[head[c, s] for s in range(4)] for c in range(len(code))]


def _components(code: Code, incoming, ends) -> tuple[tuple[int, ...], ...]:
    # arc -> head corner
    arc_head = {}
    for a, pair in ends.items():
        for c, s in pair:
            if incoming[c][s]:
                arc_head[a] = (c, s)
    seen: set[int] = set()
    comps = []
    for start in sorted(ends):
        if start in seen:
            continue
        comp = []
        a = start
        while a not in seen:
            seen.add(a)
            comp.append(a)
            c, s = arc_head[a]
            a = code[c][(s + 2) % 4]
        comps.append(tuple(comp))
    return tuple(comps)


def _signs(incoming) -> list[int]:
    # over-strand entering at slot 3 crosses the under-strand left to right
    return [1 if flags[3] else -1 for flags in incoming]


def _face_cycles(code: Code, ends) -> list[tuple[Corner, ...]]:
    def other(c, s):
        a, b = ends[code[c][s]]
        return b if a == (c, s) else a

    seen: set[Corner] = set()
    cycles = []
    for c in range(len(code)):
        for q in range(4):
            if (c, q) in seen:
                continue
            cyc = []
            cur = (c, q)
            while cur not in seen:
                seen.add(cur)
                cyc.append(cur)
                cur = other(cur[0], (cur[1] + 1) % 4)
            cycles.append(tuple(cyc))
    return cycles


def _two_color(n_crossings: int, corner_face: dict[Corner, int], n_faces: int) -> list[str]:
    adj: list[set[int]] = [set() for _ in range(n_faces)]
    for c in range(n_crossings):
        for q in range(4):
            f, g = corner_face[c, q], corner_face[c, (q + 1) % 4]
            if f == g:
                raise ColoringError(f"face {f} lies on both sides of an edge at crossing {c}")
            adj[f].add(g)
            adj[g].add(f)
    colors: list[str | None] = [None] * n_faces
    root = corner_face[0, 0]
    colors[root] = WHITE
    queue = deque([root])
    while queue:
        f = queue.popleft()
        flip = BLACK if colors[f] == WHITE else WHITE
        for g in sorted(adj[f]):
            if colors[g] is None:
                colors[g] = flip
                queue.append(g)
            elif colors[g] != flip:
                raise ColoringError(f"faces {f} and {g} are adjacent but share a color")
    if any(c is None for c in colors):
        raise ColoringError("face adjacency graph is disconnected")
    return colors  # type: ignore[return-value]


def from_code(
    rows: Iterable[Sequence[int]], incoming: Sequence[Sequence[bool]] | None = None
) -> LinkDiagram:
    """Build and validate a :class:`LinkDiagram` from PD 4-tuples.

    ``incoming`` optionally fixes the per-slot orientation flags.
    """
    code: Code = tuple(tuple(r) for r in rows)  # type: ignore[misc]
    if not code:
        raise EmptyDiagram("a PD code needs at least one crossing")
    for i, row in enumerate(code):
        _check_tuple(row, i)
    ends = _arc_ends(code)
    _check_connected(code, ends)
    incoming = _orient(code, ends, incoming)
    signs = _signs(incoming)
    comps = _components(code, incoming, ends)

    cycles = _face_cycles(code, ends)
    m = len(code)
    if len(cycles) != m + 2:
        raise EmbeddingError(
            f"{len(cycles)} faces traced but a planar diagram with {m} crossings has {m + 2}"
        )
    corner_face = {corner: f for f, cyc in enumerate(cycles) for corner in cyc}
    colors = _two_color(m, corner_face, len(cycles))

    arc_ends = {}
    for a, pair in ends.items():
        tail = next(e for e in pair if not incoming[e[0]][e[1]])
        hd = next(e for e in pair if incoming[e[0]][e[1]])
        arc_ends[a] = (tail, hd)

    return LinkDiagram(
        code=code,
        crossings=tuple(
            Crossing(id=c, slots=code[c], sign=signs[c], incoming=tuple(incoming[c]))
            for c in range(m)
        ),
        arcs=tuple(sorted(ends)),
        faces=tuple(Region(id=f, boundary=cyc, color=colors[f]) for f, cyc in enumerate(cycles)),
        components=comps,
        corner_face=corner_face,
        arc_ends=arc_ends,
    )


def parse_pd(text: str) -> LinkDiagram:
    """Parse ``"X(1,4,2,5) X(3,6,4,1) ..."`` or a JSON ``[[a,b,c,d], ...]``."""
    rows = _parse_text(text)
    if not rows:
        raise EmptyDiagram("a PD code needs at least one crossing")
    return from_code(rows)


def format_pd(d: LinkDiagram | Code) -> str:
    code = d.code if isinstance(d, LinkDiagram) else d
    return " ".join("X({},{},{},{})".format(*row) for row in code)


def trace_components(d: LinkDiagram) -> tuple[tuple[tuple[int, ...], ...], list[list[bool]]]:
    """Recompute the component partition and per-slot incoming flags."""
    ends = _arc_ends(d.code)
    incoming = _orient(d.code, ends, [x.incoming for x in d.crossings])
    return _components(d.code, incoming, ends), incoming


def crossing_signs(d: LinkDiagram) -> tuple[list[int], int]:
    _, incoming = trace_components(d)
    signs = _signs(incoming)
    return signs, sum(signs)


def compute_faces(d: LinkDiagram) -> list[tuple[Corner, ...]]:
    cycles = _face_cycles(d.code, _arc_ends(d.code))
    if len(cycles) != d.m + 2:
        raise EmbeddingError(f"expected {d.m + 2} faces, traced {len(cycles)}")
    return cycles


def checkerboard(d: LinkDiagram) -> list[str]:
    return _two_color(d.m, d.corner_face, len(d.faces))


def flanking_faces(d: LinkDiagram, edge: int) -> tuple[int, int]:
    if edge not in d.arc_ends:
        raise UnknownEdge(f"arc {edge} does not occur in the diagram")
    c, s = d.arc_ends[edge][0]
    return d.face_of(c, s - 1), d.face_of(c, s)


def decorate(d: LinkDiagram, edge: int | None = None) -> DecoratedDiagram:
    """Mark ``edge`` (default: lowest arc label) and record its two faces."""
    if edge is None:
        edge = d.arcs[0]
    f, g = flanking_faces(d, edge)
    if f == g:
        raise ColoringError(f"arc {edge} has the same face on both sides")
    if d.faces[f].color == BLACK:
        return DecoratedDiagram(d, edge, f, g)
    return DecoratedDiagram(d, edge, g, f)


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Swap over and under at every crossing; the planar picture and the
    orientation are kept."""
    rows, flags = [], []
    for x in d.crossings:
        k = x.over_in
        rows.append(tuple(x.slots[(k + i) % 4] for i in range(4)))
        flags.append(tuple(x.incoming[(k + i) % 4] for i in range(4)))
    return from_code(rows, flags)
