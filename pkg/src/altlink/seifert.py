"""Seifert circles, the spaces they cut out of the sphere, and their census.

Smoothing a crossing along the orientation cuts off its E and W quadrants
and joins N to S, so the components of the sphere minus the Seifert circles
are unions of faces glued at every crossing through its N/S pair.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import LinkDiagram

__all__ = [
    "SeifertCircle",
    "Space",
    "SpaceCensus",
    "seifert_circles",
    "seifert_spaces",
    "is_alternative",
    "euler_characteristic_seifert",
]


@dataclass(frozen=True)
class SeifertCircle:
    id: int
    arcs: tuple[int, ...]


@dataclass(frozen=True)
class Space:
    regions: tuple[int, ...]
    crossings: tuple[int, ...]
    sign: str  # "+", "-", "empty" or "mixed"

    def to_json(self) -> dict:
        return {"regions": list(self.regions), "crossings": list(self.crossings), "sign": self.sign}


@dataclass(frozen=True)
class SpaceCensus:
    spaces: tuple[Space, ...]
    s: int
    c: int
    c_plus: int
    c_minus: int
    r: int
    r_plus: int
    r_minus: int

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "c": self.c,
            "c_plus": self.c_plus,
            "c_minus": self.c_minus,
            "r": self.r,
            "r_plus": self.r_plus,
            "r_minus": self.r_minus,
            "spaces": [sp.to_json() for sp in self.spaces],
        }


def seifert_circles(d: LinkDiagram) -> list[SeifertCircle]:
    """Cycles of arcs after orientation-respecting smoothing."""
    succ = {}
    for a in d.arcs:
        c, s = d.arc_ends[a][1]
        x = d.crossings[c]
        # under-in continues along over-out, over-in along under-out
        out_slot = (x.over_in + 2) % 4 if s == 0 else 2
        succ[a] = x.slots[out_slot]
    seen: set[int] = set()
    circles = []
    for start in d.arcs:
        if start in seen:
            continue
        cyc = []
        a = start
        while a not in seen:
            seen.add(a)
            cyc.append(a)
            a = succ[a]
        circles.append(SeifertCircle(len(circles), tuple(cyc)))
    return circles


def seifert_spaces(d: LinkDiagram, empty_sign: str = "+") -> SpaceCensus:
    """Union-find of faces through each crossing's N/S quadrants.

    Spaces with no crossings are counted on the ``empty_sign`` side of the
    c/r split; each holds a single face, so r_± - c_± does not depend on it.
    """
    if empty_sign not in ("+", "-"):
        raise ValueError("empty_sign must be '+' or '-'")
    parent = list(range(len(d.faces)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in d.crossings:
        a, b = find(d.face_of(x.id, x.south)), find(d.face_of(x.id, x.north))
        if a != b:
            parent[max(a, b)] = min(a, b)

    groups: dict[int, list[int]] = {}
    for f in range(len(d.faces)):
        groups.setdefault(find(f), []).append(f)
    members: dict[int, list[int]] = {root: [] for root in groups}
    for x in d.crossings:
        members[find(d.face_of(x.id, x.south))].append(x.id)

    spaces = []
    for root in sorted(groups):
        xs = members[root]
        signs = {d.crossings[i].sign for i in xs}
        if not signs:
            sign = "empty"
        elif len(signs) == 2:
            sign = "mixed"
        else:
            sign = "+" if signs == {1} else "-"
        spaces.append(Space(tuple(groups[root]), tuple(xs), sign))

    def side(sp: Space) -> str:
        return empty_sign if sp.sign == "empty" else sp.sign

    plus = [sp for sp in spaces if side(sp) == "+"]
    minus = [sp for sp in spaces if side(sp) == "-"]
    return SpaceCensus(
        spaces=tuple(spaces),
        s=len(seifert_circles(d)),
        c=len(spaces),
        c_plus=len(plus),
        c_minus=len(minus),
        r=len(d.faces),
        r_plus=sum(len(sp.regions) for sp in plus),
        r_minus=sum(len(sp.regions) for sp in minus),
    )


def is_alternative(d: LinkDiagram, census: SpaceCensus | None = None) -> tuple[bool, Space | None]:
    """Whether every space has crossings of a single sign.

    Returns ``(True, None)`` or ``(False, first_mixed_space)``.
    """
    census = census or seifert_spaces(d)
    for sp in census.spaces:
        if sp.sign == "mixed":
            return False, sp
    return True, None


def euler_characteristic_seifert(d: LinkDiagram) -> int:
    """Euler characteristic s - m of the Seifert-algorithm surface."""
    return len(seifert_circles(d)) - d.m
