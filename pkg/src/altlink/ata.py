"""Kauffman's Alternative Tree Algorithm on the Tait graphs.

For each color the algorithm grows an oriented spanning tree of the Tait
graph from the marked region: first a maximal out-tree inside the graph of
N/S edges (each oriented toward its +1/2 corner), then, while vertices
remain, any unused crossing edge leaving the current tree is oriented
outward and a fresh maximal out-tree is grown from its far end.  Every
branch of every choice is explored.  A black tree and a white tree whose
crossing sets are complementary give one Kauffman state: each crossing
takes the corner its edge points to.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .algebra import HalfInt
from .diagram import BLACK, WHITE, DecoratedDiagram
from .errors import ATAInternalError, InconsistentCensus, NotAlternative
from .seifert import SpaceCensus, is_alternative, seifert_spaces
from .states import CLASS_ORDER, KauffmanState, classify_quadrants, state_from_corners

__all__ = [
    "TaitEdge",
    "TaitGraph",
    "OrientedForest",
    "build_tait_graphs",
    "color_trees",
    "ata_enumerate",
    "gr_max_formula",
    "fil_max_formula",
]


@dataclass(frozen=True)
class TaitEdge:
    crossing: int
    corners: tuple[int, int]
    regions: tuple[int, int]
    kind: str  # "NS" or "EW"
    target: int | None  # pre-orientation: corner with local fil +1/2, NS edges only

    @property
    def is_loop(self) -> bool:
        return self.regions[0] == self.regions[1]

    def corner_at(self, region: int) -> int:
        return self.corners[self.regions.index(region)]

    def to_json(self) -> dict:
        return {
            "crossing": self.crossing,
            "regions": list(self.regions),
            "kind": self.kind,
            "target_region": None if self.target is None else self.regions[self.corners.index(self.target)],
        }


@dataclass(frozen=True)
class TaitGraph:
    color: str
    root: int
    vertices: tuple[int, ...]
    edges: tuple[TaitEdge, ...]

    def to_json(self) -> dict:
        return {
            "color": self.color,
            "root": self.root,
            "vertices": list(self.vertices),
            "edges": [e.to_json() for e in self.edges],
        }


@dataclass(frozen=True)
class OrientedForest:
    color: str
    # (crossing, target region, corner) per chosen edge
    edges: tuple[tuple[int, int, int], ...]
    roots: tuple[int, ...]

    @property
    def crossings(self) -> frozenset[int]:
        return frozenset(e[0] for e in self.edges)


def _require_alternative(dd: DecoratedDiagram) -> None:
    ok, space = is_alternative(dd.diagram)
    if not ok:
        raise NotAlternative(
            f"space with regions {list(space.regions)} mixes crossing signs"
        )


def build_tait_graphs(dd: DecoratedDiagram) -> tuple[TaitGraph, TaitGraph]:
    _require_alternative(dd)
    d = dd.diagram
    edges: dict[str, list[TaitEdge]] = {BLACK: [], WHITE: []}
    for x in d.crossings:
        classes = classify_quadrants(d, x.id)
        for a, b in ((x.north, x.south), (x.east, x.west)):
            kind = "NS" if classes[a] in ("N", "S") else "EW"
            target = None
            if kind == "NS":
                target = x.south if x.sign > 0 else x.north
            color = d.faces[d.face_of(x.id, a)].color
            edges[color].append(
                TaitEdge(x.id, (a, b), (d.face_of(x.id, a), d.face_of(x.id, b)), kind, target)
            )
    graphs = []
    for color, root in ((BLACK, dd.region_a), (WHITE, dd.region_b)):
        verts = tuple(f.id for f in d.faces if f.color == color)
        graphs.append(TaitGraph(color, root, verts, tuple(edges[color])))
    return graphs[0], graphs[1]


def _out_trees(root, allowed, directed):
    """All maximal out-trees from ``root`` using ``directed`` edges inside
    ``allowed``.  ``directed`` holds (tail, head, crossing, corner)."""
    reach = {root}
    frontier = [root]
    while frontier:
        v = frontier.pop()
        for tail, head, _, _ in directed:
            if tail == v and head in allowed and head not in reach:
                reach.add(head)
                frontier.append(head)
    others = sorted(reach - {root})
    choices = []
    for v in others:
        cands = [e for e in directed if e[1] == v and e[0] in reach and e[0] != v]
        choices.append(cands)
    trees = []
    for pick in itertools.product(*choices):
        parent = {e[1]: e[0] for e in pick}
        if all(_reaches(v, root, parent) for v in others):
            trees.append((frozenset(reach), tuple(pick)))
    return trees


def _reaches(v, root, parent):
    seen = set()
    while v != root:
        if v in seen:
            return False
        seen.add(v)
        v = parent[v]
    return True


def color_trees(graph: TaitGraph) -> dict[frozenset, OrientedForest]:
    """Every oriented spanning tree the algorithm can produce for one color,
    keyed by its set of (crossing, corner) pairs."""
    all_vertices = frozenset(graph.vertices)
    directed = tuple(
        (e.regions[1 - e.corners.index(e.target)], e.regions[e.corners.index(e.target)], e.crossing, e.target)
        for e in graph.edges
        if e.kind == "NS" and not e.is_loop
    )
    usable = tuple(e for e in graph.edges if not e.is_loop)

    @lru_cache(maxsize=None)
    def grow(inside: frozenset, used: frozenset):
        # completions: frozenset of (crossing, corner, target region) -> roots
        if inside == all_vertices:
            return {frozenset(): ()}
        out: dict[frozenset, tuple] = {}
        outside = all_vertices - inside
        for e in usable:
            if e.crossing in used:
                continue
            r0, r1 = e.regions
            if (r0 in inside) == (r1 in inside):
                continue
            new_root = r1 if r0 in inside else r0
            link = (e.crossing, e.corner_at(new_root), new_root)
            for reach, picks in _out_trees(new_root, outside, directed):
                here = {link} | {(p[2], p[3], p[1]) for p in picks}
                sub = grow(inside | reach, used | {h[0] for h in here})
                for rest, roots in sub.items():
                    key = frozenset(here) | rest
                    cand = (new_root,) + roots
                    if key not in out or cand < out[key]:
                        out[key] = cand
        return out

    results: dict[frozenset, OrientedForest] = {}
    for reach, picks in _out_trees(graph.root, all_vertices, directed):
        here = {(p[2], p[3], p[1]) for p in picks}
        for rest, roots in grow(frozenset(reach), frozenset(h[0] for h in here)).items():
            edges = frozenset(here) | rest
            key = frozenset((c, q) for c, q, _ in edges)
            forest = OrientedForest(
                graph.color,
                tuple(sorted((c, r, q) for c, q, r in edges)),
                (graph.root,) + roots,
            )
            if key not in results or forest.roots < results[key].roots:
                results[key] = forest
    for forest in results.values():
        _check_tree(graph, forest)
    return results


def _check_tree(graph: TaitGraph, forest: OrientedForest) -> None:
    targets = [r for _, r, _ in forest.edges]
    if len(set(targets)) != len(targets) or graph.root in targets:
        raise ATAInternalError(f"{graph.color} tree has two edges into one region or into the root")
    if len(forest.edges) != len(graph.vertices) - 1:
        raise ATAInternalError(f"{graph.color} tree does not span its Tait graph")


def _canonical_key(dd: DecoratedDiagram, state: KauffmanState):
    return tuple(CLASS_ORDER.index(q) for _, _, q in state.assignment)


def ata_enumerate(dd: DecoratedDiagram) -> list[KauffmanState]:
    """States produced by the algorithm, deduplicated, in canonical order."""
    black, white = build_tait_graphs(dd)
    m = dd.diagram.m
    all_crossings = frozenset(range(m))
    white_by_support: dict[frozenset, list[OrientedForest]] = {}
    for forest in color_trees(white).values():
        white_by_support.setdefault(forest.crossings, []).append(forest)

    states = {}
    for bforest in color_trees(black).values():
        for wforest in white_by_support.get(all_crossings - bforest.crossings, ()):
            corners = [None] * m
            for c, _, q in bforest.edges + wforest.edges:
                corners[c] = q
            regions = [r for _, r, _ in bforest.edges + wforest.edges]
            if None in corners or len(set(regions)) != m or dd.marked & set(regions):
                raise ATAInternalError("tree pair does not define a Kauffman state")
            state = state_from_corners(dd, corners)
            states[state.corners] = state
    return sorted(states.values(), key=lambda s: _canonical_key(dd, s))


def gr_max_formula(census: SpaceCensus, n_components: int) -> HalfInt:
    """(|L| - 1)/2 + r_- - c_-."""
    return HalfInt(n_components - 1 + 2 * (census.r_minus - census.c_minus))


def fil_max_formula(census: SpaceCensus, n_components: int) -> HalfInt:
    """(|L| - 1 + r - c)/2, checked against (|L| + 1 + m - c)/2."""
    m = sum(len(sp.crossings) for sp in census.spaces)
    first = HalfInt(n_components - 1 + census.r - census.c)
    second = HalfInt(n_components + 1 + m - census.c)
    if first != second:
        raise InconsistentCensus(f"fil_max forms disagree: {first} vs {second} (r={census.r}, m={m})")
    return first


def census_for(dd: DecoratedDiagram) -> SpaceCensus:
    return seifert_spaces(dd.diagram)
