"""Diagram constructors: braid closures, pretzels, orientation changes.

These produce PD codes in the oriented convention used by
:mod:`altlink.diagram` starting from planar data whose strands are not yet
oriented.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from .diagram import LinkDiagram, from_code

__all__ = [
    "orient_code",
    "braid_closure",
    "pretzel",
    "reverse_components",
    "relabel",
    "random_braid_diagram",
]


def orient_code(
    rows: Sequence[Sequence[int]],
    reverse: Iterable[int] = (),
    known: set[tuple[int, int]] | None = None,
) -> list[tuple[int, int, int, int]]:
    return _oriented(rows, reverse, known)[0]


def _oriented(rows, reverse=(), known=None):
    """Orient an unoriented PD code.

    Each row lists four arc labels counterclockwise, starting at *an* end of
    the under-strand (either end).  Components are oriented by walking from
    their lowest arc label; indices in ``reverse`` (components numbered in
    order of their lowest label) are walked the other way.  Rows are rotated
    so slot 0 is the incoming under-arc, and arcs are relabelled 1..2m along
    the components.  ``known``, if given, is the set of (crossing, slot)
    pairs already known to be incoming; it fixes every component's direction.
    """
    rows = [tuple(r) for r in rows]
    ends: dict[int, list[tuple[int, int]]] = {}
    for c, row in enumerate(rows):
        for s, a in enumerate(row):
            ends.setdefault(a, []).append((c, s))
    reverse = set(reverse)
    incoming: dict[tuple[int, int], bool] = {}
    order: list[int] = []
    comp = 0
    for start in sorted(ends):
        if any(e in incoming for e in ends[start]):
            continue
        tail, head = sorted(ends[start])
        if known is not None and tail in known:
            tail, head = head, tail
        if comp in reverse:
            tail, head = head, tail
        comp += 1
        a = start
        while True:
            order.append(a)
            incoming[tail] = False
            incoming[head] = True
            c, s = head
            nxt = (c, (s + 2) % 4)
            if nxt in incoming:
                break
            a = rows[c][nxt[1]]
            e1, e2 = ends[a]
            tail, head = (e1, e2) if e1 == nxt else (e2, e1)
    new_label = {a: i + 1 for i, a in enumerate(order)}
    out, flags = [], []
    for c, row in enumerate(rows):
        f = tuple(incoming[c, s] for s in range(4))
        if not f[0]:
            row, f = row[2:] + row[:2], f[2:] + f[:2]
        out.append(tuple(new_label[a] for a in row))
        flags.append(f)
    return out, flags


def braid_closure(word: Sequence[int], strands: int | None = None) -> LinkDiagram:
    """Closure of a braid word; ``i`` is sigma_i and ``-i`` its inverse.

    Positive letters give positive crossings.
    """
    if not word:
        raise ValueError("empty braid word")
    if strands is None:
        strands = max(abs(g) for g in word) + 1
    label = list(range(1, strands + 1))
    start = list(label)
    nxt = strands + 1
    rows = []
    known = set()
    for g in word:
        i = abs(g) - 1
        if not 0 <= i < strands - 1:
            raise ValueError(f"generator {g} out of range for {strands} strands")
        a, b = label[i], label[i + 1]
        out_l, out_r = nxt, nxt + 1
        nxt += 2
        # strands move upward; a enters bottom-left, b bottom-right
        c = len(rows)
        if g > 0:
            rows.append((b, out_r, out_l, a))
            known |= {(c, 0), (c, 3)}
        else:
            rows.append((a, b, out_r, out_l))
            known |= {(c, 0), (c, 1)}
        label[i], label[i + 1] = out_l, out_r
    alias = {end: s for end, s in zip(label, start)}
    rows = [tuple(alias.get(x, x) for x in r) for r in rows]
    return from_code(*_oriented(rows, known=known))


def pretzel(params: Sequence[int], reverse: Iterable[int] = ()) -> LinkDiagram:
    """Standard pretzel diagram P(p_1, ..., p_k), each |p_i| >= 1.

    Column i is a vertical twist of |p_i| crossings; the sign of p_i picks
    which diagonal passes over.  For an all-odd pretzel knot, positive
    parameters give positive crossings.
    """
    if len(params) < 2 or any(p == 0 for p in params):
        raise ValueError("pretzel needs at least two nonzero parameters")
    counter = iter(range(1, 10**9))
    rows = []
    columns = []  # (bottom-left, bottom-right, top-left, top-right) labels
    for p in params:
        bl, br = next(counter), next(counter)
        left, right = bl, br
        for _ in range(abs(p)):
            nw, ne = next(counter), next(counter)
            # corners ccw: SW, SE, NE, NW; SW-NE and SE-NW are the strands
            if p < 0:
                rows.append((right, ne, nw, left))
            else:
                rows.append((left, right, ne, nw))
            left, right = nw, ne
        columns.append([bl, br, left, right])
    k = len(columns)
    alias: dict[int, int] = {}

    def join(x, y):
        alias[y] = x

    for i in range(k - 1):
        join(columns[i][3], columns[i + 1][2])
        join(columns[i][1], columns[i + 1][0])
    join(columns[0][2], columns[k - 1][3])
    join(columns[0][0], columns[k - 1][1])
    rows = [tuple(alias.get(x, x) for x in r) for r in rows]
    return from_code(*_oriented(rows, reverse))


def reverse_components(d: LinkDiagram, which: Iterable[int]) -> LinkDiagram:
    """Reverse the orientation of the listed components (indices into
    ``d.components``)."""
    which = set(which)
    flipped = {a for i in which for a in d.components[i]}
    order = []
    for i, comp in enumerate(d.components):
        order.extend(reversed(comp) if i in which else comp)
    new_label = {a: k + 1 for k, a in enumerate(order)}
    rows, flags = [], []
    for x in d.crossings:
        row, f = x.slots, list(x.incoming)
        for s in range(4):
            if row[s] in flipped:
                f[s] = not f[s]
        if row[0] in flipped:
            row, f = row[2:] + row[:2], f[2:] + f[:2]
        rows.append(tuple(new_label[a] for a in row))
        flags.append(tuple(f))
    return from_code(rows, flags)


def relabel(d: LinkDiagram, rng: random.Random) -> LinkDiagram:
    """Renumber arcs and shuffle crossing order without changing the diagram.

    Labels stay consecutive along each component, with a random starting
    arc and component order.
    """
    comps = list(d.components)
    rng.shuffle(comps)
    order = []
    for comp in comps:
        k = rng.randrange(len(comp))
        order.extend(comp[k:] + comp[:k])
    mapping = {a: i + 1 for i, a in enumerate(order)}
    rows = [(tuple(mapping[a] for a in x.slots), x.incoming) for x in d.crossings]
    rng.shuffle(rows)
    return from_code([r for r, _ in rows], [f for _, f in rows])


def random_braid_diagram(
    rng: random.Random, max_strands: int = 4, max_length: int = 8
) -> LinkDiagram:
    """A random connected braid-closure diagram, possibly re-oriented."""
    n = rng.randint(2, max_strands)
    length = rng.randint(n - 1, max(n - 1, max_length))
    word = [rng.choice((1, -1)) * g for g in range(1, n)]
    word += [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length - len(word))]
    rng.shuffle(word)
    d = braid_closure(word, n)
    if d.n_components > 1 and rng.random() < 0.5:
        flips = [i for i in range(d.n_components) if rng.random() < 0.5]
        d = reverse_components(d, flips)
    return relabel(d, rng)
