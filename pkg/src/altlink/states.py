"""Kauffman states of a decorated diagram, their filtration level and grading.

Local contributions per quadrant class (N between the outgoing arcs, S
between the incoming arcs)::

                 positive   negative
    fil   N        -1/2       +1/2
          S        +1/2       -1/2
          E, W       0          0
    gr    N         -1         +1
          S, E, W    0          0

and a state's totals are ``(|L| - 1)/2`` plus the sum over crossings.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import kernels
from .algebra import HalfInt, LaurentPoly
from .diagram import DecoratedDiagram, LinkDiagram
from .errors import GradingNotInteger

__all__ = [
    "QuadrantClass",
    "KauffmanState",
    "classify_quadrants",
    "local_fil",
    "local_gr",
    "enumerate_states",
    "top_states",
    "state_polynomial",
    "state_from_corners",
    "semantics",
]


class QuadrantClass(str, enum.Enum):
    N = "N"
    S = "S"
    E = "E"
    W = "W"


# emission order of candidate corners at each crossing
CLASS_ORDER = (QuadrantClass.N, QuadrantClass.S, QuadrantClass.E, QuadrantClass.W)

_FIL2 = {
    (1, QuadrantClass.N): -1, (1, QuadrantClass.S): 1,
    (-1, QuadrantClass.N): 1, (-1, QuadrantClass.S): -1,
}
_GR = {(1, QuadrantClass.N): -1, (-1, QuadrantClass.N): 1}


def _check_sign(sign: int) -> None:
    if sign not in (1, -1):
        raise ValueError(f"crossing sign must be +1 or -1, got {sign!r}")


def local_fil(sign: int, q: QuadrantClass) -> HalfInt:
    _check_sign(sign)
    return HalfInt(_FIL2.get((sign, QuadrantClass(q)), 0))


def local_gr(sign: int, q: QuadrantClass) -> HalfInt:
    _check_sign(sign)
    return HalfInt(2 * _GR.get((sign, QuadrantClass(q)), 0))


def classify_quadrants(d: LinkDiagram, crossing: int) -> dict[int, QuadrantClass]:
    x = d.crossings[crossing]
    return {
        x.north: QuadrantClass.N,
        x.south: QuadrantClass.S,
        x.east: QuadrantClass.E,
        x.west: QuadrantClass.W,
    }


@dataclass(frozen=True, order=True)
class KauffmanState:
    corners: tuple[int, ...]  # chosen quadrant per crossing
    assignment: tuple[tuple[int, int, QuadrantClass], ...]  # (crossing, region, class)
    fil: HalfInt
    gr: HalfInt

    def to_json(self) -> dict:
        return {
            "assignment": [[c, r, q.value] for c, r, q in self.assignment],
            "fil": str(self.fil),
            "gr": str(self.gr),
        }


def semantics(d: LinkDiagram) -> str:
    """Knots: states are chain generators.  Links: only the top level means
    anything, so values are tagged accordingly."""
    return "generators" if d.n_components == 1 else "top-level-only"


def _options(dd: DecoratedDiagram) -> list[list[tuple[int, int, int, int]]]:
    d = dd.diagram
    marked = dd.marked
    options = []
    for x in d.crossings:
        by_class = {q: corner for corner, q in classify_quadrants(d, x.id).items()}
        opts = []
        for q in CLASS_ORDER:
            corner = by_class[q]
            region = d.face_of(x.id, corner)
            if region in marked:
                continue
            opts.append((corner, region, _FIL2.get((x.sign, q), 0), _GR.get((x.sign, q), 0)))
        options.append(opts)
    return options


def state_from_corners(dd: DecoratedDiagram, corners) -> KauffmanState:
    """Build a state (with fil/gr) from the chosen quadrant of each crossing."""
    d = dd.diagram
    offset = d.n_components - 1
    fil2 = offset
    gr2 = offset
    assignment = []
    for x, corner in zip(d.crossings, corners):
        q = classify_quadrants(d, x.id)[corner]
        fil2 += _FIL2.get((x.sign, q), 0)
        gr2 += 2 * _GR.get((x.sign, q), 0)
        assignment.append((x.id, d.face_of(x.id, corner), q))
    return KauffmanState(tuple(corners), tuple(assignment), HalfInt(fil2), HalfInt(gr2))


def enumerate_states(dd: DecoratedDiagram) -> list[KauffmanState]:
    """Every Kauffman state, in lexicographic (crossing, N/S/E/W) order."""
    d = dd.diagram
    offset = d.n_components - 1
    out = []
    for corners, fil2, gr in kernels.enumerate_assignments(_options(dd), len(d.faces)):
        assignment = tuple(
            (x.id, d.face_of(x.id, corner), classify_quadrants(d, x.id)[corner])
            for x, corner in zip(d.crossings, corners)
        )
        out.append(KauffmanState(corners, assignment, HalfInt(offset + fil2), HalfInt(offset + 2 * gr)))
    return out


def state_tally(dd: DecoratedDiagram) -> dict[tuple[HalfInt, HalfInt], int]:
    """Number of states at each (fil, gr)."""
    offset = dd.diagram.n_components - 1
    raw = kernels.tally_states(_options(dd), len(dd.diagram.faces))
    return {
        (HalfInt(offset + f2), HalfInt(offset + 2 * g)): n for (f2, g), n in raw.items()
    }


def top_states(dd: DecoratedDiagram) -> list[KauffmanState]:
    """Brute-force states at the maximal filtration level."""
    states = enumerate_states(dd)
    if not states:
        return []
    top = max(s.fil for s in states)
    return [s for s in states if s.fil == top]


def state_polynomial(dd: DecoratedDiagram) -> LaurentPoly:
    """``sum over states of (-1)^gr t^fil``."""
    if dd.diagram.n_components % 2 == 0:
        raise GradingNotInteger(
            "gradings are half-integral for an even number of components; "
            "(-1)^gr is undefined"
        )
    terms: dict[int, int] = {}
    for (fil, gr), n in state_tally(dd).items():
        sign = -1 if int(gr) % 2 else 1
        terms[fil.twice] = terms.get(fil.twice, 0) + sign * n
    return LaurentPoly(terms)
