"""Pure-Python Kauffman-state search (fallback for the compiled kernel).

``options[i]`` lists the admissible corners of crossing ``i`` as tuples
``(corner, region, fil2, gr)``: the quadrant index, the face it lies in, and
the doubled local filtration and local grading contributions.  A state picks
one option per crossing with all regions distinct.  The search visits
crossings in index order and options in list order, so results come out in
lexicographic order.

A face that can no longer be claimed by any remaining crossing prunes the
branch: states are bijections onto the unmarked faces.
"""

from __future__ import annotations

IMPLEMENTATION = "python"


def _prepare(options, n_regions):
    regions_of = [sorted({o[1] for o in opts}) for opts in options]
    avail = [0] * n_regions
    for regs in regions_of:
        for r in regs:
            avail[r] += 1
    return regions_of, avail


def _search(options, n_regions, emit):
    m = len(options)
    regions_of, avail = _prepare(options, n_regions)
    used = [False] * n_regions
    chosen = [0] * m

    def dfs(i, fil2, gr):
        if i == m:
            emit(chosen, fil2, gr)
            return
        regs = regions_of[i]
        for r in regs:
            avail[r] -= 1
        for corner, region, df, dg in options[i]:
            if used[region]:
                continue
            ok = True
            for r in regs:
                if r != region and not used[r] and avail[r] == 0:
                    ok = False
                    break
            if not ok:
                continue
            used[region] = True
            chosen[i] = corner
            dfs(i + 1, fil2 + df, gr + dg)
            used[region] = False
        for r in regs:
            avail[r] += 1

    dfs(0, 0, 0)


def enumerate_assignments(options, n_regions):
    """All states as ``(corners, fil2, gr)`` with ``corners[i]`` the chosen
    quadrant of crossing ``i``."""
    out = []
    _search(options, n_regions, lambda ch, f, g: out.append((tuple(ch), f, g)))
    return out


def tally_states(options, n_regions):
    """Count states by ``(fil2, gr)`` without materializing them."""
    counts: dict[tuple[int, int], int] = {}

    def emit(_, f, g):
        counts[f, g] = counts.get((f, g), 0) + 1

    _search(options, n_regions, emit)
    return counts
