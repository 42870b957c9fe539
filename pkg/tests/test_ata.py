import pytest

from altlink.algebra import HalfInt
from altlink.ata import (
    ata_enumerate,
    build_tait_graphs,
    color_trees,
    fil_max_formula,
    gr_max_formula,
)
from altlink.builders import braid_closure, pretzel, reverse_components
from altlink.diagram import decorate, mirror, parse_pd
from altlink.errors import InconsistentCensus, NotAlternative
from altlink.seifert import SpaceCensus, is_alternative, seifert_spaces
from altlink.states import top_states

from conftest import FIVE_TWO, HOPF, KINK, SQUARE, TREFOIL, left_trefoil, positive_hopf, right_trefoil


def test_trefoil_tait_graphs():
    black, white = build_tait_graphs(decorate(parse_pd(TREFOIL)))
    assert len(black.edges) == 3 and len(white.edges) == 3
    kinds = {}
    for e in black.edges + white.edges:
        kinds.setdefault(e.crossing, []).append(e.kind)
    assert all(sorted(k) == ["EW", "NS"] for k in kinds.values())


def test_hopf_tait_graphs():
    black, white = build_tait_graphs(decorate(parse_pd(HOPF)))
    assert len(black.edges) == 2 and len(white.edges) == 2


def test_non_alternative_rejected():
    with pytest.raises(NotAlternative):
        build_tait_graphs(decorate(parse_pd(SQUARE)))
    with pytest.raises(NotAlternative):
        ata_enumerate(decorate(parse_pd(SQUARE)))


def test_right_trefoil():
    states = ata_enumerate(decorate(right_trefoil()))
    assert len(states) == 1
    assert states[0].fil == 1 and states[0].gr == 0


def test_positive_hopf():
    states = ata_enumerate(decorate(positive_hopf()))
    assert len(states) == 1 and states[0].fil == 1


def test_five_two():
    states = ata_enumerate(decorate(parse_pd(FIVE_TWO)))
    assert len(states) == 2
    assert states[0].gr == states[1].gr


def test_gr_formula_examples():
    assert gr_max_formula(seifert_spaces(right_trefoil()), 1) == 0
    assert gr_max_formula(seifert_spaces(left_trefoil()), 1) == 2
    assert gr_max_formula(seifert_spaces(positive_hopf()), 2) == HalfInt(1)


def test_fil_formula_examples():
    assert fil_max_formula(seifert_spaces(parse_pd(TREFOIL)), 1) == 1
    assert fil_max_formula(seifert_spaces(parse_pd(HOPF)), 2) == 1
    assert fil_max_formula(seifert_spaces(parse_pd(KINK)), 1) == 0


def test_fil_formula_inconsistent_census():
    census = seifert_spaces(parse_pd(TREFOIL))
    bad = SpaceCensus(census.spaces, census.s, census.c, census.c_plus, census.c_minus,
                      census.r + 1, census.r_plus + 1, census.r_minus)
    with pytest.raises(InconsistentCensus):
        fil_max_formula(bad, 1)


def _alternative_pool(random_pool, corpus_diagrams):
    extra = [
        pretzel([3, 3, 3]), pretzel([1, 1, 1]), pretzel([3, 3, 3], reverse=[1]),
        braid_closure([1, 2, 1, 2, 2, 1]), braid_closure([1, -2, 1, -2]),
        braid_closure([1, 1, 2, 2, 3, 3]), braid_closure([1, 1, 1, 1, 2, -3, 2]),
    ]
    pool = [d for _, d in corpus_diagrams] + random_pool + extra
    pool += [mirror(d) for d in pool]
    pool += [reverse_components(d, [0]) for d in pool if d.n_components > 1]
    return [d for d in pool if is_alternative(d)[0] and d.m <= 9]


def test_ata_equals_brute_force(random_pool, corpus_diagrams):
    pool = _alternative_pool(random_pool, corpus_diagrams)
    assert len(pool) >= 60
    for d in pool:
        census = seifert_spaces(d)
        for edge in d.arcs[:3]:
            dd = decorate(d, edge)
            ata = ata_enumerate(dd)
            top = top_states(dd)
            assert {s.corners for s in ata} == {s.corners for s in top}
            assert all(s.gr == gr_max_formula(census, d.n_components) for s in ata)
            assert all(s.fil == fil_max_formula(census, d.n_components) for s in ata)


def test_tree_accounting(corpus_diagrams):
    for _, d in corpus_diagrams:
        if not is_alternative(d)[0]:
            continue
        dd = decorate(d)
        black, white = build_tait_graphs(dd)
        for graph in (black, white):
            for forest in color_trees(graph).values():
                assert len(forest.edges) == len(graph.vertices) - 1
                assert forest.roots[0] == graph.root
                assert len({r for _, r, _ in forest.edges}) == len(forest.edges)


def test_rank_independent_of_decoration(corpus_diagrams):
    for _, d in corpus_diagrams:
        if not is_alternative(d)[0]:
            continue
        ranks = {len(ata_enumerate(decorate(d, e))) for e in d.arcs}
        assert len(ranks) == 1


def test_canonical_order_is_stable():
    dd = decorate(pretzel([3, 3, 3]))
    a = [s.corners for s in ata_enumerate(dd)]
    b = [s.corners for s in ata_enumerate(dd)]
    assert a == b and len(a) == 7
