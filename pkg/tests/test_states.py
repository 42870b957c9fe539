import itertools
from collections import Counter

import pytest

from altlink.algebra import HalfInt, LaurentPoly, equal_up_to_unit, parse_poly
from altlink.analysis import alexander_oracle
from altlink.diagram import decorate, mirror, parse_pd
from altlink.errors import GradingNotInteger
from altlink.states import (
    QuadrantClass as Q,
    classify_quadrants,
    enumerate_states,
    local_fil,
    local_gr,
    semantics,
    state_polynomial,
    state_tally,
    top_states,
)

from conftest import FIGURE_EIGHT, HOPF, KINK, TREFOIL, right_trefoil


def product_oracle(dd):
    """All bijections by exhaustive product over corners, no pruning."""
    d = dd.diagram
    found = []
    for corners in itertools.product(range(4), repeat=d.m):
        regions = [d.face_of(c, q) for c, q in enumerate(corners)]
        if set(regions) & dd.marked or len(set(regions)) != d.m:
            continue
        fil = HalfInt(d.n_components - 1)
        for c, q in enumerate(corners):
            fil = fil + local_fil(d.crossings[c].sign, classify_quadrants(d, c)[q])
        found.append((corners, fil))
    return found


def test_local_tables():
    assert local_fil(1, Q.N) == HalfInt(-1)
    assert local_fil(-1, Q.S) == HalfInt(-1)
    assert local_fil(1, Q.E) == 0
    assert local_gr(1, Q.N) == -1
    assert local_gr(-1, Q.N) == 1
    assert local_gr(1, Q.S) == 0 and local_gr(-1, Q.S) == 0


@pytest.mark.parametrize("sign", [1, -1])
def test_local_table_coherence(sign):
    assert sum((local_fil(sign, q) for q in Q), HalfInt(0)) == 0
    assert local_gr(sign, Q.N) == local_fil(sign, Q.N) * 2


def test_bad_sign():
    with pytest.raises(ValueError):
        local_fil(0, Q.N)


def test_classify_every_crossing(random_pool):
    for d in random_pool[:30] + [parse_pd(KINK)]:
        for x in d.crossings:
            cls = classify_quadrants(d, x.id)
            assert sorted(cls) == [0, 1, 2, 3]
            assert sorted(c.value for c in cls.values()) == ["E", "N", "S", "W"]


def test_hopf_ns_in_crossing_space():
    from altlink.seifert import seifert_spaces

    d = parse_pd(HOPF)
    census = seifert_spaces(d)
    middle = next(sp for sp in census.spaces if sp.crossings)
    for x in d.crossings:
        cls = classify_quadrants(d, x.id)
        for q, c in cls.items():
            if c in (Q.N, Q.S):
                assert d.face_of(x.id, q) in middle.regions


def test_trefoil_states():
    states = enumerate_states(decorate(parse_pd(TREFOIL)))
    assert len(states) == 3
    assert sorted(s.fil for s in states) == [-1, 0, 1]


def test_kink_state():
    states = enumerate_states(decorate(parse_pd(KINK)))
    assert len(states) == 1 and states[0].fil == 0


def test_matches_product_oracle(random_pool, corpus_diagrams):
    pool = [d for d in random_pool if d.m <= 6] + [d for _, d in corpus_diagrams if d.m <= 7]
    for d in pool:
        dd = decorate(d)
        got = sorted((s.corners, s.fil) for s in enumerate_states(dd))
        assert got == sorted(product_oracle(dd))


def test_states_are_bijections(random_pool, corpus_diagrams):
    for d in random_pool + [d for _, d in corpus_diagrams]:
        dd = decorate(d)
        for s in enumerate_states(dd):
            regions = [r for _, r, _ in s.assignment]
            assert len(set(regions)) == d.m
            assert not set(regions) & dd.marked
            assert [c for c, _, _ in s.assignment] == list(range(d.m))


def test_mirror_negates_fil(random_pool, corpus_diagrams):
    for d in random_pool + [d for _, d in corpus_diagrams]:
        e = d.arcs[0]
        a = Counter(s.fil for s in enumerate_states(decorate(d, e)))
        b = Counter(-s.fil for s in enumerate_states(decorate(mirror(d), e)))
        if d.n_components == 1:
            assert a == b
        else:
            # the local sums negate; the (|L|-1)/2 offset does not
            shift = HalfInt(2 * (d.n_components - 1))
            assert a == Counter({f + shift: n for f, n in b.items()})


def test_lexicographic_order():
    states = enumerate_states(decorate(parse_pd(FIGURE_EIGHT)))
    keys = [s.corners for s in states]
    assert len(set(keys)) == len(keys)
    order = "NSEW"
    ranks = [tuple(order.index(q.value) for _, _, q in s.assignment) for s in states]
    assert ranks == sorted(ranks)


def test_tally_matches_enumeration(random_pool):
    for d in random_pool[:40]:
        dd = decorate(d)
        expect = Counter((s.fil, s.gr) for s in enumerate_states(dd))
        assert state_tally(dd) == dict(expect)


def test_state_polynomials():
    assert equal_up_to_unit(state_polynomial(decorate(right_trefoil())), parse_poly("t - 1 + t^-1"))
    assert equal_up_to_unit(state_polynomial(decorate(parse_pd(FIGURE_EIGHT))), parse_poly("-t + 3 - t^-1"))
    assert state_polynomial(decorate(parse_pd(KINK))) == LaurentPoly.constant(1)


def test_state_sum_matches_oracle_on_random_knots(random_pool):
    for d in random_pool:
        if d.n_components % 2:
            assert equal_up_to_unit(state_polynomial(decorate(d)), alexander_oracle(d))


def test_even_component_count_refuses_signs():
    with pytest.raises(GradingNotInteger):
        state_polynomial(decorate(parse_pd(HOPF)))


def test_semantics_tag():
    assert semantics(parse_pd(TREFOIL)) == "generators"
    assert semantics(parse_pd(HOPF)) == "top-level-only"


def test_top_states_share_fil(random_pool):
    for d in random_pool[:40]:
        top = top_states(decorate(d))
        assert top and len({s.fil for s in top}) == 1
