import random

import pytest

from altlink.builders import random_braid_diagram
from altlink.corpus import bundled_corpus_path, load_corpus
from altlink.diagram import mirror, parse_pd

TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
KINK = "X(1,2,2,1)"
HOPF = "X(4,1,3,2) X(2,3,1,4)"
FIGURE_EIGHT = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"
FIVE_TWO = "X(1,4,2,5) X(3,8,4,9) X(5,10,6,1) X(9,6,10,7) X(7,2,8,3)"
SIX_ONE = "X(1,4,2,5) X(7,10,8,11) X(3,9,4,8) X(9,3,10,2) X(5,12,6,1) X(11,6,12,7)"
SQUARE = ("X(6,2,7,1) X(2,8,3,7) X(8,4,9,3) X(13,5,14,4) "
          "X(9,14,10,15) X(15,10,16,11) X(11,16,12,1) X(12,5,13,6)")

ACCEPTANCE_LINES: list[str] = []

RANDOM_SEED = 20240531
N_RANDOM = 100


def left_trefoil():
    return parse_pd(TREFOIL)


def right_trefoil():
    return mirror(parse_pd(TREFOIL))


def positive_hopf():
    return mirror(parse_pd(HOPF))


def random_diagrams(n=N_RANDOM, seed=RANDOM_SEED):
    rng = random.Random(seed)
    return [random_braid_diagram(rng) for _ in range(n)]


@pytest.fixture(scope="session")
def corpus():
    return load_corpus(bundled_corpus_path())


@pytest.fixture(scope="session")
def corpus_diagrams(corpus):
    return [(e.name, e.diagram()) for e in corpus]


@pytest.fixture(scope="session")
def random_pool():
    return random_diagrams()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
