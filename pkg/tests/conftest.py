import random

import pytest
from hypothesis import strategies as st

from latlevel import corpus
from latlevel.formats import semilattice_from_json
from latlevel.poset import Poset
from latlevel.semilattice import SetFamily, from_set_family

P1_COVERS = [("2", "4"), ("2", "5"), ("3", "4"), ("3", "5")]


def load(name):
    return semilattice_from_json(corpus.emit(name))


@pytest.fixture
def P1():
    return Poset.from_covers(["1", "2", "3", "4", "5"], P1_COVERS)


@pytest.fixture
def L1():
    return load("L1")


@pytest.fixture
def L2():
    return load("L2")


@pytest.fixture
def B3m13():
    return load("B3-minus-13")


@pytest.fixture
def N5():
    return load("N5")


@pytest.fixture
def chain2():
    return semilattice_from_json({"elements": ["0", "a"], "covers": [["0", "a"]]})


@pytest.fixture
def singleton():
    return semilattice_from_json({"elements": ["0"], "covers": []})


def corpus_semilattices():
    """Bundled examples plus a fixed sample of random meet-distributive families."""
    out = [(name, load(name)) for name in corpus.CORPUS_NAMES]
    rng = random.Random(7)
    for i in range(20):
        out.append((f"ideal-sub-{i}", from_set_family(corpus.random_ideal_subfamily(rng))))
    return out


CORPUS = corpus_semilattices()
MD_CORPUS = [(n, L) for n, L in CORPUS if L.is_meet_distributive()]


@st.composite
def posets(draw, max_size=6):
    n = draw(st.integers(0, max_size))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    perm = draw(st.permutations(range(n)))
    names = [str(k) for k in range(n)]
    return Poset.from_relation(names, [(names[perm[i]], names[perm[j]]) for i, j in chosen])


@st.composite
def closure_families(draw, max_ground=5):
    m = draw(st.integers(1, max_ground))
    gens = draw(st.lists(st.integers(0, (1 << m) - 1), min_size=1, max_size=6))
    sets = sorted(corpus.intersection_closure(gens), key=lambda s: (s.bit_count(), s))
    return SetFamily(tuple(str(i + 1) for i in range(m)), tuple(sets))


@st.composite
def md_families(draw, max_size=6):
    P = draw(posets(max_size))
    ideals = P.poset_ideals()
    tops = draw(st.lists(st.sampled_from(ideals), min_size=1, max_size=4))
    kept = [I for I in ideals if any(I & ~t == 0 for t in tops)]
    return SetFamily(P.elements, tuple(kept))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("tests.test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
