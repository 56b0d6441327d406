"""Exit criteria, one test per criterion, each printing a PASS/FAIL line."""
import random
import time
from itertools import combinations

import pytest

from latlevel import corpus
from latlevel.dual_ideal import dual_facets, is_independent_pair, theorem_generators
from latlevel.level import f_vector_dual, h_vector, is_level, s_sets, trimmed
from latlevel.oracle import cross_check, f_to_h, realizability_scan
from latlevel.poset import bits
from latlevel.semilattice import from_set_family

from .conftest import CORPUS, load

RESULTS: list[str] = []


def record(number: int, ok: bool, detail: str) -> None:
    RESULTS.append(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")
    print(RESULTS[-1])


L1_GENERATORS = {
    "x_1*y_1", "x_2*y_2", "x_3*y_3", "x_4*y_4", "x_5*y_5",
    "x_2*y_4", "x_2*y_5", "x_3*y_4", "x_3*y_5",
    "y_1*y_4", "y_1*y_5",
    "x_2*y_1*y_3",
}


def test_criterion_1_L1_generators():
    t0 = time.perf_counter()
    gens = theorem_generators(load("L1"))  # timing includes parsing and validation
    elapsed = time.perf_counter() - t0
    got = {g.render() for g in gens}
    ok = got == L1_GENERATORS and len(gens) == 12 and elapsed < 1.0
    record(1, ok, f"{len(gens)} generators, set equal: {got == L1_GENERATORS}, {elapsed:.3f}s")
    assert ok


@pytest.mark.parametrize("name,expected", [("L1", (1, 5, 4)), ("L2", (1, 4, 6, 2)), ("B3-minus-13", (1, 3, 3))])
def test_criterion_2_h_vectors(name, expected):
    t0 = time.perf_counter()
    h = trimmed(h_vector(load(name)))
    elapsed = time.perf_counter() - t0
    ok = h == expected and elapsed < 1.0
    record(2, ok, f"{name}: h = {h} (expected {expected}), {elapsed:.3f}s")
    assert ok


def test_criterion_3_levelness():
    r1 = is_level(load("L1"))
    r2 = is_level(load("L2"))
    facets = r2.to_json()["s_facets"]
    ok = r1.is_level and not r2.is_level and facets == [[1, 2], [1, 3, 4], [2, 3, 4]]
    record(3, ok, f"L1 level={r1.is_level}, L2 level={r2.is_level}, L2 S-facets={facets}")
    assert ok


def _random_families(count: int, seed: int = 20240601):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        L = from_set_family(corpus.random_family(rng))
        if L.n <= 8:
            out.append(L)
    return out


def test_criterion_4_oracle_equivalence():
    t0 = time.perf_counter()
    failures = []
    exhaustive = 0
    for m in range(5):
        for F in corpus.all_intersection_closed_families(m):
            exhaustive += 1
            r = cross_check(from_set_family(F))
            if not r.ok:
                failures.append((F.to_json(), [c.to_json() for c in r.failures()]))
    randoms = _random_families(1000)
    md = 0
    for L in randoms:
        md += L.is_meet_distributive()
        r = cross_check(L)
        if not r.ok:
            failures.append((L.to_json(), [c.to_json() for c in r.failures()]))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 300
    record(4, ok, f"{exhaustive} exhaustive + {len(randoms)} random ({md} meet-distributive), "
                  f"{len(failures)} failures, {elapsed:.1f}s")
    assert ok, failures[:1]


def _properties(L):
    bad = []
    N = len(L)
    if len(set(L.ell)) != N:
        bad.append("ell injective")
    for a, b in combinations(range(N), 2):
        if L.ell[L.meet_table[a][b]] != L.ell[a] & L.ell[b]:
            bad.append("meet identity")
            break
    if any(F.bit_count() != L.n for F in dual_facets(L).facets):
        bad.append("dual purity")
    if not L.is_meet_distributive():
        return bad
    h = h_vector(L)
    if h[0] != 1:
        bad.append("h0")
    if L.n and h[1] != L.n:
        bad.append("h1")
    if sum(h) != N:
        bad.append("sum h")
    if f_to_h(f_vector_dual(L), L.n) != h:
        bad.append("f/h round trip")
    S = s_sets(L)
    if len(set(S)) != N:
        bad.append("S injective")
    for s in S:
        sub = s
        while True:
            if is_independent_pair(L, 0, sub) or any(is_independent_pair(L, 1 << p, sub) for p in bits(s & ~sub)):
                bad.append("S non-independence")
                break
            if sub == 0:
                break
            sub = (sub - 1) & s
    return bad


def test_criterion_5_property_suite():
    entries = list(CORPUS) + [(f"random-{i}", L) for i, L in enumerate(_random_families(200, seed=5))]
    failures = {name: bad for name, L in entries if (bad := _properties(L))}
    ok = not failures
    record(5, ok, f"{len(entries)} corpus entries, failures: {failures or 'none'}")
    assert ok


def test_criterion_6_boolean_ideals():
    rng = random.Random(1234)
    mismatches = []
    cases = [(True, rng.randint(1, 6)) for _ in range(50)] + [(False, rng.randint(3, 6)) for _ in range(50)]
    for pure, n in cases:
        facets = corpus.random_complex(rng, n, pure)
        F = corpus.complex_family(n, facets)
        L = from_set_family(F)
        f = tuple(sum(1 for s in F.sets if s.bit_count() == k) for k in range(n + 1))
        level = is_level(L).is_level
        if L.n != n or h_vector(L) != f or level != pure:
            mismatches.append((n, facets))
    ok = not mismatches
    record(6, ok, f"50 pure + 50 non-pure complexes, {len(mismatches)} mismatches")
    assert ok


def test_criterion_7_closing_separation():
    scan = realizability_scan(3)
    attained = trimmed(h_vector(load("B3-minus-13")))
    L = load("B3-minus-13")
    ok = (1, 3, 3, 0) not in scan and attained == (1, 3, 3) and L.is_meet_distributive()
    record(7, ok, f"scan(3) = {scan}; B3 minus 13 gives {attained}")
    assert ok
