"""Bundled example semilattices and seeded random generators."""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from itertools import combinations

from .errors import UnknownName
from .poset import Poset, bits, is_subset
from .semilattice import SetFamily

# Hasse diagram of the ten-element example with five join-irreducibles
L1_COVERS = {
    "elements": ["0", "1", "2", "3", "12", "23", "123", "234", "235", "2345"],
    "covers": [
        ["0", "1"], ["0", "2"], ["0", "3"],
        ["1", "12"], ["2", "12"], ["2", "23"], ["3", "23"],
        ["12", "123"], ["23", "123"], ["23", "234"], ["23", "235"],
        ["234", "2345"], ["235", "2345"],
    ],
}

# thirteen-element non-level example over four atoms
L2_COVERS = {
    "elements": ["0", "1", "2", "3", "4", "13", "14", "23", "24", "34", "134", "234", "1234"],
    "covers": [
        ["0", "1"], ["0", "2"], ["0", "3"], ["0", "4"],
        ["1", "13"], ["1", "14"], ["2", "23"], ["2", "24"],
        ["3", "13"], ["3", "23"], ["3", "34"],
        ["4", "14"], ["4", "24"], ["4", "34"],
        ["13", "134"], ["14", "134"], ["34", "134"],
        ["23", "234"], ["24", "234"], ["34", "234"],
        ["134", "1234"], ["234", "1234"],
    ],
}

B3_MINUS_13 = {
    "elements": ["0", "1", "2", "3", "12", "23", "123"],
    "covers": [
        ["0", "1"], ["0", "2"], ["0", "3"],
        ["1", "12"], ["2", "12"], ["2", "23"], ["3", "23"],
        ["12", "123"], ["23", "123"],
    ],
}

N5_COVERS = {
    "elements": ["0", "a", "b", "c", "1"],
    "covers": [["0", "a"], ["a", "b"], ["b", "1"], ["0", "c"], ["c", "1"]],
}

STATIC = {"L1": L1_COVERS, "L2": L2_COVERS, "B3-minus-13": B3_MINUS_13, "N5": N5_COVERS}


def family_to_covers(F: SetFamily) -> dict:
    names = [F.label(s) for s in F.sets]
    down = tuple(sum(1 << j for j, t in enumerate(F.sets) if is_subset(t, s)) for s in F.sets)
    return Poset(tuple(names), down).to_json()


def boolean_family(k: int) -> SetFamily:
    return SetFamily(tuple(str(i + 1) for i in range(k)), tuple(range(1 << k)))


def ideal_family(P: Poset) -> SetFamily:
    return SetFamily(P.elements, tuple(P.poset_ideals()))


def emit(name: str) -> dict:
    """Canonical JSON for a bundled name: L1, L2, B3-minus-13, N5, Bn(k), JP(seed)."""
    if name in STATIC:
        return STATIC[name]
    m = re.fullmatch(r"Bn\((\d+)\)", name)
    if m:
        return family_to_covers(boolean_family(int(m.group(1))))
    m = re.fullmatch(r"JP\((\d+)\)", name)
    if m:
        rng = random.Random(int(m.group(1)))
        P = random_poset(rng, rng.randint(1, 6))
        return family_to_covers(ideal_family(P))
    raise UnknownName(f"unknown corpus entry {name!r}")


CORPUS_NAMES = ["L1", "L2", "B3-minus-13", "N5", "Bn(0)", "Bn(1)", "Bn(2)", "Bn(3)", "JP(1)", "JP(2)", "JP(3)"]


# random generators ---------------------------------------------------------

def random_poset(rng: random.Random, n: int, density: float | None = None) -> Poset:
    """Naturally labeled random order: ``i < j`` with probability ``density`` then closed."""
    density = rng.random() * 0.6 if density is None else density
    names = [str(i + 1) for i in range(n)]
    rel = [(names[i], names[j]) for i, j in combinations(range(n), 2) if rng.random() < density]
    return Poset.from_relation(names, rel)


def intersection_closure(sets) -> set[int]:
    closed = set(sets)
    frontier = list(closed)
    while frontier:
        new = []
        for s in frontier:
            for t in list(closed):
                u = s & t
                if u not in closed:
                    closed.add(u)
                    new.append(u)
        frontier = new
    return closed


def all_intersection_closed_families(m: int):
    """Every nonempty intersection-closed family of subsets of an ``m``-set."""
    universe = 1 << m
    for code in range(1, 1 << universe):
        sets = list(bits(code))
        present = code
        if all(present >> (s & t) & 1 for s, t in combinations(sets, 2)):
            yield SetFamily(tuple(str(i + 1) for i in range(m)), tuple(sets))


@dataclass(frozen=True)
class RandomFamilyConfig:
    """Mix of generators for random intersection-closed families."""

    max_ground: int = 8
    max_joinirr: int = 8
    max_generators: int = 7
    md_fraction: float = 0.5


def random_closure_family(rng: random.Random, cfg: RandomFamilyConfig = RandomFamilyConfig()) -> SetFamily:
    m = rng.randint(2, cfg.max_ground)
    gens = [rng.getrandbits(m) for _ in range(rng.randint(2, cfg.max_generators))]
    sets = sorted(intersection_closure(gens), key=lambda s: (s.bit_count(), s))
    return SetFamily(tuple(str(i + 1) for i in range(m)), tuple(sets))


def random_ideal_subfamily(rng: random.Random, cfg: RandomFamilyConfig = RandomFamilyConfig()) -> SetFamily:
    """A down-closed subfamily of J(P) for a random P: always meet-distributive."""
    P = random_poset(rng, rng.randint(2, cfg.max_joinirr))
    ideals = P.poset_ideals()
    tops = rng.sample(ideals, rng.randint(1, min(4, len(ideals))))
    kept = [I for I in ideals if any(is_subset(I, t) for t in tops)]
    return SetFamily(P.elements, tuple(kept))


def random_family(rng: random.Random, cfg: RandomFamilyConfig = RandomFamilyConfig()) -> SetFamily:
    if rng.random() < cfg.md_fraction:
        return random_ideal_subfamily(rng, cfg)
    return random_closure_family(rng, cfg)


def complex_family(n: int, facets) -> SetFamily:
    """Down-closure of ``facets`` in the boolean lattice on ``n`` vertices."""
    faces = set()
    for F in facets:
        sub = F
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & F
    return SetFamily(tuple(str(i + 1) for i in range(n)), tuple(sorted(faces, key=lambda s: (s.bit_count(), s))))


def random_complex(rng: random.Random, n: int, pure: bool) -> list[int]:
    """Facet list of a complex on all ``n`` vertices, pure or not as requested."""
    if not pure and n < 3:
        raise ValueError("a non-pure complex using every vertex needs at least 3 vertices")
    while True:
        if pure:
            k = rng.randint(1, n)
            facets = {_random_ksubset(rng, n, k) for _ in range(rng.randint(1, 4))}
            covered = 0
            for F in facets:
                covered |= F
            for v in bits(((1 << n) - 1) & ~covered):
                facets.add(_random_ksubset(rng, n, k, must=v))
        else:
            facets = {_random_ksubset(rng, n, rng.randint(1, n)) for _ in range(rng.randint(2, 5))}
            covered = 0
            for F in facets:
                covered |= F
            facets |= {1 << v for v in bits(((1 << n) - 1) & ~covered)}
        tops = [F for F in facets if not any(F != G and is_subset(F, G) for G in facets)]
        if (len({F.bit_count() for F in tops}) == 1) == pure:
            return sorted(tops)


def _random_ksubset(rng: random.Random, n: int, k: int, must: int | None = None) -> int:
    pool = [v for v in range(n) if v != must]
    chosen = rng.sample(pool, k - 1 if must is not None else k)
    if must is not None:
        chosen.append(must)
    return sum(1 << v for v in chosen)

