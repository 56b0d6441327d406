"""Brute-force ground truth used to certify the closed-form computations."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb
from typing import Any

import numpy as np

from .config import DEFAULT_LIMITS, Limits
from .dual_ideal import DualComplex, dual_facets, generators_oracle, is_independent_pair, theorem_generators
from .errors import NotMeetDistributive, TooLarge
from .level import h_vector, s_sets, standard_monomials
from .poset import Poset, bits
from .semilattice import MeetSemilattice, SetFamily, from_set_family


def _scatter_table(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.int64)


def enumerate_faces(D: DualComplex, limits: Limits = DEFAULT_LIMITS) -> tuple[int, ...]:
    """f-vector ``(f_-1, ..., f_{n-1})`` counted from the union of all facet subsets."""
    n = D.n
    if n > limits.oracle_faces:
        raise TooLarge(f"face enumeration is limited to {limits.oracle_faces} join-irreducibles")
    idx = _scatter_table(n)
    chunks = []
    for F in D.facets:
        positions = list(bits(F))
        sub = np.zeros(1 << n, dtype=np.int64)
        for k, pos in enumerate(positions):
            sub |= ((idx >> k) & 1) << pos
        chunks.append(sub)
    faces = np.unique(np.concatenate(chunks)) if chunks else np.zeros(0, dtype=np.int64)
    sizes = np.bitwise_count(faces.astype(np.uint64))
    counts = np.bincount(sizes, minlength=n + 1)
    return tuple(int(c) for c in counts[: n + 1])


def f_to_h(f, d: int) -> tuple[int, ...]:
    """``h_k = sum_i (-1)^(k-i) C(d-i, k-i) f_{i-1}`` for ``k = 0..d``; ``f[0]`` is ``f_-1``."""
    f = list(f) + [0] * max(0, d + 1 - len(f))
    return tuple(sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1)) for k in range(d + 1))


@dataclass
class Check:
    name: str
    passed: bool
    counterexample: Any = None
    note: str | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "pass": self.passed, "counterexample": self.counterexample}
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class CrossCheckReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {"checks": [c.to_json() for c in self.checks]}


def _skipped(name: str) -> Check:
    return Check(name, True, None, "skipped: not meet-distributive")


def cross_check(L: MeetSemilattice, limits: Limits = DEFAULT_LIMITS) -> CrossCheckReport:
    report = CrossCheckReport()
    md_interval, witness = L.meet_distributivity()
    md_embed = L.embedding_check()
    md = md_interval and md_embed

    if md:
        h = h_vector(L)
        h_oracle = f_to_h(enumerate_faces(dual_facets(L), limits), L.n)
        report.checks.append(Check("h_vector_vs_faces", h == h_oracle, None if h == h_oracle else {"formula": list(h), "faces": list(h_oracle)}))
    else:
        report.checks.append(_skipped("h_vector_vs_faces"))

    theorem = theorem_generators(L)
    oracle = generators_oracle(L, limits)
    t_set = {g.support for g in theorem}
    o_set = {g.support for g in oracle}
    diff = None
    if t_set != o_set:
        extra = sorted(t_set - o_set)
        missing = sorted(o_set - t_set)
        diff = {"theorem_only": [list(s) for s in extra[:1]], "oracle_only": [list(s) for s in missing[:1]]}
    report.checks.append(Check("theorem_vs_oracle_generators", t_set == o_set, diff))

    if md:
        std = standard_monomials(L, limits=limits)
        S = set(s_sets(L))
        cx = None
        if std != S:
            cx = [p + 1 for p in bits(next(iter(std ^ S)))]
        report.checks.append(Check("standard_monomials_vs_S", std == S, cx))
    else:
        report.checks.append(_skipped("standard_monomials_vs_S"))

    agree = md_interval == md_embed
    report.checks.append(
        Check(
            "meet_distributive_detectors",
            agree,
            None if agree else {"interval": md_interval, "embedding": md_embed, "witness": witness},
            None if md_interval else f"not meet-distributive (witness {witness})",
        )
    )

    facets = dual_facets(L)
    bad = None
    for g in theorem:
        if g.x & g.y:
            member = not facets.contains(g.x, g.y)
        else:
            member = is_independent_pair(L, g.x, g.y) and not facets.contains(g.x, g.y)
        if not member:
            bad = g.to_json()
            break
    report.checks.append(Check("generators_satisfy_independence", bad is None, bad))
    return report


# unlabeled posets ---------------------------------------------------------

def _canonical(n: int, rel: frozenset) -> tuple:
    best = None
    for perm in permutations(range(n)):
        key = tuple(sorted((perm[a], perm[b]) for a, b in rel))
        if best is None or key < best:
            best = key
    return best


def unlabeled_posets(n: int) -> list[Poset]:
    """One representative per isomorphism class, via naturally labeled strict orders."""
    pairs = list(combinations(range(n), 2))
    classes = {}
    for r in range(len(pairs) + 1):
        for chosen in combinations(pairs, r):
            rel = frozenset(chosen)
            if any((a, c) not in rel for a, b in rel for b2, c in rel if b == b2):
                continue
            classes.setdefault(_canonical(n, rel), rel)
    names = [str(i + 1) for i in range(n)]
    return [Poset.from_relation(names, [(names[a], names[b]) for a, b in sorted(key)]) for key in sorted(classes)]


def realizability_scan(n: int, limits: Limits = DEFAULT_LIMITS) -> list[tuple[int, ...]]:
    """Distinct h-vectors of the duals of J(P) over all posets P with ``n`` elements."""
    if n > limits.scan:
        raise TooLarge(f"realizability scan is limited to n <= {limits.scan}")
    found = set()
    for P in unlabeled_posets(n):
        JP = from_set_family(SetFamily(P.elements, tuple(P.poset_ideals())))
        found.add(h_vector(JP))
    return sorted(found, reverse=True)
