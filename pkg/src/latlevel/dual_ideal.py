"""Alexander dual of a meet-semilattice and its Stanley-Reisner generators.

Vertices are ``x_p`` and ``y_p`` for ``p`` in the join-irreducibles.  A
squarefree monomial ``x_A y_B`` is a pair of P-masks.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .config import DEFAULT_LIMITS, Limits
from .errors import OverlapError, TooLarge
from .poset import bits, is_subset
from .semilattice import MeetSemilattice

FAMILY_ORDER = {"diag": 0, "i": 1, "ii": 2, "iii": 3}


@dataclass(frozen=True, order=False)
class PairMonomial:
    x: int
    y: int
    family: str = ""

    @property
    def degree(self) -> int:
        return self.x.bit_count() + self.y.bit_count()

    @property
    def support(self) -> tuple[int, int]:
        return (self.x, self.y)

    def divides(self, other: PairMonomial) -> bool:
        return is_subset(self.x, other.x) and is_subset(self.y, other.y)

    def sort_key(self):
        return (self.degree, tuple(bits(self.x)), tuple(bits(self.y)))

    def render(self) -> str:
        factors = [f"x_{p + 1}" for p in bits(self.x)] + [f"y_{q + 1}" for q in bits(self.y)]
        return "*".join(factors) if factors else "1"

    def to_json(self) -> dict:
        return {"family": self.family, "x": [p + 1 for p in bits(self.x)], "y": [q + 1 for q in bits(self.y)]}


@dataclass(frozen=True)
class DualComplex:
    """Facets over ``2n`` vertices: bit ``p`` is ``x_p``, bit ``n + p`` is ``y_p``."""

    n: int
    facets: tuple[int, ...]

    @property
    def vertex_labels(self) -> list[str]:
        return [f"x_{p + 1}" for p in range(self.n)] + [f"y_{p + 1}" for p in range(self.n)]

    def split(self, face: int) -> tuple[int, int]:
        low = (1 << self.n) - 1
        return face & low, face >> self.n

    def contains(self, x: int, y: int) -> bool:
        face = x | y << self.n
        return any(is_subset(face, F) for F in self.facets)


def dual_facets(L: MeetSemilattice) -> DualComplex:
    n = L.n
    full = (1 << n) - 1
    return DualComplex(n, tuple((full & ~e) | e << n for e in L.ell))


def is_independent_pair(L: MeetSemilattice, A: int, B: int) -> bool:
    """Every ``a`` with ``B`` inside ``ell(a)`` has ``ell(a)`` meeting ``A``."""
    if A & B:
        raise OverlapError("independent pairs need disjoint A and B")
    return all(A & e for e in L.ell if is_subset(B, e))


def minimalize(monomials) -> list[PairMonomial]:
    """Drop duplicates and every monomial strictly divisible by another."""
    seen = {}
    for m in sorted(monomials, key=lambda m: (m.sort_key(), FAMILY_ORDER.get(m.family, 9))):
        seen.setdefault(m.support, m)
    unique = list(seen.values())
    kept = [m for m in unique if not any(o is not m and o.divides(m) for o in unique)]
    return sorted(kept, key=PairMonomial.sort_key)


def theorem_generators(L: MeetSemilattice) -> list[PairMonomial]:
    """Minimal generators of the Stanley-Reisner ideal from the three closed-form families.

    ``diag`` are the squares ``x_p y_p``; ``i`` are ``x_p y_q`` with ``p < q``;
    ``ii`` and ``iii`` come from antichains ``B`` of the join-irreducibles whose
    generated ideal is not itself some ``ell(b)``.
    """
    P = L.jposet
    out = [PairMonomial(1 << p, 1 << p, "diag") for p in range(L.n)]
    for q in range(L.n):
        for p in bits(P.down[q] & ~(1 << q)):
            out.append(PairMonomial(1 << p, 1 << q, "i"))
    ell_set = set(L.ell)
    for B in P.antichains():
        ideal = P.generated_ideal(B)
        if ideal in ell_set:
            continue
        above = [a for a, e in enumerate(L.ell) if is_subset(ideal, e)]
        if not above:
            out.append(PairMonomial(0, B, "ii"))
            continue
        floor = L.meet_all(above)
        for p in bits(L.ell[floor] & ~ideal):
            out.append(PairMonomial(1 << p, B, "iii"))
    return minimalize(out)


def _minimal_transversals(sets: list[int], universe: int) -> list[int]:
    """Inclusion-minimal subsets of ``universe`` meeting every set in ``sets``."""
    if any(s & universe == 0 for s in sets):
        return []
    elems = list(bits(universe))
    found: list[int] = []
    for r in range(len(elems) + 1):
        for combo in combinations(elems, r):
            A = 0
            for e in combo:
                A |= 1 << e
            if any(is_subset(f, A) for f in found):
                continue
            if all(A & s for s in sets):
                found.append(A)
    return found


def generators_oracle(L: MeetSemilattice, limits: Limits = DEFAULT_LIMITS) -> list[PairMonomial]:
    """Minimal nonfaces of the dual found by exhausting independent pairs.

    For each antichain ``B`` the admissible ``A`` are the minimal transversals
    of ``{ell(a) - B : B inside ell(a)}``; a pair survives if dropping any
    element of ``B`` breaks independence.  Squares ``x_p y_p`` are added
    because no facet holds both ``x_p`` and ``y_p``.
    """
    n = L.n
    if n > limits.oracle_generators:
        raise TooLarge(f"generator oracle is limited to {limits.oracle_generators} join-irreducibles")
    full = (1 << n) - 1
    found = []
    for B in L.jposet.antichains():
        constraints = [e & ~B for e in L.ell if is_subset(B, e)]
        for A in _minimal_transversals(constraints, full & ~B):
            if all(not is_independent_pair(L, A, B & ~(1 << q)) for q in bits(B)):
                found.append(PairMonomial(A, B))
    for p in range(n):
        found.append(PairMonomial(1 << p, 1 << p))
    return minimalize(found)
