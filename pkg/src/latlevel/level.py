"""h-vector, S-complex, Artinian reduction and the levelness verdict."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb

from .config import DEFAULT_LIMITS, Limits
from .dual_ideal import theorem_generators
from .errors import NotMeetDistributive, NotSimplicial, TooLarge
from .poset import bits, is_subset
from .semilattice import MeetSemilattice


def require_meet_distributive(L: MeetSemilattice, force: bool = False) -> None:
    if force:
        return
    ok, witness = L.meet_distributivity()
    if not ok:
        raise NotMeetDistributive(f"not meet-distributive (witness {witness!r})", witness=witness)


def h_vector(L: MeetSemilattice, force: bool = False) -> tuple[int, ...]:
    """``h[i]`` counts elements with exactly ``i`` lower neighbours; length ``n + 1``."""
    require_meet_distributive(L, force)
    counts = Counter(c.bit_count() for c in L.order.lower_covers)
    length = max(L.n, max(counts)) + 1
    return tuple(counts.get(i, 0) for i in range(length))


def f_from_h(h, n: int) -> tuple[int, ...]:
    """Face numbers ``(f_-1, ..., f_{n-1})`` of a complex of dimension ``n - 1`` from its h-vector."""
    h = list(h) + [0] * max(0, n + 1 - len(h))
    return tuple(sum(comb(n - i, j + 1 - i) * h[i] for i in range(j + 2)) for j in range(-1, n))


def f_vector_dual(L: MeetSemilattice, force: bool = False) -> tuple[int, ...]:
    return f_from_h(h_vector(L, force), L.n)


def a_invariant(L: MeetSemilattice, force: bool = False) -> int:
    require_meet_distributive(L, force)
    return max(c.bit_count() for c in L.order.lower_covers) - L.n


def trimmed(h) -> tuple[int, ...]:
    h = list(h)
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    return tuple(h)


@dataclass(frozen=True)
class SComplex:
    faces: tuple[int, ...]  # S(a) per element, as P-masks
    facets: tuple[int, ...]

    def census(self, n: int) -> tuple[int, ...]:
        counts = Counter(s.bit_count() for s in self.faces)
        return tuple(counts.get(i, 0) for i in range(n + 1))

    def is_pure(self) -> bool:
        return len({f.bit_count() for f in self.facets}) <= 1


def maximal_sets(masks) -> tuple[int, ...]:
    masks = set(masks)
    tops = [m for m in masks if not any(m != o and is_subset(m, o) for o in masks)]
    return tuple(sorted(tops, key=lambda m: tuple(bits(m))))


def s_sets(L: MeetSemilattice) -> tuple[int, ...]:
    """``S(a) = ell(a) - ell(a')`` where ``a'`` is the meet of the lower neighbours (``a`` if none)."""
    out = []
    for a in range(len(L)):
        base = L.meet_all(bits(L.order.lower_covers[a]), start=a)
        out.append(L.ell[a] & ~L.ell[base])
    return tuple(out)


def s_complex(L: MeetSemilattice, force: bool = False) -> SComplex:
    require_meet_distributive(L, force)
    faces = s_sets(L)
    family = set(faces)
    for s in family:
        for p in bits(s):
            if s & ~(1 << p) not in family:
                raise NotSimplicial(f"S-family is not closed under removing element {p + 1}")
    return SComplex(faces, maximal_sets(family))


@dataclass(frozen=True)
class LevelReport:
    h: tuple[int, ...]
    f_dual: tuple[int, ...]
    a_invariant: int
    s_facets: tuple[int, ...]
    is_level: bool

    def to_json(self) -> dict:
        return {
            "h": list(self.h),
            "f_dual": list(self.f_dual),
            "a_invariant": self.a_invariant,
            "s_facets": [[p + 1 for p in bits(f)] for f in self.s_facets],
            "is_level": self.is_level,
        }


def is_level(L: MeetSemilattice, force: bool = False) -> LevelReport:
    """Level iff the S-complex is pure."""
    S = s_complex(L, force)
    h = h_vector(L, force=True)
    return LevelReport(
        h=h,
        f_dual=f_from_h(h, L.n),
        a_invariant=a_invariant(L, force=True),
        s_facets=S.facets,
        is_level=S.is_pure(),
    )


# Artinian reduction y_p -> x_p -------------------------------------------

def _divides(u: tuple[int, ...], v: tuple[int, ...]) -> bool:
    cu, cv = Counter(u), Counter(v)
    return all(cv[p] >= k for p, k in cu.items())


def j_ideal(L: MeetSemilattice, force: bool = False) -> list[tuple[int, ...]]:
    """Minimal generators in ``x`` only, each a sorted tuple of P-positions with repetition."""
    require_meet_distributive(L, force)
    images = {tuple(sorted(list(bits(g.x)) + list(bits(g.y)))) for g in theorem_generators(L)}
    kept = [u for u in images if not any(v != u and _divides(v, u) for v in images)]
    return sorted(kept, key=lambda u: (len(u), u))


def standard_monomials(L: MeetSemilattice, force: bool = False, limits: Limits = DEFAULT_LIMITS) -> set[int]:
    """Squarefree supports not divisible by any generator of :func:`j_ideal`."""
    if L.n > limits.standard_monomials:
        raise TooLarge(f"subset sweep is limited to {limits.standard_monomials} join-irreducibles")
    gens = j_ideal(L, force)
    squarefree = []
    for u in gens:
        if len(set(u)) == len(u):
            squarefree.append(sum(1 << p for p in u))
    return {T for T in range(1 << L.n) if not any(is_subset(g, T) for g in squarefree)}


def render_x(u: tuple[int, ...]) -> str:
    counts = Counter(u)
    parts = []
    for p in sorted(counts):
        parts.append(f"x_{p + 1}" + (f"^{counts[p]}" if counts[p] > 1 else ""))
    return "*".join(parts) if parts else "1"
