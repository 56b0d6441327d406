"""Meet-semilattices, join-irreducibles and the map ``ell`` into poset ideals.

``ell(a)`` is the set of join-irreducible elements below ``a``, stored as a
bitmask over the positions of the join-irreducibles (in the element order
of the input).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from itertools import combinations
from typing import Sequence

from .config import DEFAULT_LIMITS, Limits
from .errors import (
    EmptyInput,
    NotIntersectionClosed,
    NotMeetSemilattice,
    TooLarge,
    UnknownElement,
)
from .poset import Poset, bits, is_subset, mask_of


@dataclass(frozen=True)
class SetFamily:
    ground: tuple[str, ...]
    sets: tuple[int, ...]

    @classmethod
    def from_lists(cls, ground: Sequence, sets: Sequence[Sequence]) -> SetFamily:
        ground = tuple(str(g) for g in ground)
        index = {g: i for i, g in enumerate(ground)}
        if len(index) != len(ground):
            raise ValueError("ground identifiers must be unique")
        masks = []
        for s in sets:
            m = 0
            for x in s:
                x = str(x)
                if x not in index:
                    raise UnknownElement(f"set member {x!r} is not in the ground set")
                m |= 1 << index[x]
            masks.append(m)
        return cls(ground, tuple(masks))

    def label(self, mask: int) -> str:
        return set_label([self.ground[i] for i in bits(mask)], self.ground)

    def to_json(self) -> dict:
        return {"ground": list(self.ground), "sets": [[self.ground[i] for i in bits(m)] for m in self.sets]}


def set_label(members: Sequence[str], ground: Sequence[str]) -> str:
    """``"123"`` when every ground label is one character, else ``"{a,b}"``."""
    compact = all(len(g) == 1 for g in ground) and "0" not in ground
    if compact:
        return "".join(members) if members else "0"
    return "{" + ",".join(members) + "}"


@dataclass(frozen=True, eq=False)
class MeetSemilattice:
    """A validated finite meet-semilattice.

    ``joinirr`` holds indices into ``order``; ``ell[a]`` is a mask over
    positions in ``joinirr``.
    """

    order: Poset
    bottom: int
    joinirr: tuple[int, ...]
    ell: tuple[int, ...]
    meet_table: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.order)

    @property
    def elements(self) -> tuple[str, ...]:
        return self.order.elements

    @property
    def n(self) -> int:
        """Number of join-irreducible elements."""
        return len(self.joinirr)

    @cached_property
    def jposet(self) -> Poset:
        """The join-irreducibles with the induced order."""
        return self.order.induced(mask_of(self.joinirr))

    @cached_property
    def ell_index(self) -> dict[int, int]:
        return {m: a for a, m in enumerate(self.ell)}

    def index(self, a) -> int:
        return self.order.index(a)

    def meet(self, a, b) -> int:
        return self.meet_table[self.index(a)][self.index(b)]

    def meet_all(self, items, start: int | None = None) -> int:
        """Fold ``meet`` over ``items`` in the given order; ``start`` for empty input."""
        items = [self.index(a) for a in items]
        if not items:
            if start is None:
                raise ValueError("meet of an empty family needs a start element")
            return start
        return reduce(lambda x, y: self.meet_table[x][y], items)

    def lower_neighbors(self, a) -> int:
        return self.order.lower_neighbors(a)

    def n_lower(self, a) -> int:
        return self.order.lower_covers[self.index(a)].bit_count()

    def jlabels(self, pmask: int) -> list[str]:
        """Element ids of the join-irreducibles in a P-mask."""
        return [self.order.elements[self.joinirr[k]] for k in bits(pmask)]

    def element_of_ell(self, pmask: int) -> int | None:
        return self.ell_index.get(pmask)

    def interval(self, lo: int, hi: int) -> int:
        return self.order.up[lo] & self.order.down[hi]

    # meet-distributivity ---------------------------------------------

    def meet_distributivity(self) -> tuple[bool, str | None]:
        """Check that every ``[meet of lower neighbours of b, b]`` is boolean.

        Returns ``(ok, witness)`` with the first failing element as witness.
        """
        for b in range(len(self)):
            if b == self.bottom:
                continue
            nbrs = list(bits(self.order.lower_covers[b]))
            base = self.meet_all(nbrs)
            images = set()
            for r in range(len(nbrs) + 1):
                for T in combinations(nbrs, r):
                    images.add(self.meet_all(T, start=b))
            expected = set(bits(self.interval(base, b)))
            if len(images) != 1 << len(nbrs) or images != expected:
                return False, self.elements[b]
        return True, None

    def is_meet_distributive(self) -> bool:
        return self.meet_distributivity()[0]

    def embedding_check(self) -> bool:
        """Second detector: ``ell`` is a cover-preserving meet-embedding into J(P)."""
        ell = self.ell
        image = set(ell)
        N = len(self)
        for a in range(N):
            for b in range(a + 1, N):
                inter = ell[a] & ell[b]
                if inter not in image or ell[self.meet_table[a][b]] != inter:
                    return False
        for lo, hi in self.order.cover_pairs():
            if (ell[hi] & ~ell[lo]).bit_count() != 1:
                return False
        return True

    # distributive closure ----------------------------------------------

    def distributive_closure(self, limits: Limits = DEFAULT_LIMITS) -> MeetSemilattice:
        """J(P) over this semilattice's join-irreducibles, as an inclusion-ordered family."""
        P = self.jposet
        family = SetFamily(P.elements, tuple(P.poset_ideals()))
        return from_set_family(family, limits=limits)

    def to_json(self) -> dict:
        return self.order.to_json()


def validate(P: Poset, limits: Limits = DEFAULT_LIMITS) -> MeetSemilattice:
    """Check that ``P`` is a meet-semilattice and compute its meet table and ``ell``."""
    N = len(P)
    if N == 0:
        raise EmptyInput("a meet-semilattice needs at least one element")
    by_down = {d: i for i, d in enumerate(P.down)}
    table = [[0] * N for _ in range(N)]
    for a in range(N):
        table[a][a] = a
        for b in range(a + 1, N):
            common = P.down[a] & P.down[b]
            m = by_down.get(common)
            if m is None:
                tops = P.maximal_elements(common)
                raise NotMeetSemilattice(
                    f"{P.elements[a]!r} and {P.elements[b]!r} have "
                    f"{tops.bit_count()} maximal lower bounds",
                    pair=(P.elements[a], P.elements[b]),
                )
            table[a][b] = table[b][a] = m
    minimal = list(bits(P.minimal()))
    # a unique glb for every pair already forces a unique minimum
    bottom = minimal[0]
    joinirr = tuple(i for i, c in enumerate(P.lower_covers) if c.bit_count() == 1)
    if len(joinirr) > limits.max_ground:
        raise TooLarge(f"{len(joinirr)} join-irreducibles exceed max_ground={limits.max_ground}")
    jmask = mask_of(joinirr)
    pos = {j: k for k, j in enumerate(joinirr)}
    ell = tuple(mask_of(pos[j] for j in bits(P.down[a] & jmask)) for a in range(N))
    return MeetSemilattice(P, bottom, joinirr, ell, tuple(tuple(r) for r in table))


def from_set_family(F: SetFamily, limits: Limits = DEFAULT_LIMITS) -> MeetSemilattice:
    """Semilattice of an intersection-closed family ordered by inclusion."""
    if not F.sets:
        raise EmptyInput("the set family is empty")
    if len(F.ground) > limits.max_ground:
        raise TooLarge(f"ground set of {len(F.ground)} exceeds max_ground={limits.max_ground}")
    sets = list(F.sets)
    if len(set(sets)) != len(sets):
        raise ValueError("sets in a family must be distinct")
    present = set(sets)
    for s, t in combinations(sets, 2):
        if s & t not in present:
            raise NotIntersectionClosed(
                f"{F.label(s)} and {F.label(t)} meet in {F.label(s & t)}, which is missing",
                pair=(F.label(s), F.label(t)),
            )
    names = [F.label(s) for s in sets]
    if len(set(names)) != len(names):
        names = ["{" + ",".join(F.ground[i] for i in bits(s)) + "}" for s in sets]
    down = tuple(mask_of(j for j, t in enumerate(sets) if is_subset(t, s)) for s in sets)
    L = validate(Poset(tuple(names), down), limits=limits)
    # meets must be realized by intersection and ell by inclusion of join-irreducible sets
    for a, b in combinations(range(len(sets)), 2):
        assert sets[L.meet_table[a][b]] == sets[a] & sets[b]
    for a, s in enumerate(sets):
        by_inclusion = mask_of(k for k, j in enumerate(L.joinirr) if is_subset(sets[j], s))
        assert by_inclusion == L.ell[a]
    return L


def boolean_lattice(n: int) -> MeetSemilattice:
    ground = [str(i + 1) for i in range(n)]
    return from_set_family(SetFamily(tuple(ground), tuple(range(1 << n))))
