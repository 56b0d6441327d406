"""Finite posets over dense indices with per-element down-set bitmasks.

A subset of a poset is a plain ``int`` whose bit ``i`` marks element ``i``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import CycleError, UnknownElement


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


@dataclass(frozen=True, eq=False)
class Poset:
    """Immutable finite poset; ``down[i]`` is the mask of all ``j <= i``."""

    elements: tuple[str, ...]
    down: tuple[int, ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index = {e: i for i, e in enumerate(self.elements)}
        if len(index) != len(self.elements):
            raise ValueError("element identifiers must be unique")
        object.__setattr__(self, "_index", index)

    # construction -------------------------------------------------------

    @classmethod
    def from_relation(cls, elements: Sequence, pairs: Iterable[tuple]) -> Poset:
        """Order generated by ``pairs`` (lo, hi) under reflexive-transitive closure."""
        elements = tuple(str(e) for e in elements)
        index = {e: i for i, e in enumerate(elements)}
        if len(index) != len(elements):
            raise ValueError("element identifiers must be unique")
        n = len(elements)
        below = [1 << i for i in range(n)]
        for lo, hi in pairs:
            lo, hi = str(lo), str(hi)
            for e in (lo, hi):
                if e not in index:
                    raise UnknownElement(f"unknown element {e!r}")
            below[index[hi]] |= 1 << index[lo]
        # Warshall on rows: if j <= i then down(j) <= down(i)
        for k in range(n):
            kbit = 1 << k
            dk = below[k]
            for i in range(n):
                if below[i] & kbit:
                    below[i] |= dk
        for i in range(n):
            for j in bits(below[i] & ~(1 << i)):
                if below[j] >> i & 1:
                    raise CycleError(f"relation has a cycle through {elements[i]!r} and {elements[j]!r}")
        return cls(elements, tuple(below))

    @classmethod
    def from_covers(cls, elements: Sequence, covers: Iterable[tuple]) -> Poset:
        return cls.from_relation(elements, covers)

    # basic queries ------------------------------------------------------

    def __len__(self):
        return len(self.elements)

    def index(self, a) -> int:
        if isinstance(a, int) and not isinstance(a, bool):
            if 0 <= a < len(self.elements):
                return a
            raise UnknownElement(f"index {a} out of range")
        try:
            return self._index[str(a)]
        except KeyError:
            raise UnknownElement(f"unknown element {a!r}") from None

    def labels(self, mask: int) -> list[str]:
        return [self.elements[i] for i in bits(mask)]

    def mask(self, items: Iterable) -> int:
        return mask_of(self.index(a) for a in items)

    @property
    def full(self) -> int:
        return (1 << len(self.elements)) - 1

    def leq(self, a, b) -> bool:
        return bool(self.down[self.index(b)] >> self.index(a) & 1)

    def lt(self, a, b) -> bool:
        i, j = self.index(a), self.index(b)
        return i != j and bool(self.down[j] >> i & 1)

    @cached_property
    def up(self) -> tuple[int, ...]:
        n = len(self.elements)
        up = [0] * n
        for i in range(n):
            for j in bits(self.down[i]):
                up[j] |= 1 << i
        return tuple(up)

    @cached_property
    def comparable(self) -> tuple[int, ...]:
        return tuple(d | u for d, u in zip(self.down, self.up))

    @cached_property
    def lower_covers(self) -> tuple[int, ...]:
        covers = []
        for i, d in enumerate(self.down):
            strict = d & ~(1 << i)
            c = strict
            for j in bits(strict):
                c &= ~(self.down[j] & ~(1 << j))
            covers.append(c)
        return tuple(covers)

    def cover_pairs(self) -> list[tuple[int, int]]:
        return [(j, i) for i, c in enumerate(self.lower_covers) for j in bits(c)]

    def lower_neighbors(self, a) -> int:
        return self.lower_covers[self.index(a)]

    def minimal(self) -> int:
        return mask_of(i for i, d in enumerate(self.down) if d == 1 << i)

    # subsets ------------------------------------------------------------

    def is_antichain(self, B: int) -> bool:
        for i in bits(B):
            if B & self.comparable[i] & ~(1 << i):
                return False
        return True

    def generated_ideal(self, B: int) -> int:
        out = 0
        for i in bits(B):
            out |= self.down[i]
        return out

    def maximal_elements(self, B: int) -> int:
        out = 0
        for i in bits(B):
            if not B & self.up[i] & ~(1 << i):
                out |= 1 << i
        return out

    def is_ideal(self, B: int) -> bool:
        return self.generated_ideal(B) == B

    def antichains(self) -> Iterator[int]:
        """Every antichain once, depth-first in index-lexicographic order."""
        n = len(self.elements)
        comparable = self.comparable

        def extend(chosen: int, allowed: int) -> Iterator[int]:
            yield chosen
            for i in bits(allowed):
                higher = allowed & ~((2 << i) - 1)
                yield from extend(chosen | 1 << i, higher & ~comparable[i])

        yield from extend(0, (1 << n) - 1)

    def poset_ideals(self) -> list[int]:
        """All down-sets, sorted by size then mask (one per antichain)."""
        ideals = [self.generated_ideal(B) for B in self.antichains()]
        return sorted(ideals, key=lambda m: (m.bit_count(), m))

    def induced(self, mask: int) -> Poset:
        idx = list(bits(mask))
        pos = {i: k for k, i in enumerate(idx)}
        down = tuple(mask_of(pos[j] for j in bits(self.down[i] & mask)) for i in idx)
        return Poset(tuple(self.elements[i] for i in idx), down)

    def to_json(self) -> dict:
        return {
            "elements": list(self.elements),
            "covers": [[self.elements[lo], self.elements[hi]] for lo, hi in self.cover_pairs()],
        }
