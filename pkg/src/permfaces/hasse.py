"""Finite posets given by generating relations, stored as reachability bitsets."""

from __future__ import annotations

import graphlib
from typing import Generic, Hashable, Iterable, Sequence, TypeVar

from .errors import PermfacesError, UnknownElement

T = TypeVar("T", bound=Hashable)


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class NotAPoset(PermfacesError):
    """The generating relation has a directed cycle."""


class HasseDiagram(Generic[T]):
    """
    Poset on ``elements`` generated by strict relations ``a < b``.

    ``covers`` holds index pairs ``(lower, upper)`` of the transitive
    reduction.  ``leq``/``interval`` answer from the reflexive-transitive
    closure, never from the raw generators.
    """

    def __init__(self, elements: Sequence[T], relations: Iterable[tuple[T, T]]):
        self.elements: list[T] = list(elements)
        self.index: dict[T, int] = {e: i for i, e in enumerate(self.elements)}
        n = len(self.elements)
        succ: list[set[int]] = [set() for _ in range(n)]
        for a, b in relations:
            ia, ib = self._idx(a), self._idx(b)
            if ia == ib:
                raise NotAPoset(f"reflexive generator at {a}")
            succ[ia].add(ib)
        sorter = graphlib.TopologicalSorter({i: succ[i] for i in range(n)})
        try:
            # successors come out first
            order = list(sorter.static_order())
        except graphlib.CycleError as exc:
            raise NotAPoset(f"cycle through {[str(self.elements[i]) for i in exc.args[1]]}") from exc
        up = [0] * n
        for i in order:
            acc = 0
            for j in succ[i]:
                acc |= (1 << j) | up[j]
            up[i] = acc
        down = [0] * n
        for i in reversed(order):
            for j in succ[i]:
                down[j] |= (1 << i) | down[i]
        self._up = up
        self._down = down
        covers = set()
        for i in range(n):
            above_succ = 0
            for j in succ[i]:
                above_succ |= up[j]
            for j in succ[i]:
                if not (above_succ >> j) & 1:
                    covers.add((i, j))
        self.covers: frozenset[tuple[int, int]] = frozenset(covers)

    def _idx(self, x: T) -> int:
        try:
            return self.index[x]
        except KeyError:
            raise UnknownElement(f"{x} is not an element of this diagram") from None

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.index

    def leq(self, a: T, b: T) -> bool:
        ia, ib = self._idx(a), self._idx(b)
        return ia == ib or bool((self._up[ia] >> ib) & 1)

    def lt(self, a: T, b: T) -> bool:
        return a != b and self.leq(a, b)

    def up_mask(self, a: T) -> int:
        """Bitmask of ``{x : a <= x}``."""
        ia = self._idx(a)
        return self._up[ia] | (1 << ia)

    def down_mask(self, b: T) -> int:
        ib = self._idx(b)
        return self._down[ib] | (1 << ib)

    def members(self, mask: int) -> list[T]:
        return [self.elements[i] for i in iter_bits(mask)]

    def interval(self, a: T, b: T) -> list[T]:
        """``{x : a <= x <= b}`` in element order."""
        return self.members(self.up_mask(a) & self.down_mask(b))

    def up_set(self, a: T) -> list[T]:
        return self.members(self.up_mask(a))

    def down_set(self, b: T) -> list[T]:
        return self.members(self.down_mask(b))

    def strict_pairs(self) -> set[tuple[int, int]]:
        return {(i, j) for i, mask in enumerate(self._up) for j in iter_bits(mask)}

    def relation_count(self) -> int:
        return sum(bin(m).count("1") for m in self._up)

    def cover_pairs(self) -> list[tuple[T, T]]:
        return sorted(
            ((self.elements[i], self.elements[j]) for i, j in self.covers),
            key=lambda p: (self.index[p[0]], self.index[p[1]]),
        )

    def contained_in(self, other: "HasseDiagram[T]") -> bool:
        """Every strict relation of ``self`` holds in ``other``."""
        for i, mask in enumerate(self._up):
            a = self.elements[i]
            for j in iter_bits(mask):
                if not other.leq(a, self.elements[j]):
                    return False
        return True

    def same_order(self, other: "HasseDiagram[T]") -> bool:
        return set(self.elements) == set(other.elements) and self.contained_in(other) and other.contained_in(self)
