"""
Packed words: surjections ``{1..n} -> {1..r}`` written as their value sequence.

A packed word of degree ``n`` and rank ``r`` is a face of the
``(n-1)``-dimensional permutahedron, equivalently a right coset
``S_{n_1,...,n_r} o sigma`` of a standard parabolic subgroup of ``S_n``.
Permutations are the packed words with ``rank == degree``; the empty word
``()`` is the unique element of degree 0.

All values are 1-based.  Composition is the composition of maps,
``compose(g, d)(i) == g(d(i))``.

>>> w = PackedWord((2, 1, 2))
>>> w.degree, w.rank
(3, 2)
>>> str(cross(PackedWord((1, 1)), PackedWord((1,))))
'[1,1,2]'
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import EmptyWord, NotPacked, NotPermutation, OutOfRange, ParseError

# A shuffle type / block structure: non-negative parts, zeros allowed.
Composition = tuple[int, ...]


@dataclass(frozen=True, order=True)
class PackedWord:
    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        if vals and (min(vals) < 1 or set(vals) != set(range(1, max(vals) + 1))):
            raise NotPacked(f"{list(vals)} is not a packed word")

    @property
    def degree(self) -> int:
        return len(self.values)

    @property
    def rank(self) -> int:
        return max(self.values, default=0)

    def is_permutation(self) -> bool:
        return self.rank == self.degree

    def is_empty(self) -> bool:
        return not self.values

    def fiber(self, value: int) -> tuple[int, ...]:
        """Positions (1-based) carrying ``value``."""
        return tuple(i for i, v in enumerate(self.values, 1) if v == value)

    def fibers(self) -> list[tuple[int, ...]]:
        out: list[list[int]] = [[] for _ in range(self.rank)]
        for i, v in enumerate(self.values, 1):
            out[v - 1].append(i)
        return [tuple(f) for f in out]

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    def __len__(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.values)) + "]"

    def __repr__(self) -> str:
        return f"PackedWord({self})"


EMPTY = PackedWord(())


def make(values: Iterable[int]) -> PackedWord:
    return PackedWord(tuple(values))


def parse(text: str) -> PackedWord:
    """Read ``[2,1,2]`` (brackets optional, ``[]`` is the empty word)."""
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    s = s.strip()
    if not s:
        return EMPTY
    try:
        vals = tuple(int(x) for x in s.split(","))
    except ValueError as exc:
        raise ParseError(f"cannot parse packed word {text!r}") from exc
    try:
        return PackedWord(vals)
    except NotPacked as exc:
        raise ParseError(str(exc)) from exc


def parse_composition(text: str) -> Composition:
    try:
        parts = tuple(int(x) for x in text.replace("(", "").replace(")", "").split(",") if x.strip())
    except ValueError as exc:
        raise ParseError(f"cannot parse composition {text!r}") from exc
    if any(p < 0 for p in parts):
        raise ParseError(f"negative part in {text!r}")
    return parts


def standardize(values: Sequence[int]) -> PackedWord:
    """Relabel the distinct values order-preservingly onto ``1..k``."""
    relabel = {v: i for i, v in enumerate(sorted(set(values)), 1)}
    return PackedWord(tuple(relabel[v] for v in values))


def compose(outer: PackedWord, inner: PackedWord) -> PackedWord:
    """``outer o inner``; the empty word when ``outer.degree != inner.rank``."""
    if outer.degree != inner.rank:
        return EMPTY
    ov = outer.values
    return PackedWord(tuple(ov[v - 1] for v in inner.values))


def compose_all(*words: PackedWord) -> PackedWord:
    """Compose right-to-left: ``compose_all(a, b, c) == a o b o c``."""
    out = words[-1]
    for w in reversed(words[:-1]):
        out = compose(w, out)
    return out


def cross(left: PackedWord, right: PackedWord) -> PackedWord:
    r = left.rank
    return PackedWord(left.values + tuple(v + r for v in right.values))


def cross_all(words: Iterable[PackedWord]) -> PackedWord:
    out = EMPTY
    for w in words:
        out = cross(out, w)
    return out


def identity(n: int) -> PackedWord:
    return PackedWord(tuple(range(1, n + 1)))


def t_map(i: int, n: int) -> PackedWord:
    """The merge ``t_i`` of ``P_{n,n-1}``: identifies ``i`` and ``i+1``."""
    if not 1 <= i <= n - 1:
        raise OutOfRange(f"t_{i} needs 1 <= i <= n-1 = {n - 1}")
    return PackedWord(tuple(j if j <= i else j - 1 for j in range(1, n + 1)))


def s_map(i: int, n: int) -> PackedWord:
    """Adjacent transposition swapping ``i`` and ``i+1`` in ``S_n``."""
    if not 1 <= i <= n - 1:
        raise OutOfRange(f"s_{i} needs 1 <= i <= n-1 = {n - 1}")
    vals = list(range(1, n + 1))
    vals[i - 1], vals[i] = vals[i], vals[i - 1]
    return PackedWord(tuple(vals))


def longest(n: int) -> PackedWord:
    return PackedWord(tuple(range(n, 0, -1)))


def one_block(n: int) -> PackedWord:
    return PackedWord((1,) * n)


def inverse(sigma: PackedWord) -> PackedWord:
    if not sigma.is_permutation():
        raise NotPermutation(f"{sigma} is not a permutation")
    inv = [0] * sigma.degree
    for i, v in enumerate(sigma.values, 1):
        inv[v - 1] = i
    return PackedWord(tuple(inv))


def inversions(sigma: PackedWord) -> int:
    if not sigma.is_permutation():
        raise NotPermutation(f"{sigma} is not a permutation")
    v = sigma.values
    return sum(1 for a, b in itertools.combinations(v, 2) if a > b)


def fiber_sizes(gamma: PackedWord) -> Composition:
    counts = [0] * gamma.rank
    for v in gamma.values:
        counts[v - 1] += 1
    return tuple(counts)


def monotone_factorize(gamma: PackedWord) -> tuple[PackedWord, PackedWord]:
    """
    Split ``gamma == nondecreasing o sigma`` with ``sigma`` of minimal length.

    ``sigma`` numbers the positions of fiber ``j`` consecutively, left to
    right, after the positions of fibers ``1..j-1``; being increasing inside
    each fiber is what makes it the shortest choice.
    """
    if gamma.is_empty():
        raise EmptyWord("monotone_factorize needs a non-empty word")
    sizes = fiber_sizes(gamma)
    offset = [0]
    for s in sizes:
        offset.append(offset[-1] + s)
    seen = [0] * gamma.rank
    sigma = []
    for v in gamma.values:
        seen[v - 1] += 1
        sigma.append(offset[v - 1] + seen[v - 1])
    return PackedWord(tuple(sorted(gamma.values))), PackedWord(tuple(sigma))


@dataclass(frozen=True)
class Coclass:
    """The right coset ``S_blocks o perm`` with ``perm`` its shortest element."""

    blocks: Composition
    perm: PackedWord

    def __post_init__(self):
        if any(b <= 0 for b in self.blocks) or sum(self.blocks) != self.perm.degree:
            raise OutOfRange(f"blocks {self.blocks} do not fit {self.perm}")
        if not self.perm.is_permutation():
            raise NotPermutation(f"{self.perm} is not a permutation")


def to_coclass(gamma: PackedWord) -> Coclass:
    _, sigma = monotone_factorize(gamma)
    return Coclass(fiber_sizes(gamma), sigma)


def from_coclass(c: Coclass) -> PackedWord:
    # value j for sigma(i) in the j-th block
    block_of = []
    for j, size in enumerate(c.blocks, 1):
        block_of.extend([j] * size)
    return PackedWord(tuple(block_of[s - 1] for s in c.perm.values))


def max_coclass_element(gamma: PackedWord) -> PackedWord:
    """Longest permutation ``tau`` with ``sorted(gamma) o tau == gamma``."""
    sizes = fiber_sizes(gamma)
    offset = list(itertools.accumulate(sizes))
    seen = [0] * gamma.rank
    tau = []
    for v in gamma.values:
        seen[v - 1] += 1
        tau.append(offset[v - 1] - seen[v - 1] + 1)
    return PackedWord(tuple(tau))


def coclass_elements(gamma: PackedWord) -> frozenset[PackedWord]:
    """All permutations in the coset: ``{tau : sorted(gamma) o tau == gamma}``."""
    if gamma.is_empty():
        raise EmptyWord("coclass_elements needs a non-empty word")
    _, sigma = monotone_factorize(gamma)
    sizes = fiber_sizes(gamma)
    # tau = y o sigma for y in the Young subgroup S_sizes
    out = set()
    blocks = []
    start = 0
    for s in sizes:
        blocks.append(list(itertools.permutations(range(start + 1, start + s + 1))))
        start += s
    for choice in itertools.product(*blocks):
        y = tuple(itertools.chain.from_iterable(choice))
        out.add(PackedWord(tuple(y[v - 1] for v in sigma.values)))
    return frozenset(out)


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[PackedWord, ...]:
    words: list[PackedWord] = []
    prefix: list[int] = []
    used = [0] * (n + 1)

    def extend(top: int, missing: int) -> None:
        # values below ``top`` not used yet must fit into the remaining slots
        left = n - len(prefix)
        if missing > left:
            return
        if left == 0:
            words.append(PackedWord(tuple(prefix)))
            return
        for v in range(1, n + 1):
            if v <= top:
                new_top, new_missing = top, missing - (used[v] == 0)
            else:
                new_top, new_missing = v, missing + (v - top - 1)
            used[v] += 1
            prefix.append(v)
            extend(new_top, new_missing)
            prefix.pop()
            used[v] -= 1

    extend(0, 0)
    return tuple(words)


def enumerate_words(n: int) -> list[PackedWord]:
    """All packed words of degree ``n``, lexicographic on values."""
    if n < 0:
        raise OutOfRange("degree must be non-negative")
    return list(_enumerate(n))


def enumerate_rank(n: int, r: int) -> list[PackedWord]:
    if not 1 <= r <= n:
        raise OutOfRange(f"rank {r} outside 1..{n}")
    return [w for w in _enumerate(n) if w.rank == r]


def permutations(n: int) -> list[PackedWord]:
    return [PackedWord(p) for p in itertools.permutations(range(1, n + 1))]


def factorial_product(sizes: Iterable[int]) -> int:
    return math.prod(math.factorial(s) for s in sizes)
