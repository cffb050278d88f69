"""
Generalized shuffles on packed words, junction words and wedges.

``SH(n_1, ..., n_r)`` is the set of packed words of degree ``n_1 + ... + n_r``
that are strictly increasing on each consecutive block.  A wedge
``wedge(omega, parts)`` glues packed words together under a shuffle
``omega`` of their ranks, writing a fresh top value at each junction; every
non-empty packed word is a wedge in exactly one way (``wedge_decompose``).
"""

from __future__ import annotations

import enum
import itertools
from functools import lru_cache
from typing import Sequence

from .errors import (
    EmptyWord,
    NotCompatibleShuffle,
    OutOfRange,
    SizeMismatch,
    SplitUnsupported,
    TooFewParts,
)
from .pword import (
    Composition,
    PackedWord,
    compose,
    cross,
    cross_all,
    enumerate_words,
    identity,
    inverse,
    standardize,
    t_map,
)


class ShuffleSplit(enum.Enum):
    GREATER = "succ"
    BULLET = "dot"
    LESS = "prec"
    ALL = "star"


def blocks_of(c: Sequence[int]) -> list[range]:
    """0-based index ranges of the consecutive blocks of ``c``."""
    out, start = [], 0
    for p in c:
        out.append(range(start, start + p))
        start += p
    return out


def is_shuffle(gamma: PackedWord, c: Sequence[int]) -> bool:
    if sum(c) != gamma.degree:
        raise SizeMismatch(f"composition {tuple(c)} does not sum to {gamma.degree}")
    v = gamma.values
    for block in blocks_of(c):
        for a, b in zip(block, block[1:]):
            if v[a] >= v[b]:
                return False
    return True


def _split_key(gamma: PackedWord, n: int, m: int) -> ShuffleSplit:
    a, b = gamma.values[n - 1], gamma.values[n + m - 1]
    if a < b:
        return ShuffleSplit.GREATER
    if a == b:
        return ShuffleSplit.BULLET
    return ShuffleSplit.LESS


@lru_cache(maxsize=None)
def _sh(c: Composition, split: ShuffleSplit) -> tuple[PackedWord, ...]:
    words = [w for w in enumerate_words(sum(c)) if is_shuffle(w, c)]
    if split is not ShuffleSplit.ALL:
        n, m = c
        words = [w for w in words if _split_key(w, n, m) is split]
    return tuple(words)


def enumerate_sh(c: Sequence[int], split: ShuffleSplit = ShuffleSplit.ALL) -> list[PackedWord]:
    """
    All ``(c)``-shuffles, lexicographic.  The ``GREATER``/``BULLET``/``LESS``
    splits compare the last letters of the two blocks of a binary ``c``; both
    blocks must be non-empty for those letters to exist.
    """
    c = tuple(c)
    if any(p < 0 for p in c):
        raise OutOfRange(f"negative part in {c}")
    if split is not ShuffleSplit.ALL:
        if len(c) != 2:
            raise SplitUnsupported(f"split {split.name} needs two blocks, got {c}")
        if 0 in c:
            raise SplitUnsupported(f"split {split.name} needs non-empty blocks, got {c}")
    return list(_sh(c, split))


def enumerate_sh_rank(c: Sequence[int], r: int) -> list[PackedWord]:
    return [w for w in enumerate_sh(c) if w.rank == r]


def xi(c: Sequence[int]) -> PackedWord:
    """Longest permutation shuffle of type ``c``: blocks placed in reverse."""
    c = tuple(c)
    vals = []
    for j, p in enumerate(c):
        before, after = sum(c[:j]), sum(c[j + 1:])
        vals.extend(k - before + after for k in range(before + 1, before + p + 1))
    return PackedWord(tuple(vals))


def merge_parts(c: Sequence[int], k: int) -> Composition:
    c = tuple(c)
    return c[: k - 1] + (c[k - 1] + c[k],) + c[k + 1:]


def alpha(c: Sequence[int], k: int) -> PackedWord:
    """The permutation with ``xi(c) == xi(merge_parts(c, k)) o alpha(c, k)``."""
    c = tuple(c)
    if not 1 <= k <= len(c) - 1:
        raise OutOfRange(f"k={k} outside 1..{len(c) - 1}")
    return compose(inverse(xi(merge_parts(c, k))), xi(c))


def block_factorize(word: PackedWord, c: Sequence[int]) -> tuple[PackedWord, list[PackedWord]]:
    """
    Write ``word == omega o (parts[0] x ... x parts[k])`` with ``omega`` a
    ``(rank parts[0], ..., rank parts[k])``-shuffle; this is unique.
    """
    c = tuple(c)
    if sum(c) != word.degree:
        raise SizeMismatch(f"composition {c} does not sum to {word.degree}")
    v = word.values
    parts, omega = [], []
    for block in blocks_of(c):
        seg = [v[i] for i in block]
        parts.append(standardize(seg))
        omega.extend(sorted(set(seg)))
    return PackedWord(tuple(omega)), parts


def sh_factorize(gamma: PackedWord, p: int) -> tuple[PackedWord, PackedWord, PackedWord]:
    """``gamma == g1 o (d1 x d2)`` with ``g1`` in ``SH(i, j)``, cut after ``p`` letters."""
    if not 0 <= p <= gamma.degree:
        raise OutOfRange(f"cut {p} outside 0..{gamma.degree}")
    g1, (d1, d2) = block_factorize(gamma, (p, gamma.degree - p))
    return g1, d1, d2


def z_word(c: Sequence[int]) -> PackedWord:
    """``1..n`` cut into the blocks of ``c`` with ``n+1`` written at each junction."""
    c = tuple(c)
    n = sum(c)
    vals: list[int] = []
    start = 0
    for j, p in enumerate(c):
        if j:
            vals.append(n + 1)
        vals.extend(range(start + 1, start + p + 1))
        start += p
    return PackedWord(tuple(vals))


def wedge(omega: PackedWord, parts: Sequence[PackedWord]) -> PackedWord:
    """``(omega o (parts[0] x ... x parts[k]) x 1_1) o z(degrees of parts)``."""
    if len(parts) < 2:
        raise TooFewParts("a wedge needs at least two parts")
    ranks = tuple(p.rank for p in parts)
    if omega.degree != sum(ranks) or not is_shuffle(omega, ranks):
        raise NotCompatibleShuffle(f"{omega} is not a {ranks}-shuffle")
    inner = compose(omega, cross_all(parts))
    return compose(cross(inner, identity(1)), z_word(tuple(p.degree for p in parts)))


def wedge_decompose(gamma: PackedWord) -> tuple[PackedWord, list[PackedWord]]:
    """Inverse of ``wedge``: the top value's positions mark the junctions."""
    if gamma.is_empty():
        raise EmptyWord("the empty word is not a wedge")
    r = gamma.rank
    sizes, rest, run = [], [], 0
    for v in gamma.values:
        if v == r:
            sizes.append(run)
            run = 0
        else:
            rest.append(v)
            run += 1
    sizes.append(run)
    return block_factorize(PackedWord(tuple(rest)), sizes)


def tj_into_wedge(
    j: int, omega: PackedWord, parts: Sequence[PackedWord]
) -> tuple[PackedWord, list[PackedWord]]:
    """
    Wedge presentation of ``t_j o wedge(omega, parts)`` for ``j`` below the
    two top values.

    If ``t_j o omega`` is still a shuffle the parts are untouched.  Otherwise
    ``j`` and ``j+1`` sit in a common block ``i``; that part is merged at the
    position of ``j`` inside the block and the repeated letter is dropped
    from ``omega``.
    """
    if not 1 <= j <= omega.rank - 1:
        raise OutOfRange(f"j={j} must lie in 1..{omega.rank - 1}")
    ranks = tuple(p.rank for p in parts)
    tj = t_map(j, omega.rank)
    merged = compose(tj, omega)
    if is_shuffle(merged, ranks):
        return merged, list(parts)
    new_omega: list[int] = []
    new_parts: list[PackedWord] = []
    for block, part in zip(blocks_of(ranks), parts):
        seg = [omega.values[i] for i in block]
        if j in seg and j + 1 in seg:
            pos = seg.index(j) + 1
            new_parts.append(compose(t_map(pos, part.rank), part))
            new_omega.extend(sorted({tj(v) for v in seg}))
        else:
            new_parts.append(part)
            new_omega.extend(tj(v) for v in seg)
    return PackedWord(tuple(new_omega)), new_parts


def _sh_compose_union(outer_split, inner_split, n, m, r, left_assoc):
    """
    ``U_j SH^outer(j, r) o (SH^inner(n, m) x 1_r)`` when ``left_assoc``,
    else ``U_i SH^outer(n, i) o (1_n x SH^inner(m, r))``; kept as a list so
    repeated words stay visible.
    """
    out = []
    if left_assoc:
        for eps in enumerate_sh((n, m), inner_split):
            lifted = cross(eps, identity(r))
            for w in enumerate_sh((eps.rank, r), outer_split):
                out.append(compose(w, lifted))
    else:
        for eps in enumerate_sh((m, r), inner_split):
            lifted = cross(identity(n), eps)
            for w in enumerate_sh((n, eps.rank), outer_split):
                out.append(compose(w, lifted))
    return out


def _same_set(*sides: list[PackedWord]) -> bool:
    if any(len(s) != len(set(s)) for s in sides):
        return False
    first = set(sides[0])
    return all(set(s) == first for s in sides[1:])


def sh_associativity_check(n: int, m: int, r: int) -> bool:
    A = ShuffleSplit.ALL
    whole = enumerate_sh((n, m, r))
    left = _sh_compose_union(A, A, n, m, r, left_assoc=True)
    right = _sh_compose_union(A, A, n, m, r, left_assoc=False)
    return _same_set(whole, left, right)


G, B, L, A = ShuffleSplit.GREATER, ShuffleSplit.BULLET, ShuffleSplit.LESS, ShuffleSplit.ALL

# (outer, inner) on the right-nested side == (outer, inner) on the left-nested side
SPLIT_IDENTITIES: tuple[tuple[tuple[ShuffleSplit, ShuffleSplit], tuple[ShuffleSplit, ShuffleSplit]], ...] = (
    ((G, G), (G, A)),
    ((G, L), (L, G)),
    ((L, A), (L, L)),
    ((B, B), (B, B)),
    ((G, B), (B, G)),
    ((B, G), (B, L)),
    ((B, L), (L, B)),
)


def sh_split_identity(index: int, n: int, m: int, r: int) -> bool:
    """One of the seven split identities (``index`` in ``1..7``)."""
    (ro, ri), (lo, li) = SPLIT_IDENTITIES[index - 1]
    right = _sh_compose_union(ro, ri, n, m, r, left_assoc=False)
    left = _sh_compose_union(lo, li, n, m, r, left_assoc=True)
    return _same_set(right, left)


def sh_split_identities_check(n: int, m: int, r: int) -> bool:
    # the splits need non-empty blocks; a zero size makes every identity vacuous
    if 0 in (n, m, r):
        return True
    return all(sh_split_identity(i, n, m, r) for i in range(1, 8))


def _compose_over(outers_for, inners: list[PackedWord], lift) -> list[PackedWord]:
    out = []
    for eps in inners:
        lifted = lift(eps)
        for w in outers_for(eps.rank):
            out.append(compose(w, lifted))
    return out


def varios_one(r: int, ss: Sequence[int]) -> bool:
    """``SH(r, s_0..s_h)`` from the right-nested and left-nested splittings."""
    ss = tuple(ss)
    whole = enumerate_sh((r,) + ss)
    right = _compose_over(
        lambda j: enumerate_sh((r, j)), enumerate_sh(ss), lambda e: cross(identity(r), e)
    )
    tail = sum(ss[1:])
    left = _compose_over(
        lambda j: enumerate_sh((j,) + ss[1:]),
        enumerate_sh((r, ss[0])),
        lambda e: cross(e, identity(tail)),
    )
    return _same_set(whole, right, left)


def varios_two(rs: Sequence[int], ss: Sequence[int]) -> bool:
    """Shuffling two shuffles equals merging the two innermost blocks first."""
    rs, ss = tuple(rs), tuple(ss)
    left = []
    for a in enumerate_sh(rs):
        for b in enumerate_sh(ss):
            ab = cross(a, b)
            for w in enumerate_sh((a.rank, b.rank)):
                left.append(compose(w, ab))
    head, tail = sum(rs[:-1]), sum(ss[1:])
    right = _compose_over(
        lambda i: enumerate_sh(rs[:-1] + (i,) + ss[1:]),
        enumerate_sh((rs[-1], ss[0])),
        lambda e: cross(cross(identity(head), e), identity(tail)),
    )
    return _same_set(left, right)


def varios_three(rs: Sequence[int], s: int) -> bool:
    """``SH(r_0..r_k, s)`` from the left-nested and right-nested splittings."""
    rs = tuple(rs)
    whole = enumerate_sh(rs + (s,))
    left = _compose_over(
        lambda j: enumerate_sh((j, s)), enumerate_sh(rs), lambda e: cross(e, identity(s))
    )
    head = sum(rs[:-1])
    right = _compose_over(
        lambda j: enumerate_sh(rs[:-1] + (j,)),
        enumerate_sh((rs[-1], s)),
        lambda e: cross(identity(head), e),
    )
    return _same_set(whole, left, right)


def compositions_upto(total: int, max_len: int, min_len: int = 1):
    """All tuples of non-negative parts with ``min_len <= len <= max_len`` and sum ``<= total``."""
    for length in range(min_len, max_len + 1):
        for parts in itertools.product(range(total + 1), repeat=length):
            if sum(parts) <= total:
                yield parts


def varios_identities_check(total: int = 4, max_len: int = 3) -> bool:
    """All three multi-block identities for every size tuple of total ``<= total``."""
    for r, *ss in compositions_upto(total, max_len + 1, 2):
        if not varios_one(r, ss):
            return False
    for rs in compositions_upto(total, max_len):
        for ss in compositions_upto(total - sum(rs), max_len):
            if not varios_two(rs, ss):
                return False
    for *rs, s in compositions_upto(total, max_len + 1, 2):
        if not varios_three(rs, s):
            return False
    return True
