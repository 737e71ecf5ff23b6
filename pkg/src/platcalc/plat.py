"""Plat tangles and plat-closed links.

Every trivial tangle is stored in plat normal form: standard caps
pairing punctures (2k-1, 2k) at the bottom, a braid word on 2b strands
read bottom to top, and 2b boundary punctures at the top.  Any such
datum is a trivial tangle, so the representation is total.  A PlatLink
caps the top with the same standard pattern.

Unions follow the fixed convention union(t, u) = plat(t.word * u.word^-1),
which realizes T cup mirror(U) through the bridge sphere; the constant
case T cup mirror(T) then freely reduces to the crossingless unlink.
"""

from __future__ import annotations

from dataclasses import dataclass

from platcalc.braid import BraidWord
from platcalc.errors import BridgeMismatch


@dataclass(frozen=True)
class PlatTangle:
    bridge_count: int
    word: BraidWord

    def __post_init__(self):
        if self.bridge_count < 1:
            raise ValueError("bridge_count must be positive")
        if self.word.strand_count != 2 * self.bridge_count:
            raise ValueError("word must act on 2b strands")

    @classmethod
    def from_tokens(cls, bridge_count: int, text: str, line: int = 1) -> "PlatTangle":
        return cls(bridge_count, BraidWord.from_tokens(text, 2 * bridge_count, line))

    @classmethod
    def trivial(cls, bridge_count: int) -> "PlatTangle":
        return cls(bridge_count, BraidWord(2 * bridge_count))


@dataclass(frozen=True)
class PlatLink:
    bridge_count: int
    word: BraidWord

    def __post_init__(self):
        if self.word.strand_count != 2 * self.bridge_count:
            raise ValueError("word must act on 2b strands")

    @property
    def crossing_count(self) -> int:
        return len(self.word)


def mirror(t: PlatTangle) -> PlatTangle:
    """Mirror image: the formal inverse word (reversed, signs flipped)."""
    return PlatTangle(t.bridge_count, t.word.inverse())


def union(t: PlatTangle, u: PlatTangle) -> PlatLink:
    """Plat closure of t.word * u.word^-1, the link T cup mirror(U)."""
    if t.bridge_count != u.bridge_count:
        raise BridgeMismatch(f"bridge counts {t.bridge_count} != {u.bridge_count}")
    return PlatLink(t.bridge_count, (t.word * u.word.inverse()).free_reduce())


class UnionFind:
    """Union-find with path compression over 0..n-1."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx

    def count(self, items=None) -> int:
        pool = range(len(self.parent)) if items is None else items
        return len({self.find(x) for x in pool})


def components(link: PlatLink) -> int:
    """Number of link components: cycles of caps plus the braid permutation."""
    b = link.bridge_count
    perm = link.word.permutation()
    uf = UnionFind(4 * b)  # 0..2b-1 bottom punctures, 2b..4b-1 top punctures
    for k in range(b):
        uf.union(2 * k, 2 * k + 1)
        uf.union(2 * b + 2 * k, 2 * b + 2 * k + 1)
    for p in range(1, 2 * b + 1):
        uf.union(p - 1, 2 * b + perm[p - 1] - 1)
    return uf.count()


def puncture_matching(t: PlatTangle) -> frozenset[frozenset[int]]:
    """Perfect matching of {1..2b}: p pairs q iff a strand of t joins them."""
    perm = t.word.permutation()
    return frozenset(
        frozenset((perm[2 * k], perm[2 * k + 1])) for k in range(t.bridge_count)
    )


def matching_pairs(t: PlatTangle) -> list[tuple[int, int]]:
    """puncture_matching as sorted pairs, convenient for iteration."""
    return sorted(tuple(sorted(pair)) for pair in puncture_matching(t))


def strand_partner(t: PlatTangle, puncture: int) -> int:
    """Other endpoint of the strand of t incident to the puncture."""
    for pair in puncture_matching(t):
        if puncture in pair:
            (a, b) = tuple(pair)
            return b if a == puncture else a
    raise ValueError(f"puncture {puncture} out of range")


def cycles_of_matchings(m1, m2) -> list[list[tuple[int, int, int]]]:
    """Alternating cycles of two perfect matchings on the same puncture set.

    Each cycle is a list of (puncture_from, puncture_to, which) with
    which = 0 for an m1 strand and 1 for an m2 strand; traversal
    alternates m1, m2, m1, ... starting at the smallest unused puncture.
    """
    n1 = {}
    n2 = {}
    for pair in m1:
        a, b = tuple(pair)
        n1[a], n1[b] = b, a
    for pair in m2:
        a, b = tuple(pair)
        n2[a], n2[b] = b, a
    seen = set()
    cycles = []
    for start in sorted(n1):
        if start in seen:
            continue
        cycle = []
        p = start
        which = 0
        while True:
            q = n1[p] if which == 0 else n2[p]
            cycle.append((p, q, which))
            seen.add(p)
            seen.add(q)
            p = q
            which ^= 1
            if p == start and which == 0:
                break
        cycles.append(cycle)
    return cycles
