"""Longest strictly descending centralizer chains over nested commuting sets.

Chain length counts distinct centralizers *including* the leading
``Cen({}) = G``, so abelian groups have length 1 and the commutator
``[g1, g2]`` is a weak identity of height at most the chain length.

The next element added to a commuting set ``P`` must lie in ``Cen(P)``, so the
rest of the chain depends only on the current centralizer.  The search
memoizes on that subgroup and keeps one representative (the smallest id) per
resulting centralizer.
"""
from __future__ import annotations

from dataclasses import dataclass

from .groups import FiniteGroup
from .subgroups import Subgroup

__all__ = ["CentralizerChain", "max_centralizer_chain", "bcs_height_bound", "IncompleteChain"]


class IncompleteChain(RuntimeError):
    pass


@dataclass
class CentralizerChain:
    group: FiniteGroup
    added: list[int]                 # element added at each step
    centralizers: list[Subgroup]     # Cen(P_0)=G, Cen(P_1), ...
    complete: bool = True
    nodes: int = 0

    @property
    def length(self) -> int:
        return len(self.centralizers)

    @property
    def sets(self) -> list[list[int]]:
        return [self.added[:i] for i in range(1, len(self.added) + 1)]

    def verify(self) -> bool:
        G = self.group
        cen = G.centralizer_masks
        if not self.centralizers or not self.centralizers[0].is_whole():
            return False
        for i, x in enumerate(self.added):
            if any(G.tlist[x][y] != G.tlist[y][x] for y in self.added[:i]):
                return False
            m = G.full_mask
            for y in self.added[: i + 1]:
                m &= cen[y]
            if m != self.centralizers[i + 1].mask:
                return False
            prev = self.centralizers[i].mask
            if m == prev or m & ~prev:
                return False
        return len(self.centralizers) == len(self.added) + 1

    def to_json(self) -> list[dict]:
        out = [{"added_element": None, "centralizer_order": self.centralizers[0].order}]
        for x, c in zip(self.added, self.centralizers[1:]):
            out.append({"added_element": self.group.names[x], "centralizer_order": c.order})
        return out


def max_centralizer_chain(G: FiniteGroup, cap: int = 10**6) -> CentralizerChain:
    """Canonical (lexicographically least) chain of maximal length.

    ``cap`` bounds the number of explored centralizer states; when hit, the
    best chain found so far is returned with ``complete=False``.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    cen = G.centralizer_masks
    memo: dict[int, tuple[int, int | None]] = {}
    nodes = [0]
    incomplete = [False]

    def best(mask: int) -> int:
        hit = memo.get(mask)
        if hit is not None:
            return hit[0]
        nodes[0] += 1
        if nodes[0] > cap:
            incomplete[0] = True
            return 1
        seen_next: set[int] = set()
        top, arg = 1, None
        for x in G.mask_to_ids(mask):
            nxt = mask & cen[x]
            if nxt == mask or nxt in seen_next:
                continue
            seen_next.add(nxt)
            length = 1 + best(nxt)
            if length > top:
                top, arg = length, x
        memo[mask] = (top, arg)
        return top

    best(G.full_mask)
    mask = G.full_mask
    added, cents = [], [Subgroup(G, mask)]
    while True:
        entry = memo.get(mask)
        if entry is None or entry[1] is None:
            break
        x = entry[1]
        mask &= cen[x]
        added.append(x)
        cents.append(Subgroup(G, mask))
    return CentralizerChain(G, added, cents, not incomplete[0], nodes[0])


def bcs_height_bound(G: FiniteGroup, cap: int = 10**6) -> int:
    """Maximal centralizer-chain length; bounds the height of ``[g1, g2]``."""
    chain = max_centralizer_chain(G, cap)
    if not chain.complete:
        raise IncompleteChain(f"centralizer chain search for {G.label} hit cap {cap}")
    return chain.length
