"""Subgroups as bitmasks over element ids: closures, centralizers, verbal images, quotients."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .groups import FiniteGroup, GroupError, word_values
from .words import Word, parse_word

__all__ = [
    "Subgroup",
    "QuotientGroup",
    "NotNormal",
    "BudgetExceeded",
    "VERBAL_ASSIGNMENT_CAP",
    "generated_subgroup",
    "normal_closure",
    "centralizer",
    "verbal_image",
    "word_value_set",
    "quotient",
    "is_normal",
]

# |G|^k assignments enumerated per word by verbal_image
VERBAL_ASSIGNMENT_CAP = 1 << 24


class NotNormal(GroupError):
    pass


class BudgetExceeded(RuntimeError):
    """A search or enumeration hit its node, time or size budget."""

    def __init__(self, message: str, stats=None):
        super().__init__(message)
        self.stats = stats


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    mask: int

    @property
    def order(self) -> int:
        return bin(self.mask).count("1")

    @property
    def elements(self) -> list[int]:
        return self.parent.mask_to_ids(self.mask)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __len__(self):
        return self.order

    def __le__(self, other: "Subgroup") -> bool:
        return self.mask & ~other.mask == 0

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.mask == other.mask and self.parent is other.parent

    def __hash__(self):
        return hash(self.mask)

    def is_whole(self) -> bool:
        return self.mask == self.parent.full_mask

    def is_trivial(self) -> bool:
        return self.mask == 1

    def names(self) -> list[str]:
        return [self.parent.names[i] for i in self.elements]

    def to_json(self) -> list[int]:
        return self.elements

    def __repr__(self):
        return f"Subgroup(order={self.order} of {self.parent.label})"


def _mask(ids: Iterable[int]) -> int:
    m = 0
    for i in ids:
        m |= 1 << i
    return m


def generated_subgroup(G: FiniteGroup, elems: Iterable[int]) -> Subgroup:
    t = G.tlist
    gens = sorted(set(elems))
    seen = 1
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = t[x][g]
                if not seen >> y & 1:
                    seen |= 1 << y
                    nxt.append(y)
        frontier = nxt
    return Subgroup(G, seen)


def normal_closure(G: FiniteGroup, elems: Iterable[int]) -> Subgroup:
    t, inv = G.tlist, G.inverse
    conj = {t[t[g][x]][inv[g]] for x in set(elems) for g in range(G.order)}
    return generated_subgroup(G, conj)


def centralizer(G: FiniteGroup, P: Iterable[int]) -> Subgroup:
    cen = G.centralizer_masks
    m = G.full_mask
    for p in P:
        m &= cen[p]
    return Subgroup(G, m)


def is_normal(G: FiniteGroup, N: Subgroup) -> bool:
    t, inv = G.tlist, G.inverse
    members = N.elements
    return all(N.mask >> t[t[g][x]][inv[g]] & 1 for g in G.generators for x in members)


def word_value_set(G: FiniteGroup, w: Word, cap: int = VERBAL_ASSIGNMENT_CAP) -> set[int]:
    """All values of ``w`` in ``G`` over every assignment of its variables."""
    k = len(w.variables())
    if k >= 4 and G.order > 24:
        raise BudgetExceeded(f"word {w} has {k} variables; refusing |G|^{k} enumeration on order {G.order}")
    if G.order**k > cap:
        raise BudgetExceeded(f"{G.order}^{k} assignments exceed the enumeration cap {cap}")
    return set(np.unique(word_values(G, w)).tolist())


def verbal_image(G: FiniteGroup, S: Sequence[Word | str], cap: int = VERBAL_ASSIGNMENT_CAP) -> Subgroup:
    """Subgroup of ``G`` generated by all values of the words in ``S``."""
    values: set[int] = set()
    for w in S:
        values |= word_value_set(G, parse_word(w), cap)
    return generated_subgroup(G, values)


@dataclass(frozen=True)
class QuotientGroup:
    group: FiniteGroup
    projection: tuple[int, ...]
    kernel: Subgroup

    def to_dict(self) -> dict:
        return {
            "order": self.group.order,
            "kernel_order": self.kernel.order,
            "kernel": self.kernel.to_json(),
            "projection": list(self.projection),
            "names": list(self.group.names),
        }


def quotient(G: FiniteGroup, N: Subgroup) -> QuotientGroup:
    """``G/N`` with cosets numbered by their smallest member id."""
    if not is_normal(G, N):
        raise NotNormal("subgroup is not normal")
    t = G.tlist
    members = N.elements
    proj = [-1] * G.order
    reps: list[int] = []
    for x in range(G.order):
        if proj[x] >= 0:
            continue
        cid = len(reps)
        reps.append(x)
        for n in members:
            proj[t[x][n]] = cid
    table = [[proj[t[a][b]] for b in reps] for a in reps]
    if len(reps) == 1:
        names = ["1"]
    elif N.order == 1:
        names = list(G.names)
    else:
        names = [G.names[r] + "N" if r else "N" for r in reps]
    gens = sorted({proj[g] for g in G.generators} - {0}) or [0]
    Q = FiniteGroup(table, names, gens, f"{G.label}/N[{N.order}]")
    return QuotientGroup(Q, tuple(proj), N)
