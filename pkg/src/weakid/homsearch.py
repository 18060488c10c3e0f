"""Exhaustive search for homomorphisms out of free groups and out of G itself.

The central routine, :func:`find_noncollapsing_multicopy`, looks for a
homomorphism ``F x ... x F -> G`` (one factor per target word) under which
every target word is nontrivial in its own factor.  Such a homomorphism is
the same thing as one assignment of generators per factor where images taken
from different factors commute.

Search order is canonical: copy by copy, variable by variable, element ids
ascending.  The candidates for a copy are restricted to the intersection of
the centralizers of all images already placed in earlier copies.
"""
from __future__ import annotations

import math
import multiprocessing as mp
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields
from itertools import product
from typing import Iterator, Mapping, Sequence

import numpy as np

from .groups import FiniteGroup, commutes, evaluate_word, word_values
from .subgroups import BudgetExceeded
from .words import Word, parse_word

__all__ = [
    "Assignment",
    "MultiCopyAssignment",
    "GroupEndomorphism",
    "SearchStats",
    "SearchBudget",
    "find_noncollapsing_multicopy",
    "endomorphisms",
    "product_homs_to_G",
    "ENDOMORPHISM_CAP",
    "resolve_threads",
]

ENDOMORPHISM_CAP = 24
LOOKAHEAD_CAP = 1 << 16
PARALLEL_MIN_WORK = 2048
_CHUNKS_PER_WORKER = 4

Assignment = Mapping[int, int]


def resolve_threads(threads: int | None) -> int:
    if threads is None:
        threads = int(os.environ.get("WEAKID_THREADS", "1") or 1)
    return max(1, int(threads))


@dataclass
class SearchStats:
    nodes_expanded: int = 0
    assignments_tested: int = 0
    prunes_by_centralizer: int = 0
    prunes_by_lookahead: int = 0
    prunes_by_symmetry: int = 0
    wall_time: float = 0.0

    def add(self, other: "SearchStats") -> "SearchStats":
        for f in fields(self):
            setattr(self, f.name, getattr(self, f.name) + getattr(other, f.name))
        return self

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class SearchBudget:
    node_cap: int = 10**8
    time_cap: float = 60.0


@dataclass(frozen=True)
class MultiCopyAssignment:
    """One assignment per direct factor; images from different copies commute."""

    copies: tuple[Mapping[int, int], ...]

    def __len__(self):
        return len(self.copies)

    def is_cross_commuting(self, G: FiniteGroup) -> bool:
        imgs = [set(c.values()) for c in self.copies]
        for j in range(len(imgs)):
            for k in range(j + 1, len(imgs)):
                if not all(commutes(G, x, y) for x in imgs[j] for y in imgs[k]):
                    return False
        return True

    def values(self, G: FiniteGroup, targets: Sequence[Word]) -> list[int]:
        return [evaluate_word(G, w, c) for w, c in zip(targets, self.copies)]

    def verify(self, G: FiniteGroup, targets: Sequence[Word]) -> bool:
        """True iff cross-commuting and every target is nontrivial in its copy."""
        if len(targets) != len(self.copies):
            return False
        return self.is_cross_commuting(G) and all(v != G.identity for v in self.values(G, targets))

    def to_json(self, G: FiniteGroup) -> list[dict]:
        return [
            {"copy": k + 1, "assignment": {f"g{i}": G.names[x] for i, x in sorted(c.items())}}
            for k, c in enumerate(self.copies)
        ]


# --- the search proper ----------------------------------------------------------

class _Stop(Exception):
    def __init__(self, reason: str):
        self.reason = reason


class _Searcher:
    """Depth-first search over one problem; reusable across top-level branches."""

    def __init__(self, G: FiniteGroup, targets: Sequence[Word]):
        self.G = G
        self.n = G.order
        self.t = G.tlist
        self.cen = G.centralizer_masks
        self.pw = G.powers
        self.targets = list(targets)
        self.vars = [w.variables() for w in targets]
        self.syl = []
        for w, vs in zip(targets, self.vars):
            pos = {v: i for i, v in enumerate(vs)}
            self.syl.append(tuple((pos[g], e) for g, e in w.syllables))
        # symmetry: copy k must be lexicographically >= the last earlier copy with the same word
        self.same_prev = []
        last: dict[Word, int] = {}
        for k, w in enumerate(targets):
            self.same_prev.append(last.get(w, -1))
            last[w] = k
        self.word_key = [self._word_slot(w) for w in targets]
        self._dom_cache: dict[int, tuple[int, ...]] = {}
        self._feasible_cache: dict[tuple[int, int], bool] = {}

    def _word_slot(self, w: Word) -> int:
        return self.targets.index(w)

    def domain(self, mask: int) -> tuple[int, ...]:
        d = self._dom_cache.get(mask)
        if d is None:
            d = tuple(self.G.mask_to_ids(mask))
            self._dom_cache[mask] = d
        return d

    def feasible(self, k: int, mask: int) -> bool:
        """Can target ``k`` be nontrivial with all its variables in ``mask``?  (Exact when small.)"""
        key = (self.word_key[k], mask)
        r = self._feasible_cache.get(key)
        if r is None:
            dom = self.domain(mask)
            if len(dom) ** len(self.vars[k]) > LOOKAHEAD_CAP:
                r = True
            else:
                r = bool(np.any(word_values(self.G, self.targets[k], dom) != 0))
            self._feasible_cache[key] = r
        return r

    def evaluate(self, k: int, imgs: list[int]) -> int:
        t, pw = self.t, self.pw
        v = 0
        for pos, e in self.syl[k]:
            p = pw[imgs[pos]]
            v = t[v][p[e % len(p)]]
        return v

    def prefilter(self, stats: SearchStats) -> bool:
        """False when the search is trivially empty (identity target or infeasible at top level)."""
        if any(not vs for vs in self.vars):
            return False
        for k in range(len(self.targets)):
            if not self.feasible(k, self.G.full_mask):
                stats.prunes_by_lookahead += 1
                return False
        return True

    def run_branch(self, x0: int, node_cap: int, deadline: float, stats: SearchStats):
        """Search with copy 0, variable 0 fixed to ``x0``; returns the witness images or None."""
        N = len(self.targets)
        imgs = [[0] * len(vs) for vs in self.vars]
        cen, n = self.cen, self.n
        full = self.G.full_mask
        same_prev = self.same_prev
        counter = [stats.nodes_expanded]

        def tick():
            counter[0] += 1
            if counter[0] > node_cap:
                stats.nodes_expanded = counter[0]
                raise _Stop("node_cap")
            if counter[0] & 1023 == 0 and time.time() > deadline:
                stats.nodes_expanded = counter[0]
                raise _Stop("time_cap")

        def place_copy(j: int, mask: int) -> bool:
            if j == N:
                return True
            for k in range(j, N):
                if not self.feasible(k, mask):
                    stats.prunes_by_lookahead += 1
                    return False
            return place_var(j, 0, mask, full, same_prev[j] >= 0)

        def place_var(j: int, i: int, mask: int, acc: int, tight: bool) -> bool:
            row = imgs[j]
            if i == len(row):
                stats.assignments_tested += 1
                if self.evaluate(j, row) == 0:
                    return False
                return place_copy(j + 1, mask & acc)
            dom = self.domain(mask)
            stats.prunes_by_centralizer += n - len(dom)
            lo = imgs[same_prev[j]][i] if tight else -1
            for x in dom:
                if x < lo:
                    stats.prunes_by_symmetry += 1
                    continue
                tick()
                row[i] = x
                if place_var(j, i + 1, mask, acc & cen[x], tight and x == lo):
                    return True
            return False

        tick()
        imgs[0][0] = x0
        found = place_var(0, 1, full, full & cen[x0], False)
        stats.nodes_expanded = counter[0]
        return [list(r) for r in imgs] if found else None


def _run_chunk(G: FiniteGroup, targets: Sequence[Word], branches: Sequence[int], node_cap: int, deadline: float):
    """Run branches in order; stop at the first witness or budget hit.

    Returns a list of ``(status, images_or_None, stats_dict)`` per branch run,
    where status is ``done``, ``found``, ``node_cap`` or ``time_cap``.
    Nodes count cumulatively within the chunk against ``node_cap``.
    """
    s = _Searcher(G, targets)
    out = []
    used = 0
    for x0 in branches:
        st = SearchStats()
        st.nodes_expanded = used
        try:
            imgs = s.run_branch(x0, node_cap, deadline, st)
        except _Stop as stop:
            st.nodes_expanded -= used
            out.append((stop.reason, None, st.to_dict()))
            return out
        st.nodes_expanded -= used
        used += st.nodes_expanded
        if imgs is not None:
            out.append(("found", imgs, st.to_dict()))
            return out
        out.append(("done", None, st.to_dict()))
    return out


_POOLS: dict[int, ProcessPoolExecutor] = {}


def _pool(workers: int) -> ProcessPoolExecutor:
    pool = _POOLS.get(workers)
    if pool is None:
        try:
            ctx = mp.get_context("fork")
        except ValueError:  # platforms without fork
            ctx = None
        pool = ProcessPoolExecutor(workers, mp_context=ctx)
        _POOLS[workers] = pool
    return pool


def find_noncollapsing_multicopy(
    G: FiniteGroup,
    targets: Sequence[Word | str],
    budget: SearchBudget | None = None,
    threads: int | None = 1,
    parallel_min_work: int = PARALLEL_MIN_WORK,
) -> tuple[MultiCopyAssignment | None, SearchStats]:
    """Find one assignment per target word, cross-commuting, with every target nontrivial.

    Returns ``(witness, stats)`` with ``witness=None`` once the search space is
    exhausted.  The witness is the canonically least one, independent of
    ``threads``.  Raises :class:`BudgetExceeded` (carrying the stats) when the
    node or time cap is hit; that is never reported as exhaustion.
    """
    budget = budget or SearchBudget()
    targets = [parse_word(w) for w in targets]
    if not targets:
        raise ValueError("need at least one target word")
    t0 = time.time()
    deadline = t0 + budget.time_cap
    stats = SearchStats()
    searcher = _Searcher(G, targets)
    if not searcher.prefilter(stats):
        stats.wall_time = time.time() - t0
        return None, stats

    branches = list(range(G.order))
    workers = resolve_threads(threads)
    work = G.order ** len(searcher.vars[0])
    if workers > 1 and work >= parallel_min_work and len(branches) > 1:
        nchunks = min(len(branches), workers * _CHUNKS_PER_WORKER)
        size = math.ceil(len(branches) / nchunks)
        chunks = [branches[i:i + size] for i in range(0, len(branches), size)]
        pool = _pool(workers)
        futures = [pool.submit(_run_chunk, G, targets, c, budget.node_cap, deadline) for c in chunks]
        results = []
        try:
            for fut in futures:
                res = fut.result()
                results.extend(res)
                if res and res[-1][0] != "done":
                    break
        finally:
            for fut in futures:
                fut.cancel()
    else:
        results = _run_chunk(G, targets, branches, budget.node_cap, deadline)

    used = 0
    for status, imgs, st in results:
        if status == "time_cap":
            stats.wall_time = time.time() - t0
            raise BudgetExceeded(f"time cap {budget.time_cap}s exceeded", stats)
        if status == "node_cap" or used + st["nodes_expanded"] > budget.node_cap:
            stats.nodes_expanded = budget.node_cap + 1
            stats.wall_time = time.time() - t0
            raise BudgetExceeded(f"node cap {budget.node_cap} exceeded", stats)
        used += st["nodes_expanded"]
        stats.add(SearchStats(**{**st, "wall_time": 0.0}))
        if status == "found":
            witness = MultiCopyAssignment(
                tuple({v: x for v, x in zip(vs, row)} for vs, row in zip(searcher.vars, imgs))
            )
            stats.wall_time = time.time() - t0
            return witness, stats
    stats.wall_time = time.time() - t0
    return None, stats


# --- endomorphisms of G ------------------------------------------------------------

@dataclass(frozen=True)
class GroupEndomorphism:
    generator_images: tuple[int, ...]
    full_map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.full_map[x]

    @property
    def image_mask(self) -> int:
        m = 0
        for y in self.full_map:
            m |= 1 << y
        return m

    def is_homomorphism(self, G: FiniteGroup) -> bool:
        f = np.asarray(self.full_map)
        return bool(f[0] == 0 and np.array_equal(f[G.table], G.table[f[:, None], f[None, :]]))

    def to_json(self, G: FiniteGroup) -> dict:
        return {
            "generator_images": [G.names[x] for x in self.generator_images],
            "image_order": bin(self.image_mask).count("1"),
        }


def _spanning_tree(G: FiniteGroup) -> list[tuple[int, int, int]]:
    """BFS factorization: ``(x, parent, generator slot)`` with ``x = parent * gens[slot]``."""
    t = G.tlist
    seen = {0}
    order = []
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for slot, g in enumerate(G.generators):
                y = t[x][g]
                if y not in seen:
                    seen.add(y)
                    order.append((y, x, slot))
                    nxt.append(y)
        frontier = nxt
    return order


def endomorphisms(G: FiniteGroup, cap: int = ENDOMORPHISM_CAP) -> list[GroupEndomorphism]:
    """All endomorphisms of ``G``, ordered by their tuple of generator images."""
    if G.order > cap:
        raise BudgetExceeded(f"endomorphism enumeration capped at order {cap}; group has order {G.order}")
    t = G.tlist
    tree = _spanning_tree(G)
    orders = G.element_orders
    cands = [[y for y in range(G.order) if orders[g] % orders[y] == 0] for g in G.generators]
    T = G.table
    out = []
    for imgs in product(*cands):
        f = [0] * G.order
        for x, parent, slot in tree:
            f[x] = t[f[parent]][imgs[slot]]
        fa = np.asarray(f)
        if np.array_equal(fa[T], T[fa[:, None], fa[None, :]]):
            out.append(GroupEndomorphism(tuple(imgs), tuple(f)))
    return out


def product_homs_to_G(
    G: FiniteGroup, cap: int = ENDOMORPHISM_CAP
) -> Iterator[tuple[GroupEndomorphism, GroupEndomorphism]]:
    """Homomorphisms ``G x G -> G`` as pairs ``(phi, psi)`` with elementwise commuting images.

    The pair acts by ``(a, b) -> phi(a) * psi(b)``.
    """
    ends = endomorphisms(G, cap)
    cen = G.centralizer_masks
    cen_of_image = []
    for e in ends:
        m = G.full_mask
        for y in set(e.full_map):
            m &= cen[y]
        cen_of_image.append(m)
    for i, phi in enumerate(ends):
        img = phi.image_mask
        for j, psi in enumerate(ends):
            if img & ~cen_of_image[j] == 0:
                yield phi, psi
