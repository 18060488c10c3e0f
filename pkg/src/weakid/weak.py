"""Weak-identity verdicts: plain, modulo a verbal subgroup, and along weak* chains.

A finite word set ``S`` is a set of weak identities of height ``N`` in ``G``
when no homomorphism ``F^N -> G`` keeps ``N`` chosen words of ``S`` (one per
factor, repeats allowed) all nontrivial.  :func:`check_weak` decides this by
running the counterexample search of :mod:`weakid.homsearch` once per
multiset of ``N`` words.
"""
from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from typing import Iterable, Mapping, Sequence

from .groups import FiniteGroup, evaluate_word
from .homsearch import MultiCopyAssignment, SearchBudget, SearchStats, find_noncollapsing_multicopy
from .subgroups import BudgetExceeded, Subgroup, generated_subgroup, quotient, verbal_image
from .words import IDENTITY, Endomorphism, Word, apply_endo, invert, multiply, parse_word

__all__ = [
    "TSubgroupGens",
    "Status",
    "Verdict",
    "HeightReport",
    "ChainReport",
    "SamplingBudget",
    "check_weak",
    "min_height",
    "default_cutoff",
    "check_weak_modulo",
    "verify_weak_star_chain",
    "t_subgroup_element",
    "sample_t_subgroup",
    "substitute",
    "substitution_generators",
    "substituted_verbal_image",
]


@dataclass(frozen=True)
class TSubgroupGens:
    """Finite generating set of a verbal subgroup; stored sorted and deduplicated.

    An empty list is normalized to the identity word (the trivial verbal subgroup).
    """

    words: tuple[Word, ...]

    def __init__(self, words: Iterable[Word | str] = ()):
        ws = sorted({parse_word(w) for w in words}, key=lambda w: (w.length(), w.syllables))
        object.__setattr__(self, "words", tuple(ws) or (IDENTITY,))

    @classmethod
    def of(cls, S: "TSubgroupGens | Iterable[Word | str] | str") -> "TSubgroupGens":
        if isinstance(S, TSubgroupGens):
            return S
        if isinstance(S, (str, Word)):
            return cls([S])
        return cls(S)

    def __iter__(self):
        return iter(self.words)

    def __len__(self):
        return len(self.words)

    def union(self, other: "TSubgroupGens") -> "TSubgroupGens":
        return TSubgroupGens(self.words + other.words)

    def __str__(self):
        return "{" + ", ".join(map(str, self.words)) + "}"


class Status(str, enum.Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    UNKNOWN = "UNKNOWN"


@dataclass
class Verdict:
    status: Status
    height: int
    group: FiniteGroup
    stats: SearchStats
    witness: MultiCopyAssignment | None = None
    witness_words: tuple[Word, ...] = ()
    modulo: dict | None = None
    message: str = ""

    @property
    def holds(self) -> bool:
        return self.status is Status.HOLDS

    def verify_witness(self) -> bool:
        return self.witness is not None and self.witness.verify(self.group, self.witness_words)

    def to_dict(self) -> dict:
        d = {
            "status": self.status.value,
            "height": self.height,
            "witness": None,
            "stats": self.stats.to_dict(),
        }
        if self.witness is not None:
            d["witness"] = [
                {**entry, "word": str(w)}
                for entry, w in zip(self.witness.to_json(self.group), self.witness_words)
            ]
        if self.modulo is not None:
            d["modulo"] = dict(self.modulo)
        if self.message:
            d["message"] = self.message
        return d


def check_weak(
    G: FiniteGroup,
    S,
    N: int,
    budget: SearchBudget | None = None,
    threads: int | None = 1,
) -> Verdict:
    """Is ``S`` a set of weak identities of height ``N`` in ``G``?"""
    if N < 1:
        raise ValueError("height must be >= 1")
    S = TSubgroupGens.of(S)
    stats = SearchStats()
    for selection in combinations_with_replacement(S.words, N):
        try:
            witness, st = find_noncollapsing_multicopy(G, selection, budget, threads)
        except BudgetExceeded as exc:
            if exc.stats is not None:
                stats.add(exc.stats)
            return Verdict(Status.UNKNOWN, N, G, stats, message=str(exc))
        stats.add(st)
        if witness is not None:
            return Verdict(Status.FAILS, N, G, stats, witness, tuple(selection))
    return Verdict(Status.HOLDS, N, G, stats)


def default_cutoff(G: FiniteGroup) -> int:
    return math.ceil(math.log2(G.order)) + 2


@dataclass
class HeightReport:
    height: int | None
    verdicts: list[Verdict]

    @property
    def unknown(self) -> bool:
        return any(v.status is Status.UNKNOWN for v in self.verdicts)

    def to_dict(self) -> dict:
        return {
            "height": self.height,
            "unknown": self.unknown,
            "verdicts": [v.to_dict() for v in self.verdicts],
        }


def min_height(
    G: FiniteGroup,
    S,
    cutoff: int | None = None,
    budget: SearchBudget | None = None,
    threads: int | None = 1,
) -> HeightReport:
    """Least ``N <= cutoff`` at which ``S`` holds, scanning ``N = 1, 2, ...``.

    Stops at the first UNKNOWN, leaving ``height`` as None.
    """
    cutoff = default_cutoff(G) if cutoff is None else cutoff
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    verdicts = []
    for N in range(1, cutoff + 1):
        v = check_weak(G, S, N, budget, threads)
        verdicts.append(v)
        if v.status is Status.HOLDS:
            return HeightReport(N, verdicts)
        if v.status is Status.UNKNOWN:
            break
    return HeightReport(None, verdicts)


def check_weak_modulo(
    G: FiniteGroup,
    S,
    H,
    N: int,
    budget: SearchBudget | None = None,
    threads: int | None = 1,
) -> Verdict:
    """``check_weak`` in the quotient of ``G`` by the verbal image of ``H``."""
    H = TSubgroupGens.of(H)
    try:
        image = verbal_image(G, H.words)
    except BudgetExceeded as exc:
        return Verdict(Status.UNKNOWN, N, G, SearchStats(), message=str(exc))
    Q = quotient(G, image)
    v = check_weak(Q.group, S, N, budget, threads)
    v.modulo = {
        "verbal_subgroup": str(H),
        "verbal_order": image.order,
        "quotient_order": Q.group.order,
    }
    return v


@dataclass
class ChainReport:
    steps: list[Verdict]
    chain: list[TSubgroupGens]

    @property
    def status(self) -> Status:
        if any(s.status is Status.FAILS for s in self.steps):
            return Status.FAILS
        if any(s.status is Status.UNKNOWN for s in self.steps):
            return Status.UNKNOWN
        return Status.HOLDS

    @property
    def failed_step(self) -> int | None:
        for i, s in enumerate(self.steps, start=1):
            if s.status is Status.FAILS:
                return i
        return None

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "failed_step": self.failed_step,
            "chain": [str(c) for c in self.chain],
            "steps": [s.to_dict() for s in self.steps],
        }


def verify_weak_star_chain(
    G: FiniteGroup,
    chain: Sequence,
    heights: Sequence[int],
    budget: SearchBudget | None = None,
    threads: int | None = 1,
) -> ChainReport:
    """Check each link ``chain[i-1]`` weak modulo ``chain[i]`` at ``heights[i-1]``."""
    chain = [TSubgroupGens.of(c) for c in chain]
    if len(chain) < 2:
        raise ValueError("a chain needs at least two verbal subgroups")
    if len(heights) != len(chain) - 1:
        raise ValueError("need one height per chain step")
    steps = [
        check_weak_modulo(G, chain[i - 1], chain[i], heights[i - 1], budget, threads)
        for i in range(1, len(chain))
    ]
    return ChainReport(steps, chain)


# --- elements of verbal subgroups -----------------------------------------------------

@dataclass(frozen=True)
class SamplingBudget:
    factors: int = 2      # endomorphic images multiplied per sample
    word_len: int = 3     # max length of each generator image
    vars: int = 3         # image words use g1 .. g_vars
    count: int = 4        # samples returned
    identity_first: bool = True  # start with the generators themselves


def t_subgroup_element(factors: Iterable[tuple[Word, Endomorphism, int]]) -> Word:
    """Product of ``phi(s)^sign`` over the given ``(s, phi, sign)`` triples."""
    out = IDENTITY
    for s, phi, sign in factors:
        img = apply_endo(phi, parse_word(s))
        out = multiply(out, img if sign > 0 else invert(img))
    return out


def _random_word(rng: random.Random, max_len: int, nvars: int) -> Word:
    letters = [rng.choice((1, -1)) * rng.randint(1, nvars) for _ in range(rng.randint(0, max_len))]
    return Word.from_letters(letters)


_REDRAWS = 20


def sample_t_subgroup(S, budget: SamplingBudget | None = None, seed: int = 0) -> list[Word]:
    """Pseudorandom elements of the verbal subgroup generated by ``S``."""
    S = TSubgroupGens.of(S)
    budget = budget or SamplingBudget()
    rng = random.Random(seed)
    out: list[Word] = []
    if budget.identity_first:
        out.extend(S.words[: budget.count])
    while len(out) < budget.count:
        # trivial products say nothing; redraw a few times before accepting one
        for _ in range(_REDRAWS):
            triples = []
            for _ in range(rng.randint(1, budget.factors)):
                s = rng.choice(S.words)
                phi = Endomorphism({v: _random_word(rng, budget.word_len, budget.vars) for v in s.variables()})
                triples.append((s, phi, rng.choice((1, -1))))
            w = t_subgroup_element(triples)
            if not w.is_identity():
                break
        out.append(w)
    return out


def substitute(f: Word, images: Mapping[int, Word]) -> Word:
    return apply_endo(Endomorphism(images), f)


def _reindex(h: Word, start: int) -> tuple[Word, int]:
    mapping = {v: start + i for i, v in enumerate(h.variables())}
    return Word(tuple((mapping[g], e) for g, e in h.syllables)), start + len(mapping)


def substitution_generators(
    f: Word | str,
    positions: Mapping[int, object],
    budget: SamplingBudget | None = None,
    seed: int = 0,
) -> TSubgroupGens:
    """Finite slice of the generators ``rho(f)``, ``rho(g_i)`` drawn from the verbal subgroup at ``i``.

    Substituted words are re-indexed onto variables above every index used by ``f``.
    """
    f = parse_word(f)
    budget = budget or SamplingBudget()
    keys = sorted(positions)
    if not set(keys) <= set(f.variables()):
        raise ValueError("substitution positions must be variables of f")
    pools = {
        i: sample_t_subgroup(positions[i], budget, seed + 7919 * n) for n, i in enumerate(keys)
    }
    out = []
    for c in range(budget.count):
        nxt = f.max_index() + 1
        images = {}
        for i in keys:
            images[i], nxt = _reindex(pools[i][c % len(pools[i])], nxt)
        out.append(substitute(f, images))
    return TSubgroupGens(out)


def substituted_verbal_image(G: FiniteGroup, f: Word | str, positions: Mapping[int, object]) -> Subgroup:
    """Exact image in ``G`` of the verbal subgroup generated by all substitutions into ``f``.

    Its values are ``f(x)`` with ``x_i`` ranging over the verbal image of the
    subgroup at ``i`` and the other variables over all of ``G``.
    """
    f = parse_word(f)
    variables = f.variables()
    doms = []
    for v in variables:
        if v in positions:
            doms.append(verbal_image(G, TSubgroupGens.of(positions[v]).words).elements)
        else:
            doms.append(list(range(G.order)))
    if math.prod(len(d) for d in doms) > 1 << 22:
        raise BudgetExceeded("substitution image enumeration too large")
    values = {evaluate_word(G, f, dict(zip(variables, xs))) for xs in product(*doms)}
    return generated_subgroup(G, values)
