"""Discrimination: finite groups by exhausting ``Hom(G x G, G)``, free-abelian groups by
integer-matrix search.

For a finite group the set of *all* nontrivial elements of ``G x G`` is the
hardest instance, so ``G`` is discriminating exactly when one homomorphism
``G x G -> G`` kills none of them.  Homomorphisms ``G x G -> G`` are pairs of
endomorphisms with commuting images acting by ``(a, b) -> phi(a) psi(b)``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

import numpy as np

from .groups import FiniteGroup
from .homsearch import ENDOMORPHISM_CAP, GroupEndomorphism, product_homs_to_G
from .subgroups import BudgetExceeded
from .words import Word, exponent_sums, parse_word

__all__ = [
    "DiscStatus",
    "DiscVerdict",
    "FreeAbelianGroup",
    "DiscriminationMap",
    "AbelianVerdict",
    "is_discriminating_finite",
    "verify_certificate",
    "find_separating_matrix",
    "extend_discrimination",
    "abelian_weak_equals_identity",
    "abelian_word_value",
]


class DiscStatus(str, enum.Enum):
    DISCRIMINATING = "DISCRIMINATING"
    NOT_DISCRIMINATING = "NOT_DISCRIMINATING"
    UNKNOWN = "UNKNOWN"


HomPair = tuple[GroupEndomorphism, GroupEndomorphism]


@dataclass
class DiscVerdict:
    status: DiscStatus
    group: FiniteGroup
    certificate: list[tuple[int, int]] = field(default_factory=list)
    witness: HomPair | None = None
    homs_checked: int = 0
    message: str = ""

    def to_dict(self) -> dict:
        G = self.group
        d = {"status": self.status.value, "group": G.label, "homs_checked": self.homs_checked}
        d["certificate"] = [f"({G.names[a]},{G.names[b]})" for a, b in self.certificate]
        d["witness"] = None
        if self.witness is not None:
            d["witness"] = {"phi": self.witness[0].to_json(G), "psi": self.witness[1].to_json(G)}
        if self.message:
            d["message"] = self.message
        return d


def _kill_masks(G: FiniteGroup, pairs: Sequence[HomPair]) -> list[int]:
    """Bit ``a*n + b`` of mask ``k`` is set iff pair ``k`` sends ``(a, b)`` to the identity."""
    T = G.table
    out = []
    for phi, psi in pairs:
        vals = T[np.asarray(phi.full_map)[:, None], np.asarray(psi.full_map)[None, :]]
        bits = np.packbits((vals == 0).ravel(), bitorder="little")
        out.append(int.from_bytes(bits.tobytes(), "little"))
    return out


def is_discriminating_finite(G: FiniteGroup, cap: int = ENDOMORPHISM_CAP) -> DiscVerdict:
    try:
        pairs = list(product_homs_to_G(G, cap))
    except BudgetExceeded as exc:
        return DiscVerdict(DiscStatus.UNKNOWN, G, message=str(exc))
    n = G.order
    nontrivial = ((1 << (n * n)) - 1) & ~1
    kills = [k & nontrivial for k in _kill_masks(G, pairs)]
    for pair, k in zip(pairs, kills):
        if k == 0:
            return DiscVerdict(DiscStatus.DISCRIMINATING, G, witness=pair, homs_checked=len(pairs))
    # greedy removal down to an irreducible unseparable subset
    cert = nontrivial
    for idx in range(1, n * n):
        trial = cert & ~(1 << idx)
        if all(k & trial for k in kills):
            cert = trial
    elems = [divmod(i, n) for i in range(n * n) if cert >> i & 1]
    return DiscVerdict(DiscStatus.NOT_DISCRIMINATING, G, certificate=elems, homs_checked=len(pairs))


def verify_certificate(G: FiniteGroup, certificate: Sequence[tuple[int, int]], cap: int = ENDOMORPHISM_CAP) -> bool:
    """Every homomorphism ``G x G -> G`` kills some certificate element (all nontrivial)."""
    if not certificate or any(a == 0 and b == 0 for a, b in certificate):
        return False
    t = G.tlist
    for phi, psi in product_homs_to_G(G, cap):
        if not any(t[phi(a)][psi(b)] == 0 for a, b in certificate):
            return False
    return True


# --- free abelian groups --------------------------------------------------------

@dataclass(frozen=True)
class FreeAbelianGroup:
    """``Z^rank``; elements are integer vectors, homomorphisms integer matrices."""

    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be >= 1")

    @property
    def label(self) -> str:
        return f"Z^{self.rank}"


def _entry_order(k: int) -> list[int]:
    out = []
    for m in range(1, k + 1):
        out += [m, -m]
    return out + [0]


def find_separating_matrix(
    targets: Sequence[Sequence[int]], out_rank: int, max_norm: int | None = None
) -> np.ndarray | None:
    """Least integer matrix ``M`` (``out_rank`` rows) with ``M v != 0`` for every nonzero target.

    Candidates are scanned by increasing max-norm; within a norm shell entries
    are compared lexicographically with ``1 < -1 < 2 < -2 < ... < 0``.  The
    bad matrices form a finite union of hyperplanes, so without ``max_norm``
    the scan always terminates.
    """
    V = np.array([list(v) for v in targets], dtype=np.int64).reshape(len(targets), -1)
    V = V[np.any(V != 0, axis=1)]
    cols = V.shape[1] if V.size else (len(targets[0]) if targets else 0)
    if len(V) == 0:
        return np.zeros((out_rank, cols), dtype=np.int64)
    k = 0
    while max_norm is None or k < max_norm:
        k += 1
        for entries in product(_entry_order(k), repeat=out_rank * cols):
            if max(abs(e) for e in entries) != k:
                continue
            M = np.array(entries, dtype=np.int64).reshape(out_rank, cols)
            if np.all(np.any(V @ M.T != 0, axis=1)):
                return M
    return None


@dataclass
class DiscriminationMap:
    """A homomorphism ``G^n -> G`` built as ``rho_2 o (rho_1 x id)`` step by step."""

    n: int
    matrix: np.ndarray | None = None       # free-abelian case
    steps: list[HomPair] = field(default_factory=list)  # finite case
    group: FiniteGroup | None = None

    def __call__(self, h: Sequence) -> object:
        if self.matrix is not None:
            return tuple(int(x) for x in self.matrix @ np.asarray(h, dtype=np.int64).ravel())
        t = self.group.tlist
        acc = h[0]
        for (phi, psi), x in zip(self.steps, h[1:]):
            acc = t[phi(acc)][psi(x)]
        return acc

    def to_dict(self) -> dict:
        if self.matrix is not None:
            return {"n": self.n, "matrix": self.matrix.tolist()}
        G = self.group
        return {"n": self.n, "steps": [{"phi": p.to_json(G), "psi": q.to_json(G)} for p, q in self.steps]}


def _is_trivial(h, G) -> bool:
    if isinstance(G, FreeAbelianGroup):
        return not any(np.asarray(h).ravel())
    return all(x == 0 for x in h)


def extend_discrimination(
    G: FiniteGroup | FreeAbelianGroup, n: int, targets: Sequence[Sequence], cap: int = ENDOMORPHISM_CAP
) -> DiscriminationMap | None:
    """A map ``G^n -> G`` sending each target to the identity iff it is the identity.

    Built by induction on ``n``: separate the first ``n-1`` coordinates, then
    separate ``(rho_1(h'), h_n)`` in ``G x G``.  For a free-abelian group of
    rank ``r`` targets are flat integer vectors of length ``r*n``; for a finite
    group they are tuples of ``n`` element ids.  Returns None for finite
    groups that are not discriminating.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if isinstance(G, FreeAbelianGroup):
        r = G.rank
        vecs = [np.asarray(h, dtype=np.int64).ravel() for h in targets]
        rho = np.eye(r, dtype=np.int64)
        for m in range(2, n + 1):
            bar = [np.concatenate([rho @ v[: r * (m - 1)], v[r * (m - 1): r * m]]) for v in vecs]
            step = find_separating_matrix(bar, r)
            if step is None:
                return None
            block = np.zeros((2 * r, r * m), dtype=np.int64)
            block[:r, : r * (m - 1)] = rho
            block[r:, r * (m - 1):] = np.eye(r, dtype=np.int64)
            rho = step @ block
        out = DiscriminationMap(n, matrix=rho)
    else:
        verdict = is_discriminating_finite(G, cap)
        if verdict.status is not DiscStatus.DISCRIMINATING:
            return None
        t = G.tlist
        pairs = list(product_homs_to_G(G, cap))
        out = DiscriminationMap(n, group=G)
        for m in range(2, n + 1):
            bar = [(out(h[: m - 1]), h[m - 1]) for h in targets]
            for phi, psi in pairs:
                if all((t[phi(a)][psi(b)] == 0) == (a == 0 and b == 0) for a, b in bar):
                    out.steps.append((phi, psi))
                    break
            else:
                return None
    for h in targets:
        image = out(h)
        killed = _is_trivial(image, G) if isinstance(G, FreeAbelianGroup) else image == 0
        if killed != _is_trivial(h, G):
            raise AssertionError("constructed map does not discriminate the targets")
    return out


@dataclass
class AbelianVerdict:
    is_identity: bool
    exponent_vector: dict[int, int]
    rank: int
    witness: dict[int, tuple[int, ...]] | None = None

    def witness_copies(self, N: int) -> list[dict[int, tuple[int, ...]]]:
        """The same assignment in every one of ``N`` copies (abelian: commuting is free)."""
        return [dict(self.witness) for _ in range(N)] if self.witness else []

    @property
    def explanation(self) -> str:
        if self.is_identity:
            return "exponent sums all vanish: the word is an identity in every abelian group"
        g = min(self.exponent_vector)
        return (
            f"g{g} has exponent sum {self.exponent_vector[g]}; sending g{g} to e1 and every "
            "other generator to 0 makes the word nonzero in every copy, at every height"
        )

    def to_dict(self) -> dict:
        d = {
            "is_identity": self.is_identity,
            "exponent_vector": {f"g{k}": v for k, v in self.exponent_vector.items()},
            "rank": self.rank,
            "explanation": self.explanation,
            "witness": None,
        }
        if self.witness:
            d["witness"] = {f"g{k}": list(v) for k, v in sorted(self.witness.items())}
        return d


def abelian_word_value(w: Word, assignment: dict[int, Sequence[int]], rank: int) -> tuple[int, ...]:
    out = np.zeros(rank, dtype=np.int64)
    for g, e in w.syllables:
        out += e * np.asarray(assignment[g], dtype=np.int64)
    return tuple(int(x) for x in out)


def abelian_weak_equals_identity(w: Word | str, A: FreeAbelianGroup) -> AbelianVerdict:
    """In ``Z^r`` a word is a weak identity iff it is an identity iff its exponent sums vanish."""
    w = parse_word(w)
    ev = exponent_sums(w)
    if not ev:
        return AbelianVerdict(True, ev, A.rank)
    g = min(ev)
    e1 = tuple(1 if i == 0 else 0 for i in range(A.rank))
    zero = (0,) * A.rank
    witness = {v: (e1 if v == g else zero) for v in w.variables()}
    return AbelianVerdict(False, ev, A.rank, witness)
