"""Finite groups backed by a multiplication table, and a small zoo of constructors.

Conventions
-----------
* Element ids run over ``0 .. order-1`` and the identity is always id 0.
* Constructors number elements by breadth-first closure from the identity,
  right-multiplying by the generators in the order they are listed.
* Permutations compose left to right: ``(s*t)(p) = t(s(p))``.
* Matrices act on column vectors with the usual matrix product.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations as _perms, product
from pathlib import Path
from typing import Callable, Hashable, Mapping, Sequence

import numpy as np

from .words import Word

__all__ = [
    "FiniteGroup",
    "GroupSpec",
    "GroupError",
    "DEFAULT_MAX_ORDER",
    "FULL_ASSOCIATIVITY_BOUND",
    "make_group",
    "parse_group_spec",
    "cyclic",
    "dihedral",
    "symmetric",
    "alternating",
    "quaternion",
    "elementary_abelian",
    "direct_product",
    "gl2",
    "sl2",
    "from_cayley_table",
    "load_cayley_file",
    "evaluate_word",
    "commutes",
    "exponent",
]

DEFAULT_MAX_ORDER = 360
FULL_ASSOCIATIVITY_BOUND = 256
ASSOCIATIVITY_SAMPLES = 100_000


class GroupError(ValueError):
    pass


class FiniteGroup:
    """Immutable finite group given by its Cayley table.

    ``table[x, y]`` is the id of ``x*y``.  Derived data (centralizers, element
    orders, power tables) is computed lazily and cached.
    """

    def __init__(
        self,
        table,
        names: Sequence[str] | None = None,
        generators: Sequence[int] | None = None,
        label: str = "",
        check: bool = True,
    ):
        table = np.array(table, dtype=np.int64)
        n = table.shape[0]
        if table.shape != (n, n) or n < 1:
            raise GroupError("table must be a nonempty square array")
        table.setflags(write=False)
        self.order = n
        self.table = table
        self.identity = 0
        self.names = tuple(str(s) for s in names) if names is not None else tuple(str(i) for i in range(n))
        if len(self.names) != n or len(set(self.names)) != n:
            raise GroupError("names must be distinct and one per element")
        self.label = label or f"group[{n}]"
        inv = np.argmax(table == 0, axis=1)
        self.inverse = tuple(int(x) for x in inv)
        self.generators = tuple(int(g) for g in generators) if generators else tuple(range(1, n)) or (0,)
        if check:
            self._verify()

    # -- validation ---------------------------------------------------------
    def _verify(self):
        n, t = self.order, self.table
        ids = np.arange(n)
        if t.min() < 0 or t.max() >= n:
            raise GroupError("table entries out of range")
        if not (np.array_equal(t[0], ids) and np.array_equal(t[:, 0], ids)):
            raise GroupError("element 0 must be the identity")
        for row in t:
            if len(np.unique(row)) != n:
                raise GroupError("table is not a Latin square")
        for x, y in enumerate(self.inverse):
            if t[x, y] != 0 or t[y, x] != 0:
                raise GroupError(f"element {x} has no two-sided inverse")
        if n <= FULL_ASSOCIATIVITY_BOUND:
            left = t[t[:, :, None], ids[None, None, :]]  # (xy)z
            right = t[ids[:, None, None], t[None, :, :]]  # x(yz)
            if not np.array_equal(left, right):
                raise GroupError("table is not associative")
        else:
            rng = np.random.default_rng(0)
            x, y, z = rng.integers(0, n, size=(3, ASSOCIATIVITY_SAMPLES))
            if not np.array_equal(t[t[x, y], z], t[x, t[y, z]]):
                raise GroupError("table is not associative (sampled)")
        if any(g < 0 or g >= n for g in self.generators):
            raise GroupError("generator id out of range")
        if _closure_mask(self.tlist, self.generators) != (1 << n) - 1:
            raise GroupError("generators do not generate the group")

    # -- cached derived data -------------------------------------------------
    @cached_property
    def tlist(self) -> list[list[int]]:
        return self.table.tolist()

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    @cached_property
    def centralizer_masks(self) -> tuple[int, ...]:
        """``centralizer_masks[x]`` is the bitmask of elements commuting with ``x``."""
        comm = self.table == self.table.T
        weights = [1 << i for i in range(self.order)]
        return tuple(sum(w for w, c in zip(weights, row) if c) for row in comm.tolist())

    @cached_property
    def powers(self) -> tuple[tuple[int, ...], ...]:
        """``powers[x]`` lists ``x^0, x^1, ..., x^(o-1)`` where ``o`` is the order of ``x``."""
        t = self.tlist
        out = []
        for x in range(self.order):
            seq = [0]
            y = x
            while y != 0:
                seq.append(y)
                y = t[y][x]
            out.append(tuple(seq))
        return tuple(out)

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.powers)

    def power(self, x: int, e: int) -> int:
        p = self.powers[x]
        return p[e % len(p)]

    def mul(self, x: int, y: int) -> int:
        return self.tlist[x][y]

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def element_id(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no element named {name!r} in {self.label}") from None

    def mask_to_ids(self, mask: int) -> list[int]:
        return [i for i in range(self.order) if mask >> i & 1]

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"FiniteGroup({self.label}, order={self.order})"

    def __getstate__(self):
        return {
            "table": self.table,
            "names": self.names,
            "generators": self.generators,
            "label": self.label,
        }

    def __setstate__(self, state):
        self.__init__(state["table"], state["names"], state["generators"], state["label"], check=False)

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "order": self.order,
            "names": list(self.names),
            "table": self.table.tolist(),
            "generators": list(self.generators),
        }


def _closure_mask(t: list[list[int]], gens: Sequence[int]) -> int:
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
    return seen


def _build(
    gens: Sequence[Hashable],
    mul: Callable[[Hashable, Hashable], Hashable],
    identity: Hashable,
    name: Callable[[Hashable], str],
    label: str,
    max_order: int,
) -> FiniteGroup:
    """Number the closure of ``gens`` breadth-first and tabulate ``mul``."""
    index = {identity: 0}
    elems = [identity]
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in index:
                    index[y] = len(elems)
                    elems.append(y)
                    nxt.append(y)
                    if len(elems) > max_order:
                        raise GroupError(f"{label}: order exceeds cap {max_order}")
        frontier = nxt
    table = [[index[mul(x, y)] for y in elems] for x in elems]
    gen_ids = [index[g] for g in gens]
    return FiniteGroup(table, [name(x) for x in elems], gen_ids or [0], label)


# --- permutations -------------------------------------------------------------

def _perm_mul(s: tuple, t: tuple) -> tuple:
    # left to right: first s, then t
    return tuple(t[s[p]] for p in range(len(s)))


def _cycle_name(s: tuple) -> str:
    seen = set()
    cycles = []
    for start in range(len(s)):
        if start in seen or s[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        p = s[start]
        while p != start:
            cyc.append(p)
            seen.add(p)
            p = s[p]
        cycles.append("(" + " ".join(str(c + 1) for c in cyc) + ")")
    return "".join(cycles) or "()"


def _cycle(n: int, *points: int) -> tuple:
    img = list(range(n))
    for a, b in zip(points, points[1:] + points[:1]):
        img[a - 1] = b - 1
    return tuple(img)


def symmetric(n: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Symmetric group on ``n <= 5`` points, generated by ``(1 2 ... n)`` and ``(1 2)``."""
    if not 1 <= n <= 5:
        raise GroupError("symmetric(n) needs 1 <= n <= 5")
    ident = tuple(range(n))
    gens = [] if n == 1 else ([_cycle(n, 1, 2)] if n == 2 else [_cycle(n, *range(1, n + 1)), _cycle(n, 1, 2)])
    return _build(gens, _perm_mul, ident, _cycle_name, f"sym:{n}", max_order)


def alternating(n: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Alternating group on ``n <= 5`` points."""
    if not 1 <= n <= 5:
        raise GroupError("alternating(n) needs 1 <= n <= 5")
    ident = tuple(range(n))
    if n <= 2:
        gens = []
    elif n == 3:
        gens = [_cycle(3, 1, 2, 3)]
    elif n % 2:
        gens = [_cycle(n, 1, 2, 3), _cycle(n, *range(1, n + 1))]
    else:
        gens = [_cycle(n, 1, 2, 3), _cycle(n, *range(2, n + 1))]
    return _build(gens, _perm_mul, ident, _cycle_name, f"alt:{n}", max_order)


# --- abelian ----------------------------------------------------------------

def cyclic(n: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Cyclic group Z/n; element ``k`` has id ``k``."""
    if n < 1:
        raise GroupError("cyclic(n) needs n >= 1")
    if n > max_order:
        raise GroupError(f"cyclic:{n}: order exceeds cap {max_order}")
    return _build([1 % n] if n > 1 else [], lambda a, b: (a + b) % n, 0, str, f"cyclic:{n}", max_order)


def elementary_abelian(p: int, k: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    if not _is_prime(p) or k < 1:
        raise GroupError("elementary_abelian(p, k) needs prime p and k >= 1")
    if p**k > max_order:
        raise GroupError(f"elab:{p}:{k}: order exceeds cap {max_order}")
    zero = (0,) * k
    gens = [tuple(1 if i == j else 0 for i in range(k)) for j in range(k)]

    def add(a, b):
        return tuple((x + y) % p for x, y in zip(a, b))

    def name(a):
        return "(" + ",".join(map(str, a)) + ")"

    return _build(gens, add, zero, name, f"elab:{p}:{k}", max_order)


# --- other zoo members --------------------------------------------------------

def dihedral(n: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Dihedral group of order ``2n``: elements ``r^i s^j`` with ``s r s = r^-1``."""
    if n < 1:
        raise GroupError("dihedral(n) needs n >= 1")

    def mul(a, b):
        (i1, j1), (i2, j2) = a, b
        return ((i1 + (i2 if j1 == 0 else -i2)) % n, (j1 + j2) % 2)

    def name(a):
        i, j = a
        r = "" if i == 0 else ("r" if i == 1 else f"r^{i}")
        s = "s" if j else ""
        return (r + s) or "e"

    gens = ([(1, 0)] if n > 1 else []) + [(0, 1)]
    return _build(gens, mul, (0, 0), name, f"dihedral:{n}", max_order)


_QUAT = {  # basis unit products: (a, b) -> (sign, unit)
    ("1", u): (1, u) for u in "1ijk"
}
_QUAT.update({(u, "1"): (1, u) for u in "1ijk"})
_QUAT.update({
    ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
    ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
    ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
})


def quaternion(n: int = 8, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Quaternion group of order 8, generated by ``i`` and ``j``."""
    if n != 8:
        raise GroupError("only quaternion(8) is supported")

    def mul(a, b):
        s, u = _QUAT[(a[1], b[1])]
        return (a[0] * b[0] * s, u)

    def name(a):
        return ("" if a[0] > 0 else "-") + a[1]

    return _build([(1, "i"), (1, "j")], mul, (1, "1"), name, "q8", max_order)


def direct_product(G: FiniteGroup, H: FiniteGroup, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    gt, ht = G.tlist, H.tlist
    gens = [(g, 0) for g in G.generators if g] + [(0, h) for h in H.generators if h]

    def mul(a, b):
        return (gt[a[0]][b[0]], ht[a[1]][b[1]])

    def name(a):
        return f"({G.names[a[0]]},{H.names[a[1]]})"

    return _build(gens, mul, (0, 0), name, f"prod({G.label},{H.label})", max_order)


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(math.isqrt(p)) + 1))


def _mat_mul(p):
    def mul(a, b):
        (a11, a12, a21, a22), (b11, b12, b21, b22) = a, b
        return (
            (a11 * b11 + a12 * b21) % p,
            (a11 * b12 + a12 * b22) % p,
            (a21 * b11 + a22 * b21) % p,
            (a21 * b12 + a22 * b22) % p,
        )
    return mul


def _mat_name(a) -> str:
    return "[{} {}; {} {}]".format(*a)


def _primitive_root(p: int) -> int:
    for g in range(1, p):
        if len({pow(g, k, p) for k in range(1, p)}) == p - 1:
            return g
    raise GroupError(f"no primitive root mod {p}")


def gl2(p: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """GL(2, p) for prime ``p <= 3``."""
    if not _is_prime(p) or p > 3:
        raise GroupError("gl(2, p) needs a prime p <= 3")
    w = _primitive_root(p)
    gens = [(w, 0, 0, 1), (1, 1, 0, 1), (1, 0, 1, 1)]
    gens = [g for g in gens if g != (1, 0, 0, 1)]
    return _build(gens, _mat_mul(p), (1, 0, 0, 1), _mat_name, f"gl:2:{p}", max_order)


def sl2(p: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """SL(2, p) for prime ``p <= 3``, generated by the two elementary transvections."""
    if not _is_prime(p) or p > 3:
        raise GroupError("sl(2, p) needs a prime p <= 3")
    gens = [(1, 1, 0, 1), (1, 0, 1, 1)]
    return _build(gens, _mat_mul(p), (1, 0, 0, 1), _mat_name, f"sl:2:{p}", max_order)


# --- Cayley files -------------------------------------------------------------

def from_cayley_table(data: Mapping, label: str = "file", max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Build from ``{"order", "names", "table", "generators"}``; identity must be element 0."""
    try:
        n = int(data["order"])
        table = data["table"]
    except KeyError as exc:
        raise GroupError(f"Cayley data missing key {exc}") from None
    if n > max_order:
        raise GroupError(f"{label}: order exceeds cap {max_order}")
    if len(table) != n or any(len(row) != n for row in table):
        raise GroupError("table shape does not match order")
    return FiniteGroup(table, data.get("names"), data.get("generators"), label)


def load_cayley_file(path, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    path = Path(path)
    with path.open() as fh:
        data = json.load(fh)
    return from_cayley_table(data, f"file:{path}", max_order)


# --- specs --------------------------------------------------------------------

@dataclass(frozen=True)
class GroupSpec:
    """Constructor name plus parameters, e.g. ``GroupSpec("sym", (3,))``."""

    name: str
    params: tuple = ()

    def __str__(self):
        if self.name == "prod":
            return f"prod({self.params[0]},{self.params[1]})"
        if self.name == "file":
            return f"file:{self.params[0]}"
        if self.name in ("q8", "trivial"):
            return self.name
        return ":".join([self.name, *map(str, self.params)])


_SIMPLE = re.compile(r"^(cyclic|dihedral|sym|alt|gl|sl|elab|q8|trivial)((?::\d+)*)$")


def parse_group_spec(text: str) -> GroupSpec:
    """Parse ``cyclic:N``, ``dihedral:N``, ``sym:N``, ``alt:N``, ``q8``, ``trivial``,
    ``elab:P:K``, ``gl:2:P``, ``sl:2:P``, ``prod(A,B)`` or ``file:PATH``."""
    text = text.strip()
    if text.startswith("file:"):
        return GroupSpec("file", (text[5:],))
    if text.startswith("prod(") and text.endswith(")"):
        inner = text[5:-1]
        depth = 0
        for i, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                return GroupSpec("prod", (parse_group_spec(inner[:i]), parse_group_spec(inner[i + 1:])))
        raise GroupError(f"bad product spec {text!r}")
    m = _SIMPLE.match(text)
    if not m:
        raise GroupError(f"unknown group spec {text!r}")
    params = tuple(int(x) for x in m.group(2).split(":")[1:])
    return GroupSpec(m.group(1), params)


_ARITY = {"cyclic": 1, "dihedral": 1, "sym": 1, "alt": 1, "q8": 0, "trivial": 0, "elab": 2, "gl": 2, "sl": 2}


def make_group(spec: GroupSpec | str, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    name, params = spec.name, spec.params
    if name == "prod":
        return direct_product(make_group(params[0], max_order), make_group(params[1], max_order), max_order)
    if name == "file":
        return load_cayley_file(params[0], max_order)
    if len(params) != _ARITY.get(name, -1):
        raise GroupError(f"wrong number of parameters for {name}: {params}")
    if name == "cyclic":
        return cyclic(params[0], max_order)
    if name == "trivial":
        return cyclic(1, max_order)
    if name == "dihedral":
        return dihedral(params[0], max_order)
    if name == "sym":
        return symmetric(params[0], max_order)
    if name == "alt":
        return alternating(params[0], max_order)
    if name == "q8":
        return quaternion(8, max_order)
    if name == "elab":
        return elementary_abelian(params[0], params[1], max_order)
    if params[0] != 2:
        raise GroupError("only 2x2 linear groups are supported")
    return gl2(params[1], max_order) if name == "gl" else sl2(params[1], max_order)


# --- element-level queries ------------------------------------------------------

def evaluate_word(G: FiniteGroup, w: Word, a: Mapping[int, int]) -> int:
    """Value of ``w`` under the homomorphism sending ``g_i`` to ``a[i]``."""
    t = G.tlist
    v = 0
    for g, e in w.syllables:
        try:
            x = a[g]
        except KeyError:
            raise KeyError(f"generator g{g} is not assigned") from None
        v = t[v][G.power(x, e)]
    return v


def commutes(G: FiniteGroup, x: int, y: int) -> bool:
    return G.tlist[x][y] == G.tlist[y][x]


def exponent(G: FiniteGroup) -> int:
    return math.lcm(*G.element_orders)


def word_values(G: FiniteGroup, w: Word, domain: Sequence[int] | None = None) -> np.ndarray:
    """Values of ``w`` over every assignment of its variables into ``domain``.

    Returns an array with one axis per variable of ``w`` (sorted by index), each
    axis running over ``domain`` (default: all of ``G``).
    """
    variables = w.variables()
    dom = np.arange(G.order) if domain is None else np.asarray(domain, dtype=np.int64)
    k = len(variables)
    axis = {v: i for i, v in enumerate(variables)}
    out = np.zeros((len(dom),) * k, dtype=np.int64)
    for g, e in w.syllables:
        vals = np.array([G.power(int(x), e) for x in dom], dtype=np.int64)
        shape = [1] * k
        shape[axis[g]] = len(dom)
        out = G.table[out, vals.reshape(shape)]
    return out
