"""Free-group words over generators g1, g2, ...

Words are stored run-length encoded as tuples of ``(generator, exponent)``
syllables and are always freely reduced, so equality of words is structural
equality of their syllable tuples.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

__all__ = [
    "Word",
    "Endomorphism",
    "WordSyntaxError",
    "parse_word",
    "multiply",
    "invert",
    "power",
    "commutator",
    "apply_endo",
    "exponent_sums",
    "generator",
    "IDENTITY",
]


class WordSyntaxError(ValueError):
    """Raised when a word does not follow the grammar; carries the offending position."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}" + (f" in {text!r}" if text else ""))


def _reduce(syllables: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    stack: list[list[int]] = []
    for gen, exp in syllables:
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            stack[-1][1] += exp
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([gen, exp])
    return tuple((g, e) for g, e in stack)


@dataclass(frozen=True, order=True)
class Word:
    """A freely reduced word; ``syllables`` holds ``(generator_index, exponent)`` pairs."""

    syllables: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        syl = tuple((int(g), int(e)) for g, e in self.syllables)
        for g, _ in syl:
            if g < 1:
                raise ValueError(f"generator index must be positive, got {g}")
        object.__setattr__(self, "syllables", _reduce(syl))

    @classmethod
    def from_letters(cls, letters: Iterable[int]) -> "Word":
        """Build from signed letters: ``3`` is g3, ``-3`` is g3^-1."""
        return cls(tuple((abs(x), 1 if x > 0 else -1) for x in letters))

    def is_identity(self) -> bool:
        return not self.syllables

    def variables(self) -> tuple[int, ...]:
        return tuple(sorted({g for g, _ in self.syllables}))

    def length(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def letters(self) -> list[int]:
        out = []
        for g, e in self.syllables:
            out.extend([g if e > 0 else -g] * abs(e))
        return out

    def max_index(self) -> int:
        return max((g for g, _ in self.syllables), default=0)

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, n: int) -> "Word":
        return power(self, n)

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        return "*".join(f"g{g}" if e == 1 else f"g{g}^{e}" for g, e in self.syllables)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


IDENTITY = Word()


def generator(i: int) -> Word:
    return Word(((i, 1),))


def multiply(u: Word, v: Word) -> Word:
    return Word(u.syllables + v.syllables)


def invert(u: Word) -> Word:
    return Word(tuple((g, -e) for g, e in reversed(u.syllables)))


def power(u: Word, n: int) -> Word:
    if n < 0:
        return power(invert(u), -n)
    return Word(u.syllables * n)


def commutator(u: Word, v: Word) -> Word:
    """``[u, v] = u v u^-1 v^-1``."""
    return Word(u.syllables + v.syllables + invert(u).syllables + invert(v).syllables)


@dataclass(frozen=True)
class Endomorphism:
    """Endomorphism of the free group; unmapped generators are fixed."""

    images: Mapping[int, Word] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "images", dict(self.images))

    def image(self, i: int) -> Word:
        return self.images.get(i, generator(i))

    def __call__(self, u: Word) -> Word:
        return apply_endo(self, u)

    def compose(self, other: "Endomorphism") -> "Endomorphism":
        """``self.compose(other)`` applies ``other`` first, then ``self``."""
        keys = set(self.images) | set(other.images)
        return Endomorphism({i: apply_endo(self, other.image(i)) for i in keys})

    def __hash__(self):
        return hash(tuple(sorted(self.images.items())))


def apply_endo(e: Endomorphism, u: Word) -> Word:
    out: list[tuple[int, int]] = []
    for g, exp in u.syllables:
        img = e.image(g)
        if exp < 0:
            img = invert(img)
        out.extend(img.syllables * abs(exp))
    return Word(tuple(out))


def exponent_sums(u: Word) -> dict[int, int]:
    """Abelianization of ``u``: generator index -> exponent sum, zero entries dropped."""
    sums: dict[int, int] = {}
    for g, e in u.syllables:
        sums[g] = sums.get(g, 0) + e
    return {g: s for g, s in sorted(sums.items()) if s != 0}


# --- parser -----------------------------------------------------------------
#   word := term ('*'? term)*
#   term := atom ('^' int)?
#   atom := 'g' posint | '(' word ')' | '[' word ',' word ']' | '1'


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str, pos: int | None = None):
        raise WordSyntaxError(msg, self.pos if pos is None else pos, self.text)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self, signed: bool) -> int:
        self.skip()
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.error("expected integer", start)
        return int(self.text[start:self.pos])

    def word(self) -> Word:
        result = self.term()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                result = multiply(result, self.term())
            elif ch in ("g", "(", "[", "1"):
                result = multiply(result, self.term())
            else:
                return result

    def term(self) -> Word:
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            base = power(base, self.integer(signed=True))
        return base

    def atom(self) -> Word:
        ch = self.peek()
        start = self.pos
        if ch == "g":
            self.pos += 1
            if self.pos >= len(self.text) or not self.text[self.pos].isdigit():
                self.error("expected generator index", self.pos)
            idx = self.integer(signed=False)
            if idx == 0:
                self.error("generator index 0 is not allowed", start)
            return generator(idx)
        if ch == "1":
            self.pos += 1
            return IDENTITY
        if ch == "(":
            self.pos += 1
            inner = self.word()
            self.expect(")")
            return inner
        if ch == "[":
            self.pos += 1
            left = self.word()
            self.expect(",")
            right = self.word()
            self.expect("]")
            return commutator(left, right)
        if ch == "":
            self.error("unexpected end of input")
        self.error(f"unexpected character {ch!r}")


def parse_word(text: str | Word) -> Word:
    """Parse concrete syntax such as ``"[g1,g2]*g3^-2"`` into a reduced word.

    ``1`` (or an empty string) denotes the identity word.
    """
    if isinstance(text, Word):
        return text
    if not text.strip():
        return IDENTITY
    p = _Parser(text)
    w = p.word()
    p.skip()
    if p.pos != len(text):
        p.error(f"unexpected character {text[p.pos]!r}")
    return w
