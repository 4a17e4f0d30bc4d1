"""Reduced words in a free group of finite rank.

Words are stored run-length encoded as ``(generator, exponent)`` syllables,
generators numbered from 1.  Adjacent syllables always carry distinct
generators and no exponent is zero, so two words are equal exactly when their
syllable tuples are.
"""

from __future__ import annotations

from typing import Iterable, Iterator

__all__ = [
    "FreeWord",
    "ParseError",
    "RankMismatch",
    "parse_word",
    "render",
    "multiply",
    "invert",
    "power",
    "conjugate",
    "commutator",
    "cyclic_reduce",
    "occurs",
    "word_length",
    "shortlex_key",
    "letters",
    "from_letters",
    "generator",
    "identity",
    "enumerate_words",
    "random_word",
]


class RankMismatch(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _normalize(syllables: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    out: list[tuple[int, int]] = []
    for gen, exp in syllables:
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            total = out[-1][1] + exp
            if total:
                out[-1] = (gen, total)
            else:
                out.pop()
        else:
            out.append((gen, exp))
    return tuple(out)


class FreeWord:
    """A freely reduced word of the free group of the given rank."""

    __slots__ = ("rank", "syllables", "_hash")

    def __init__(self, rank: int, syllables: Iterable[tuple[int, int]] = ()):
        if rank < 1:
            raise ValueError(f"rank must be positive, got {rank}")
        syl = _normalize(syllables)
        for gen, _ in syl:
            if not 1 <= gen <= rank:
                raise ValueError(f"generator x{gen} out of range for rank {rank}")
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "syllables", syl)
        object.__setattr__(self, "_hash", hash((rank, syl)))

    @classmethod
    def _raw(cls, rank: int, syllables: tuple[tuple[int, int], ...]) -> "FreeWord":
        # trusted constructor: syllables already reduced and in range
        self = object.__new__(cls)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "syllables", syllables)
        object.__setattr__(self, "_hash", hash((rank, syllables)))
        return self

    def __setattr__(self, name, value):
        raise AttributeError("FreeWord is immutable")

    def __eq__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self.rank == other.rank and self.syllables == other.syllables

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "FreeWord") -> bool:
        return shortlex_key(self) < shortlex_key(other)

    def __repr__(self):
        return f"FreeWord({self.rank}, {render(self)!r})"

    def __str__(self):
        return render(self)

    def __len__(self):
        return word_length(self)

    def __bool__(self):
        return bool(self.syllables)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return multiply(self, other)

    def __invert__(self) -> "FreeWord":
        return invert(self)

    def __pow__(self, m: int) -> "FreeWord":
        return power(self, m)

    def is_identity(self) -> bool:
        return not self.syllables


def identity(rank: int) -> FreeWord:
    return FreeWord._raw(rank, ())


def generator(rank: int, k: int, exp: int = 1) -> FreeWord:
    return FreeWord(rank, [(k, exp)])


def _check_rank(a: FreeWord, b: FreeWord) -> None:
    if a.rank != b.rank:
        raise RankMismatch(f"rank mismatch: {a.rank} vs {b.rank}")


def multiply(a: FreeWord, b: FreeWord) -> FreeWord:
    _check_rank(a, b)
    if not a.syllables:
        return b
    if not b.syllables:
        return a
    left = list(a.syllables)
    right = b.syllables
    i = 0
    while left and i < len(right):
        gen, exp = right[i]
        lgen, lexp = left[-1]
        if lgen != gen:
            break
        total = lexp + exp
        if total:
            left[-1] = (gen, total)
            i += 1
            break
        left.pop()
        i += 1
    return FreeWord._raw(a.rank, tuple(left) + right[i:])


def invert(a: FreeWord) -> FreeWord:
    return FreeWord._raw(a.rank, tuple((g, -e) for g, e in reversed(a.syllables)))


def power(a: FreeWord, m: int) -> FreeWord:
    if m == 0 or not a.syllables:
        return identity(a.rank)
    if m < 0:
        a, m = invert(a), -m
    conj, core = cyclic_reduce(a)
    syl = core.syllables
    if len(syl) == 1:
        body = ((syl[0][0], syl[0][1] * m),)
    else:
        body = syl * m
    return multiply(multiply(conj, FreeWord(a.rank, body)), invert(conj))


def conjugate(a: FreeWord, b: FreeWord) -> FreeWord:
    """``b^-1 a b``."""
    return multiply(multiply(invert(b), a), b)


def commutator(a: FreeWord, b: FreeWord) -> FreeWord:
    """``[a, b] = a^-1 b^-1 a b``."""
    return multiply(multiply(invert(a), invert(b)), multiply(a, b))


def word_length(a: FreeWord) -> int:
    return sum(abs(e) for _, e in a.syllables)


def occurs(v: FreeWord, k: int) -> bool:
    return any(g == k for g, _ in v.syllables)


def cyclic_reduce(v: FreeWord) -> tuple[FreeWord, FreeWord]:
    """Split ``v`` as ``conjugator * core * conjugator^-1`` with ``core``
    cyclically reduced and ``conjugator`` as long as possible."""
    syl = list(v.syllables)
    prefix: list[tuple[int, int]] = []
    while len(syl) >= 2:
        (g0, e0), (g1, e1) = syl[0], syl[-1]
        if g0 != g1 or (e0 > 0) == (e1 > 0):
            break
        m = min(abs(e0), abs(e1))
        step = m if e0 > 0 else -m
        prefix.append((g0, step))
        e0 -= step
        e1 += step
        if e1:
            syl[-1] = (g1, e1)
        else:
            syl.pop()
        if e0:
            syl[0] = (g0, e0)
        else:
            syl.pop(0)
    return FreeWord(v.rank, prefix), FreeWord._raw(v.rank, tuple(syl))


def letters(a: FreeWord) -> Iterator[tuple[int, int]]:
    """Yield ``(generator, +1 or -1)`` letter by letter."""
    for g, e in a.syllables:
        s = 1 if e > 0 else -1
        for _ in range(abs(e)):
            yield g, s


def from_letters(rank: int, seq: Iterable[tuple[int, int]]) -> FreeWord:
    return FreeWord(rank, seq)


def _letter_code(gen: int, sign: int) -> int:
    return 2 * (gen - 1) + (0 if sign > 0 else 1)


def shortlex_key(a: FreeWord) -> tuple[int, tuple[int, ...]]:
    """Sort key: length first, then lexicographic with x1 < x1^-1 < x2 < ..."""
    return word_length(a), tuple(_letter_code(g, s) for g, s in letters(a))


def render(a: FreeWord) -> str:
    if not a.syllables:
        return "e"
    return "*".join(f"x{g}" if e == 1 else f"x{g}^{e}" for g, e in a.syllables)


class _Parser:
    def __init__(self, text: str, rank: int):
        self.text = text
        self.rank = rank
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def digits(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected digits", start)
        return self.text[start:self.pos]

    def expr(self) -> FreeWord:
        w = self.factor()
        while self.peek() == "*":
            self.pos += 1
            w = multiply(w, self.factor())
        return w

    def factor(self) -> FreeWord:
        w = self.atom()
        if self.peek() == "^":
            self.pos += 1
            sign = 1
            if self.peek() in "+-" and self.peek():
                sign = -1 if self.peek() == "-" else 1
                self.pos += 1
            w = power(w, sign * int(self.digits()))
        return w

    def atom(self) -> FreeWord:
        ch = self.peek()
        start = self.pos
        if ch == "x":
            self.pos += 1
            k = int(self.digits())
            if not 1 <= k <= self.rank:
                raise ParseError(f"generator x{k} out of range for rank {self.rank}", start)
            return FreeWord._raw(self.rank, ((k, 1),))
        if ch == "e":
            self.pos += 1
            return identity(self.rank)
        if ch == "(":
            self.pos += 1
            w = self.expr()
            self.expect(")")
            return w
        if ch == "[":
            self.pos += 1
            a = self.expr()
            self.expect(",")
            b = self.expr()
            self.expect("]")
            return commutator(a, b)
        raise ParseError(f"unexpected {ch or 'end of input'!r}", start)


def parse_word(text: str, rank: int) -> FreeWord:
    """Parse ``text`` in the word grammar, e.g. ``"x1*x2^-1"`` or ``"[x2,x1^3]"``.

    ``e`` denotes the identity so that rendered words round-trip.
    """
    p = _Parser(text, rank)
    w = p.expr()
    if p.peek():
        raise ParseError(f"trailing input {p.peek()!r}", p.pos)
    return w


def enumerate_words(rank: int, maxlen: int) -> Iterator[FreeWord]:
    """All reduced words of length <= maxlen in shortlex order."""
    frontier: list[tuple[tuple[int, int], ...]] = [()]
    yield identity(rank)
    alphabet = [(g, s) for g in range(1, rank + 1) for s in (1, -1)]
    for _ in range(maxlen):
        nxt = []
        for word in frontier:
            last = word[-1] if word else None
            for g, s in alphabet:
                if last == (g, -s):
                    continue
                nxt.append(word + ((g, s),))
        for word in nxt:
            yield FreeWord._raw(rank, _normalize(word))
        frontier = nxt


def random_word(rng, rank: int, maxlen: int, minlen: int = 0) -> FreeWord:
    """Uniform length in [minlen, maxlen], then a uniformly random reduced word."""
    n = rng.randint(minlen, maxlen)
    seq: list[tuple[int, int]] = []
    while len(seq) < n:
        g, s = rng.randint(1, rank), rng.choice((1, -1))
        if seq and seq[-1] == (g, -s):
            continue
        seq.append((g, s))
    return FreeWord(rank, seq)
