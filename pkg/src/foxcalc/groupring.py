"""The integer group ring Z[F] of a free group, with exact integer coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping

from .freegroup import FreeWord, RankMismatch, identity, multiply, render, shortlex_key

__all__ = [
    "RingElt",
    "add",
    "subtract",
    "negate",
    "scalar_mul",
    "mul",
    "augment",
    "from_word",
    "zero",
    "one",
    "render_ring",
]


class RingElt:
    """Finite Z-linear combination of free words; zero coefficients are never stored."""

    __slots__ = ("rank", "terms", "_hash")

    def __init__(self, rank: int, terms: Mapping[FreeWord, int] | Iterable[tuple[FreeWord, int]] = ()):
        acc: dict[FreeWord, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            if w.rank != rank:
                raise RankMismatch(f"term {render(w)} has rank {w.rank}, expected {rank}")
            acc[w] = acc.get(w, 0) + c
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "terms", {w: c for w, c in acc.items() if c})
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, rank: int, terms: dict[FreeWord, int]) -> "RingElt":
        self = object.__new__(cls)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_hash", None)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("RingElt is immutable")

    def sorted_terms(self) -> list[tuple[FreeWord, int]]:
        return sorted(self.terms.items(), key=lambda t: shortlex_key(t[0]))

    def __eq__(self, other):
        if isinstance(other, int):
            other = scalar(self.rank, other)
        if not isinstance(other, RingElt):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.rank, frozenset(self.terms.items()))))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"RingElt({self.rank}, {render_ring(self)!r})"

    def __str__(self):
        return render_ring(self)

    def __add__(self, other):
        return add(self, _coerce(self.rank, other))

    __radd__ = __add__

    def __sub__(self, other):
        return subtract(self, _coerce(self.rank, other))

    def __rsub__(self, other):
        return subtract(_coerce(self.rank, other), self)

    def __neg__(self):
        return negate(self)

    def __mul__(self, other):
        if isinstance(other, int):
            return scalar_mul(other, self)
        return mul(self, _coerce(self.rank, other))

    def __rmul__(self, other):
        if isinstance(other, int):
            return scalar_mul(other, self)
        return mul(_coerce(self.rank, other), self)


def _coerce(rank: int, x) -> RingElt:
    if isinstance(x, RingElt):
        return x
    if isinstance(x, FreeWord):
        return from_word(x)
    if isinstance(x, int):
        return scalar(rank, x)
    raise TypeError(f"cannot use {type(x).__name__} as a group ring element")


def _check(a: RingElt, b: RingElt) -> None:
    if a.rank != b.rank:
        raise RankMismatch(f"rank mismatch: {a.rank} vs {b.rank}")


def zero(rank: int) -> RingElt:
    return RingElt._raw(rank, {})


def scalar(rank: int, c: int) -> RingElt:
    return RingElt._raw(rank, {identity(rank): c} if c else {})


def one(rank: int) -> RingElt:
    return scalar(rank, 1)


def from_word(w: FreeWord, coeff: int = 1) -> RingElt:
    return RingElt._raw(w.rank, {w: coeff} if coeff else {})


def add(a: RingElt, b: RingElt) -> RingElt:
    _check(a, b)
    out = dict(a.terms)
    for w, c in b.terms.items():
        s = out.get(w, 0) + c
        if s:
            out[w] = s
        else:
            out.pop(w, None)
    return RingElt._raw(a.rank, out)


def negate(a: RingElt) -> RingElt:
    return RingElt._raw(a.rank, {w: -c for w, c in a.terms.items()})


def subtract(a: RingElt, b: RingElt) -> RingElt:
    return add(a, negate(b))


def scalar_mul(c: int, a: RingElt) -> RingElt:
    if not c:
        return zero(a.rank)
    return RingElt._raw(a.rank, {w: c * k for w, k in a.terms.items()})


def mul(a: RingElt, b: RingElt) -> RingElt:
    _check(a, b)
    out: dict[FreeWord, int] = {}
    for u, c in a.terms.items():
        for v, k in b.terms.items():
            w = multiply(u, v)
            s = out.get(w, 0) + c * k
            if s:
                out[w] = s
            else:
                del out[w]
    return RingElt._raw(a.rank, out)


def augment(u: RingElt) -> int:
    """Image under the augmentation Z[F] -> Z (every group element goes to 1)."""
    return sum(u.terms.values())


def render_ring(u: RingElt) -> str:
    """Shortlex-ordered rendering such as ``x1^2 - e`` or ``-2*x1*x2 + 3*e``."""
    if not u.terms:
        return "0"
    parts = []
    for i, (w, c) in enumerate(u.sorted_terms()):
        mag = abs(c)
        body = render(w) if mag == 1 else f"{mag}*{render(w)}"
        if i == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" {'+' if c > 0 else '-'} {body}")
    return "".join(parts)
