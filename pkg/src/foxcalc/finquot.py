"""Homomorphisms from a free group onto finite groups and reduction of Z[F] into (Z/d)[G].

For N = ker(hom) the ideal Z[F](N - 1) is the kernel of Z[F] -> Z[F/N], and
F/N is the image subgroup of hom.  Reducing modulo Z[F](N - 1) + d Z[F] is
therefore: push every word to its image in G, then reduce coefficients mod d.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from .catalog import FiniteGroup
from .fox import fox_derive
from .freegroup import FreeWord, RankMismatch
from .groupring import RingElt, from_word

__all__ = [
    "GroupHom",
    "QuotRingElt",
    "hom_apply",
    "in_kernel",
    "pi_reduce",
    "criterion_holds",
    "enumerate_homs",
    "normalize_modulus",
]


def normalize_modulus(d: int) -> int:
    d = abs(int(d))
    if d == 1:
        raise ValueError("modulus d = 1 is not allowed (the quotient ring would be zero)")
    return d


class GroupHom:
    """Homomorphism F(rank) -> target determined by generator images."""

    def __init__(self, rank: int, target: FiniteGroup, images: Sequence[int]):
        images = tuple(int(a) for a in images)
        if len(images) != rank:
            raise ValueError(f"expected {rank} generator images, got {len(images)}")
        for a in images:
            if not 0 <= a < target.order:
                raise ValueError(f"image {a} is not an element of {target.name or 'target'}")
        self.rank = rank
        self.target = target
        self.images = images
        # powers[i][j] = images[i]^j for 0 <= j < order of images[i]
        self._powers = []
        for a in images:
            row = [0]
            x = a
            while x != 0:
                row.append(x)
                x = target.table[x][a]
            self._powers.append(tuple(row))
        self._image: tuple[int, ...] | None = None

    def __repr__(self):
        return f"GroupHom({self.rank}, {self.target.name or self.target.order}, {list(self.images)})"

    def __eq__(self, other):
        return (isinstance(other, GroupHom) and self.rank == other.rank
                and self.images == other.images and self.target == other.target)

    def __hash__(self):
        return hash((self.rank, self.images, self.target))

    @property
    def image_subgroup(self) -> tuple[int, ...]:
        """Elements of the image, identity first."""
        if self._image is None:
            self._image = tuple(self.target.subgroup_generated(self.images))
        return self._image

    @property
    def index(self) -> int:
        """[F : ker]."""
        return len(self.image_subgroup)

    def apply(self, w: FreeWord) -> int:
        if w.rank != self.rank:
            raise RankMismatch(f"word rank {w.rank} vs hom rank {self.rank}")
        t = self.target.table
        x = 0
        for g, e in w.syllables:
            row = self._powers[g - 1]
            x = t[x][row[e % len(row)]]
        return x

    def letter_image(self, gen: int, sign: int) -> int:
        a = self.images[gen - 1]
        return a if sign > 0 else self.target.inverse[a]


def hom_apply(hom: GroupHom, w: FreeWord) -> int:
    return hom.apply(w)


def in_kernel(hom: GroupHom, w: FreeWord) -> bool:
    return hom.apply(w) == 0


def enumerate_homs(rank: int, group: FiniteGroup) -> Iterator[GroupHom]:
    """Every homomorphism F(rank) -> group, images in lexicographic order."""
    for images in itertools.product(range(group.order), repeat=rank):
        yield GroupHom(rank, group, images)


class QuotRingElt:
    """Element of (Z/d)[G]; d = 0 means integer coefficients."""

    __slots__ = ("modulus", "target", "coeffs")

    def __init__(self, modulus: int, target: FiniteGroup, coeffs: Iterable[int]):
        d = normalize_modulus(modulus)
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != target.order:
            raise ValueError(f"need {target.order} coefficients, got {len(coeffs)}")
        if d:
            coeffs = tuple(c % d for c in coeffs)
        self.modulus = d
        self.target = target
        self.coeffs = coeffs

    def __eq__(self, other):
        return (isinstance(other, QuotRingElt) and self.modulus == other.modulus
                and self.target == other.target and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.modulus, self.coeffs))

    def __repr__(self):
        return f"QuotRingElt(d={self.modulus}, {self.render()})"

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def reduce(self, d: int) -> "QuotRingElt":
        """Reduce integer coefficients modulo d (d must divide the current modulus)."""
        d = normalize_modulus(d)
        if self.modulus and (d == 0 or self.modulus % d):
            raise ValueError(f"cannot reduce mod {self.modulus} coefficients to mod {d}")
        return QuotRingElt(d, self.target, self.coeffs)

    def _check(self, other: "QuotRingElt"):
        if self.modulus != other.modulus or self.target != other.target:
            raise ValueError("operands live in different quotient rings")

    def __add__(self, other: "QuotRingElt") -> "QuotRingElt":
        self._check(other)
        return QuotRingElt(self.modulus, self.target, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "QuotRingElt") -> "QuotRingElt":
        self._check(other)
        return QuotRingElt(self.modulus, self.target, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "QuotRingElt":
        return QuotRingElt(self.modulus, self.target, (-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return QuotRingElt(self.modulus, self.target, (other * a for a in self.coeffs))
        self._check(other)
        t = self.target.table
        out = [0] * self.target.order
        for g, a in enumerate(self.coeffs):
            if not a:
                continue
            row = t[g]
            for h, b in enumerate(other.coeffs):
                if b:
                    out[row[h]] += a * b
        return QuotRingElt(self.modulus, self.target, out)

    __rmul__ = __mul__

    def render(self) -> str:
        terms = [(g, c) for g, c in enumerate(self.coeffs) if c]
        if not terms:
            return "0"
        parts = []
        for i, (g, c) in enumerate(terms):
            label = "e" if g == 0 else f"g{g}"
            mag = abs(c)
            body = label if mag == 1 else f"{mag}*{label}"
            if i == 0:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" {'+' if c > 0 else '-'} {body}")
        return "".join(parts)


def pi_reduce(u: RingElt | FreeWord, hom: GroupHom, d: int) -> QuotRingElt:
    """Image of u in (Z/d)[G] under the map induced by hom."""
    d = normalize_modulus(d)
    if isinstance(u, FreeWord):
        u = from_word(u)
    if u.rank != hom.rank:
        raise RankMismatch(f"ring element rank {u.rank} vs hom rank {hom.rank}")
    coeffs = [0] * hom.target.order
    for w, c in u.terms.items():
        coeffs[hom.apply(w)] += c
    return QuotRingElt(d, hom.target, coeffs)


def criterion_holds(v: FreeWord, K: Iterable[int], hom: GroupHom, d: int) -> bool:
    """Whether D_k(v) vanishes modulo Z[F](N - 1) + d Z[F] for every k outside K."""
    d = normalize_modulus(d)
    K = set(K)
    if not K <= set(range(1, v.rank + 1)):
        raise ValueError(f"K must be a subset of 1..{v.rank}, got {sorted(K)}")
    for k in range(1, v.rank + 1):
        if k in K:
            continue
        if not pi_reduce(fox_derive(k, v), hom, d).is_zero():
            return False
    return True
