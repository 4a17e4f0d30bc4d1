"""Schreier transversals and Reidemeister-Schreier rewriting for kernels of finite quotients.

Cosets are right cosets N u, identified with hom(u) in the image subgroup.
The transversal is found by breadth-first search in shortlex letter order
(x1 < x1^-1 < x2 < ...), so each representative is the shortlex-least word of
its coset and the transversal is prefix closed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .finquot import GroupHom, normalize_modulus
from .freegroup import FreeWord, identity, invert, multiply, shortlex_key

__all__ = [
    "SchreierGenerator",
    "SchreierSystem",
    "build",
    "subgroup_schreier",
    "rewrite",
    "abelianized_vector",
    "NotInSubgroup",
]


class NotInSubgroup(ValueError):
    pass


@dataclass(frozen=True)
class SchreierGenerator:
    coset: int
    gen: int
    word: FreeWord


@dataclass(frozen=True, eq=False)
class SchreierSystem:
    hom: GroupHom
    letters: tuple[int, ...]
    cosets: tuple[int, ...]
    transversal: dict[int, FreeWord]
    pairs: tuple[SchreierGenerator, ...]
    gens: tuple[SchreierGenerator, ...]
    _position: dict[tuple[int, int], int] = field(repr=False)

    @property
    def index(self) -> int:
        return len(self.cosets)

    @property
    def rank(self) -> int:
        return self.hom.rank

    def position(self, coset: int, gen: int) -> int | None:
        """Basis position of the Schreier generator for (coset, gen), None on tree edges."""
        return self._position.get((coset, gen))

    def representative(self, coset: int) -> FreeWord:
        return self.transversal[coset]


def build(hom: GroupHom, letters: Iterable[int] | None = None) -> SchreierSystem:
    """Schreier system of N = ker(hom) in F, or of ker(hom) restricted to the
    subgroup generated by ``letters``."""
    rank = hom.rank
    letters = tuple(sorted(set(range(1, rank + 1) if letters is None else letters)))
    for g in letters:
        if not 1 <= g <= rank:
            raise ValueError(f"generator index {g} out of range for rank {rank}")
    table = hom.target.table
    signed = [(g, s) for g in letters for s in (1, -1)]
    step = {(g, s): hom.letter_image(g, s) for g, s in signed}

    transversal = {0: identity(rank)}
    cosets = [0]
    i = 0
    while i < len(cosets):
        c = cosets[i]
        rep = transversal[c]
        for g, s in signed:
            nxt = table[c][step[g, s]]
            if nxt not in transversal:
                transversal[nxt] = multiply(rep, FreeWord._raw(rank, ((g, s),)))
                cosets.append(nxt)
        i += 1

    pairs = []
    for c in cosets:
        for g in letters:
            target = table[c][step[g, 1]]
            word = multiply(multiply(transversal[c], FreeWord._raw(rank, ((g, 1),))),
                            invert(transversal[target]))
            pairs.append(SchreierGenerator(c, g, word))
    gens = sorted((p for p in pairs if not p.word.is_identity()), key=lambda p: shortlex_key(p.word))
    position = {(p.coset, p.gen): i for i, p in enumerate(gens)}
    return SchreierSystem(hom, letters, tuple(cosets), transversal, tuple(pairs), tuple(gens), position)


def subgroup_schreier(hom: GroupHom, K: Iterable[int]) -> SchreierSystem:
    """Schreier system of F_K n N inside F_K; K empty gives the trivial system."""
    return build(hom, K)


def rewrite(sys: SchreierSystem, w: FreeWord, check: bool = True) -> list[tuple[int, int]]:
    """Express a kernel element as a product of Schreier generators.

    Returns ``(basis position, +1/-1)`` pairs in order; their product is ``w``.
    """
    if w.rank != sys.rank:
        raise ValueError(f"word rank {w.rank} vs system rank {sys.rank}")
    hom = sys.hom
    table = hom.target.table
    allowed = set(sys.letters)
    pos = sys._position
    out: list[tuple[int, int]] = []
    c = 0
    for g, e in w.syllables:
        if g not in allowed:
            raise NotInSubgroup(f"x{g} is not among the system's generators")
        if e > 0:
            a = hom.letter_image(g, 1)
            for _ in range(e):
                p = pos.get((c, g))
                if p is not None:
                    out.append((p, 1))
                c = table[c][a]
        else:
            a = hom.letter_image(g, -1)
            for _ in range(-e):
                c = table[c][a]
                p = pos.get((c, g))
                if p is not None:
                    out.append((p, -1))
    if c != 0:
        raise NotInSubgroup("word is not in the kernel")
    if check:
        prod = identity(sys.rank)
        for p, s in out:
            word = sys.gens[p].word
            prod = multiply(prod, word if s > 0 else invert(word))
        if prod != w:
            raise AssertionError(f"rewriting did not reconstruct {w}")
    return out


def abelianized_vector(sys: SchreierSystem, w: FreeWord, d: int, check: bool = True) -> list[int]:
    """Image of w in N/[N,N]N^d, as coordinates on the free Schreier generators."""
    d = normalize_modulus(d)
    vec = [0] * len(sys.gens)
    for p, s in rewrite(sys, w, check=check):
        vec[p] += s
    if d:
        vec = [x % d for x in vec]
    return vec
