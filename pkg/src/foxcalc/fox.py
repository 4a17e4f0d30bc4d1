"""Fox derivatives on Z[F].

The derivations here satisfy ``D(uv) = D(u) v + eps(u) D(v)``, so for a word
``u = a_1 ... a_L`` the derivative collects, for every occurrence of ``x_k``,
the suffix that follows it, and for every occurrence of ``x_k^-1`` minus the
suffix starting at that letter.
"""

from __future__ import annotations

from .freegroup import FreeWord, RankMismatch, identity, invert, multiply
from .groupring import RingElt, add, augment, from_word, mul, subtract, zero

__all__ = [
    "fox_derive",
    "fox_derive_word",
    "fundamental_decomposition",
    "conjugation_formula_check",
    "FoxIdentityError",
]


class FoxIdentityError(AssertionError):
    """The identity u - eps(u) = sum (x_j - 1) D_j(u) failed; always a bug."""


def _check_index(k: int, rank: int) -> None:
    if not 1 <= k <= rank:
        raise ValueError(f"derivative index {k} out of range for rank {rank}")


def fox_derive_word(k: int, v: FreeWord) -> dict[FreeWord, int]:
    """Terms of D_k(v) for a single word, as a plain dict."""
    _check_index(k, v.rank)
    rank = v.rank
    out: dict[FreeWord, int] = {}
    suffix = identity(rank)
    for gen, exp in reversed(v.syllables):
        if gen == k:
            # D(x^m) = 1 + x + ... + x^(m-1) for m > 0, -(x^-1 + ... + x^m) for m < 0
            if exp > 0:
                powers, sign = range(0, exp), 1
            else:
                powers, sign = range(-1, exp - 1, -1), -1
            for j in powers:
                w = multiply(FreeWord._raw(rank, ((gen, j),) if j else ()), suffix)
                s = out.get(w, 0) + sign
                if s:
                    out[w] = s
                else:
                    del out[w]
        suffix = multiply(FreeWord._raw(rank, ((gen, exp),)), suffix)
    return out


def fox_derive(k: int, u: RingElt | FreeWord) -> RingElt:
    """D_k(u), extended additively from words."""
    if isinstance(u, FreeWord):
        return RingElt._raw(u.rank, fox_derive_word(k, u))
    _check_index(k, u.rank)
    acc: dict[FreeWord, int] = {}
    for w, c in u.terms.items():
        for t, a in fox_derive_word(k, w).items():
            s = acc.get(t, 0) + c * a
            if s:
                acc[t] = s
            else:
                del acc[t]
    return RingElt._raw(u.rank, acc)


def fundamental_decomposition(u: RingElt | FreeWord) -> list[RingElt]:
    """[D_1(u), ..., D_rank(u)], after checking u - eps(u) = sum (x_j - 1) D_j(u)."""
    if isinstance(u, FreeWord):
        u = from_word(u)
    rank = u.rank
    derivs = [fox_derive(k, u) for k in range(1, rank + 1)]
    e = from_word(identity(rank))
    total = zero(rank)
    for j, dj in enumerate(derivs, start=1):
        xj_minus_1 = subtract(from_word(FreeWord._raw(rank, ((j, 1),))), e)
        total = add(total, mul(xj_minus_1, dj))
    lhs = subtract(u, RingElt._raw(rank, {identity(rank): augment(u)} if augment(u) else {}))
    if lhs != total:
        raise FoxIdentityError(f"fundamental identity failed for {u}")
    return derivs


def conjugation_formula_check(k: int, f: FreeWord, n: FreeWord, hom) -> bool:
    """Whether D_k(f^-1 n f) and D_k(n) f agree after projecting to Z[F/N], N = ker(hom)."""
    from .finquot import in_kernel, pi_reduce

    if f.rank != n.rank or f.rank != hom.rank:
        raise RankMismatch("rank mismatch among f, n and hom")
    if not in_kernel(hom, n):
        raise ValueError("n is not in the kernel of hom")
    conj = multiply(multiply(invert(f), n), f)
    diff = subtract(fox_derive(k, conj), mul(fox_derive(k, n), from_word(f)))
    return pi_reduce(diff, hom, 0).is_zero()

