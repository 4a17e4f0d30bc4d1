"""Deciding v in F_K (F_K n N)^F [N,N] N^d for N = ker(hom) of finite index,
and comparing that against vanishing of the reduced Fox derivatives.

The subgroup side works in N/[N,N]N^d, a free Z/d-module on the free Schreier
generators.  Modulo [N,N], conjugation by elements of N is trivial, so the
normal closure of F_K n N is spanned by its generators conjugated by the
transversal.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .catalog import FiniteGroup
from .finquot import GroupHom, criterion_holds, enumerate_homs, normalize_modulus
from .freegroup import FreeWord, enumerate_words, invert, multiply, random_word, render
from .linalg import ModMatrix
from .schreier import SchreierSystem, abelianized_vector, build, subgroup_schreier

__all__ = [
    "MembershipInstance",
    "Verdict",
    "MembershipContext",
    "member_side",
    "criterion_side",
    "theorem2_check",
    "commutator_corollary_check",
    "Theorem2SweepReport",
    "theorem2_sweep",
    "all_subsets",
]


class Verdict(enum.Enum):
    AGREE_IN = "agree_in"
    AGREE_OUT = "agree_out"
    DISAGREE = "DISAGREE"


@dataclass(frozen=True)
class MembershipInstance:
    v: FreeWord
    K: frozenset[int]
    hom: GroupHom
    d: int

    def __init__(self, v: FreeWord, K: Iterable[int], hom: GroupHom, d: int):
        K = frozenset(K)
        if v.rank != hom.rank:
            raise ValueError(f"word rank {v.rank} vs hom rank {hom.rank}")
        bad = [k for k in K if not 1 <= k <= hom.rank]
        if bad:
            raise ValueError(f"K contains indices outside 1..{hom.rank}: {sorted(bad)}")
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "K", K)
        object.__setattr__(self, "hom", hom)
        object.__setattr__(self, "d", normalize_modulus(d))


class MembershipContext:
    """Everything member_side needs for a fixed (hom, K, d), built once.

    ``system`` may be passed in to share the Schreier system of N across
    several contexts with the same hom.
    """

    def __init__(self, hom: GroupHom, K: Iterable[int], d: int, system: SchreierSystem | None = None):
        self.hom = hom
        self.K = frozenset(K)
        self.d = normalize_modulus(d)
        self.system = system if system is not None else build(hom)
        self.sub = subgroup_schreier(hom, self.K)
        rows = []
        for t in self.system.cosets:
            rep = self.system.representative(t)
            rep_inv = invert(rep)
            for g in self.sub.gens:
                rows.append(abelianized_vector(self.system, multiply(multiply(rep, g.word), rep_inv), self.d))
        self.span = ModMatrix(rows, len(self.system.gens), self.d)

    def lift(self, v: FreeWord) -> FreeWord | None:
        """Shortlex-least h in F_K with hom(h) = hom(v), or None if there is none."""
        return self.sub.transversal.get(self.hom.apply(v))

    def contains(self, v: FreeWord, lift: FreeWord | None = None) -> bool:
        h = self.lift(v) if lift is None else lift
        if h is None:
            return False
        w = multiply(v, invert(h))
        return self.span.contains(abelianized_vector(self.system, w, self.d))


def member_side(inst: MembershipInstance, context: MembershipContext | None = None) -> bool:
    if context is None:
        context = MembershipContext(inst.hom, inst.K, inst.d)
    return context.contains(inst.v)


def criterion_side(inst: MembershipInstance) -> bool:
    return criterion_holds(inst.v, inst.K, inst.hom, inst.d)


def theorem2_check(inst: MembershipInstance, context: MembershipContext | None = None) -> Verdict:
    crit = criterion_side(inst)
    mem = member_side(inst, context)
    if crit != mem:
        return Verdict.DISAGREE
    return Verdict.AGREE_IN if crit else Verdict.AGREE_OUT


def commutator_corollary_check(v: FreeWord, hom: GroupHom) -> bool:
    """For v in N: all D_k(v) vanish mod Z[F](N-1) exactly when v is in [N,N]."""
    if hom.apply(v) != 0:
        raise ValueError("v is not in the kernel of hom")
    return theorem2_check(MembershipInstance(v, (), hom, 0)) is not Verdict.DISAGREE


@dataclass
class Theorem2SweepReport:
    rank: int
    group: str
    counts: dict[Verdict, int]
    instances: int
    disagreements: list[str]

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def render(self) -> str:
        lines = [
            f"theorem2 sweep rank={self.rank} group={self.group} instances={self.instances}",
            "agree_in={} agree_out={} DISAGREE={}".format(
                self.counts[Verdict.AGREE_IN], self.counts[Verdict.AGREE_OUT], self.counts[Verdict.DISAGREE]),
        ]
        lines += [f"DISAGREE {x}" for x in self.disagreements]
        return "\n".join(lines) + "\n"


def all_subsets(rank: int) -> list[frozenset[int]]:
    return [frozenset(c) for size in range(rank + 1) for c in combinations(range(1, rank + 1), size)]


def theorem2_sweep(rank: int, group: FiniteGroup, ds: Iterable[int], Ks: Iterable[Iterable[int]], maxlen: int,
                   random_words: int = 0, random_maxlen: int = 10, seed: int = 0) -> Theorem2SweepReport:
    """Run theorem2_check over every hom into ``group`` and every (K, d).

    Words are all reduced words up to ``maxlen`` plus ``random_words`` random
    words per (K, d), drawn from a generator seeded by the configuration, so
    reports are reproducible.
    """
    ds = [normalize_modulus(d) for d in ds]
    Ks = [frozenset(K) for K in Ks]
    base = list(enumerate_words(rank, maxlen))
    extra = {}
    for K in Ks:
        for d in ds:
            rng = random.Random(f"{seed}:{group.name}:{sorted(K)}:{d}")
            extra[K, d] = [random_word(rng, rank, random_maxlen) for _ in range(random_words)]
    counts = {v: 0 for v in Verdict}
    bad: list[str] = []
    n = 0
    for hom in enumerate_homs(rank, group):
        system = build(hom)
        for K in Ks:
            for d in ds:
                ctx = MembershipContext(hom, K, d, system)
                for v in base + extra[K, d]:
                    verdict = theorem2_check(MembershipInstance(v, K, hom, d), ctx)
                    counts[verdict] += 1
                    n += 1
                    if verdict is Verdict.DISAGREE:
                        bad.append(f"images={list(hom.images)} K={sorted(K)} d={d} v={render(v)}")
    return Theorem2SweepReport(rank, group.name, counts, n, bad)
