"""Certificates for whether D_n(r) vanishes modulo Z[F](R - 1), R the normal closure of r,
and the finite-level check of the pro-p example r = x1^p [x2, x1^p].

Vanishing is certified by an explicit ring identity.  Non-vanishing is only
semi-decidable; it is certified by a finite quotient psi with psi(r) = 1 in
which the derivative survives, and ``Unknown`` is returned when the catalog
runs out.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .catalog import builtin_catalog
from .finquot import GroupHom, QuotRingElt, enumerate_homs, pi_reduce
from .fox import fox_derive
from .freegroup import (FreeWord, commutator, cyclic_reduce, enumerate_words, generator, invert, multiply,
                        occurs, render)
from .groupring import RingElt, from_word, mul, one, render_ring, subtract

__all__ = [
    "CertificateKind",
    "Certificate",
    "magnus_syntactic",
    "certify",
    "GildenhuysReport",
    "gildenhuys_relator",
    "gildenhuys_check",
    "SweepReport",
    "freiheitssatz_equiv_sweep",
    "cyclically_reduced_words",
]


class CertificateKind(enum.Enum):
    ZERO_IDENTITY = "ZeroIdentity"
    NONZERO_WITNESS = "NonzeroWitness"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Certificate:
    kind: CertificateKind
    relator: FreeWord
    n: int
    conjugator: FreeWord | None = None
    core: FreeWord | None = None
    witness: GroupHom | None = None
    residue: QuotRingElt | None = None

    def verify(self) -> bool:
        """Re-check the certificate from scratch."""
        r, n = self.relator, self.n
        if self.kind is CertificateKind.ZERO_IDENTITY:
            w, c = self.conjugator, self.core
            if multiply(multiply(w, c), invert(w)) != r or occurs(c, n):
                return False
            # D_n(r) = D_n(w) (c - 1) w^-1, and (c - 1) w^-1 = w^-1 (r - 1)
            rhs = mul(mul(fox_derive(n, w), subtract(from_word(c), one(r.rank))), from_word(invert(w)))
            return fox_derive(n, r) == rhs
        if self.kind is CertificateKind.NONZERO_WITNESS:
            psi = self.witness
            if psi.apply(r) != 0:
                return False
            res = pi_reduce(fox_derive(n, r), psi, 0)
            return not res.is_zero() and res == self.residue
        return True

    def render(self) -> str:
        head = f"{self.kind.value} relator={render(self.relator)} n={self.n}"
        if self.kind is CertificateKind.ZERO_IDENTITY:
            return (f"{head} conjugator={render(self.conjugator)} core={render(self.core)} "
                    f"D_n(r)={render_ring(fox_derive(self.n, self.relator))}")
        if self.kind is CertificateKind.NONZERO_WITNESS:
            psi = self.witness
            return (f"{head} group={psi.target.name} images={','.join(map(str, psi.images))} "
                    f"residue={self.residue.render()}")
        return head


def magnus_syntactic(r: FreeWord, n: int) -> bool:
    """Whether the cyclic reduction of r involves x_n."""
    if r.is_identity():
        raise ValueError("relator must not be the identity")
    return occurs(cyclic_reduce(r)[1], n)


def certify(r: FreeWord, n: int, catalog_limit: int = 16) -> Certificate:
    if r.is_identity():
        raise ValueError("relator must not be the identity")
    if not 1 <= n <= r.rank:
        raise ValueError(f"generator index {n} out of range for rank {r.rank}")
    conj, core = cyclic_reduce(r)
    if not occurs(core, n):
        cert = Certificate(CertificateKind.ZERO_IDENTITY, r, n, conjugator=conj, core=core)
        if not cert.verify():
            raise AssertionError(f"zero identity failed to verify for {render(r)}")
        return cert
    deriv = fox_derive(n, r)
    for group in builtin_catalog(catalog_limit):
        for psi in enumerate_homs(r.rank, group):
            if psi.apply(r) != 0:
                continue
            res = pi_reduce(deriv, psi, 0)
            if not res.is_zero():
                return Certificate(CertificateKind.NONZERO_WITNESS, r, n, witness=psi, residue=res)
    return Certificate(CertificateKind.UNKNOWN, r, n)


def cyclically_reduced_words(rank: int, maxlen: int):
    """Non-trivial cyclically reduced words of length <= maxlen, in shortlex order."""
    for w in enumerate_words(rank, maxlen):
        if w.is_identity():
            continue
        if cyclic_reduce(w)[0].is_identity():
            yield w


@dataclass
class SweepReport:
    rank: int
    maxlen: int
    catalog_limit: int
    total: int = 0
    syntactic_true: int = 0
    syntactic_false: int = 0
    nonzero_witness: int = 0
    zero_identity: int = 0
    unknown: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)
    witness_groups: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def render(self) -> str:
        lines = [
            f"freiheitssatz sweep rank={self.rank} maxlen={self.maxlen} limit={self.catalog_limit}",
            f"relators={self.total} syntactic_true={self.syntactic_true} syntactic_false={self.syntactic_false}",
            f"NonzeroWitness={self.nonzero_witness} ZeroIdentity={self.zero_identity} "
            f"Unknown={len(self.unknown)} failures={len(self.failures)}",
        ]
        for name in sorted(self.witness_groups, key=lambda s: (len(s), s)):
            lines.append(f"witness group {name}: {self.witness_groups[name]}")
        lines += [f"unknown {u}" for u in self.unknown]
        lines += [f"FAIL {f}" for f in self.failures]
        return "\n".join(lines) + "\n"


def freiheitssatz_equiv_sweep(rank: int, maxlen: int, catalog_limit: int = 16) -> SweepReport:
    """Certify every cyclically reduced relator up to maxlen with respect to x_rank."""
    if rank < 2:
        raise ValueError("rank must be at least 2")
    n = rank
    rep = SweepReport(rank, maxlen, catalog_limit)
    for r in cyclically_reduced_words(rank, maxlen):
        rep.total += 1
        syn = magnus_syntactic(r, n)
        cert = certify(r, n, catalog_limit)
        if syn:
            rep.syntactic_true += 1
        else:
            rep.syntactic_false += 1
        if cert.kind is CertificateKind.UNKNOWN:
            rep.unknown.append(render(r))
            if not syn:
                rep.failures.append(f"{render(r)}: Unknown for a relator without x{n}")
            continue
        if not cert.verify():
            rep.failures.append(f"{render(r)}: certificate does not verify")
            continue
        if cert.kind is CertificateKind.NONZERO_WITNESS:
            rep.nonzero_witness += 1
            name = cert.witness.target.name
            rep.witness_groups[name] = rep.witness_groups.get(name, 0) + 1
            if not syn:
                rep.failures.append(f"{render(r)}: NonzeroWitness but x{n} absent from core")
        else:
            rep.zero_identity += 1
            if syn:
                rep.failures.append(f"{render(r)}: ZeroIdentity but x{n} occurs in core")
    return rep


def gildenhuys_relator(p: int) -> FreeWord:
    """r = x1^p [x2, x1^p] in F(2)."""
    x1p = generator(2, 1, p)
    return multiply(x1p, commutator(generator(2, 2), x1p))


def _gildenhuys_expected(p: int) -> RingElt:
    x1p = generator(2, 1, p)
    x2 = generator(2, 2)
    term = multiply(multiply(invert(x2), invert(x1p)), multiply(x2, x1p))
    return subtract(from_word(x1p), from_word(term))


_DEFAULT_LIMITS = {2: 16, 3: 27}


@dataclass
class GildenhuysReport:
    p: int
    catalog_limit: int
    derivative: str = ""
    derivative_matches: bool = False
    groups: list[str] = field(default_factory=list)
    homs_total: int = 0
    homs_killing_r: int = 0
    x1_nontrivial: int = 0
    first_x1_nontrivial: str = ""
    exceptions: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.derivative_matches and not self.exceptions

    def render(self) -> str:
        lines = [
            f"gildenhuys p={self.p} limit={self.catalog_limit}",
            f"relator={render(gildenhuys_relator(self.p))}",
            f"D_2(r)={self.derivative} matches_formula={'yes' if self.derivative_matches else 'NO'}",
            f"p-groups={','.join(self.groups)}",
            f"homs={self.homs_total} killing_r={self.homs_killing_r} "
            f"x1_nontrivial={self.x1_nontrivial} exceptions={len(self.exceptions)}",
            f"first_x1_nontrivial={self.first_x1_nontrivial or 'none'}",
        ]
        lines += [f"EXCEPTION {e}" for e in self.exceptions]
        return "\n".join(lines) + "\n"


def gildenhuys_check(p: int, catalog_limit: int | None = None) -> GildenhuysReport:
    """Check r = x1^p [x2, x1^p] against every hom into a catalog p-group:
    whenever psi(r) = 1, also psi(x1^p) = 1 and pi(D_2(r)) = 0."""
    if p not in _DEFAULT_LIMITS:
        raise ValueError(f"p must be one of {sorted(_DEFAULT_LIMITS)}, got {p}")
    limit = _DEFAULT_LIMITS[p] if catalog_limit is None else catalog_limit
    r = gildenhuys_relator(p)
    x1 = generator(2, 1)
    x1p = generator(2, 1, p)
    d2 = fox_derive(2, r)
    rep = GildenhuysReport(p, limit, derivative=render_ring(d2),
                           derivative_matches=(d2 == _gildenhuys_expected(p)))
    for group in builtin_catalog(limit):
        if not group.is_pgroup(p):
            continue
        rep.groups.append(group.name)
        for psi in enumerate_homs(2, group):
            rep.homs_total += 1
            if psi.apply(r) != 0:
                continue
            rep.homs_killing_r += 1
            label = f"{group.name}[{','.join(map(str, psi.images))}]"
            if psi.apply(x1p) != 0:
                rep.exceptions.append(f"{label}: psi(x1^{p}) != 1")
            if not pi_reduce(d2, psi, 0).is_zero():
                rep.exceptions.append(f"{label}: pi(D_2(r)) != 0")
            if psi.apply(x1) != 0:
                rep.x1_nontrivial += 1
                if not rep.first_x1_nontrivial:
                    rep.first_x1_nontrivial = label
    return rep
