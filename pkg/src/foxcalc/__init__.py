"""Fox free differential calculus over free groups of finite rank.

Exact arithmetic in Z[F], reduction into group rings of finite quotients,
Reidemeister-Schreier rewriting, and a decision procedure for membership in
F_K (F_K n N)^F [N,N] N^d that is cross-checked against vanishing of Fox
derivatives.
"""

from .catalog import FiniteGroup, builtin_catalog, load_group, lookup, save_group
from .finquot import GroupHom, QuotRingElt, criterion_holds, enumerate_homs, hom_apply, in_kernel, pi_reduce
from .fox import conjugation_formula_check, fox_derive, fundamental_decomposition
from .freegroup import (FreeWord, commutator, conjugate, cyclic_reduce, invert, multiply, occurs,
                        parse_word, power, render)
from .freiheit import Certificate, CertificateKind, certify, gildenhuys_check, magnus_syntactic
from .groupring import RingElt, augment, from_word, render_ring
from .membership import (MembershipInstance, Verdict, commutator_corollary_check, criterion_side,
                         member_side, theorem2_check)
from .schreier import SchreierSystem, abelianized_vector, build, rewrite, subgroup_schreier

__version__ = "0.1.0"

__all__ = [
    "FiniteGroup",
    "builtin_catalog",
    "load_group",
    "lookup",
    "save_group",
    "GroupHom",
    "QuotRingElt",
    "criterion_holds",
    "enumerate_homs",
    "hom_apply",
    "in_kernel",
    "pi_reduce",
    "conjugation_formula_check",
    "fox_derive",
    "fundamental_decomposition",
    "FreeWord",
    "commutator",
    "conjugate",
    "cyclic_reduce",
    "invert",
    "multiply",
    "occurs",
    "parse_word",
    "power",
    "render",
    "Certificate",
    "CertificateKind",
    "certify",
    "gildenhuys_check",
    "magnus_syntactic",
    "RingElt",
    "augment",
    "from_word",
    "render_ring",
    "MembershipInstance",
    "Verdict",
    "commutator_corollary_check",
    "criterion_side",
    "member_side",
    "theorem2_check",
    "SchreierSystem",
    "abelianized_vector",
    "build",
    "rewrite",
    "subgroup_schreier",
]
