"""Command-line entry point: ``foxcalc <command> ...``."""

from __future__ import annotations

import argparse
import sys

from .catalog import builtin_catalog, lookup
from .finquot import GroupHom, criterion_holds
from .fox import fox_derive
from .freegroup import ParseError, parse_word, render
from .freiheit import CertificateKind, certify, freiheitssatz_equiv_sweep, gildenhuys_check
from .groupring import render_ring
from .membership import MembershipInstance, all_subsets, member_side, theorem2_sweep
from .schreier import build


def _int_list(text: str) -> list[int]:
    text = text.strip()
    return [int(x) for x in text.split(",")] if text else []


def _group(name: str):
    try:
        return lookup(name)
    except KeyError as exc:
        raise SystemExit(f"error: {exc.args[0]}") from None


def _hom(args) -> GroupHom:
    group = _group(args.group)
    try:
        return GroupHom(args.rank, group, _int_list(args.images))
    except ValueError as exc:
        raise SystemExit(f"error: {exc}") from None


def _word(text: str, rank: int):
    try:
        return parse_word(text, rank)
    except ParseError as exc:
        raise SystemExit(f"error: {exc}") from None


def cmd_derive(args) -> int:
    w = _word(args.word, args.rank)
    print(render_ring(fox_derive(args.k, w)))
    return 0


def cmd_catalog(args) -> int:
    for g in builtin_catalog():
        tag = f"p={g.pgroup}" if g.pgroup else "-"
        print(f"{g.name}\t{g.order}\t{tag}")
    return 0


def cmd_schreier(args) -> int:
    hom = _hom(args)
    sys_ = build(hom)
    print(f"index {sys_.index}")
    for c in sys_.cosets:
        print(f"coset {c}: {render(sys_.representative(c))}")
    for i, g in enumerate(sys_.gens):
        print(f"gen {i}: {render(g.word)}")
    return 0


def cmd_theorem2(args) -> int:
    hom = _hom(args)
    v = _word(args.word, args.rank)
    K = _int_list(args.K)
    try:
        inst = MembershipInstance(v, K, hom, args.d)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}") from None
    crit = criterion_holds(v, inst.K, hom, inst.d)
    mem = member_side(inst)
    print(f"criterion={'IN' if crit else 'OUT'} member={'IN' if mem else 'OUT'} "
          f"verdict={'AGREE' if crit == mem else 'DISAGREE'}")
    return 0 if crit == mem else 1


def cmd_theorem2_sweep(args) -> int:
    group = _group(args.group)
    Ks = all_subsets(args.rank) if args.K is None else [_int_list(k) for k in args.K]
    report = theorem2_sweep(args.rank, group, [args.d], Ks, args.maxlen,
                            random_words=args.random, random_maxlen=args.random_maxlen, seed=args.seed)
    sys.stdout.write(report.render())
    return 0 if report.ok else 1


def cmd_freiheit(args) -> int:
    r = _word(args.word, args.rank)
    if r.is_identity():
        raise SystemExit("error: relator must not be the identity")
    cert = certify(r, args.n, args.limit)
    print(cert.render())
    return 2 if cert.kind is CertificateKind.UNKNOWN else 0


def cmd_freiheit_sweep(args) -> int:
    report = freiheitssatz_equiv_sweep(args.rank, args.maxlen, args.limit)
    sys.stdout.write(report.render())
    return 0 if report.ok else 1


def cmd_gildenhuys(args) -> int:
    try:
        report = gildenhuys_check(args.p, args.limit)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}") from None
    sys.stdout.write(report.render())
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="foxcalc", description="Fox calculus on free groups")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("derive", help="print D_K(W)")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("catalog", help="built-in finite groups")
    p.add_argument("action", choices=["list"])
    p.set_defaults(func=cmd_catalog)

    def hom_args(p):
        p.add_argument("--rank", type=int, required=True)
        p.add_argument("--group", required=True)
        p.add_argument("--images", required=True, help="comma-separated element indices")

    p = sub.add_parser("schreier", help="Schreier transversal and generators of ker(hom)")
    hom_args(p)
    p.set_defaults(func=cmd_schreier)

    p = sub.add_parser("theorem2", help="criterion vs. subgroup membership for one word")
    hom_args(p)
    p.add_argument("--d", type=int, default=0)
    p.add_argument("--K", default="", help="comma-separated generator indices (default: empty)")
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_theorem2)

    p = sub.add_parser("theorem2-sweep", help="exhaustive sweep over homs, K and words")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--group", required=True)
    p.add_argument("--d", type=int, default=0)
    p.add_argument("--maxlen", type=int, default=3)
    p.add_argument("--K", action="append", help="restrict to this K (repeatable); default: all subsets")
    p.add_argument("--random", type=int, default=0, help="extra random words per (K, d)")
    p.add_argument("--random-maxlen", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_theorem2_sweep)

    p = sub.add_parser("freiheit", help="certify D_n(r) modulo Z[F](R-1)")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--limit", type=int, default=16, help="largest catalog group order to search")
    p.set_defaults(func=cmd_freiheit)

    p = sub.add_parser("freiheit-sweep", help="certify all cyclically reduced relators up to a length")
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--maxlen", type=int, default=5)
    p.add_argument("--limit", type=int, default=16)
    p.set_defaults(func=cmd_freiheit_sweep)

    p = sub.add_parser("gildenhuys", help="finite p-quotient check of r = x1^p [x2, x1^p]")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=cmd_gildenhuys)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
