"""Command-line entry point: ``pinilot analyze | pi-check | verify``."""
from __future__ import annotations

import argparse
import sys

from .config import ENV_MAX_ORDER
from .corpus import CorpusConfig, builtin_corpus, emit_report, load_group_file
from .errors import PinilotError
from .harness import FAMILIES, SweepConfig, describe, run_corpus
from .invariants import (
    frattini,
    generalized_fitting,
    hypercenter,
    is_nilpotent,
    is_p_nilpotent,
    is_p_soluble,
    is_p_supersoluble,
    is_soluble,
    is_supersoluble,
    fitting,
    o_p,
    o_p_prime,
    p_residual,
    sylow_subgroup,
    u_hypercenter,
)
from .lattice import all_subgroups, chief_series, normal_subgroups
from .numbers import pi_of
from .perm import Perm
from .pi import has_p_nilpotent_supplement, is_pi_normal, is_pi_supplemented, pi_property_failures
from .structure import center, derived_subgroup, generated_subgroup, is_abelian

THEOREM_CHOICES = {
    "A": ("A",),
    "B": ("B",),
    "remark1": ("remark1",),
    "lemmas": ("lemmas",),
    "corollaries": ("corollaries",),
    "definitions": ("definitions",),
    "all": FAMILIES,
}


def _fmt(H):
    d = describe(H)
    gens = " ".join(d["generators"]) or "()"
    return f"order {d['order']:<4} gens {gens}"


def _analyze(args, out):
    G = load_group_file(args.file, max_order=args.max_order)
    primes = sorted(pi_of(G.order))
    if args.p is not None:
        if args.p not in primes:
            print(f"error: {args.p} does not divide |G| = {G.order}", file=sys.stderr)
            return 2
        primes = [args.p]
    out(f"group {G.name}: order {G.order}, degree {G.degree}")
    out(f"subgroups: {len(all_subgroups(G))}, normal subgroups: {len(normal_subgroups(G))}")
    out("")
    out("classes")
    for label, value in (
        ("abelian", is_abelian(G)),
        ("nilpotent", is_nilpotent(G)),
        ("supersoluble", is_supersoluble(G)),
        ("soluble", is_soluble(G)),
    ):
        out(f"  {label:<16} {value}")
    for p in primes:
        out(f"  p = {p}: p-nilpotent {is_p_nilpotent(G, p)}, p-soluble {is_p_soluble(G, p)}, "
            f"p-supersoluble {is_p_supersoluble(G, p)}")
    out("")
    out("characteristic subgroups")
    rows = [
        ("Z(G)", center(G)),
        ("G'", derived_subgroup(G)),
        ("Phi(G)", frattini(G)),
        ("F(G)", fitting(G)),
        ("F*(G)", generalized_fitting(G)),
        ("Z_inf(G)", hypercenter(G)),
    ]
    try:
        rows.append(("Z_inf^U(G)", u_hypercenter(G)))
    except PinilotError as exc:
        out(f"  Z_inf^U(G) unavailable: {exc}")
    for p in primes:
        rows += [
            (f"Sylow_{p}", sylow_subgroup(G, p)),
            (f"O_{p}(G)", o_p(G, p)),
            (f"O_{p}'(G)", o_p_prime(G, p)),
            (f"O^{p}(G)", p_residual(G, p)),
        ]
    for label, H in rows:
        out(f"  {label:<12} {_fmt(H)}")
    out("")
    series = chief_series(G)
    out("chief series (orders): " + " < ".join(str(s.order) for s in series))
    out("chief factors: " + ", ".join(str(b.order // a.order) for a, b in zip(series, series[1:])))
    return 0


def _parse_subgroup(G, text):
    gens = []
    for part in text.split(";"):
        part = part.strip()
        if part:
            gens.append(Perm.parse(G.degree, part, one_indexed=True))
    return generated_subgroup(G, gens)


def _pi_check(args, out):
    G = load_group_file(args.file, max_order=args.max_order)
    H = _parse_subgroup(G, args.subgroup)
    out(f"group {G.name} (order {G.order}); H: {_fmt(H)}")
    failures = pi_property_failures(G, H)
    out(f"Pi-property: {not failures}")
    for f in failures:
        primes = ",".join(str(q) for q in sorted(f.offending_primes))
        out(f"  fails at chief pair ({f.pair.lower.order} < {f.pair.upper.order}): "
            f"|X| = {f.intersection_order}, normalizer index {f.normalizer_index}, offending primes {primes}")
    sup, wsup = is_pi_supplemented(G, H)
    nor, wnor = is_pi_normal(G, H)
    out(f"Pi-supplemented: {sup}")
    out(f"Pi-normal: {nor}")
    if args.witness:
        for label, w in (("Pi-supplemented", wsup), ("Pi-normal", wnor)):
            if w is not None:
                out(f"  {label} witness T: {_fmt(w.T)}")
                out(f"  {label} witness I: {_fmt(w.I)}")
        for p in sorted(pi_of(G.order)):
            ok, T = has_p_nilpotent_supplement(G, H, p)
            out(f"  {p}-nilpotent supplement: " + (_fmt(T) if ok else "none"))
    return 0


def _verify(args, out):
    config = CorpusConfig(max_order=args.max_order, corpus_dir=args.corpus, include_builtin=not args.no_builtin)
    corpus = builtin_corpus(config)
    sweep = SweepConfig(families=THEOREM_CHOICES[args.theorem], jobs=max(1, args.jobs), reading=args.reading)
    report = run_corpus(corpus, sweep)
    data = emit_report(report, args.format, include_timing=args.timing)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return report.exit_code


def build_parser():
    parser = argparse.ArgumentParser(prog="pinilot", description="Π-property toolkit for finite permutation groups")
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="classify a group and list characteristic subgroups")
    a.add_argument("file")
    a.add_argument("--p", type=int, default=None)
    a.add_argument("--max-order", type=int, default=None)

    c = sub.add_parser("pi-check", help="Π-property, Π-supplementation and Π-normality of a subgroup")
    c.add_argument("file")
    c.add_argument("--subgroup", required=True, help="generators as 1-indexed cycles separated by ';'")
    c.add_argument("--witness", action="store_true")
    c.add_argument("--max-order", type=int, default=None)

    v = sub.add_parser("verify", help="sweep the criteria over the corpus")
    v.add_argument("--theorem", choices=sorted(THEOREM_CHOICES), default="all")
    v.add_argument("--corpus", default=None, help="directory of additional *.grp files")
    v.add_argument("--no-builtin", action="store_true", help="use only the files in --corpus")
    v.add_argument("--max-order", type=int, default=None, help=f"order filter (default from {ENV_MAX_ORDER} or 300)")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=("json", "text"), default="json")
    v.add_argument("--reading", choices=("all", "series"), default="all",
                   help="chief factors used by the Π-property: every chief pair, or one chief series")
    v.add_argument("--out", default=None)
    v.add_argument("--timing", action="store_true", help="include per-phase timing (breaks byte-identity)")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"analyze": _analyze, "pi-check": _pi_check, "verify": _verify}
    try:
        return handlers[args.command](args, print)
    except (PinilotError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
