"""Group definition files, the built-in corpus and report serialization.

File grammar (one directive per line, ``#`` starts a comment)::

    name S3
    degree 3
    gen (1 2 3)
    gen (1 2)

Points are 1-indexed in files and 0-indexed in memory.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .config import HARD_MAX_ORDER, resolve_max_order
from .errors import MalformedPermutation, ParseError
from .group import build_group
from .harness import STATUSES, CorpusReport
from . import named
from .perm import Perm


@dataclass
class GroupSpecFile:
    name: str
    degree: int
    generators: list = field(default_factory=list)  # cycle strings, 1-indexed

    def build(self, max_order=None):
        gens = [Perm.parse(self.degree, g, one_indexed=True) for g in self.generators]
        return build_group(self.degree, gens, max_order=max_order, name=self.name)


def parse_spec(text):
    """Parse file text into a :class:`GroupSpecFile` without building the group."""
    name = degree = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "name":
            if name is not None:
                raise ParseError("duplicate name directive", lineno)
            if not rest or len(rest.split()) != 1:
                raise ParseError("name takes exactly one token", lineno)
            name = rest
        elif key == "degree":
            if degree is not None:
                raise ParseError("duplicate degree directive", lineno)
            try:
                degree = int(rest)
            except ValueError:
                raise ParseError(f"degree must be an integer, got {rest!r}", lineno) from None
            if degree < 1:
                raise ParseError("degree must be positive", lineno)
        elif key == "gen":
            if degree is None:
                raise ParseError("gen before degree", lineno)
            try:
                Perm.parse(degree, rest, one_indexed=True)
            except MalformedPermutation as exc:
                raise ParseError(str(exc), lineno) from None
            gens.append(rest)
        else:
            raise ParseError(f"unknown directive {key!r}", lineno)
    if name is None:
        raise ParseError("missing name directive")
    if degree is None:
        raise ParseError("missing degree directive")
    if not gens:
        raise ParseError("at least one gen line is required")
    return GroupSpecFile(name, degree, gens)


def parse_group_file(text, max_order=None):
    """Parse and build; raises ParseError or ClosureExceedsBound."""
    return parse_spec(text).build(max_order=max_order)


def format_group_file(G, name=None):
    """Serialize a group to the file format (generators as 1-indexed cycles)."""
    lines = [f"name {name or G.name or f'G{G.order}'}", f"degree {G.degree}"]
    gens = G.generators or [G.identity]
    lines += [f"gen {g.cycle_string(one_indexed=True)}" for g in gens]
    return "\n".join(lines) + "\n"


def load_group_file(path, max_order=None):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path}: not UTF-8 ({exc})") from None
    return parse_group_file(text, max_order=max_order)


# ---------------------------------------------------------------- corpus


@dataclass
class CorpusConfig:
    max_order: int | None = None
    corpus_dir: str | None = None
    include_builtin: bool = True
    # C2^6 and C2^7 have thousands of subgroups; opt in explicitly
    large_elementary: bool = False

    @property
    def bound(self):
        return resolve_max_order(self.max_order)


def _vrc(p, matrix, q, name):
    return lambda: named.vector_rtimes_cyclic(p, matrix, q, name=name, max_order=HARD_MAX_ORDER)


def _named(ctor, name):
    def build():
        G = ctor()
        G.name = name
        return G
    return build


def _builtin_entries(config):
    """(name, order, constructor) triples in corpus order."""
    H = HARD_MAX_ORDER
    out = []
    for n in range(1, 33):
        out.append((f"C{n}", n, lambda n=n: named.cyclic(n, max_order=H)))
    for n in range(3, 17):
        out.append((f"D{2 * n}", 2 * n, lambda n=n: named.dihedral(n, max_order=H)))
    for n in range(2, 9):
        out.append((f"Q{4 * n}", 4 * n, lambda n=n: named.dicyclic(n, max_order=H)))
    elementary = [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2), (11, 2)]
    if config.large_elementary:
        elementary[4:4] = [(2, 6), (2, 7)]
    for p, k in elementary:
        out.append((f"C{p}^{k}", p ** k, lambda p=p, k=k: named.elementary_abelian(p, k, max_order=H)))
    for orders in [(2, 4), (2, 6), (2, 8), (4, 4), (3, 6), (2, 10), (3, 9), (2, 2, 4), (2, 12), (4, 8)]:
        size = 1
        for o in orders:
            size *= o
        name = "x".join(f"C{o}" for o in orders)
        out.append((name, size, lambda o=orders: named.abelian(*o, max_order=H)))
    out += [
        ("S3", 6, lambda: named.symmetric(3, max_order=H)),
        ("S4", 24, lambda: named.symmetric(4, max_order=H)),
        ("S5", 120, lambda: named.symmetric(5, max_order=H)),
        ("A4", 12, lambda: named.alternating(4, max_order=H)),
        ("A5", 60, lambda: named.alternating(5, max_order=H)),
        ("A5xC5", 300, lambda: named.a5_times_c5(max_order=H)),
        ("C5C5_rtimes_C3", 75, lambda: named.c5c5_rtimes_c3(max_order=H)),
        ("S4xC3", 72, lambda: named.product(named.symmetric(4), named.cyclic(3), "S4xC3", max_order=H)),
        ("C3C3_rtimes_C2", 18, _vrc(3, [[2, 0], [0, 2]], 2, "C3C3_rtimes_C2")),
        ("C3C3_rtimes_C4", 36, _vrc(3, [[0, 2], [1, 0]], 4, "C3C3_rtimes_C4")),
        ("C5C5_rtimes_C2", 50, _vrc(5, [[4, 0], [0, 4]], 2, "C5C5_rtimes_C2")),
        ("C5C5_rtimes_C4", 100, _vrc(5, [[2, 0], [0, 2]], 4, "C5C5_rtimes_C4")),
        ("C7C7_rtimes_C2", 98, _vrc(7, [[6, 0], [0, 6]], 2, "C7C7_rtimes_C2")),
        ("C7C7_rtimes_C3", 147, _vrc(7, [[2, 0], [0, 4]], 3, "C7C7_rtimes_C3")),
        ("C2C2C2_rtimes_C7", 56, _vrc(2, [[0, 0, 1], [1, 0, 1], [0, 1, 0]], 7, "C2C2C2_rtimes_C7")),
        ("C2^4_rtimes_C3", 48, _vrc(2, [[0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 1]], 3, "C2^4_rtimes_C3")),
        ("C2^4_rtimes_C5", 80, _vrc(2, [[0, 0, 0, 1], [1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]], 5, "C2^4_rtimes_C5")),
    ]
    for p, q in [(5, 4), (7, 3), (7, 6), (13, 3), (13, 4), (13, 6), (11, 5), (19, 3), (31, 5)]:
        out.append((f"C{p}_rtimes_C{q}", p * q, lambda p=p, q=q: named.affine_cyclic(p, q, max_order=H)))
    sym, alt, cyc = named.symmetric, named.alternating, named.cyclic
    products = [
        ("C3xS3", 18, lambda: (cyc(3), sym(3))),
        ("S3xS3", 36, lambda: (sym(3), sym(3))),
        ("A4xC2", 24, lambda: (alt(4), cyc(2))),
        ("A4xC3", 36, lambda: (alt(4), cyc(3))),
        ("A4xC5", 60, lambda: (alt(4), cyc(5))),
        ("A4xS3", 72, lambda: (alt(4), sym(3))),
        ("C2xQ8", 16, lambda: (cyc(2), named.dicyclic(2))),
        ("C3xQ8", 24, lambda: (cyc(3), named.dicyclic(2))),
        ("C2xD8", 16, lambda: (cyc(2), named.dihedral(4))),
        ("C4xS3", 24, lambda: (cyc(4), sym(3))),
        ("C3xD10", 30, lambda: (cyc(3), named.dihedral(5))),
        ("C5xS3", 30, lambda: (cyc(5), sym(3))),
        ("S4xC2", 48, lambda: (sym(4), cyc(2))),
        ("A5xC2", 120, lambda: (alt(5), cyc(2))),
        ("C7_rtimes_C3xC3", 63, lambda: (named.affine_cyclic(7, 3), cyc(3))),
    ]
    for name, order, parts in products:
        out.append((name, order, lambda name=name, parts=parts: named.product(*parts(), name=name, max_order=H)))
    out += [
        ("SL(2,3)", 24, lambda: named.special_linear_2(3, max_order=H)),
        ("GL(2,3)", 48, lambda: named.general_linear_2(3, max_order=H)),
        ("SL(2,5)", 120, lambda: named.special_linear_2(5, max_order=H)),
        ("PSL(2,7)", 168, lambda: build_group(
            7,
            [Perm.parse(7, "(1 2 3 4 5 6 7)", True), Perm.parse(7, "(1 2)(3 6)", True)],
            max_order=H,
            name="PSL(2,7)",
        )),
    ]
    return out


def builtin_entries(config=None):
    """Names and orders of the built-in corpus after the order filter."""
    config = config or CorpusConfig()
    bound = config.bound
    return [(n, o) for n, o, _ in _builtin_entries(config) if o <= bound]


def load_corpus_dir(path, max_order=None):
    """All ``*.grp`` files in a directory, sorted by file name."""
    groups = []
    for f in sorted(Path(path).glob("*.grp")):
        try:
            groups.append(load_group_file(f, max_order=max_order))
        except ParseError as exc:
            raise ParseError(f"{f.name}: {exc}") from None
    return groups


def builtin_corpus(config=None):
    """Deterministic corpus: built-in groups of order <= max_order, then user files."""
    config = config or CorpusConfig()
    bound = config.bound
    groups = []
    if config.include_builtin:
        for name, order, ctor in _builtin_entries(config):
            if order > bound:
                continue
            G = ctor()
            G.name = name
            assert G.order == order, (name, G.order)
            groups.append(G)
    if config.corpus_dir:
        for G in load_corpus_dir(config.corpus_dir, max_order=HARD_MAX_ORDER):
            if G.order <= bound:
                groups.append(G)
    seen = set()
    for G in groups:
        if G.name in seen:
            raise ParseError(f"duplicate group name {G.name!r} in corpus")
        seen.add(G.name)
    return groups


# ---------------------------------------------------------------- reports


def report_dict(report: CorpusReport, include_timing=False):
    hist = Counter(order for _, order in report.groups)
    out = {
        "engine_version": report.engine_version,
        "corpus": {
            "group_count": len(report.groups),
            "order_histogram": [[o, hist[o]] for o in sorted(hist)],
            "groups": [{"name": n, "order": o} for n, o in report.groups],
        },
        "status_histogram": report.histogram(),
        "verdicts": [v.to_dict() for v in report.verdicts],
        "counterexamples": [v.to_dict() for v in report.counterexamples],
        "expected_counterexamples": [v.to_dict() for v in report.expected_counterexamples],
        "notes": list(report.notes),
        "flags": list(report.flags),
    }
    if include_timing:
        out["timing"] = {k: round(v, 3) for k, v in sorted(report.timing.items())}
    return out


def emit_report(report, fmt="json", include_timing=False):
    """Serialize a report to bytes, as JSON (sorted keys) or a text summary."""
    if fmt == "json":
        text = json.dumps(report_dict(report, include_timing), sort_keys=True, indent=1, ensure_ascii=False)
        return (text + "\n").encode("utf-8")
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    return _text_report(report, include_timing).encode("utf-8")


def _text_report(report, include_timing):
    lines = [f"pinilot {report.engine_version}", f"groups: {len(report.groups)}", ""]
    per_check = {}
    for v in report.verdicts:
        per_check.setdefault(v.check_id, Counter())[v.status] += 1
    short = {s: s[:12] for s in STATUSES}
    width = max([len(c) for c in per_check] + [len("check")])
    lines.append(f"{'check':<{width}}  " + "  ".join(f"{short[s]:>12}" for s in STATUSES))
    for cid in sorted(per_check):
        row = per_check[cid]
        lines.append(f"{cid:<{width}}  " + "  ".join(f"{row[s]:>12}" for s in STATUSES))
    total = report.histogram()
    lines.append(f"{'TOTAL':<{width}}  " + "  ".join(f"{total[s]:>12}" for s in STATUSES))
    for title, items in (
        ("unexpected counterexamples", report.counterexamples),
        ("expected counterexamples", report.expected_counterexamples),
    ):
        lines.append("")
        lines.append(f"{title}: {len(items)}")
        for v in items:
            lines.append(
                f"  {v.check_id} group={v.group} p={v.p} N_order={v.n_order} m={v.m} condition={v.condition}"
            )
    if report.notes:
        lines.append("")
        lines += [f"note: {n}" for n in report.notes]
    if include_timing:
        lines.append("")
        lines += [f"time {k}: {v:.2f}s" for k, v in sorted(report.timing.items())]
    return "\n".join(lines) + "\n"
