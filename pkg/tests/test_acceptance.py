"""The ten acceptance criteria, each reported as one PASS/FAIL line in the summary.

The full corpus sweep is run once through the library (with timing) and once
through the command line; the two JSON documents must be byte-identical.
"""
import json
import subprocess
import sys
import time

import pytest

from conftest import record_acceptance
from pinilot import named
from pinilot.corpus import CorpusConfig, builtin_corpus, emit_report
from pinilot.harness import LEMMAS, SweepConfig, run_corpus
from pinilot.invariants import (
    is_p_nilpotent,
    is_p_nilpotent_by_generation,
    is_p_nilpotent_by_normal_complement,
    is_p_soluble,
    sylow_subgroup,
    sylow_subgroups,
)
from pinilot.lattice import all_subgroups, chief_pairs, normal_subgroups, subgroups_of_order
from pinilot.numbers import pi_of
from pinilot.perm import Perm
from pinilot.pi import has_p_nilpotent_supplement, has_pi_property, is_pi_normal, pi_property_failures
from pinilot.structure import is_normal


@pytest.fixture(scope="module")
def full_run():
    corpus = builtin_corpus(CorpusConfig())
    t0 = time.perf_counter()
    report = run_corpus(corpus, SweepConfig())
    elapsed = time.perf_counter() - t0
    return report, emit_report(report, "json"), elapsed


def _verdicts(report, prefix):
    return [v for v in report.verdicts if v.check_id.startswith(prefix)]


def _seconds(report, family):
    return report.timing.get(family, 0.0)


def test_criterion_1_engine_sanity():
    t0 = time.perf_counter()
    S3, S4, A5 = named.symmetric(3), named.symmetric(4), named.alternating(5)
    orders = (S3.order, S4.order, A5.order)
    subs = all_subgroups(S4)
    normals = [N.order for N in normal_subgroups(S4)]
    pairs = sorted((c.lower.order, c.upper.order) for c in chief_pairs(S4))
    elapsed = time.perf_counter() - t0
    ok = (orders == (6, 24, 60) and len(subs) == 30 and normals == [1, 4, 12, 24]
          and pairs == [(1, 4), (4, 12), (12, 24)] and elapsed < 1.0)
    record_acceptance(1, ok, f"orders {orders}, |L(S4)| = {len(subs)}, normals {normals}, "
                             f"chief pairs {pairs}, {elapsed:.2f} s")
    assert ok


def test_criterion_2_dual_p_nilpotency():
    t0 = time.perf_counter()
    corpus = builtin_corpus(CorpusConfig(max_order=200))
    checked, disagreements = 0, []
    for G in corpus:
        for p in pi_of(G.order):
            checked += 1
            if is_p_nilpotent_by_generation(G, p) != is_p_nilpotent_by_normal_complement(G, p):
                disagreements.append((G.name, p))
    elapsed = time.perf_counter() - t0
    ok = not disagreements and elapsed < 120
    record_acceptance(2, ok, f"{len(corpus)} groups, {checked} (G, p) pairs, "
                             f"{len(disagreements)} disagreements, {elapsed:.1f} s")
    assert ok, disagreements


def test_criterion_3_definitions(full_run):
    report, _, _ = full_run
    defs = [v for v in _verdicts(report, "definition:") if "pi-property" in v.check_id]
    groups = {v.group for v in defs}
    bad = [v for v in defs if v.status != "CONFIRMED"]
    S4 = named.symmetric(4)
    H = S4.subgroup([Perm.from_cycles(4, [(0, 1), (2, 3)])])
    fails = pi_property_failures(S4, H)
    s4_ok = (not has_pi_property(S4, H) and len(fails) == 1
             and (fails[0].pair.lower.order, fails[0].pair.upper.order) == (1, 4)
             and fails[0].offending_primes == frozenset({3}))
    ok = not bad and len(groups) == len(report.groups) and s4_ok
    record_acceptance(3, ok, f"{len(defs)} definition records over {len(groups)} groups, {len(bad)} not confirmed; "
                             f"<(0 1)(2 3)> in S4 fails at (1, V4) with offending prime 3: {s4_ok}")
    assert ok


def test_criterion_4_lemmas(full_run):
    report, _, _ = full_run
    recs = _verdicts(report, "lemma:")
    ids = {v.check_id.split(":", 1)[1] for v in recs}
    violations = [v for v in recs if v.status == "COUNTEREXAMPLE"]
    skipped_large = all(report_order(report, v.group) > 100 for v in recs if v.status == "SKIPPED")
    confirmed = sum(v.status == "CONFIRMED" for v in recs)
    secs = _seconds(report, "lemmas")
    ok = ids == set(LEMMAS) and not violations and skipped_large and secs < 900
    record_acceptance(4, ok, f"{len(ids)} lemmas, {len(recs)} group sweeps, {confirmed} confirmed, "
                             f"{len(violations)} violations, {secs:.0f} s")
    assert ok


def report_order(report, name):
    return dict(report.groups)[name]


def test_criterion_5_theorem_a(full_run):
    report, _, _ = full_run
    recs = _verdicts(report, "theorem-A")
    ce = [v for v in recs if v.status == "COUNTEREXAMPLE"]
    confirmed = sum(v.status == "CONFIRMED" for v in recs)
    secs = _seconds(report, "A")
    ok = not ce and confirmed >= 20 and secs < 1200
    record_acceptance(5, ok, f"{len(recs)} instances, {confirmed} confirmed, {len(ce)} counterexamples, {secs:.1f} s")
    assert ok


def test_criterion_6_theorem_b(full_run):
    report, _, _ = full_run
    recs = _verdicts(report, "theorem-B")
    ce = [v for v in recs if v.status == "COUNTEREXAMPLE"]
    confirmed = sum(v.status == "CONFIRMED" for v in recs)
    secs = _seconds(report, "B")
    s4 = [v for v in recs if v.group == "S4" and v.p == 2 and v.m == 2 and v.n_order == 24 and v.condition == "i"]
    S4 = named.symmetric(4)
    witness_ok = False
    if len(s4) == 1 and s4[0].status == "HYPOTHESIS_FAILS":
        gens = [Perm.parse(4, g, one_indexed=True) for g in s4[0].witness["subgroup"]["generators"]]
        K = S4.subgroup(gens)
        klein = K.order == 4 and all(S4.orders[i] <= 2 for i in K.indices)
        in_sylow = any(K.mask & Q.mask == K.mask for Q in sylow_subgroups(S4, 2))
        witness_ok = klein and in_sylow and not is_normal(S4, K)
    ok = not ce and confirmed >= 10 and witness_ok and secs < 1200
    record_acceptance(6, ok, f"{len(recs)} instances, {confirmed} confirmed, {len(ce)} counterexamples; "
                             f"S4 p=2 m=2 witness is a non-normal Klein subgroup: {witness_ok}; {secs:.1f} s")
    assert ok


def test_criterion_7_a5_times_c5():
    G = named.a5_times_c5()
    five = subgroups_of_order(G.whole, 5)
    unsupported = [H for H in five if not has_p_nilpotent_supplement(G, H, 5)[0]]
    Z = G.embeddings[1]
    ok = (len(unsupported) == 1 and unsupported[0].mask == Z.mask and is_normal(G, Z)
          and is_pi_normal(G, Z)[0] and not is_p_soluble(G, 5))
    record_acceptance(7, ok, f"{len(five)} subgroups of order 5, {len(unsupported)} without a 5-nilpotent supplement "
                             f"(the C5 factor: {bool(unsupported) and unsupported[0].mask == Z.mask}); "
                             f"5-soluble: {is_p_soluble(G, 5)}")
    assert ok


def test_criterion_8_order_75():
    G = named.c5c5_rtimes_c3()
    P = sylow_subgroup(G, 5)
    two_min = subgroups_of_order(P, 25)
    two_max = subgroups_of_order(P, 1)
    ok = (not is_p_nilpotent(G, 5) and P.order == 25
          and [H.mask for H in two_min] == [P.mask] and [H.order for H in two_max] == [1]
          and is_normal(G, two_min[0]) and is_normal(G, two_max[0]))
    record_acceptance(8, ok, f"5-nilpotent: {is_p_nilpotent(G, 5)}; 2-minimal subgroups {[H.order for H in two_min]}, "
                             f"2-maximal subgroups {[H.order for H in two_max]}, both normal")
    assert ok


def test_criterion_9_weakened_corollaries(full_run):
    report, _, _ = full_run
    expected = {(v.group, v.p, v.check_id) for v in report.expected_counterexamples}
    wanted = {(g, p, f"corollary:{c}") for g, p in (("A4", 2), ("C5C5_rtimes_C3", 5))
              for c in ("B-2-maximal-weak", "B-2-minimal-weak")}
    strong = [v for v in report.verdicts if v.check_id in ("corollary:B-2-maximal", "corollary:B-2-minimal")]
    strong_ce = [v for v in strong if v.status == "COUNTEREXAMPLE"]
    ok = wanted <= expected and not strong_ce and bool(strong)
    record_acceptance(9, ok, f"expected counterexamples present {len(wanted & expected)}/{len(wanted)} "
                             f"({len(expected)} in total); strong-form counterexamples {len(strong_ce)} of {len(strong)}")
    assert ok


def test_criterion_10_determinism(full_run, tmp_path):
    _, data, elapsed = full_run
    out = tmp_path / "second.json"
    t0 = time.perf_counter()
    res = subprocess.run(
        [sys.executable, "-m", "pinilot", "verify", "--theorem", "all", "--format", "json", "--out", str(out)],
        capture_output=True, text=True, check=False,
    )
    second = out.read_bytes() if out.exists() else b""
    same = res.returncode == 0 and second == data
    record_acceptance(10, same, f"library run {elapsed:.0f} s and CLI run {time.perf_counter() - t0:.0f} s, "
                                f"{len(data)} bytes, identical: {second == data}, exit code {res.returncode}")
    assert same, res.stderr
    json.loads(second)
