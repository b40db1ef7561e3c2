import random

import pytest

from pinilot import harness, named
from pinilot.errors import BadCondition, BadPrime, NotNormal, UnknownCorollary, UnknownLemma
from pinilot.harness import (
    COROLLARIES,
    LEMMAS,
    STATUSES,
    SweepConfig,
    VerdictRecord,
    check_corollary,
    check_group,
    check_lemma,
    check_remark_psupersoluble,
    check_theorem_a,
    check_theorem_b,
    run_corpus,
    sweep_lemma,
    sweep_theorem_a,
    sweep_theorem_b,
)
from pinilot.invariants import is_p_nilpotent, sylow_subgroup, sylow_subgroups
from pinilot.lattice import normal_subgroups
from pinilot.perm import Perm
from pinilot.structure import conjugate_subgroup, is_normal


def test_a5c5_fails_at_normalizer(A5C5):
    rec = check_theorem_a(A5C5, 5, A5C5.whole, 1)
    assert rec.status == "HYPOTHESIS_FAILS"
    assert rec.witness["clause"] == "normalizer-not-p-nilpotent"
    assert rec.witness["subgroup"]["order"] == 50


def test_remark_not_applicable_on_a5c5(A5C5):
    rec = check_remark_psupersoluble(A5C5, 5, A5C5.whole, 1)
    assert rec.status == "NOT_APPLICABLE"
    assert rec.witness == {"quotient_p_nilpotent": True, "subgroup_condition": True, "p_soluble": False}


def test_c3xs3_fails_at_normalizer():
    G = named.product(named.cyclic(3), named.symmetric(3))
    rec = check_theorem_a(G, 3, G.whole, 1)
    assert rec.status == "HYPOTHESIS_FAILS"
    assert rec.witness["clause"] == "normalizer-not-p-nilpotent"


def test_theorem_a_confirmed_on_nilpotent_group():
    G = named.product(named.cyclic(9), named.cyclic(2))
    rec = check_theorem_a(G, 3, G.whole, 1)
    assert rec.status == "CONFIRMED"


def test_d8_condition_i_confirmed():
    D8 = named.dihedral(4)
    assert check_theorem_b(D8, 2, D8.whole, 2, "i").status == "CONFIRMED"


def test_s4_condition_i_witness_is_noncentral_klein(S4):
    rec = check_theorem_b(S4, 2, S4.whole, 2, "i")
    assert rec.status == "HYPOTHESIS_FAILS"
    w = rec.witness
    assert w["clause"] == "order-condition" and w["subgroup_order"] == 4
    gens = [Perm.parse(4, g, one_indexed=True) for g in w["subgroup"]["generators"]]
    K = S4.subgroup(gens)
    assert K.order == 4 and all(S4.orders[i] <= 2 for i in K.indices)
    assert not is_normal(S4, K)
    assert any(K.mask & P.mask == K.mask for P in sylow_subgroups(S4, 2))


def test_a4_condition_i_not_applicable(A4):
    rec = check_theorem_b(A4, 2, A4.whole, 1, "i")
    assert rec.status == "NOT_APPLICABLE"
    assert rec.hypothesis_holds is False and rec.conclusion_holds is None


def test_m_out_of_range(S4):
    assert check_theorem_b(S4, 2, S4.whole, 3, "ii").status == "NOT_APPLICABLE"
    assert check_theorem_a(S4, 3, S4.whole, 1).status == "NOT_APPLICABLE"  # |P| = p


def test_argument_errors(S4, A4):
    with pytest.raises(BadPrime):
        check_theorem_a(S4, 2, S4.whole, 1)
    with pytest.raises(BadPrime):
        check_theorem_b(S4, 4, S4.whole, 1, "ii")
    with pytest.raises(BadCondition):
        check_theorem_b(S4, 2, S4.whole, 1, "v")
    H = S4.subgroup([Perm.from_cycles(4, [(0, 1)])])
    with pytest.raises(NotNormal):
        check_theorem_b(S4, 2, H, 1, "ii")
    with pytest.raises(NotNormal):
        check_theorem_a(S4, 3, A4.whole, 1)  # wrong parent
    with pytest.raises(UnknownCorollary):
        check_corollary(S4, "C-maximal", 2)
    with pytest.raises(UnknownLemma):
        check_lemma(S4, "no-such-lemma", {})
    with pytest.raises(UnknownLemma):
        sweep_lemma(S4, "no-such-lemma")


def test_weakened_corollaries(A4, G75):
    for G, p in ((A4, 2), (G75, 5)):
        for cid in ("B-2-maximal-weak", "B-2-minimal-weak"):
            assert check_corollary(G, cid, p).status == "EXPECTED_COUNTEREXAMPLE"
        for cid in ("B-2-maximal", "B-2-minimal"):
            rec = check_corollary(G, cid, p)
            assert rec.status == "HYPOTHESIS_FAILS"
            assert rec.witness["clause"] == "gcd(|G|, p^2-1) != 1"


def test_min_prime_corollary(S4, A4):
    assert check_corollary(S4, "min-prime-a4-free", 3).status == "NOT_APPLICABLE"
    rec = check_corollary(A4, "min-prime-a4-free", 2)
    assert rec.status == "HYPOTHESIS_FAILS"
    C = named.dicyclic(3)
    assert check_corollary(C, "min-prime-a4-free", 2).status == "CONFIRMED"


def test_corollary_catalog_is_complete():
    assert sum(spec.expected_false for spec in COROLLARIES.values()) == 2


def test_lemma_examples(S3, S4):
    C = named.abelian(6, 2)
    for p in (2, 3):
        rec = check_lemma(C, "normalizer-centralizer", {"p": p, "N": C.whole})
        assert rec.status == "CONFIRMED"
    V = normal_subgroups(S4)[1]
    assert check_lemma(S4, "fstar-u-hypercenter", {"E": V}).status == "HYPOTHESIS_FAILS"
    A3 = normal_subgroups(S3)[1]
    assert check_lemma(S3, "normal-p-subgroup-embedded", {"p": 3, "P": A3}).status == "CONFIRMED"


@pytest.mark.parametrize("lid", LEMMAS)
def test_lemma_sweeps_hold_on_small_groups(lid, S4, A4):
    for G in (S4, A4, named.dicyclic(3), named.c5c5_rtimes_c3()):
        rec = sweep_lemma(G, lid)
        assert rec.status in ("CONFIRMED", "HYPOTHESIS_FAILS"), (G.name, rec.witness)


def test_bounded_lemmas_are_skipped_above_bound(A5C5):
    for lid in harness.BOUNDED_LEMMAS:
        assert sweep_lemma(A5C5, lid, subgroup_bound=100).status == "SKIPPED"


def _fingerprint(rec):
    clause = rec.witness.get("clause") if rec.witness else None
    return (rec.status, rec.hypothesis_holds, rec.conclusion_holds, clause)


@pytest.mark.parametrize("ctor,p", [
    (lambda: named.product(named.symmetric(4), named.cyclic(3)), 3),
    (lambda: named.c5c5_rtimes_c3(), 3),
    (lambda: named.alternating(5), 5),
    (lambda: named.general_linear_2(3), 2),
])
def test_sylow_choice_independence(ctor, p):
    G = ctor()
    rng = random.Random(20240601)
    for N in normal_subgroups(G):
        if N.order % p:
            continue
        P0 = sylow_subgroup(N, p)
        reps = [conjugate_subgroup(P0, rng.randrange(G.order)) for _ in range(3)]
        for m in range(1, 5):
            if p > 2:
                base = _fingerprint(check_theorem_a(G, p, N, m, P=P0))
                for P in reps:
                    assert _fingerprint(check_theorem_a(G, p, N, m, P=P)) == base
            for cond in ("i", "ii", "iii", "iv"):
                base = _fingerprint(check_theorem_b(G, p, N, m, cond, P=P0))
                for P in reps:
                    assert _fingerprint(check_theorem_b(G, p, N, m, cond, P=P)) == base


def test_rejects_non_sylow(S4):
    V = normal_subgroups(S4)[1]
    with pytest.raises(ValueError):
        check_theorem_b(S4, 2, S4.whole, 1, "ii", P=V)


def test_monotone_consistency(small_corpus):
    for G in small_corpus:
        recs = sweep_theorem_a(G) + sweep_theorem_b(G)
        for r in recs:
            if r.hypothesis_holds:
                assert is_p_nilpotent(G, r.p), (G.name, r.check_id, r.p, r.m)
                assert r.status == "CONFIRMED"


def test_record_invariants_and_round_trip(S4, A4):
    recs, flags, timing = check_group(A4)
    assert set(timing) == set(harness.FAMILIES)
    assert flags == []
    for r in recs:
        assert r.status in STATUSES
        if r.status == "NOT_APPLICABLE":
            assert not r.hypothesis_holds
        if not r.hypothesis_holds:
            assert r.conclusion_holds is None
        back = VerdictRecord.from_dict(r.to_dict())
        assert back.to_dict() == r.to_dict()


def test_reading_flags_on_a4xc2():
    G = named.product(named.alternating(4), named.cyclic(2))
    _, flags, _ = check_group(G, SweepConfig(families=("definitions",)))
    assert flags
    assert all(f["all_pairs"] is False and f["chief_series"] is True for f in flags)
    assert {tuple(f["failing_pair"]) for f in flags} == {(1, 4)}


def test_errors_become_skipped_records(S3, monkeypatch):
    from pinilot.errors import LatticeBudgetExceeded

    def boom(G, cfg):
        raise LatticeBudgetExceeded("too many subgroups")

    monkeypatch.setitem(harness._SWEEPS, "A", boom)
    recs, _, _ = check_group(S3, SweepConfig(families=("A",)))
    assert [r.status for r in recs] == ["SKIPPED"]
    assert "too many subgroups" in recs[0].reason


def test_empty_corpus():
    report = run_corpus([])
    assert report.verdicts == [] and report.exit_code == 0
    assert set(report.histogram().values()) == {0}


def test_a4_corpus_has_one_expected_weak_2_maximal(A4):
    report = run_corpus([A4], SweepConfig(families=("corollaries",)))
    hits = [r for r in report.expected_counterexamples if r.check_id == "corollary:B-2-maximal-weak"]
    assert len(hits) == 1
    assert report.counterexamples == [] and report.exit_code == 0


def test_unexpected_counterexample_sets_exit_code(S3):
    report = run_corpus([S3], SweepConfig(families=("A",)))
    report.verdicts.append(VerdictRecord("theorem-A", "S3", hypothesis_holds=True, conclusion_holds=False))
    assert report.exit_code == 1
