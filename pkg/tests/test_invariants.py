import pytest

import oracles
from pinilot import named
from pinilot.invariants import (
    components,
    fitting,
    frattini,
    generalized_fitting,
    hall_p_prime_subgroups,
    has_p_nilpotent_quotient,
    hypercenter,
    is_a4_free,
    is_nilpotent,
    is_p_group,
    is_p_nilpotent,
    is_p_nilpotent_by_generation,
    is_p_nilpotent_by_normal_complement,
    is_p_soluble,
    is_p_supersoluble,
    is_quaternion_free,
    is_soluble,
    is_supersoluble,
    o_p,
    o_p_prime,
    p_residual,
    sylow_subgroup,
    sylow_subgroups,
    u_hypercenter,
)
from pinilot.lattice import normal_subgroups
from pinilot.numbers import p_part, pi_of
from pinilot.structure import join


def _order8():
    return {
        "C8": named.cyclic(8),
        "C4xC2": named.abelian(4, 2),
        "C2^3": named.elementary_abelian(2, 3),
        "D8": named.dihedral(4),
        "Q8": named.dicyclic(2),
    }


def _order12():
    return {
        "C12": named.cyclic(12),
        "C6xC2": named.abelian(6, 2),
        "D12": named.dihedral(6),
        "Q12": named.dicyclic(3),
        "A4": named.alternating(4),
    }


def test_quaternion_fingerprint_among_order_8():
    flagged = [name for name, G in _order8().items() if not is_quaternion_free(G)]
    assert flagged == ["Q8"]


def test_a4_fingerprint_among_order_12():
    flagged = [name for name, G in _order12().items() if not is_a4_free(G)]
    assert flagged == ["A4"]


@pytest.mark.parametrize("ctor,qfree,a4free", [
    (lambda: named.dicyclic(4), False, True),
    (lambda: named.dihedral(8), True, True),
    (lambda: named.product(named.cyclic(2), named.dicyclic(2)), False, True),
    (lambda: named.special_linear_2(3), False, False),
    (lambda: named.symmetric(4), True, False),
    (lambda: named.alternating(5), True, False),
    (lambda: named.c5c5_rtimes_c3(), True, True),
])
def test_section_freeness(ctor, qfree, a4free):
    G = ctor()
    assert is_quaternion_free(G) == qfree
    assert is_a4_free(G) == a4free


def test_s4_characteristic_subgroups(S4):
    V = normal_subgroups(S4)[1]
    assert fitting(S4).mask == V.mask
    assert generalized_fitting(S4).mask == V.mask
    assert u_hypercenter(S4).order == 1
    assert hypercenter(S4).order == 1
    assert frattini(S4).order == 1
    assert o_p(S4, 2).mask == V.mask
    assert o_p_prime(S4, 2).order == 1
    assert p_residual(S4, 2).order == 12
    assert sylow_subgroup(S4, 2).order == 8
    assert len(sylow_subgroups(S4, 2)) == 3
    assert len(sylow_subgroups(S4, 3)) == 4
    assert [H.order for H in hall_p_prime_subgroups(S4, 2)] == [3, 3, 3, 3]


def test_quasisimple_components():
    A5 = named.alternating(5)
    assert generalized_fitting(A5).order == 60
    SL25 = named.special_linear_2(5)
    assert [C.order for C in components(SL25)] == [120]
    assert generalized_fitting(SL25).order == 120
    assert fitting(SL25).order == 2
    G = named.a5_times_c5()
    assert [C.order for C in components(G)] == [60]
    assert generalized_fitting(G).order == 300


def test_supersoluble_hypercenter_examples(S3):
    assert u_hypercenter(S3).order == 6
    assert u_hypercenter(named.alternating(4)).order == 1
    assert u_hypercenter(named.c5c5_rtimes_c3()).order == 1
    assert hypercenter(named.dihedral(4)).order == 8


def test_p_nilpotency_small_brute_force(tiny_corpus):
    for G in tiny_corpus:
        if G.order > 24:
            continue
        ref = oracles.closure([g.images for g in G.generators], G.degree)
        for p in pi_of(G.order):
            assert is_p_nilpotent(G, p) == oracles.is_p_nilpotent(ref, p, G.degree, max_gens=3), (G.name, p)


def test_dual_p_nilpotency_oracles(corpus):
    for G in corpus:
        for p in pi_of(G.order):
            assert is_p_nilpotent_by_generation(G, p) == is_p_nilpotent_by_normal_complement(G, p), (G.name, p)


def test_class_implications(corpus):
    for G in corpus:
        if is_nilpotent(G):
            assert is_supersoluble(G), G.name
        if is_supersoluble(G):
            assert is_soluble(G), G.name
        for p in pi_of(G.order):
            if is_p_nilpotent(G, p):
                assert is_p_soluble(G, p), (G.name, p)
            if is_p_supersoluble(G, p):
                assert is_p_soluble(G, p), (G.name, p)


def test_fitting_inclusions(corpus):
    for G in corpus:
        F, Fs = fitting(G), generalized_fitting(G)
        assert F.mask & Fs.mask == F.mask, G.name
        if is_soluble(G):
            # the general construction, without the soluble shortcut
            assert components(G) == []
            assert join(F, *components(G)).mask == F.mask
        Z, ZU = hypercenter(G), u_hypercenter(G)
        assert Z.mask & ZU.mask == Z.mask, G.name


def test_o_p_is_intersection_of_sylows(small_corpus):
    for G in small_corpus:
        for p in pi_of(G.order):
            mask = G.whole.mask
            for S in sylow_subgroups(G, p):
                mask &= S.mask
            assert o_p(G, p).mask == mask, (G.name, p)


def test_sylow_theorems(small_corpus):
    for G in small_corpus:
        for p in pi_of(G.order):
            S = sylow_subgroup(G, p)
            assert S.order == p_part(G.order, p)
            assert is_p_group(S, p)
            count = len(sylow_subgroups(G, p))
            assert count % p == 1 % p
            assert (G.order // S.order) % count == 0


def test_quotient_p_nilpotency_inside_G(S4, A4):
    V = normal_subgroups(S4)[1]
    assert has_p_nilpotent_quotient(S4, V, 2)  # S4/V4 = S3 has normal C3
    assert not has_p_nilpotent_quotient(S4, S4.trivial, 2)
    assert has_p_nilpotent_quotient(A4, normal_subgroups(A4)[1], 2)
    for G in (S4, A4):
        from pinilot.group import quotient

        for N in normal_subgroups(G):
            q = quotient(G, N)
            for p in pi_of(G.order):
                assert has_p_nilpotent_quotient(G, N, p) == is_p_nilpotent(q.quotient, p)


def test_p_supersoluble_examples(G75, A5C5):
    assert not is_p_soluble(A5C5, 5)
    assert is_p_soluble(G75, 5)
    assert not is_p_supersoluble(G75, 5)  # chief factor of order 25
    assert is_p_supersoluble(named.symmetric(4), 3)
