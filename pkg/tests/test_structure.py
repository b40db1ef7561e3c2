import pytest

import oracles
from pinilot.errors import WrongParent
from pinilot.lattice import all_subgroups
from pinilot.perm import Perm
from pinilot.structure import (
    center,
    centralizer,
    conjugate_subgroup,
    derived_subgroup,
    generated_subgroup,
    index,
    is_abelian,
    is_cyclic,
    is_normal,
    is_supplement,
    join,
    normal_closure,
    normalizer,
    product_order,
    product_set,
)


def _set(G, H):
    return frozenset(G.elements[i].images for i in H.indices)


def test_normalizer_centralizer_against_oracle(S4, A4):
    for G in (S4, A4):
        ref = frozenset(e.images for e in G.elements)
        for H in all_subgroups(G).all:
            hs = _set(G, H)
            assert _set(G, normalizer(G, H)) == oracles.normalizer(ref, hs)
            assert _set(G, centralizer(G, H)) == oracles.centralizer(ref, hs)
            assert is_normal(G, H) == oracles.is_normal(hs, ref)


def test_derived_and_center(S4, A4):
    assert derived_subgroup(S4).order == 12
    assert derived_subgroup(A4).order == 4
    assert center(S4).order == 1
    assert not is_abelian(S4)


def test_normal_closure(S4):
    H = S4.subgroup([Perm.from_cycles(4, [(0, 1)])])
    assert normal_closure(S4, H).order == 24
    K = S4.subgroup([Perm.from_cycles(4, [(0, 1), (2, 3)])])
    assert normal_closure(S4, K).order == 4


def test_product_law(tiny_corpus):
    for G in tiny_corpus:
        subs = all_subgroups(G).all
        for H in subs:
            for T in subs:
                inter = (H.mask & T.mask).bit_count()
                assert len(product_set(H, T)) * inter == H.order * T.order
                assert product_order(H, T) == len(product_set(H, T))


def test_supplement(S4):
    from pinilot.lattice import normal_subgroups

    V = normal_subgroups(S4)[1]
    S3 = S4.subgroup([Perm.from_cycles(4, [(0, 1, 2)]), Perm.from_cycles(4, [(0, 1)])])
    assert is_supplement(V, S3)
    assert not is_supplement(V, normal_subgroups(S4)[2])


def test_join_and_generated(S4):
    a = S4.subgroup([Perm.from_cycles(4, [(0, 1)])])
    b = S4.subgroup([Perm.from_cycles(4, [(1, 2)])])
    assert join(a, b).order == 6
    assert generated_subgroup(S4, [Perm.from_cycles(4, [(0, 1, 2, 3)])]).order == 4
    assert index(S4, a) == 12


def test_conjugate_subgroup(S4):
    a = S4.subgroup([Perm.from_cycles(4, [(0, 1)])])
    g = Perm.from_cycles(4, [(1, 2)])
    c = conjugate_subgroup(a, g)
    assert set(c.elements) == {x ** g for x in a.elements}


def test_is_cyclic(S4):
    assert is_cyclic(S4.subgroup([Perm.from_cycles(4, [(0, 1, 2, 3)])]))
    assert not is_cyclic(S4.subgroup([Perm.from_cycles(4, [(0, 1)]), Perm.from_cycles(4, [(2, 3)])]))


def test_wrong_parent(S3, S4):
    with pytest.raises(WrongParent):
        join(S3.whole, S4.whole)
