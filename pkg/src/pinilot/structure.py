"""Subgroup-level constructions inside a fixed finite group.

Every function taking an ambient ``G`` accepts either a :class:`FiniteGroup`
or a :class:`Subgroup`; in the second case the computation happens inside
that subgroup (e.g. ``normalizer(R, H)`` is N_R(H)).
"""
from __future__ import annotations

from .errors import NotAnElement, WrongParent
from .group import (
    ambient,
    bits,
    check_parent,
    extend,
    generate,
)


def generated_subgroup(G, seed):
    """Smallest subgroup of G containing the Perms (or indices) in ``seed``."""
    P, A = ambient(G)
    idx = []
    for s in seed:
        i = s if isinstance(s, int) else P.index(s)
        if not A.has(i):
            raise NotAnElement(f"{P.elements[i]!r} is not in the ambient group")
        idx.append(i)
    idx.sort()
    mask, _ = generate(P, idx)
    gens = []
    cur, elems = 1, [0]
    for i in idx:
        if not cur >> i & 1:
            elems, cur = extend(P, elems, cur, gens, i)
            gens.append(i)
    return P.subgroup_from_mask(mask, tuple(gens))


def join(*subgroups):
    """Subgroup generated by the union of several subgroups of one group."""
    P = subgroups[0].parent
    largest = max(subgroups, key=lambda s: s.order)
    mask = largest.mask
    for H in subgroups:
        if H.parent is not P:
            raise WrongParent("join of subgroups from different groups")
        if H.mask & mask == H.mask:
            continue
        elems = bits(mask)
        gens = list(_gens_of(P, mask))
        for g in H.gens:
            if not mask >> g & 1:
                elems, mask = extend(P, elems, mask, gens, g)
                gens.append(g)
    return P.subgroup_from_mask(mask)


def _gens_of(P, mask):
    return P.subgroup_from_mask(mask).gens


def normal_closure(G, H):
    """Smallest normal subgroup of G containing H."""
    P, A = ambient(G)
    check_parent(A, H)
    gens = list(H.gens)
    elems = H.indices
    mask = H.mask
    conj = P.conj
    i = 0
    while i < len(gens):
        x = gens[i]
        i += 1
        for a in A.gens:
            y = conj(x, a)
            if not mask >> y & 1:
                elems, mask = extend(P, elems, mask, gens, y)
                gens.append(y)
    return P.subgroup_from_mask(mask)


def is_normal(G, H):
    P, A = ambient(G)
    check_parent(A, H)
    if H.mask == A.mask or H.mask == 1:
        return True
    conj = P.conj
    m = H.mask
    return all(m >> conj(h, a) & 1 for a in A.gens for h in H.gens)


def normalizer(G, H):
    """{g in G : H**g == H}."""
    P, A = ambient(G)
    check_parent(A, H)
    cache = P._cache.setdefault("normalizer", {})
    key = (A.mask, H.mask)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if H.mask == 1 or H.mask == A.mask:
        result = A
    else:
        m = H.mask
        hg = H.gens
        rmul, inv = P.rmul, P.inv
        mask = 0
        for g in A.indices:
            col = rmul[g]
            ig = inv[g]
            for h in hg:
                if not m >> col[rmul[h][ig]] & 1:
                    break
            else:
                mask |= 1 << g
        result = P.subgroup_from_mask(mask)
    cache[key] = result
    return result


def centralizer(G, H):
    """{g in G : gh == hg for all h in H}."""
    P, A = ambient(G)
    check_parent(A, H)
    rmul = P.rmul
    hg = H.gens
    mask = 0
    for g in A.indices:
        col = rmul[g]
        if all(col[h] == rmul[h][g] for h in hg):
            mask |= 1 << g
    return P.subgroup_from_mask(mask)


def center(G):
    _, A = ambient(G)
    return centralizer(A, A)


def is_abelian(G):
    P, A = ambient(G)
    rmul = P.rmul
    gs = A.gens
    return all(rmul[x][y] == rmul[y][x] for i, x in enumerate(gs) for y in gs[i + 1:])


def derived_subgroup(H):
    """Commutator subgroup: normal closure in H of commutators of generators."""
    P, A = ambient(H)
    key = A.mask
    cache = P._cache.setdefault("derived", {})
    hit = cache.get(key)
    if hit is not None:
        return hit
    gs = A.gens
    comms = sorted({P.comm(x, y) for i, x in enumerate(gs) for y in gs[i + 1:]} - {0})
    seed = P.subgroup_from_mask(generate(P, comms)[0])
    result = normal_closure(A, seed)
    cache[key] = result
    return result


def conjugate_subgroup(H, g):
    """H**g = g**-1 H g."""
    P = H.parent
    gi = g if isinstance(g, int) else P.index(g)
    conj = P.conj
    mask = 0
    for h in H.indices:
        mask |= 1 << conj(h, gi)
    return P.subgroup_from_mask(mask, tuple(conj(h, gi) for h in H.gens))


def index(G, H):
    _, A = ambient(G)
    check_parent(A, H)
    return A.order // H.order


def product_mask(H, T):
    """Bitmask of the set product HT."""
    if H.parent is not T.parent:
        raise WrongParent("product of subgroups from different groups")
    rmul = H.parent.rmul
    mask = 0
    seen = 0
    hidx = H.indices
    for t in T.indices:
        if seen >> t & 1:
            continue
        col = rmul[t]
        coset = 0
        for h in hidx:
            coset |= 1 << col[h]
        mask |= coset
        # t' in Ht gives the same coset Ht' = Ht
        seen |= coset & T.mask
    return mask


def product_set(H, T):
    """The set HT = {h*t} as a frozenset of Perms."""
    el = H.parent.elements
    return frozenset(el[i] for i in bits(product_mask(H, T)))


def product_order(H, T):
    """|HT| = |H||T| / |H ∩ T|."""
    if H.parent is not T.parent:
        raise WrongParent("product of subgroups from different groups")
    return H.order * T.order // (H.mask & T.mask).bit_count()


def is_supplement(H, T, G=None):
    """True iff HT = G (G defaults to the common parent group)."""
    if G is None:
        total = H.parent.order
    else:
        total = ambient(G)[1].order
    return product_order(H, T) == total


def is_cyclic(H):
    """True iff H contains an element whose order is |H|."""
    P, A = ambient(H)
    orders = P.orders
    return any(orders[x] == A.order for x in A.indices)
