"""Characteristic subgroups and group-class predicates.

All functions accept a FiniteGroup or a Subgroup; a Subgroup is treated as a
group in its own right (so ``is_p_nilpotent(T, p)`` asks about T itself).
"""
from __future__ import annotations

from math import gcd

from .errors import JoinPredicateFailure
from .group import ambient, bits, extend, generate
from .lattice import (
    chief_pairs,
    chief_series,
    is_subnormal,
    maximal_subgroups_of,
    normal_subgroups,
    subgroups_of,
)
from .numbers import is_power_of, is_prime, p_part, p_prime_part, pi_of, is_pi_number
from .structure import (
    center,
    derived_subgroup,
    is_abelian,
    join,
    normal_closure,
    normalizer,
    conjugate_subgroup,
)

__all__ = [
    "pi_of",
    "is_pi_number",
    "is_p_group",
    "sylow_subgroup",
    "sylow_subgroups",
    "o_p",
    "o_p_prime",
    "p_residual",
    "fitting",
    "frattini",
    "components",
    "generalized_fitting",
    "hypercenter",
    "hypercenter_of",
    "upper_central_series",
    "u_hypercenter",
    "is_p_nilpotent",
    "is_p_nilpotent_by_normal_complement",
    "is_p_nilpotent_by_generation",
    "has_p_nilpotent_quotient",
    "is_p_soluble",
    "is_soluble",
    "is_nilpotent",
    "is_supersoluble",
    "is_p_supersoluble",
    "is_quaternion_free",
    "is_a4_free",
    "hall_p_prime_subgroups",
    "derived_series",
    "lower_central_series",
]


def is_p_group(H, p):
    _, A = ambient(H)
    return is_power_of(A.order, p)


def _p_prime_mask(P, A, p):
    orders = P.orders
    mask = 0
    for x in A.indices:
        if orders[x] % p:
            mask |= 1 << x
    return mask


def sylow_subgroup(G, p):
    """A Sylow p-subgroup of G (trivial if p does not divide |G|).

    Grown from the trivial group: while P is not Sylow, N_G(P)/P has order
    divisible by p, so N_G(P) contains a p-element outside P; adjoin the
    first such element.
    """
    P_, A = ambient(G)
    cache = P_._cache.setdefault("sylow", {})
    key = (A.mask, p)
    hit = cache.get(key)
    if hit is not None:
        return hit
    target = p_part(A.order, p)
    orders = P_.orders
    S = P_.trivial
    elems = [0]
    while S.order < target:
        N = normalizer(A, S)
        x = next(
            x for x in N.indices
            if not S.has(x) and is_power_of(orders[x], p)
        )
        elems, mask = extend(P_, elems, S.mask, S.gens, x)
        S = P_.subgroup_from_mask(mask, S.gens + (x,))
    cache[key] = S
    return S


def sylow_subgroups(G, p):
    """Every Sylow p-subgroup of G, in lattice order."""
    _, A = ambient(G)
    target = p_part(A.order, p)
    return [s for s in subgroups_of(A) if s.order == target]


def o_p(G, p):
    """Largest normal p-subgroup."""
    _, A = ambient(G)
    best = None
    for n in normal_subgroups(A):
        if is_power_of(n.order, p) and (best is None or n.order > best.order):
            best = n
    return best


def o_p_prime(G, p):
    """Largest normal subgroup of order coprime to p."""
    _, A = ambient(G)
    best = None
    for n in normal_subgroups(A):
        if n.order % p and (best is None or n.order > best.order):
            best = n
    return best


def p_residual(G, p):
    """O^p(G): the subgroup generated by all elements of order prime to p."""
    P, A = ambient(G)
    cache = P._cache.setdefault("p_residual", {})
    key = (A.mask, p)
    hit = cache.get(key)
    if hit is None:
        mask, _ = generate(P, bits(_p_prime_mask(P, A, p)))
        hit = P.subgroup_from_mask(mask)
        cache[key] = hit
    return hit


def fitting(G):
    """Largest normal nilpotent subgroup, the join of all O_q(G)."""
    P, A = ambient(G)
    parts = [o_p(A, q) for q in sorted(pi_of(A.order))]
    if not parts:
        return A
    return join(P.trivial, *parts)


def frattini(G):
    """Intersection of all maximal subgroups (G itself when G is trivial)."""
    P, A = ambient(G)
    mask = A.mask
    for M in maximal_subgroups_of(A):
        mask &= M.mask
    return P.subgroup_from_mask(mask)


def _is_quasisimple(H):
    if H.order == 1 or is_abelian(H):
        return False
    if derived_subgroup(H).mask != H.mask:
        return False
    z = center(H)
    # H/Z(H) simple <=> no normal subgroup strictly between Z(H) and H
    for n in normal_subgroups(H):
        if n.mask != H.mask and n.mask != z.mask and n.mask & z.mask == z.mask:
            return False
    return True


def components(G):
    """Subnormal quasisimple subgroups of G."""
    _, A = ambient(G)
    return [
        H for H in subgroups_of(A)
        if _is_quasisimple(H) and is_subnormal(A, H)
    ]


def generalized_fitting(G):
    """F*(G) = F(G) E(G), with E(G) the join of the components."""
    P, A = ambient(G)
    if is_soluble(A):
        # quasisimple groups are perfect, so a soluble group has no components
        return fitting(A)
    return join(fitting(A), *components(A))


def upper_central_series(G):
    """Z_0 = 1 < Z_1 = Z(G) <= Z_2 <= ... up to the hypercenter (last term repeated once)."""
    P, A = ambient(G)
    comm = P.comm
    series = [P.trivial]
    while True:
        z = series[-1].mask
        mask = 0
        for g in A.indices:
            if all(z >> comm(g, s) & 1 for s in A.gens):
                mask |= 1 << g
        nxt = P.subgroup_from_mask(mask)
        series.append(nxt)
        if mask == z:
            return series


def hypercenter(G):
    """Z_inf(G), the limit of the upper central series."""
    return upper_central_series(G)[-1]


def hypercenter_of(R):
    """Z_inf(R) for a subgroup R, computed inside R."""
    return hypercenter(R)


def _factors_below_cyclic(pairs, n_mask):
    return all(
        is_prime(cp.factor_order)
        for cp in pairs
        if cp.upper.mask & n_mask == cp.upper.mask
    )


def u_hypercenter(G):
    """Z_inf^U(G): largest normal subgroup whose G-chief factors are all cyclic."""
    P, A = ambient(G)
    cache = P._cache.setdefault("u_hypercenter", {})
    hit = cache.get(A.mask)
    if hit is not None:
        return hit
    pairs = chief_pairs(A)
    good = [n for n in normal_subgroups(A) if _factors_below_cyclic(pairs, n.mask)]
    result = join(P.trivial, *good)
    if not _factors_below_cyclic(pairs, result.mask):
        raise JoinPredicateFailure("join of supersolubly embedded normal subgroups fails the predicate")
    cache[A.mask] = result
    return result


def is_p_nilpotent_by_generation(G, p):
    """p does not divide |<all p'-elements>|."""
    P, A = ambient(G)
    cache = P._cache.setdefault("pnil", {})
    key = (A.mask, p)
    hit = cache.get(key)
    if hit is None:
        hit = p_residual(A, p).order % p != 0
        cache[key] = hit
    return hit


def is_p_nilpotent_by_normal_complement(G, p):
    """A normal subgroup of order |G|_{p'} exists."""
    _, A = ambient(G)
    target = p_prime_part(A.order, p)
    return any(n.order == target for n in normal_subgroups(A))


def is_p_nilpotent(G, p):
    """True iff G has a normal p-complement."""
    return is_p_nilpotent_by_generation(G, p)


def has_p_nilpotent_quotient(G, N, p):
    """Whether G/N is p-nilpotent, decided inside G.

    The p'-elements of G/N are the images of the p'-elements of G, so G/N is
    p-nilpotent iff <N, p'-elements of G> / N has order prime to p.
    """
    P, A = ambient(G)
    m = N.mask
    elems = N.indices
    gens = list(N.gens)
    for x in bits(_p_prime_mask(P, A, p)):
        if not m >> x & 1:
            elems, m = extend(P, elems, m, gens, x)
            gens.append(x)
    return (m.bit_count() // N.order) % p != 0


def derived_series(G):
    P, A = ambient(G)
    series = [A]
    while True:
        d = derived_subgroup(series[-1])
        if d.mask == series[-1].mask:
            return series
        series.append(d)


def lower_central_series(G):
    P, A = ambient(G)
    series = [A]
    while True:
        cur = series[-1]
        comms = sorted({P.comm(x, a) for x in cur.gens for a in A.gens} - {0})
        seed = P.subgroup_from_mask(generate(P, comms)[0])
        nxt = normal_closure(A, seed)
        if nxt.mask == cur.mask:
            return series
        series.append(nxt)


def is_soluble(G):
    return derived_series(G)[-1].order == 1


def is_nilpotent(G):
    return lower_central_series(G)[-1].order == 1


def _chief_factor_orders(G):
    s = chief_series(G)
    return [b.order // a.order for a, b in zip(s, s[1:])]


def is_p_soluble(G, p):
    """Every chief factor is a p-group or a p'-group."""
    return all(is_power_of(f, p) or f % p for f in _chief_factor_orders(G))


def is_supersoluble(G):
    return all(is_prime(f) for f in _chief_factor_orders(G))


def is_p_supersoluble(G, p):
    """Every chief factor is a p'-group or cyclic of order p."""
    return all(f == p or f % p for f in _chief_factor_orders(G))


def _sections(A, quotient_order):
    """Pairs (H, N) with N normal in H <= A and |H/N| == quotient_order, H nonabelian."""
    for H in subgroups_of(A):
        if H.order % quotient_order or is_abelian(H):
            continue
        for N in normal_subgroups(H):
            if N.order * quotient_order == H.order:
                yield H, N


def _nonabelian_mod(P, H, N):
    m = N.mask
    return any(not m >> P.comm(x, y) & 1 for x in H.gens for y in H.gens)


def is_quaternion_free(G):
    """No section H/N isomorphic to Q8 (nonabelian of order 8 with a unique involution)."""
    P, A = ambient(G)
    rmul = P.rmul
    for H, N in _sections(A, 8):
        if not _nonabelian_mod(P, H, N):
            continue
        m = N.mask
        roots = sum(1 for h in H.indices if not m >> h & 1 and m >> rmul[h][h] & 1)
        if roots == N.order:
            return False
    return True


def _has_order_six_mod(P, H, N):
    m = N.mask
    for h in H.indices:
        h2 = P.power(h, 2)
        h3 = P.power(h, 3)
        if not m >> h2 & 1 and not m >> h3 & 1 and m >> P.power(h, 6) & 1:
            return True
    return False


def is_a4_free(G):
    """No section H/N isomorphic to A4 (order 12 without elements of order 6)."""
    P, A = ambient(G)
    for H, N in _sections(A, 12):
        if _nonabelian_mod(P, H, N) and not _has_order_six_mod(P, H, N):
            return False
    return True


def hall_p_prime_subgroups(G, p):
    """All subgroups whose order is the p'-part of |G| (possibly none)."""
    _, A = ambient(G)
    target = p_prime_part(A.order, p)
    return [s for s in subgroups_of(A) if s.order == target]


def core(G, H):
    """Intersection of all conjugates of H in G."""
    P, A = ambient(G)
    mask = H.mask
    for g in A.indices:
        mask &= conjugate_subgroup(H, g).mask
    return P.subgroup_from_mask(mask)


def coprime(a, b):
    return gcd(a, b) == 1
