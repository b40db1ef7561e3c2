"""Π-property, Π-supplemented and Π-normal subgroups, p-nilpotent supplements.

H has the Π-property in G when, for every chief pair (K, L) of G with
X = HK/K ∩ L/K, the index |G/K : N_{G/K}(X)| has all its prime divisors
among those of |X|.  Two evaluation routes are provided:

``method="direct"`` (default) stays inside G.  With Y = HK ∩ L we have
X = Y/K and N_{G/K}(Y/K) = N_G(Y)/K, so the index is |G : N_G(Y)|.

``method="quotient"`` builds G/K as a permutation group and computes the
normalizer there.  It is slower and exists as an independent check.
"""
from __future__ import annotations

from dataclasses import dataclass

from .group import image_in_quotient, quotient
from .invariants import is_p_nilpotent
from .lattice import ChiefPair, all_subgroups, chief_pairs, chief_series, is_subnormal, subgroups_of
from .numbers import pi_of
from .structure import is_supplement, join, normalizer

READINGS = ("all", "series")


@dataclass(frozen=True)
class PiPropertyFailure:
    pair: ChiefPair
    intersection_order: int
    normalizer_index: int
    offending_primes: frozenset


@dataclass(frozen=True)
class PiNormalWitness:
    """A supplement T of H and an intermediate I with H∩T <= I <= H having the Π-property."""

    T: object
    I: object


def _pairs(G, reading):
    if reading == "all":
        return chief_pairs(G)
    if reading == "series":
        s = chief_series(G)
        return [ChiefPair(a, b) for a, b in zip(s, s[1:])]
    raise ValueError(f"unknown reading {reading!r}; expected one of {READINGS}")


def _quotient_cached(G, K):
    cache = G._cache.setdefault("quotients", {})
    q = cache.get(K.mask)
    if q is None:
        q = quotient(G, K)
        cache[K.mask] = q
    return q


def _check(pair, x_order, nidx, out):
    if x_order == 1:
        return True
    bad = pi_of(nidx) - pi_of(x_order)
    if bad:
        out.append(PiPropertyFailure(pair, x_order, nidx, frozenset(bad)))
        return False
    return True


def pi_property_failures(G, H, method="direct", reading="all", first_only=False):
    """Chief pairs at which H violates the Π-property, with the offending primes."""
    out = []
    joins = G._cache.setdefault("joins", {})
    for cp in _pairs(G, reading):
        K, L = cp.lower, cp.upper
        if method == "direct":
            key = (H.mask, K.mask)
            hk = joins.get(key)
            if hk is None:
                hk = join(H, K).mask
                joins[key] = hk
            ymask = hk & L.mask
            x_order = ymask.bit_count() // K.order
            if x_order == 1:
                continue
            Y = G.subgroup_from_mask(ymask)
            nidx = G.order // normalizer(G, Y).order
        elif method == "quotient":
            q = _quotient_cached(G, K)
            X = image_in_quotient(q, H) & image_in_quotient(q, L)
            x_order = X.order
            if x_order == 1:
                continue
            nidx = q.quotient.order // normalizer(q.quotient, X).order
        else:
            raise ValueError(f"unknown method {method!r}")
        if not _check(cp, x_order, nidx, out) and first_only:
            break
    return out


def has_pi_property(G, H, method="direct", reading="all"):
    cache = G._cache.setdefault("pi_property", {})
    key = (H.mask, method, reading)
    hit = cache.get(key)
    if hit is None:
        hit = not pi_property_failures(G, H, method=method, reading=reading, first_only=True)
        cache[key] = hit
    return hit


def _supplement_search(G, H, subnormal, reading="all"):
    cache = G._cache.setdefault("pi_search", {})
    key = (H.mask, subnormal, reading)
    if key in cache:
        return cache[key]
    result = (False, None)
    floor = G.order // H.order
    candidates = subgroups_of(H)
    for T in all_subgroups(G).all:
        if T.order < floor or not is_supplement(H, T):
            continue
        if subnormal and not is_subnormal(G, T):
            continue
        d = H.mask & T.mask
        found = next(
            (I for I in candidates if I.mask & d == d and has_pi_property(G, I, reading=reading)),
            None,
        )
        if found is not None:
            result = (True, PiNormalWitness(T, found))
            break
    cache[key] = result
    return result


def is_pi_supplemented(G, H, reading="all"):
    """(True, witness) if some T with HT = G admits an I with H∩T <= I <= H having the Π-property."""
    return _supplement_search(G, H, subnormal=False, reading=reading)


def is_pi_normal(G, H, reading="all"):
    """As :func:`is_pi_supplemented` with T additionally subnormal in G."""
    return _supplement_search(G, H, subnormal=True, reading=reading)


def is_valid_pi_witness(G, H, witness, subnormal=True):
    T, I = witness.T, witness.I
    d = H.mask & T.mask
    return (
        is_supplement(H, T)
        and (not subnormal or is_subnormal(G, T))
        and I.mask & d == d
        and I.mask & H.mask == I.mask
        and has_pi_property(G, I)
    )


def has_p_nilpotent_supplement(G, H, p):
    """(True, T) for the first T in lattice order with HT = G and T p-nilpotent."""
    cache = G._cache.setdefault("pnil_supplement", {})
    key = (H.mask, p)
    if key in cache:
        return cache[key]
    result = (False, None)
    floor = G.order // H.order
    for T in all_subgroups(G).all:
        if T.order >= floor and is_supplement(H, T) and is_p_nilpotent(T, p):
            result = (True, T)
            break
    cache[key] = result
    return result
