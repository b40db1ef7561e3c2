"""Subgroup lattice, normal structure and chief pairs.

The full lattice of a group is computed once by cyclic extension over the
cyclic subgroups of prime-power order and memoized on the group.  Everything
else here filters it.  Functions that take ``G`` also accept a Subgroup and
then answer for that subgroup regarded as a group in its own right.
"""
from __future__ import annotations

from dataclasses import dataclass

from .config import DEFAULT_LATTICE_CAP
from .errors import LatticeBudgetExceeded
from .group import Subgroup, ambient, check_parent, extend
from .structure import conjugate_subgroup, is_normal, normal_closure
from .numbers import is_prime


@dataclass(frozen=True)
class ChiefPair:
    """Normal subgroups K < L of G with L/K minimal normal in G/K."""

    lower: Subgroup
    upper: Subgroup

    @property
    def factor_order(self):
        return self.upper.order // self.lower.order

    def __repr__(self):
        return f"ChiefPair({self.lower.order} < {self.upper.order})"


class SubgroupLattice:
    """All subgroups of a group, sorted by (order, mask)."""

    def __init__(self, group, subgroups):
        self.group = group
        self.all = sorted(subgroups, key=Subgroup.sort_key)
        self._by_mask = {s.mask: s for s in self.all}
        self.by_order = {}
        for s in self.all:
            self.by_order.setdefault(s.order, []).append(s)

    def get(self, mask):
        return self._by_mask.get(mask)

    def __contains__(self, H):
        return H.mask in self._by_mask

    def __len__(self):
        return len(self.all)

    def __iter__(self):
        return iter(self.all)

    @property
    def normals(self):
        return normal_subgroups(self.group)

    def conjugacy_classes(self):
        """Partition of the lattice into conjugacy classes, each a list in lattice order."""
        G = self.group
        seen = set()
        classes = []
        for s in self.all:
            if s.mask in seen:
                continue
            orbit = {s.mask}
            frontier = [s]
            while frontier:
                nxt = []
                for h in frontier:
                    for g in G.gen_idx:
                        c = conjugate_subgroup(h, g)
                        if c.mask not in orbit:
                            orbit.add(c.mask)
                            nxt.append(c)
                frontier = nxt
            seen |= orbit
            classes.append([self._by_mask[m] for m in sorted(orbit, key=lambda m: (m.bit_count(), m))])
        return classes


def zuppos(G):
    """Cyclic subgroups of prime-power order > 1 as (generator, mask) pairs.

    The generator is the smallest element index generating the subgroup.
    """
    orders = G.orders
    seen = set()
    out = []
    for x in range(1, G.order):
        o = orders[x]
        if not _is_prime_power(o):
            continue
        col = G.rmul[x]
        e, mask = x, 1
        while e:
            mask |= 1 << e
            e = col[e]
        if mask in seen:
            continue
        seen.add(mask)
        out.append((x, mask))
    return out


def _is_prime_power(n):
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1
    return True


def all_subgroups(G, cap=DEFAULT_LATTICE_CAP):
    """The complete subgroup lattice of G (memoized).

    Each known subgroup H is extended by every cyclic subgroup of prime-power
    order not yet inside it.  When <H, z> has prime index over H, every element
    of it outside H generates the same overgroup together with H, so those
    generators are skipped for H.
    """
    G, _ = ambient(G)
    lat = G._cache.get("lattice")
    if lat is not None:
        return lat
    with G._lock:
        lat = G._cache.get("lattice")
        if lat is not None:
            return lat
        zup = zuppos(G)
        trivial = G.trivial
        found = {1: trivial}
        elems_of = {1: [0]}
        queue = [trivial]
        qi = 0
        while qi < len(queue):
            H = queue[qi]
            qi += 1
            h_elems = elems_of[H.mask]
            covered = H.mask
            for z, _ in zup:
                if covered >> z & 1:
                    continue
                elems, mask = extend(G, h_elems, H.mask, H.gens, z)
                ratio = mask.bit_count() // H.order
                if is_prime(ratio):
                    covered |= mask
                if mask not in found:
                    K = Subgroup(G, mask, H.gens + (z,))
                    found[mask] = K
                    elems_of[mask] = elems
                    queue.append(K)
                    if len(found) > cap:
                        raise LatticeBudgetExceeded(
                            f"{G!r} has more than {cap} subgroups"
                        )
            del elems_of[H.mask]
        whole = found.get(G.whole.mask)
        if whole is not None and whole is not G.whole:
            found[G.whole.mask] = G.whole
        lat = SubgroupLattice(G, found.values())
        G._cache["lattice"] = lat
    return lat


def subgroups_of(H):
    """Lattice entries contained in H, in lattice order."""
    G, A = ambient(H)
    cache = G._cache.setdefault("subgroups_of", {})
    hit = cache.get(A.mask)
    if hit is not None:
        return hit
    m = A.mask
    out = [s for s in all_subgroups(G).all if s.mask & m == s.mask]
    cache[m] = out
    return out


def normal_subgroups(G):
    """Normal subgroups of G in lattice order."""
    P, A = ambient(G)
    cache = P._cache.setdefault("normals", {})
    hit = cache.get(A.mask)
    if hit is None:
        hit = [s for s in subgroups_of(A) if is_normal(A, s)]
        cache[A.mask] = hit
    return hit


def minimal_normal_subgroups(G):
    normals = [n for n in normal_subgroups(G) if n.mask != 1]
    out = []
    for n in normals:
        if not any(o.mask != n.mask and o.mask & n.mask == o.mask for o in normals if o.order < n.order):
            out.append(n)
    return out


def chief_pairs(G):
    """Every pair (K, L) of normal subgroups with L/K minimal normal in G/K."""
    P, A = ambient(G)
    cache = P._cache.setdefault("chief_pairs", {})
    hit = cache.get(A.mask)
    if hit is not None:
        return hit
    normals = normal_subgroups(A)
    pairs = []
    for K in normals:
        km = K.mask
        above = [L for L in normals if L.mask != km and L.mask & km == km]
        for L in above:
            lm = L.mask
            if not any(
                M.order < L.order and M.mask & lm == M.mask and M.mask != lm
                for M in above
            ):
                pairs.append(ChiefPair(K, L))
    cache[A.mask] = pairs
    return pairs


def chief_series(G):
    """One chief series 1 = G0 < G1 < ... < Gk = G.

    At each step the smallest (order, mask) chief factor above the current
    term is taken.
    """
    P, A = ambient(G)
    pairs = chief_pairs(A)
    above = {}
    for cp in pairs:
        above.setdefault(cp.lower.mask, []).append(cp.upper)
    series = [P.subgroup_from_mask(1)]
    while series[-1].mask != A.mask:
        nxt = min(above[series[-1].mask], key=Subgroup.sort_key)
        series.append(nxt)
    return series


def is_subnormal(G, T):
    """True iff the chain G = H0, H_{i+1} = normal closure of T in H_i, ends at T."""
    P, A = ambient(G)
    check_parent(A, T)
    cache = P._cache.setdefault("subnormal", {})
    key = (A.mask, T.mask)
    hit = cache.get(key)
    if hit is not None:
        return hit
    H = A
    while True:
        nxt = normal_closure(H, T)
        if nxt.mask == H.mask:
            break
        H = nxt
    result = H.mask == T.mask
    cache[key] = result
    return result


def maximal_subgroups_of(P):
    """Subgroups maximal in P (empty for the trivial group)."""
    _, A = ambient(P)
    proper = [s for s in subgroups_of(A) if s.mask != A.mask]
    maxes = []
    for s in reversed(proper):
        if not any(s.mask & m.mask == s.mask for m in maxes):
            maxes.append(s)
    return sorted(maxes, key=Subgroup.sort_key)


def subgroups_of_order(P, k):
    _, A = ambient(P)
    return [s for s in subgroups_of(A) if s.order == k]
