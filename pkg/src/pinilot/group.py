"""Concrete finite permutation groups with a full element table.

Every group enumerates its elements once, sorts them lexicographically by
image sequence (so the identity is always element 0) and stores a right
multiplication table ``rmul`` with ``rmul[y][x] == index(x * y)``.

Subgroups are bitmasks over that element index, which makes intersection,
containment and hashing cheap; equality is element-set equality.
"""
from __future__ import annotations

import threading
from collections import deque
from dataclasses import dataclass, field
from math import gcd

from .config import HARD_MAX_ORDER, resolve_max_order
from .errors import (
    ClosureExceedsBound,
    MalformedPermutation,
    NotAHomomorphism,
    NotAnAutomorphism,
    NotAnElement,
    NotNormal,
    WrongParent,
)
from .perm import Perm


def bits(mask):
    """Indices of the set bits of ``mask`` in increasing order."""
    s = bin(mask)[:1:-1]
    return [i for i, c in enumerate(s) if c == "1"]


def to_mask(indices):
    m = 0
    for i in indices:
        m |= 1 << i
    return m


class FiniteGroup:
    """A finite group given by a faithful permutation action.

    Use :func:`build_group` (or the product/quotient constructors) rather than
    calling this directly.
    """

    def __init__(self, degree, generators, elements, name=None):
        self.degree = degree
        self.elements = tuple(elements)
        self.order = len(self.elements)
        self.name = name
        self._index = {p.images: i for i, p in enumerate(self.elements)}
        self.generators = tuple(generators)
        self.gen_idx = tuple(self._index[g.images] for g in self.generators)
        self._build_tables()
        self.embeddings = ()
        self._cache = {}
        self._lock = threading.RLock()
        self.whole = Subgroup(self, (1 << self.order) - 1, self.gen_idx)
        self.trivial = Subgroup(self, 1, ())

    def _build_tables(self):
        n = self.order
        elems = self.elements
        index = self._index
        rmul = [None] * n
        rmul[0] = list(range(n))
        gcols = {}
        for s in set(self.gen_idx):
            q = elems[s].images
            gcols[s] = [index[tuple(q[i] for i in e.images)] for e in elems]
        queue = deque([0])
        while queue:
            a = queue.popleft()
            col_a = rmul[a]
            for s, col_s in gcols.items():
                b = col_s[a]
                if rmul[b] is None:
                    rmul[b] = [col_s[v] for v in col_a]
                    queue.append(b)
        self.rmul = rmul
        inv = [0] * n
        for y in range(n):
            inv[y] = rmul[y].index(0)
        self.inv = inv
        orders = [1] * n
        for x in range(1, n):
            col = rmul[x]
            e, k = x, 1
            while e:
                e = col[e]
                k += 1
            orders[x] = k
        self.orders = orders

    # -- element level -------------------------------------------------

    def index(self, g):
        try:
            return self._index[g.images]
        except (KeyError, AttributeError):
            raise NotAnElement(f"{g!r} is not an element of this group") from None

    def __contains__(self, g):
        return isinstance(g, Perm) and g.images in self._index

    def mul(self, x, y):
        return self.rmul[y][x]

    def conj(self, x, g):
        """Index of ``g**-1 * x * g``."""
        return self.rmul[g][self.rmul[x][self.inv[g]]]

    def comm(self, x, y):
        """Index of ``[x, y] = x**-1 * y**-1 * x * y``."""
        r = self.rmul
        return r[y][r[x][r[self.inv[y]][self.inv[x]]]]

    def power(self, x, k):
        k %= self.orders[x]
        e = 0
        col = self.rmul[x]
        for _ in range(k):
            e = col[e]
        return e

    @property
    def identity(self):
        return self.elements[0]

    # -- subgroup level ------------------------------------------------

    def subgroup(self, gens):
        """Subgroup generated by Perms or element indices."""
        idx = [g if isinstance(g, int) else self.index(g) for g in gens]
        mask, _ = generate(self, idx)
        return self.subgroup_from_mask(mask, tuple(i for i in idx if i))

    def subgroup_from_mask(self, mask, gens=None):
        """Subgroup object for a mask already known to be a subgroup."""
        lat = self._cache.get("lattice")
        if lat is not None:
            found = lat.get(mask)
            if found is not None:
                return found
        if gens is None:
            gens = greedy_generators(self, mask)
        return Subgroup(self, mask, tuple(gens))

    def __len__(self):
        return self.order

    def __repr__(self):
        label = self.name or "FiniteGroup"
        return f"<{label} order={self.order} degree={self.degree}>"


class Subgroup:
    """A subgroup of a :class:`FiniteGroup`, stored as an element bitmask."""

    __slots__ = ("parent", "mask", "gens", "order", "_indices")

    def __init__(self, parent, mask, gens):
        self.parent = parent
        self.mask = mask
        self.gens = tuple(gens)
        self.order = mask.bit_count()
        self._indices = None

    @property
    def indices(self):
        if self._indices is None:
            self._indices = bits(self.mask)
        return self._indices

    @property
    def elements(self):
        el = self.parent.elements
        return frozenset(el[i] for i in self.indices)

    @property
    def generators(self):
        el = self.parent.elements
        return tuple(el[i] for i in self.gens)

    def has(self, i):
        return self.mask >> i & 1 == 1

    def __contains__(self, g):
        if isinstance(g, int):
            return self.has(g)
        return g in self.parent and self.has(self.parent.index(g))

    def __len__(self):
        return self.order

    def __iter__(self):
        el = self.parent.elements
        return (el[i] for i in self.indices)

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and other.parent is self.parent
            and other.mask == self.mask
        )

    def __hash__(self):
        return hash((id(self.parent), self.mask))

    def __le__(self, other):
        _same_parent(self, other)
        return self.mask & other.mask == self.mask

    def __lt__(self, other):
        return self <= other and self.mask != other.mask

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self

    def __and__(self, other):
        _same_parent(self, other)
        return self.parent.subgroup_from_mask(self.mask & other.mask)

    def is_trivial(self):
        return self.mask == 1

    def sort_key(self):
        return (self.order, self.mask)

    def __repr__(self):
        gens = ", ".join(p.cycle_string() for p in self.generators) or "()"
        return f"<Subgroup order={self.order} gens=[{gens}]>"


def _same_parent(a, b):
    if a.parent is not b.parent:
        raise WrongParent("subgroups belong to different groups")


def check_parent(G, H):
    """Raise WrongParent unless H is a subgroup of G (a group or subgroup)."""
    parent = G.parent if isinstance(G, Subgroup) else G
    if not isinstance(H, Subgroup) or H.parent is not parent:
        raise WrongParent("subgroup does not belong to this group")
    if isinstance(G, Subgroup) and H.mask & G.mask != H.mask:
        raise WrongParent("subgroup is not contained in the ambient subgroup")


def ambient(X):
    """Accept a FiniteGroup or a Subgroup and return (parent, subgroup)."""
    if isinstance(X, FiniteGroup):
        return X, X.whole
    if isinstance(X, Subgroup):
        return X.parent, X
    raise TypeError(f"expected FiniteGroup or Subgroup, got {type(X).__name__}")


# -- closure -----------------------------------------------------------


def extend(G, elems, mask, gens, g):
    """Dimino step: the subgroup generated by <elems> = <gens> and ``g``.

    Returns ``(elems, mask)`` of the larger subgroup; the input subgroup is
    added to coset by coset, so the work is proportional to its size.
    """
    if mask >> g & 1:
        return elems, mask
    rmul = G.rmul
    base = list(elems)
    out = list(elems)
    allgens = list(gens) + [g]
    reps = [0]
    i = 0
    while i < len(reps):
        r = reps[i]
        i += 1
        for s in allgens:
            e = rmul[s][r]
            if not mask >> e & 1:
                col = rmul[e]
                for h in base:
                    x = col[h]
                    out.append(x)
                    mask |= 1 << x
                reps.append(e)
    return out, mask


def generate(G, gens, base_elems=None, base_mask=None, base_gens=()):
    """Close ``gens`` (element indices) under multiplication, optionally on top
    of a known subgroup given by ``base_elems``/``base_mask``/``base_gens``."""
    if base_elems is None:
        elems, mask = [0], 1
    else:
        elems, mask = list(base_elems), base_mask
    have = list(base_gens)
    for g in gens:
        if not mask >> g & 1:
            elems, mask = extend(G, elems, mask, have, g)
            have.append(g)
    return mask, elems


def greedy_generators(G, mask):
    """Deterministic small generating set: scan elements in index order and
    keep each one not yet generated by the previous picks."""
    elems, cur = [0], 1
    gens = []
    for x in bits(mask):
        if not cur >> x & 1:
            elems, cur = extend(G, elems, cur, gens, x)
            gens.append(x)
        if cur == mask:
            break
    if cur != mask:
        raise ValueError("mask is not closed under multiplication")
    return tuple(gens)


def canonical_generators(H):
    return greedy_generators(H.parent, H.mask)


# -- construction ------------------------------------------------------


def build_group(degree, generators, max_order=None, name=None):
    """Enumerate the group generated by ``generators`` on ``degree`` points.

    >>> build_group(3, [Perm.from_cycles(3, [(0, 1, 2)]), Perm.from_cycles(3, [(0, 1)])]).order
    6
    """
    bound = resolve_max_order(max_order)
    gens = []
    for g in generators:
        if not isinstance(g, Perm):
            g = Perm(g)
        if g.degree != degree:
            raise MalformedPermutation(f"generator {g} has degree {g.degree}, expected {degree}")
        gens.append(g)
    ident = tuple(range(degree))
    seen = {ident}
    queue = [ident]
    gimgs = [g.images for g in gens]
    i = 0
    while i < len(queue):
        e = queue[i]
        i += 1
        for q in gimgs:
            x = tuple(q[j] for j in e)
            if x not in seen:
                seen.add(x)
                queue.append(x)
                if len(seen) > bound:
                    raise ClosureExceedsBound(bound)
    elements = [Perm._trusted(t) for t in sorted(seen)]
    return FiniteGroup(degree, gens, elements, name=name)


def element_order(G, g):
    """Least k >= 1 with g**k the identity."""
    return G.orders[G.index(g)]


def direct_product(A, B, max_order=None, name=None):
    """A x B acting on disjoint point sets; ``.embeddings`` holds the two factors."""
    bound = resolve_max_order(max_order)
    if A.order * B.order > bound:
        raise ClosureExceedsBound(bound)
    da, db = A.degree, B.degree
    gens = []
    for g in A.generators:
        gens.append(Perm(list(g.images) + list(range(da, da + db))))
    for g in B.generators:
        gens.append(Perm(list(range(da)) + [da + x for x in g.images]))
    G = build_group(da + db, gens, max_order=bound, name=name)
    ka = len(A.generators)
    G.embeddings = (
        G.subgroup(gens[:ka]),
        G.subgroup(gens[ka:]),
    )
    return G


def _extend_automorphism(N, images):
    """Full index map of an endomorphism of N given on generators or on all elements."""
    imap = {}
    for k, v in images.items():
        imap[N.index(k)] = N.index(v)
    n = N.order
    if len(imap) == n:
        f = [imap[i] for i in range(n)]
    else:
        gens = [g for g in N.gen_idx]
        missing = [g for g in gens if g not in imap]
        if missing:
            raise NotAnAutomorphism("automorphism must be given on every generator of N")
        f = [None] * n
        f[0] = 0
        queue = deque([0])
        rmul = N.rmul
        while queue:
            x = queue.popleft()
            for s in gens:
                y = rmul[s][x]
                if f[y] is None:
                    f[y] = rmul[imap[s]][f[x]]
                    queue.append(y)
        if any(v is None for v in f):
            raise NotAnAutomorphism("generator images do not reach every element")
        for k, v in imap.items():
            if f[k] != v:
                raise NotAnAutomorphism("images are inconsistent with the generated map")
    if sorted(f) != list(range(n)):
        raise NotAnAutomorphism("map is not bijective")
    rmul = N.rmul
    for x in range(n):
        for s in N.gen_idx:
            if f[rmul[s][x]] != rmul[f[s]][f[x]]:
                raise NotAnAutomorphism("map is not multiplicative")
    return f


def semidirect_product(N, H, action, max_order=None, name=None):
    """N ⋊ H where ``action[h]`` is the automorphism ``n -> n**h`` of N.

    ``action`` maps each generator of H (a Perm of H) to a dict of Perms of N,
    either on N's generators or on all of N; a callable ``action(h)`` returning
    such a dict is also accepted.  Right-action convention:
    ``n**(h1*h2) == (n**h1)**h2``.  The result is the right regular
    representation on the |H|*|N| pairs ``(h, n)``; ``.embeddings`` holds the
    normal copy of N and the complement H.
    """
    bound = resolve_max_order(max_order)
    if N.order * H.order > bound:
        raise ClosureExceedsBound(bound)
    get = action if callable(action) else action.__getitem__
    base = {}
    for s in set(H.gen_idx):
        try:
            auto = get(H.elements[s])
        except KeyError:
            raise NotAHomomorphism(f"no automorphism given for generator {H.elements[s]}") from None
        base[s] = _extend_automorphism(N, auto)
    nN = N.order
    alpha = [None] * H.order
    alpha[0] = list(range(nN))
    queue = deque([0])
    while queue:
        h = queue.popleft()
        for s, a_s in base.items():
            hs = H.rmul[s][h]
            composed = [a_s[v] for v in alpha[h]]
            if alpha[hs] is None:
                alpha[hs] = composed
                queue.append(hs)
            elif alpha[hs] != composed:
                raise NotAHomomorphism("action does not respect the relations of H")
    for h in range(H.order):
        for s, a_s in base.items():
            if alpha[H.rmul[s][h]] != [a_s[v] for v in alpha[h]]:
                raise NotAHomomorphism("action does not respect the relations of H")

    def point(h, n):
        return h * nN + n

    degree = H.order * nN
    gens = []
    for s in H.gen_idx:
        a_s = alpha[s]
        imgs = [0] * degree
        for h in range(H.order):
            hs = H.rmul[s][h]
            for n in range(nN):
                imgs[point(h, n)] = point(hs, a_s[n])
        gens.append(Perm(imgs))
    for t in N.gen_idx:
        col = N.rmul[t]
        imgs = [0] * degree
        for h in range(H.order):
            for n in range(nN):
                imgs[point(h, n)] = point(h, col[n])
        gens.append(Perm(imgs))
    G = build_group(degree, gens, max_order=bound, name=name)
    kh = len(H.gen_idx)
    G.embeddings = (G.subgroup(gens[kh:]), G.subgroup(gens[:kh]))
    return G


def coset_action(G, H):
    """Permutations induced by G's generators on the right cosets of H.

    Returns ``(perms, coset_of)`` where ``coset_of[x]`` is the coset number of
    element x; coset 0 is H itself and cosets are numbered by smallest member.
    """
    _, Hs = ambient(H)
    rmul = G.rmul
    hidx = Hs.indices
    coset_of = [-1] * G.order
    reps = []
    for x in range(G.order):
        if coset_of[x] < 0:
            c = len(reps)
            reps.append(x)
            col = rmul[x]
            for h in hidx:
                coset_of[col[h]] = c
    perms = []
    for g in G.gen_idx:
        col = rmul[g]
        perms.append(Perm([coset_of[col[r]] for r in reps]))
    return perms, coset_of, reps


@dataclass(eq=False)
class QuotientView:
    """G/K realized as the action of G on the right cosets of K."""

    base: FiniteGroup
    kernel: Subgroup
    quotient: FiniteGroup
    proj: list = field(repr=False)
    lift_idx: list = field(repr=False)

    def project(self, g):
        return self.quotient.elements[self.proj[self.base.index(g)]]

    def lift(self, x):
        return self.base.elements[self.lift_idx[self.quotient.index(x)]]

    def preimage(self, X):
        """Full preimage in the base group of a subgroup of the quotient."""
        check_parent(self.quotient, X)
        mask = 0
        for i, q in enumerate(self.proj):
            if X.mask >> q & 1:
                mask |= 1 << i
        return self.base.subgroup_from_mask(mask)


def quotient(G, K):
    """The quotient G/K for a normal subgroup K."""
    check_parent(G, K)
    from .structure import is_normal

    if not is_normal(G, K):
        raise NotNormal("kernel is not normal in the group")
    perms, coset_of, reps = coset_action(G, K)
    m = len(reps)
    name = f"{G.name}/{K.order}" if G.name else None
    Q = build_group(m, perms, max_order=HARD_MAX_ORDER, name=name)
    # the quotient acts regularly on cosets: identify q by the image of coset 0
    by_image = [0] * m
    for qi, qp in enumerate(Q.elements):
        by_image[qp.images[0]] = qi
    proj = [by_image[c] for c in coset_of]
    lift_idx = [0] * m
    for c, r in enumerate(reps):
        lift_idx[by_image[c]] = r
    return QuotientView(G, K, Q, proj, lift_idx)


def image_in_quotient(q, H):
    """HK/K as a subgroup of q.quotient."""
    check_parent(q.base, H)
    proj = q.proj
    mask = 0
    for h in H.indices:
        mask |= 1 << proj[h]
    gens = tuple(sorted({proj[g] for g in H.gens} - {0}))
    return q.quotient.subgroup_from_mask(mask, gens)


def subgroup_as_group(H, name=None):
    """A subgroup rebuilt as a standalone FiniteGroup (same permutations)."""
    G, Hs = ambient(H)
    gens = [G.elements[i] for i in Hs.gens]
    return build_group(G.degree, gens, max_order=HARD_MAX_ORDER, name=name)


def is_coprime(a, b):
    return gcd(a, b) == 1
