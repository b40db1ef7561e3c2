"""Constructors for standard small groups as permutation groups."""
from __future__ import annotations

from .config import HARD_MAX_ORDER
from .group import build_group, direct_product, semidirect_product
from .perm import Perm


def _bound(max_order):
    return HARD_MAX_ORDER if max_order is None else max_order


def cyclic(n, max_order=None):
    gens = [Perm.from_cycles(n, [tuple(range(n))])] if n > 1 else []
    return build_group(max(n, 1), gens, max_order=_bound(max_order), name=f"C{n}")


def dihedral(n, max_order=None):
    """Dihedral group of order 2n acting on the n-gon (n >= 3)."""
    rot = Perm([(i + 1) % n for i in range(n)])
    ref = Perm([(-i) % n for i in range(n)])
    return build_group(n, [rot, ref], max_order=_bound(max_order), name=f"D{2 * n}")


def symmetric(n, max_order=None):
    gens = []
    if n > 1:
        gens = [Perm.from_cycles(n, [tuple(range(n))]), Perm.from_cycles(n, [(0, 1)])]
    return build_group(n, gens, max_order=_bound(max_order), name=f"S{n}")


def alternating(n, max_order=None):
    gens = [Perm.from_cycles(n, [(0, 1, i)]) for i in range(2, n)]
    return build_group(n, gens, max_order=_bound(max_order), name=f"A{n}")


def abelian(*orders, max_order=None):
    """C_{n1} x C_{n2} x ... on disjoint point sets."""
    degree = sum(orders)
    gens = []
    start = 0
    for n in orders:
        if n > 1:
            gens.append(Perm.from_cycles(degree, [tuple(range(start, start + n))]))
        start += n
    name = "x".join(f"C{n}" for n in orders)
    return build_group(degree, gens, max_order=_bound(max_order), name=name)


def elementary_abelian(p, k, max_order=None):
    G = abelian(*([p] * k), max_order=max_order)
    G.name = f"C{p}^{k}"
    return G


def _closure(identity, gens, mul):
    seen = {identity}
    order = [identity]
    i = 0
    while i < len(order):
        e = order[i]
        i += 1
        for g in gens:
            x = mul(e, g)
            if x not in seen:
                seen.add(x)
                order.append(x)
    return order


def regular_representation(identity, generators, mul, name=None, max_order=None):
    """Right regular permutation representation of an abstract group.

    ``mul(x, y)`` multiplies hashable elements; the group is the closure of
    ``generators``.
    """
    elements = sorted(_closure(identity, generators, mul), key=repr)
    idx = {e: i for i, e in enumerate(elements)}
    perms = [Perm([idx[mul(e, g)] for e in elements]) for g in generators]
    return build_group(len(elements), perms, max_order=_bound(max_order), name=name)


def dicyclic(n, max_order=None):
    """Q_{4n} = <a, x | a^{2n} = 1, x^2 = a^n, a^x = a^-1>; Q8 for n = 2."""
    m = 2 * n

    def mul(u, v):
        i1, j1 = u
        i2, j2 = v
        if j1 == 0:
            return ((i1 + i2) % m, j2)
        if j2 == 1:
            return ((i1 - i2 + n) % m, 0)
        return ((i1 - i2) % m, 1)

    return regular_representation((0, 0), [(1, 0), (0, 1)], mul, name=f"Q{4 * n}", max_order=max_order)


def _matmul(p):
    def mul(x, y):
        (a, b), (c, d) = x
        (e, f), (g, h) = y
        return (
            ((a * e + b * g) % p, (a * f + b * h) % p),
            ((c * e + d * g) % p, (c * f + d * h) % p),
        )

    return mul


def special_linear_2(p, max_order=None):
    gens = [((1, 1), (0, 1)), ((0, p - 1), (1, 0))]
    return regular_representation(((1, 0), (0, 1)), gens, _matmul(p), name=f"SL(2,{p})", max_order=max_order)


def general_linear_2(p, max_order=None):
    gens = [((1, 1), (0, 1)), ((0, p - 1), (1, 0)), ((_primitive_root(p), 0), (0, 1))]
    return regular_representation(((1, 0), (0, 1)), gens, _matmul(p), name=f"GL(2,{p})", max_order=max_order)


def _primitive_root(p):
    for r in range(2, p):
        if all(pow(r, (p - 1) // q, p) != 1 for q in _prime_divisors(p - 1)):
            return r
    return 1


def _prime_divisors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def affine_cyclic(p, q, max_order=None):
    """C_p ⋊ C_q acting on Z/p by x -> r*x + b with r of multiplicative order q."""
    if (p - 1) % q:
        raise ValueError(f"{q} does not divide {p} - 1")
    r = next(r for r in range(2, p) if pow(r, q, p) == 1 and all(pow(r, d, p) != 1 for d in range(1, q)))
    shift = Perm([(i + 1) % p for i in range(p)])
    scale = Perm([(r * i) % p for i in range(p)])
    return build_group(p, [shift, scale], max_order=_bound(max_order), name=f"C{p}_rtimes_C{q}")


def vector_rtimes_cyclic(p, matrix, q, name=None, max_order=None):
    """C_p^k ⋊ C_q where the generator of C_q acts on F_p^k by ``matrix``.

    Column j of ``matrix`` holds the exponent vector of the image of the j-th
    basis generator.
    """
    k = len(matrix)
    N = elementary_abelian(p, k, max_order=max_order)
    H = cyclic(q, max_order=max_order)
    basis = list(N.generators)

    def word(vec):
        g = N.identity
        for e, b in zip(vec, basis):
            g = g * b ** (e % p)
        return g

    images = {basis[j]: word([matrix[i][j] for i in range(k)]) for j in range(k)}
    G = semidirect_product(N, H, {H.generators[0]: images}, max_order=_bound(max_order), name=name)
    return G


def c5c5_rtimes_c3(max_order=None):
    """<a, b> ⋊ <x> with a^5 = b^5 = x^3 = 1, ab = ba, a^x = ab, b^x = a^2 b^3."""
    return vector_rtimes_cyclic(5, [[1, 2], [1, 3]], 3, name="C5C5_rtimes_C3", max_order=max_order)


def a5_times_c5(max_order=None):
    A5 = alternating(5)
    C5 = cyclic(5)
    return direct_product(A5, C5, max_order=_bound(max_order), name="A5xC5")


def product(A, B, name=None, max_order=None):
    return direct_product(A, B, max_order=_bound(max_order), name=name or f"{A.name}x{B.name}")
