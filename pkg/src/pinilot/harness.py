"""Hypothesis and conclusion evaluation for the p-nilpotency criteria.

Every check returns a :class:`VerdictRecord`.  A record is either skipped,
not applicable (the parameter range is empty), or carries a hypothesis
verdict; the conclusion is evaluated only when the hypothesis holds.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd

from .errors import (
    BadCondition,
    BadPrime,
    NotNormal,
    PinilotError,
    UnknownCorollary,
    UnknownLemma,
)
from .config import HARD_MAX_ORDER
from .group import build_group, image_in_quotient, quotient
from .invariants import (
    generalized_fitting,
    has_p_nilpotent_quotient,
    hypercenter,
    is_a4_free,
    is_p_nilpotent,
    is_p_nilpotent_by_normal_complement,
    is_p_soluble,
    is_p_supersoluble,
    is_quaternion_free,
    is_soluble,
    p_residual,
    sylow_subgroup,
    sylow_subgroups,
    u_hypercenter,
)
from .lattice import (
    all_subgroups,
    maximal_subgroups_of,
    minimal_normal_subgroups,
    normal_subgroups,
    subgroups_of_order,
)
from .perm import Perm
from .numbers import factorize, is_power_of, is_prime, log_p, pi_of
from .pi import (
    has_p_nilpotent_supplement,
    has_pi_property,
    is_pi_normal,
    is_pi_supplemented,
    pi_property_failures,
)
from .structure import centralizer, is_abelian, is_cyclic, is_normal, normalizer

ENGINE_VERSION = "1.0.0"

CONFIRMED = "CONFIRMED"
HYPOTHESIS_FAILS = "HYPOTHESIS_FAILS"
NOT_APPLICABLE = "NOT_APPLICABLE"
COUNTEREXAMPLE = "COUNTEREXAMPLE"
EXPECTED_COUNTEREXAMPLE = "EXPECTED_COUNTEREXAMPLE"
SKIPPED = "SKIPPED"
STATUSES = (CONFIRMED, HYPOTHESIS_FAILS, NOT_APPLICABLE, COUNTEREXAMPLE, EXPECTED_COUNTEREXAMPLE, SKIPPED)

FAMILIES = ("definitions", "A", "B", "remark1", "lemmas", "corollaries")
CONDITIONS = ("i", "ii", "iii", "iv")


@dataclass
class VerdictRecord:
    check_id: str
    group: str
    p: int | None = None
    n_order: int | None = None
    n_label: str | None = None
    m: int | None = None
    condition: str | None = None
    applicable: bool = True
    hypothesis_holds: bool = False
    conclusion_holds: bool | None = None
    expected: bool = False
    witness: dict | None = None
    reason: str | None = None
    skipped: bool = False

    @property
    def status(self):
        if self.skipped:
            return SKIPPED
        if not self.applicable:
            return NOT_APPLICABLE
        if not self.hypothesis_holds:
            return HYPOTHESIS_FAILS
        if self.conclusion_holds:
            return CONFIRMED
        return EXPECTED_COUNTEREXAMPLE if self.expected else COUNTEREXAMPLE

    def to_dict(self):
        return {
            "check_id": self.check_id,
            "group": self.group,
            "p": self.p,
            "N": self.n_label,
            "N_order": self.n_order,
            "m": self.m,
            "condition": self.condition,
            "status": self.status,
            "applicable": self.applicable,
            "hypothesis_holds": self.hypothesis_holds,
            "conclusion_holds": self.conclusion_holds,
            "witness": self.witness,
            "reason": self.reason,
        }

    @classmethod
    def from_dict(cls, d):
        rec = cls(
            check_id=d["check_id"],
            group=d["group"],
            p=d["p"],
            n_order=d["N_order"],
            n_label=d["N"],
            m=d["m"],
            condition=d["condition"],
            applicable=d["applicable"],
            hypothesis_holds=d["hypothesis_holds"],
            conclusion_holds=d["conclusion_holds"],
            witness=d["witness"],
            reason=d["reason"],
        )
        rec.skipped = d["status"] == SKIPPED
        rec.expected = d["status"] == EXPECTED_COUNTEREXAMPLE
        return rec


def describe(H):
    """JSON payload for a subgroup: order and 1-indexed generator cycles."""
    el = H.parent.elements
    return {"order": H.order, "generators": [el[g].cycle_string(one_indexed=True) for g in H.gens]}


def _name(G):
    return G.name or f"G{G.order}"


def normal_label(G, N):
    """Stable identifier of a normal subgroup: its position among the normal subgroups."""
    for i, n in enumerate(normal_subgroups(G)):
        if n.mask == N.mask:
            return f"N{i}"
    return None


def _record(check_id, G, p=None, N=None, **kw):
    return VerdictRecord(
        check_id=check_id,
        group=_name(G),
        p=p,
        n_order=None if N is None else N.order,
        n_label=None if N is None else normal_label(G, N),
        **kw,
    )


def _settle(rec, failure, conclusion):
    """Fill in hypothesis and conclusion; ``failure`` is None when the hypothesis holds."""
    if failure is None:
        rec.hypothesis_holds = True
        rec.conclusion_holds = bool(conclusion())
    else:
        rec.hypothesis_holds = False
        rec.witness = failure
    return rec


def _require_normal(G, N):
    if N.parent is not G or not is_normal(G, N):
        raise NotNormal(f"subgroup of order {N.order} is not normal in {_name(G)}")


def _require_prime(p, odd=False):
    if not isinstance(p, int) or not is_prime(p) or (odd and p == 2):
        kind = "an odd prime" if odd else "a prime"
        raise BadPrime(f"p must be {kind}, got {p!r}")


def _resolve_sylow(N, p, P):
    if P is None:
        return sylow_subgroup(N, p)
    if P.mask & N.mask != P.mask or not is_power_of(P.order, p) or (N.order // P.order) % p == 0:
        raise ValueError("P is not a Sylow p-subgroup of N")
    return P


def first_unsupported(G, P, order, p, cyclic_only=False, reading="all"):
    """First subgroup of P of the given order that has no p-nilpotent supplement
    and is not Π-normal, or None when every such subgroup passes."""
    cache = G._cache.setdefault("order_condition", {})
    key = (P.mask, order, p, cyclic_only, reading)
    if key in cache:
        return cache[key]
    bad = None
    for H in subgroups_of_order(P, order):
        if cyclic_only and not is_cyclic(H):
            continue
        if has_p_nilpotent_supplement(G, H, p)[0] or is_pi_normal(G, H, reading=reading)[0]:
            continue
        bad = H
        break
    cache[key] = bad
    return bad


def _order_clause(G, P, order, p, cyclic_only=False, tag="order-condition", reading="all"):
    H = first_unsupported(G, P, order, p, cyclic_only, reading)
    if H is None:
        return None
    return {"clause": tag, "subgroup": describe(H), "subgroup_order": H.order}


def _m_range_ok(P, p, m):
    return 1 < p ** m < P.order


# ---------------------------------------------------------------- theorems


def check_theorem_a(G, p, N, m, P=None, reading="all"):
    """Theorem A instance for (p, N, m); ``P`` overrides the Sylow representative."""
    _require_prime(p, odd=True)
    _require_normal(G, N)
    P = _resolve_sylow(N, p, P)
    rec = _record("theorem-A", G, p, N, m=m)
    if not _m_range_ok(P, p, m):
        rec.applicable = False
        rec.reason = f"no subgroup order p^{m} strictly between 1 and |P| = {P.order}"
        return rec
    failure = None
    if not has_p_nilpotent_quotient(G, N, p):
        failure = {"clause": "quotient-not-p-nilpotent"}
    else:
        NP = normalizer(G, P)
        if not is_p_nilpotent(NP, p):
            failure = {"clause": "normalizer-not-p-nilpotent", "subgroup": describe(NP)}
        else:
            failure = _order_clause(G, P, p ** m, p, reading=reading)
    return _settle(rec, failure, lambda: is_p_nilpotent(G, p))


def check_theorem_b(G, p, N, m, condition, P=None, reading="all"):
    _require_prime(p)
    if condition not in CONDITIONS:
        raise BadCondition(f"condition must be one of {CONDITIONS}, got {condition!r}")
    _require_normal(G, N)
    P = _resolve_sylow(N, p, P)
    rec = _record("theorem-B", G, p, N, m=m, condition=condition)
    if not _m_range_ok(P, p, m):
        rec.applicable = False
        rec.reason = f"no subgroup order p^{m} strictly between 1 and |P| = {P.order}"
        return rec
    if condition == "i" and m < 2:
        rec.applicable = False
        rec.reason = "condition (i) needs m >= 2"
        return rec
    failure = None
    if gcd(G.order, p - 1) != 1:
        failure = {"clause": "gcd(|G|, p-1) != 1"}
    elif not has_p_nilpotent_quotient(G, N, p):
        failure = {"clause": "quotient-not-p-nilpotent"}
    else:
        failure = _order_clause(G, P, p ** m, p, reading=reading)
    if failure is None:
        if condition == "ii" and p == 2 and not is_abelian(P):
            failure = {"clause": "condition-ii", "subgroup": describe(P)}
        elif condition == "iii":
            failure = _order_clause(G, P, 4, p, cyclic_only=True, tag="condition-iii", reading=reading)
        elif condition == "iv":
            if not is_soluble(N):
                failure = {"clause": "condition-iv", "detail": "N not soluble"}
            elif not is_quaternion_free(P):
                failure = {"clause": "condition-iv", "detail": "P not quaternion-free"}
    return _settle(rec, failure, lambda: is_p_nilpotent(G, p))


def check_remark_psupersoluble(G, p, N, m, P=None, reading="all"):
    """Theorem A without the normalizer clause, restricted to p-soluble G,
    with p-supersolubility as the conclusion."""
    _require_prime(p, odd=True)
    _require_normal(G, N)
    P = _resolve_sylow(N, p, P)
    rec = _record("remark-p-supersoluble", G, p, N, m=m)
    if not _m_range_ok(P, p, m):
        rec.applicable = False
        rec.reason = f"no subgroup order p^{m} strictly between 1 and |P| = {P.order}"
        return rec
    quotient_ok = has_p_nilpotent_quotient(G, N, p)
    bad = first_unsupported(G, P, p ** m, p, reading=reading)
    if not is_p_soluble(G, p):
        rec.applicable = False
        rec.reason = "G is not p-soluble"
        rec.witness = {
            "quotient_p_nilpotent": quotient_ok,
            "subgroup_condition": bad is None,
            "p_soluble": False,
        }
        return rec
    failure = None
    if not quotient_ok:
        failure = {"clause": "quotient-not-p-nilpotent"}
    elif bad is not None:
        failure = {"clause": "order-condition", "subgroup": describe(bad), "subgroup_order": bad.order}
    return _settle(rec, failure, lambda: is_p_supersoluble(G, p))


# ---------------------------------------------------------------- corollaries


@dataclass(frozen=True)
class CorollarySpec:
    family: str
    gcd_exponent: int | None  # 1 -> gcd(|G|, p-1), 2 -> gcd(|G|, p^2-1)
    odd_only: bool = False
    normalizer_clause: bool = False
    expected_false: bool = False
    summary: str = ""


COROLLARIES = {
    "A-maximal": CorollarySpec("maximal", None, True, True, summary="maximal subgroups of P, Theorem A setting"),
    "A-2-maximal": CorollarySpec("2-maximal", None, True, True, summary="2-maximal subgroups of P, Theorem A setting"),
    "A-minimal": CorollarySpec("minimal", None, True, True, summary="order-p subgroups of P, Theorem A setting"),
    "A-2-minimal": CorollarySpec("2-minimal", None, True, True, summary="order-p^2 subgroups of P, Theorem A setting"),
    "B-maximal": CorollarySpec("maximal", 1, summary="maximal subgroups of P, gcd(|G|, p-1) = 1"),
    "B-order-p-or-4": CorollarySpec("p-or-4", 1, summary="subgroups of order p, and of order 4 for nonabelian 2-groups P"),
    "B-quaternion-free": CorollarySpec("quaternion-free", None, summary="p = 2, N soluble, P quaternion-free, order-2 subgroups"),
    "B-2-maximal": CorollarySpec("2-maximal", 2, summary="2-maximal subgroups of P, gcd(|G|, p^2-1) = 1"),
    "B-2-minimal": CorollarySpec("2-minimal", 2, summary="order-p^2 subgroups of P, gcd(|G|, p^2-1) = 1"),
    "B-2-maximal-weak": CorollarySpec("2-maximal", 1, expected_false=True, summary="B-2-maximal with gcd(|G|, p-1) = 1 only"),
    "B-2-minimal-weak": CorollarySpec("2-minimal", 1, expected_false=True, summary="B-2-minimal with gcd(|G|, p-1) = 1 only"),
    "min-prime-a4-free": CorollarySpec("min-prime", None, summary="p minimal prime, G A4-free, G/L p-nilpotent, p^3 does not divide |L|"),
}


def _family_orders(P, p, family):
    """Subgroup orders of P quantified over by a corollary family (possibly none)."""
    a = log_p(P.order, p)
    if family == "maximal":
        return [p ** (a - 1)] if a >= 1 else []
    if family == "2-maximal":
        return [p ** (a - 2)] if a >= 2 else []
    if family == "minimal":
        return [p] if a >= 1 else []
    if family == "2-minimal":
        return [p * p] if a >= 2 else []
    if family == "p-or-4":
        orders = [p] if a >= 1 else []
        if p == 2 and a >= 2 and not is_abelian(P):
            orders.append(4)
        return orders
    if family == "quaternion-free":
        return [2] if a >= 1 else []
    raise ValueError(family)


def check_corollary(G, cid, p, N=None, reading="all"):
    """Instance of a catalogued corollary at prime p and normal subgroup N (default G).

    For ``min-prime-a4-free`` N plays the role of L and p is replaced by the
    smallest prime divisor of |G|.
    """
    spec = COROLLARIES.get(cid)
    if spec is None:
        raise UnknownCorollary(f"unknown corollary {cid!r}; known: {sorted(COROLLARIES)}")
    N = G.whole if N is None else N
    _require_normal(G, N)
    _require_prime(p)
    rec = _record(f"corollary:{cid}", G, p, N, expected=spec.expected_false)
    if spec.family == "min-prime":
        return _check_min_prime(G, p, N, rec)
    if spec.odd_only and p == 2:
        rec.applicable = False
        rec.reason = "p must be odd"
        return rec
    if spec.family == "quaternion-free" and p != 2:
        rec.applicable = False
        rec.reason = "p must be 2"
        return rec
    P = sylow_subgroup(N, p)
    orders = _family_orders(P, p, spec.family)
    rec.m = log_p(orders[0], p) if len(orders) == 1 else None
    failure = None
    if spec.gcd_exponent is not None and gcd(G.order, p ** spec.gcd_exponent - 1) != 1:
        failure = {"clause": f"gcd(|G|, p^{spec.gcd_exponent}-1) != 1"}
    elif not has_p_nilpotent_quotient(G, N, p):
        failure = {"clause": "quotient-not-p-nilpotent"}
    elif spec.normalizer_clause and not is_p_nilpotent(normalizer(G, P), p):
        failure = {"clause": "normalizer-not-p-nilpotent", "subgroup": describe(normalizer(G, P))}
    elif spec.family == "quaternion-free" and not is_soluble(N):
        failure = {"clause": "N not soluble"}
    elif spec.family == "quaternion-free" and not is_quaternion_free(P):
        failure = {"clause": "P not quaternion-free"}
    else:
        for k in orders:
            failure = _order_clause(G, P, k, p, reading=reading)
            if failure is not None:
                break
    return _settle(rec, failure, lambda: is_p_nilpotent(G, p))


def _check_min_prime(G, p, L, rec):
    if G.order == 1 or p != min(factorize(G.order)):
        rec.applicable = False
        rec.reason = "p is not the smallest prime divisor of |G|"
        return rec
    failure = None
    if not has_p_nilpotent_quotient(G, L, p):
        failure = {"clause": "quotient-not-p-nilpotent"}
    elif L.order % p ** 3 == 0:
        failure = {"clause": "p^3 divides |L|"}
    elif not is_a4_free(G):
        failure = {"clause": "G not A4-free"}
    return _settle(rec, failure, lambda: is_p_nilpotent(G, p))


# ---------------------------------------------------------------- lemmas

LEMMAS = (
    "pi-property-quotient",
    "pi-property-implies-pi-normal",
    "pi-normal-quotient",
    "normalizer-centralizer",
    "fstar-u-hypercenter",
    "minimal-normal-intersection",
    "minimal-normal-p-group",
    "maximal-supplement-odd",
    "maximal-supplement-two",
    "normal-p-subgroup-embedded",
    "residual-minimal-subgroups",
)

# lemmas whose subgroup quantifiers are only swept on small groups
BOUNDED_LEMMAS = frozenset({"minimal-normal-intersection", "minimal-normal-p-group", "normal-p-subgroup-embedded"})


def _quotient(G, N):
    cache = G._cache.setdefault("quotients", {})
    q = cache.get(N.mask)
    if q is None:
        q = quotient(G, N)
        cache[N.mask] = q
    return q


def _lemma_pi_property_quotient(G, p, params):
    H, N = params["H"], params["N"]
    if not has_pi_property(G, H):
        return {"clause": "H lacks the Π-property"}, None
    q = _quotient(G, N)
    return None, lambda: has_pi_property(q.quotient, image_in_quotient(q, H))


def _lemma_pi_property_implies(G, p, params):
    H = params["H"]
    if not has_pi_property(G, H):
        return {"clause": "H lacks the Π-property"}, None
    return None, lambda: is_pi_normal(G, H)[0] and is_pi_supplemented(G, H)[0]


def _lemma_pi_normal_quotient(G, p, params):
    H, N = params["H"], params["N"]
    variant = params.get("variant", "normal")
    pred = is_pi_normal if variant == "normal" else is_pi_supplemented
    if not (N.mask & H.mask == N.mask or gcd(H.order, N.order) == 1):
        return {"clause": "N neither inside H nor of coprime order"}, None
    if not pred(G, H)[0]:
        return {"clause": f"H not Π-{variant}"}, None
    q = _quotient(G, N)
    return None, lambda: pred(q.quotient, image_in_quotient(q, H))[0]


def _lemma_normalizer_centralizer(G, p, params):
    N = params["N"]
    if not has_p_nilpotent_quotient(G, N, p):
        return {"clause": "quotient-not-p-nilpotent"}, None
    P = params.get("P") or sylow_subgroup(N, p)
    if normalizer(G, P).mask != centralizer(G, P).mask:
        return {"clause": "N_G(P) != C_G(P)"}, None
    return None, lambda: is_p_nilpotent(G, p)


def _lemma_fstar(G, p, params):
    E = params["E"]
    Z = u_hypercenter(G)
    F = generalized_fitting(E)
    if F.mask & Z.mask != F.mask:
        return {"clause": "F*(E) not inside the supersoluble hypercenter", "subgroup": describe(F)}, None
    return None, lambda: E.mask & Z.mask == E.mask


def _lemma_min_normal_intersection(G, p, params):
    H, N = params["H"], params["N"]
    if not is_power_of(H.order, p) or not is_pi_normal(G, H)[0]:
        return {"clause": "H not a Π-normal p-subgroup"}, None
    d = G.subgroup_from_mask(H.mask & N.mask)
    if not any(d.mask & S.mask == d.mask and is_normal(S, d) for S in sylow_subgroups(G, p)):
        return {"clause": "H∩N normal in no Sylow p-subgroup"}, None
    return None, lambda: d.mask in (1, N.mask)


def _lemma_min_normal_p_group(G, p, params):
    H, L = params["H"], params["L"]
    if not is_power_of(H.order, p) or not is_pi_normal(G, H)[0]:
        return {"clause": "H not a Π-normal p-subgroup"}, None
    if H.mask & L.mask == 1:
        return {"clause": "H∩L = 1"}, None
    return None, lambda: is_power_of(L.order, p)


def _every_maximal_ok(G, P, L, p):
    for P1 in maximal_subgroups_of(P):
        if P1.mask & L.mask == 1 or has_p_nilpotent_supplement(G, P1, p)[0]:
            continue
        return {"clause": "maximal subgroup of P fails", "subgroup": describe(P1)}
    return None


def _lemma_maximal_odd(G, p, params):
    L = params["L"]
    if p == 2:
        return {"clause": "p = 2"}, None
    if not is_power_of(G.order // L.order, p):
        return {"clause": "G/L not a p-group"}, None
    P = sylow_subgroup(G, p)
    if not is_p_nilpotent(normalizer(G, P), p):
        return {"clause": "normalizer-not-p-nilpotent"}, None
    failure = _every_maximal_ok(G, P, L, p)
    if failure:
        return failure, None
    return None, lambda: is_p_nilpotent(G, p)


def _lemma_maximal_two(G, p, params):
    L = params["L"]
    if p != 2:
        return {"clause": "p != 2"}, None
    if not is_power_of(G.order // L.order, 2):
        return {"clause": "G/L not a 2-group"}, None
    failure = _every_maximal_ok(G, sylow_subgroup(G, 2), L, 2)
    if failure:
        return failure, None
    return None, lambda: is_p_nilpotent(G, 2)


def _lemma_normal_p_subgroup(G, p, params):
    P = params["P"]
    if not is_power_of(P.order, p) or not is_normal(G, P):
        return {"clause": "P not a normal p-subgroup"}, None
    orders = [p]
    if p == 2 and not is_abelian(P):
        orders.append(4)
    for k in orders:
        failure = _order_clause(G, P, k, p)
        if failure:
            return failure, None
    Z = u_hypercenter(G)
    return None, lambda: P.mask & Z.mask == P.mask


def _lemma_residual_minimal(G, p, params):
    if p == 2:
        return {"clause": "p = 2"}, None
    P = sylow_subgroup(G, p)
    if not is_p_nilpotent(normalizer(G, P), p):
        return {"clause": "normalizer-not-p-nilpotent"}, None
    R = G.subgroup_from_mask(P.mask & p_residual(G, p).mask)
    Z = hypercenter(G)
    for X in subgroups_of_order(R, p):
        if X.mask & Z.mask == X.mask or has_p_nilpotent_supplement(G, X, p)[0]:
            continue
        return {"clause": "minimal subgroup fails", "subgroup": describe(X)}, None
    return None, lambda: is_p_nilpotent(G, p)


_LEMMA_IMPL = {
    "pi-property-quotient": _lemma_pi_property_quotient,
    "pi-property-implies-pi-normal": _lemma_pi_property_implies,
    "pi-normal-quotient": _lemma_pi_normal_quotient,
    "normalizer-centralizer": _lemma_normalizer_centralizer,
    "fstar-u-hypercenter": _lemma_fstar,
    "minimal-normal-intersection": _lemma_min_normal_intersection,
    "minimal-normal-p-group": _lemma_min_normal_p_group,
    "maximal-supplement-odd": _lemma_maximal_odd,
    "maximal-supplement-two": _lemma_maximal_two,
    "normal-p-subgroup-embedded": _lemma_normal_p_subgroup,
    "residual-minimal-subgroups": _lemma_residual_minimal,
}


def _lemma_instances(G, lid):
    """Parameter dicts over which a lemma is quantified on G."""
    primes = sorted(pi_of(G.order))
    subs = all_subgroups(G).all
    normals = normal_subgroups(G)
    if lid in ("pi-property-quotient",):
        for H in subs:
            for N in normals:
                yield {"H": H, "N": N}
    elif lid == "pi-property-implies-pi-normal":
        for H in subs:
            yield {"H": H}
    elif lid == "pi-normal-quotient":
        for H in subs:
            for N in normals:
                if N.mask & H.mask == N.mask or gcd(H.order, N.order) == 1:
                    for variant in ("normal", "supplemented"):
                        yield {"H": H, "N": N, "variant": variant}
    elif lid == "normalizer-centralizer":
        for p in primes:
            for N in normals:
                yield {"p": p, "N": N}
    elif lid == "fstar-u-hypercenter":
        for E in normals:
            yield {"E": E}
    elif lid in ("minimal-normal-intersection", "minimal-normal-p-group"):
        key = "N" if lid == "minimal-normal-intersection" else "L"
        mins = minimal_normal_subgroups(G)
        for p in primes:
            for H in subs:
                if is_power_of(H.order, p):
                    for M in mins:
                        yield {"p": p, "H": H, key: M}
    elif lid in ("maximal-supplement-odd", "maximal-supplement-two"):
        for p in primes:
            if (p == 2) == (lid == "maximal-supplement-two"):
                for L in normals:
                    yield {"p": p, "L": L}
    elif lid == "normal-p-subgroup-embedded":
        for p in primes:
            for P in normals:
                if P.order > 1 and is_power_of(P.order, p):
                    yield {"p": p, "P": P}
    elif lid == "residual-minimal-subgroups":
        for p in primes:
            if p != 2:
                yield {"p": p}


def check_lemma(G, lid, params):
    """Evaluate one lemma instance; ``params`` maps names (p, H, N, L, E, P) to values."""
    impl = _LEMMA_IMPL.get(lid)
    if impl is None:
        raise UnknownLemma(f"unknown lemma {lid!r}; known: {list(LEMMAS)}")
    p = params.get("p")
    N = params.get("N") or params.get("L") or params.get("E")
    rec = VerdictRecord(
        check_id=f"lemma:{lid}",
        group=_name(G),
        p=p,
        n_order=None if N is None else N.order,
        n_label=None if N is None or N.mask not in {n.mask for n in normal_subgroups(G)} else normal_label(G, N),
    )
    failure, conclusion = impl(G, p, params)
    return _settle(rec, failure, conclusion)


def sweep_lemma(G, lid, subgroup_bound=100):
    """Aggregate all instances of a lemma on G into a single record.

    The hypothesis holds if some instance satisfies it; the conclusion holds
    if it holds on every such instance.  The first violating instance is the
    witness.
    """
    if lid not in _LEMMA_IMPL:
        raise UnknownLemma(f"unknown lemma {lid!r}")
    rec = VerdictRecord(check_id=f"lemma:{lid}", group=_name(G))
    if lid in BOUNDED_LEMMAS and G.order > subgroup_bound:
        rec.skipped = True
        rec.reason = f"|G| = {G.order} exceeds the subgroup-quantifier bound {subgroup_bound}"
        return rec
    total = held = 0
    violation = None
    for params in _lemma_instances(G, lid):
        total += 1
        inst = check_lemma(G, lid, params)
        if inst.hypothesis_holds:
            held += 1
            if not inst.conclusion_holds and violation is None:
                violation = {k: (describe(v) if hasattr(v, "mask") else v) for k, v in params.items()}
    rec.hypothesis_holds = held > 0
    if held:
        rec.conclusion_holds = violation is None
    rec.witness = {"instances": total, "hypothesis_true": held}
    if violation is not None:
        rec.witness["violation"] = violation
    return rec


# ---------------------------------------------------------------- definitions


def definition_records(G):
    """Definition-level facts: normal and trivial subgroups have the Π-property
    and the two p-nilpotency tests agree."""
    name = _name(G)
    out = []
    normals = normal_subgroups(G)
    bad = next((N for N in normals if not has_pi_property(G, N)), None)
    rec = VerdictRecord("definition:normal-has-pi-property", name, hypothesis_holds=True)
    rec.conclusion_holds = bad is None
    rec.witness = {"instances": len(normals)} if bad is None else {"subgroup": describe(bad)}
    out.append(rec)

    rec = VerdictRecord("definition:trivial-has-pi-property", name, hypothesis_holds=True)
    rec.conclusion_holds = has_pi_property(G, G.trivial)
    out.append(rec)

    for p in sorted(pi_of(G.order)):
        rec = VerdictRecord("oracle:p-nilpotent-agreement", name, p=p, hypothesis_holds=True)
        rec.conclusion_holds = is_p_nilpotent(G, p) == is_p_nilpotent_by_normal_complement(G, p)
        out.append(rec)
    return out


def reading_flags(G):
    """Subgroups on which the all-chief-pairs and single-chief-series readings
    of the Π-property disagree, one flag per subgroup."""
    flags = []
    for H in all_subgroups(G).all:
        strict = has_pi_property(G, H, reading="all")
        loose = has_pi_property(G, H, reading="series")
        if strict != loose:
            fail = pi_property_failures(G, H, first_only=True)[0]
            flags.append({
                "kind": "chief-reading-disagreement",
                "group": _name(G),
                "subgroup": describe(H),
                "all_pairs": strict,
                "chief_series": loose,
                "failing_pair": [fail.pair.lower.order, fail.pair.upper.order],
                "offending_primes": sorted(fail.offending_primes),
            })
    return flags


# ---------------------------------------------------------------- sweeps


def _theorem_parameters(G, p):
    """(N, P, valid m list) for each normal N with p-nilpotent quotient."""
    for N in normal_subgroups(G):
        if not has_p_nilpotent_quotient(G, N, p):
            continue
        P = sylow_subgroup(N, p)
        a = log_p(P.order, p)
        yield N, P, list(range(1, a))


def _na(check_id, G, p, N, reason, condition=None):
    return _record(check_id, G, p, N, condition=condition, applicable=False, reason=reason)


def sweep_theorem_a(G, reading="all"):
    out = []
    for p in sorted(pi_of(G.order)):
        if p == 2:
            continue
        for N, P, ms in _theorem_parameters(G, p):
            if not ms:
                out.append(_na("theorem-A", G, p, N, f"|P| = {P.order} leaves no valid m"))
            for m in ms:
                out.append(check_theorem_a(G, p, N, m, P=P, reading=reading))
    return out


def sweep_theorem_b(G, reading="all"):
    out = []
    for p in sorted(pi_of(G.order)):
        for N, P, ms in _theorem_parameters(G, p):
            for cond in CONDITIONS:
                if not ms:
                    out.append(_na("theorem-B", G, p, N, f"|P| = {P.order} leaves no valid m", cond))
                for m in ms:
                    out.append(check_theorem_b(G, p, N, m, cond, P=P, reading=reading))
    return out


def sweep_remark(G, reading="all"):
    out = []
    for p in sorted(pi_of(G.order)):
        if p == 2:
            continue
        for N in normal_subgroups(G):
            P = sylow_subgroup(N, p)
            ms = list(range(1, log_p(P.order, p)))
            if not ms:
                out.append(_na("remark-p-supersoluble", G, p, N, f"|P| = {P.order} leaves no valid m"))
            for m in ms:
                out.append(check_remark_psupersoluble(G, p, N, m, P=P, reading=reading))
    return out


def sweep_corollaries(G, reading="all"):
    out = []
    normals = normal_subgroups(G)
    primes = sorted(pi_of(G.order))
    for p in primes:
        for cid, spec in COROLLARIES.items():
            if spec.family == "min-prime":
                if p == primes[0]:
                    out.extend(check_corollary(G, cid, p, L, reading=reading) for L in normals)
                continue
            # the weakened forms are instantiated at N = G only
            for N in [G.whole] if spec.expected_false else normals:
                if has_p_nilpotent_quotient(G, N, p):
                    out.append(check_corollary(G, cid, p, N, reading=reading))
    return out


def sweep_lemmas(G, subgroup_bound=100):
    return [sweep_lemma(G, lid, subgroup_bound) for lid in LEMMAS]


@dataclass
class SweepConfig:
    families: tuple = FAMILIES
    jobs: int = 1
    lemma_subgroup_bound: int = 100
    # "all": every chief pair of G; "series": the factors of one chief series
    reading: str = "all"


_SWEEPS = {
    "definitions": lambda G, cfg: definition_records(G),
    "A": lambda G, cfg: sweep_theorem_a(G, cfg.reading),
    "B": lambda G, cfg: sweep_theorem_b(G, cfg.reading),
    "remark1": lambda G, cfg: sweep_remark(G, cfg.reading),
    "lemmas": lambda G, cfg: sweep_lemmas(G, cfg.lemma_subgroup_bound),
    "corollaries": lambda G, cfg: sweep_corollaries(G, cfg.reading),
}


def check_group(G, config=None):
    """All selected check families on one group; errors become SKIPPED records.

    Returns (records, flags, timing) with timing in seconds per family.
    """
    config = config or SweepConfig()
    records, flags, timing = [], [], {}
    for fam in FAMILIES:
        if fam not in config.families:
            continue
        t0 = time.perf_counter()
        try:
            records.extend(_SWEEPS[fam](G, config))
            if fam == "definitions":
                flags.extend(reading_flags(G))
        except PinilotError as exc:
            rec = VerdictRecord(f"family:{fam}", _name(G), skipped=True, reason=f"{type(exc).__name__}: {exc}")
            records.append(rec)
        timing[fam] = time.perf_counter() - t0
    return records, flags, timing


def _group_payload(G):
    return (G.name, G.degree, [tuple(g.images) for g in G.generators])


def _worker(args):
    payload, config = args
    name, degree, gens = payload
    G = build_group(degree, [Perm(g) for g in gens], max_order=HARD_MAX_ORDER, name=name)
    recs, flags, timing = check_group(G, config)
    return [r.to_dict() for r in recs], flags, timing


@dataclass
class CorpusReport:
    engine_version: str = ENGINE_VERSION
    groups: list = field(default_factory=list)  # (name, order)
    verdicts: list = field(default_factory=list)
    timing: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    flags: list = field(default_factory=list)

    @property
    def counterexamples(self):
        return [v for v in self.verdicts if v.status == COUNTEREXAMPLE]

    @property
    def expected_counterexamples(self):
        return [v for v in self.verdicts if v.status == EXPECTED_COUNTEREXAMPLE]

    def histogram(self):
        counts = {s: 0 for s in STATUSES}
        for v in self.verdicts:
            counts[v.status] += 1
        return counts

    @property
    def exit_code(self):
        return 1 if self.counterexamples else 0


def _notes(records, flags, families):
    notes = []
    if "corollaries" in families:
        notes.append(
            "B-quaternion-free requires G/N to be 2-nilpotent"
        )
    if "B" in families:
        # condition (iii) must agree with (ii) whenever p is odd
        by_key = {}
        for r in records:
            if r.check_id == "theorem-B" and r.p != 2 and r.applicable:
                by_key.setdefault((r.group, r.p, r.n_label, r.m), {})[r.condition] = r.hypothesis_holds
        odd = [k for k, v in by_key.items() if v.get("iii") != v.get("ii")]
        if odd:
            notes.append(f"Theorem B condition (iii) differs from (ii) at odd p in {len(odd)} instances")
        else:
            notes.append("Theorem B condition (iii) coincides with (ii) at every odd-p instance")
    if "definitions" in families:
        bad = sorted({f["group"] for f in flags if f["kind"] == "chief-reading-disagreement"})
        if bad:
            notes.append("chief-factor readings of the Π-property disagree on: " + ", ".join(bad))
        else:
            notes.append("all-chief-pairs and single-chief-series readings of the Π-property agree on every group")
    return notes


def run_corpus(corpus, config=None):
    """Run the selected families over every group, in corpus order."""
    config = config or SweepConfig()
    report = CorpusReport()
    report.groups = [(_name(G), G.order) for G in corpus]
    t0 = time.perf_counter()
    results = []
    if config.jobs > 1 and len(corpus) > 1:
        payloads = [(_group_payload(G), config) for G in corpus]
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            for dicts, flags, timing in pool.map(_worker, payloads):
                results.append(([VerdictRecord.from_dict(d) for d in dicts], flags, timing))
    else:
        for G in corpus:
            results.append(check_group(G, config))
    for recs, flags, timing in results:
        report.verdicts.extend(recs)
        report.flags.extend(flags)
        for fam, secs in timing.items():
            report.timing[fam] = report.timing.get(fam, 0.0) + secs
    report.timing["total"] = time.perf_counter() - t0
    report.notes = _notes(report.verdicts, report.flags, config.families)
    if config.reading != "all":
        report.notes.append(f"Π-property evaluated under the {config.reading!r} chief-factor reading")
    return report
