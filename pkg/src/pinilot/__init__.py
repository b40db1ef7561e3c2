"""Finite permutation groups, the Π-property and p-nilpotency criteria."""
from .errors import *  # noqa: F401,F403
from .group import FiniteGroup, Subgroup, build_group, direct_product, quotient, semidirect_product
from .perm import Perm
from .harness import (
    VerdictRecord,
    check_corollary,
    check_lemma,
    check_remark_psupersoluble,
    check_theorem_a,
    check_theorem_b,
    run_corpus,
)
from .pi import has_p_nilpotent_supplement, has_pi_property, is_pi_normal, is_pi_supplemented

__version__ = "1.0.0"

__all__ = [
    "FiniteGroup",
    "Subgroup",
    "Perm",
    "build_group",
    "direct_product",
    "semidirect_product",
    "quotient",
    "has_pi_property",
    "is_pi_normal",
    "is_pi_supplemented",
    "has_p_nilpotent_supplement",
    "VerdictRecord",
    "check_theorem_a",
    "check_theorem_b",
    "check_remark_psupersoluble",
    "check_corollary",
    "check_lemma",
    "run_corpus",
]
