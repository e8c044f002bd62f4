"""focalgroups: Sylow intersections of verbal subgroups in small permutation groups.

Groups are fully enumerated; elements are addressed by index.  The main
entry points are :func:`focalgroups.focal.verify_theorem_a` and the word
calculus in :mod:`focalgroups.words`.
"""

from .corpus import build_group, build_named, default_corpus, load_group_file
from .focal import (
    VerificationReport,
    check_question1,
    extract_focal_generators,
    run_suite,
    verify_theorem_a,
)
from .groups import FiniteGroup, Subgroup, generate_group, quotient, subgroup_generated
from .perm import Permutation, format_cycles, parse_cycle_notation
from .sylow import factor_order, sylow_subgroup
from .values import power_value_set, value_set, verbal_subgroup
from .words import delta, gamma, parse_word

__version__ = "0.1.0"

__all__ = [
    "build_group", "build_named", "default_corpus", "load_group_file",
    "VerificationReport", "check_question1", "extract_focal_generators", "run_suite", "verify_theorem_a",
    "FiniteGroup", "Subgroup", "generate_group", "quotient", "subgroup_generated",
    "Permutation", "format_cycles", "parse_cycle_notation",
    "factor_order", "sylow_subgroup",
    "power_value_set", "value_set", "verbal_subgroup",
    "delta", "gamma", "parse_word",
]
