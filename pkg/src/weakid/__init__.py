"""Weak identities in groups: exhaustive verdicts on finite groups, exact answers on Z^n."""

__version__ = "0.1.0"

from .words import Word, Endomorphism, parse_word, multiply, invert, apply_endo, exponent_sums
from .groups import FiniteGroup, GroupSpec, make_group, evaluate_word, commutes, exponent
from .subgroups import Subgroup, generated_subgroup, normal_closure, centralizer, verbal_image, quotient
from .homsearch import SearchBudget, SearchStats, find_noncollapsing_multicopy, endomorphisms, product_homs_to_G
from .weak import (
    TSubgroupGens,
    Status,
    Verdict,
    check_weak,
    min_height,
    check_weak_modulo,
    verify_weak_star_chain,
    sample_t_subgroup,
    substitution_generators,
)
from .bcs import max_centralizer_chain, bcs_height_bound
from .disc import FreeAbelianGroup, is_discriminating_finite, extend_discrimination, abelian_weak_equals_identity
