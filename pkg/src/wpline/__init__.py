"""Exact-arithmetic engine for rank-two bundle calculus on weight-triple curves."""

from .bundles import (
    ExtBundle,
    StableObject,
    auslander,
    auslander_twist,
    canonical_form,
    desuspend,
    eq_ext,
    injective_hull,
    orbit,
    projective_cover,
    slope,
    suspend,
)
from .graded import dim_S, ext1_dim_line, hom_dim_line
from .k0 import K0Class, K0Context, k0_of
from .lgroup import LElement, WeightTriple
from .quiver import Quiver, apply_sequence, canonical_key, is_isomorphic, mutate, mutate_via_rules, search
from .replay import twist_triangle_check, corestriction_companion, coextension_companion, run_replay
from .stablehom import (
    ALPHA_INV_AT_ZERO,
    HomQuery,
    Side,
    Vanishing,
    Verdict,
    corner_exchange_verdict,
    hom_EE_dim,
    hom_EE_nonzero,
    shifted_pair_extension_free,
    serre_rewrite,
    stable_hom_dim,
    window_vanishing,
)

__all__ = [
    "ALPHA_INV_AT_ZERO",
    "ExtBundle",
    "HomQuery",
    "K0Class",
    "K0Context",
    "LElement",
    "Quiver",
    "Side",
    "StableObject",
    "Vanishing",
    "Verdict",
    "WeightTriple",
    "apply_sequence",
    "auslander",
    "auslander_twist",
    "canonical_form",
    "canonical_key",
    "corner_exchange_verdict",
    "desuspend",
    "dim_S",
    "eq_ext",
    "ext1_dim_line",
    "hom_EE_dim",
    "hom_EE_nonzero",
    "hom_dim_line",
    "injective_hull",
    "is_isomorphic",
    "k0_of",
    "shifted_pair_extension_free",
    "mutate",
    "mutate_via_rules",
    "orbit",
    "projective_cover",
    "twist_triangle_check",
    "corestriction_companion",
    "coextension_companion",
    "run_replay",
    "search",
    "serre_rewrite",
    "slope",
    "stable_hom_dim",
    "suspend",
    "window_vanishing",
]
