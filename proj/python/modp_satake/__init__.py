"""Mod-p spherical Hecke algebras, Satake parameters and the lattice oracle."""

from ._core import (
    HeckeElement,
    SatakeParameter,
    VerificationError,
    antidominant_generators,
    component_group,
    convolution_table,
    coset_decomposition,
    dominance_leq,
    dominant_interval,
    factor_over_generators,
    group_info,
    is_dominant,
    monoid_relations,
    mv_count,
    satake_table,
    strata,
    translation_length,
)

__version__ = "0.1.0"

__all__ = [
    "HeckeElement",
    "SatakeParameter",
    "VerificationError",
    "antidominant_generators",
    "component_group",
    "convolution_table",
    "coset_decomposition",
    "dominance_leq",
    "dominant_interval",
    "factor_over_generators",
    "group_info",
    "is_dominant",
    "monoid_relations",
    "mv_count",
    "satake_table",
    "strata",
    "translation_length",
]
