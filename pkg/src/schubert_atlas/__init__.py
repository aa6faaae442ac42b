"""Exact coroot combinatorics and singularity classification for Schubert
varieties in flag varieties G/P, of any simple Lie type."""

from .errors import SchubertAtlasError
from .rootdata import (
    CartanType,
    RootCorootPair,
    RootDatum,
    build_root_datum,
    height,
    pair_root_coroot,
)
from .weyl import (
    ParabolicSubset,
    WeylElement,
    act_on_coroot,
    all_reduced_words,
    bruhat_covers,
    bruhat_leq,
    canonical_reduced_word,
    element_from_word,
    enumerate_coset_reps,
    inversion_sequence,
    is_min_coset_rep,
    min_coset_rep,
    parabolic,
    reflection_element,
    rightmost_distance,
)
from .schubert import (
    AdaptedBasis,
    ClassificationReport,
    CorootSets,
    SchubertInput,
    Status,
    build_B_wB,
    classify,
    cover_coroots,
    decompose,
    gorenstein_fano_report,
    p_adapt,
    picard_matrix,
    report_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "AdaptedBasis",
    "CartanType",
    "ClassificationReport",
    "CorootSets",
    "ParabolicSubset",
    "RootCorootPair",
    "RootDatum",
    "SchubertAtlasError",
    "SchubertInput",
    "Status",
    "WeylElement",
    "act_on_coroot",
    "all_reduced_words",
    "bruhat_covers",
    "bruhat_leq",
    "build_B_wB",
    "build_root_datum",
    "canonical_reduced_word",
    "classify",
    "cover_coroots",
    "decompose",
    "element_from_word",
    "enumerate_coset_reps",
    "gorenstein_fano_report",
    "height",
    "inversion_sequence",
    "is_min_coset_rep",
    "min_coset_rep",
    "p_adapt",
    "pair_root_coroot",
    "parabolic",
    "picard_matrix",
    "reflection_element",
    "rightmost_distance",
    "report_to_json",
]
