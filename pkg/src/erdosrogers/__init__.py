"""Constructive Erdos-Rogers computations for uniform hypergraphs."""

from .constructions import (
    ConstructionParams,
    CoverEstimate,
    PairColoring,
    RichExtension,
    ShadowLabeling,
    construct_coloring,
    construct_shadow_labeling,
    estimate_f_cover,
    extract_blowup_copy,
    richest_extension,
    verify_g_free,
)
from .errors import CapacityError, HgFormatError, InvalidParameterError
from .exact import (
    FExactResult,
    FFreeResult,
    enumerate_g_free,
    f_exact,
    max_f_free_bruteforce,
    max_f_free_subset,
)
from .exponents import DensityReport, alpha, beta, check_concluding_condition
from .hypergraph import (
    Hypergraph,
    blowup_F,
    blowup_t,
    build_complete,
    build_h,
    induced,
    iterated_blowup,
    shadow,
)
from .isomorphism import (
    Embedding,
    EmbeddingCount,
    canonical_form,
    contains_copy,
    count_embeddings,
    is_embedding,
    is_isomorphic,
    iter_embeddings,
)
from .morphisms import (
    BlowupCertificate,
    HomWitness,
    SetMap,
    ShadowHomWitness,
    TightOrder,
    find_homomorphism,
    find_shadow_homomorphism,
    is_k_tightly_connected,
    is_sub_iterated_blowup,
    verify_shadow_hom,
)

__version__ = "0.1.0"

__all__ = [
    "BlowupCertificate",
    "CapacityError",
    "ConstructionParams",
    "CoverEstimate",
    "DensityReport",
    "Embedding",
    "EmbeddingCount",
    "FExactResult",
    "FFreeResult",
    "HgFormatError",
    "HomWitness",
    "Hypergraph",
    "InvalidParameterError",
    "PairColoring",
    "RichExtension",
    "SetMap",
    "ShadowHomWitness",
    "ShadowLabeling",
    "TightOrder",
    "alpha",
    "beta",
    "blowup_F",
    "blowup_t",
    "build_complete",
    "build_h",
    "canonical_form",
    "check_concluding_condition",
    "construct_coloring",
    "construct_shadow_labeling",
    "contains_copy",
    "count_embeddings",
    "enumerate_g_free",
    "estimate_f_cover",
    "extract_blowup_copy",
    "f_exact",
    "find_homomorphism",
    "find_shadow_homomorphism",
    "induced",
    "is_embedding",
    "is_isomorphic",
    "is_k_tightly_connected",
    "is_sub_iterated_blowup",
    "iter_embeddings",
    "iterated_blowup",
    "max_f_free_bruteforce",
    "max_f_free_subset",
    "richest_extension",
    "shadow",
    "verify_g_free",
    "verify_shadow_hom",
]
