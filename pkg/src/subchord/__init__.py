"""Sub-chord diagram invariants of spherical curves.

A spherical curve is handled through its Gauss word.  The package counts
embedded sub-chord diagrams, derives the lambda and averaged invariants,
enumerates Reidemeister move sites and flypes, and builds a census of prime
reduced curves.
"""

from subchord.embed import (
    FaceSet,
    SignAssignment,
    SphericalEmbedding,
    check_embedding,
    crossing_signs,
    faces,
    is_realizable,
    some_embedding,
    spherical_embeddings,
)
from subchord.errors import (
    BoundExceeded,
    EmbeddingMismatch,
    EmptyToken,
    LabelNotTwice,
    NonIntegral,
    NotRealizable,
    PostconditionViolation,
    SiteInvalid,
    SubchordError,
)
from subchord.flype import FlypeSite, apply_flype, list_flype_sites
from subchord.invariant import (
    MOVESETS,
    RI,
    RI_STRONG_RIII,
    RI_WEAK_RIII,
    InvariantReport,
    averaged,
    indicators,
    invariant_report,
    lambda_invariant,
    st_factor_check,
    torus_word,
    trivializable,
)
from subchord.moves import DeltaReport, MoveSite, apply_move, list_sites, pattern_delta
from subchord.pattern import NAMED, Pattern, PatternCounts, count_named, count_pattern, graph_counts
from subchord.word import (
    GaussWord,
    canonical_form,
    connected_sum,
    decompose,
    interlacement,
    is_prime,
    is_reduced,
    parse_gauss_word,
    word,
)

__version__ = "0.1.0"
