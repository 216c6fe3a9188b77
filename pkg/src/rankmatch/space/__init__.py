from .construct import (
    EXTREMAL_KINDS,
    RANDOM_KINDS,
    ambient_dimension,
    cell_basis,
    check_structure,
    congruence,
    double_symmetric,
    extremal,
    extremal_dimension,
    extremal_max_rank_member,
    extremal_region,
    random_invertible,
    random_low_rank_space,
    random_matrix,
    random_space,
    random_subspace,
    structural_rank_bound,
)
from .core import (
    KINDS,
    AffineSpace,
    Cell,
    MatchingSelection,
    canonicalize,
    colex_cmp,
    folded,
    is_canonical,
    leading_cell,
    leading_graph,
    restrict,
    select_matching,
    upper_cells,
)
from .io import parse_matrix, parse_space, serialize_matrix, serialize_space
from .oracle import (
    DEFAULT_CAP,
    SPAN_CHECK_CAP,
    batch_rank,
    max_rank_member,
    max_rank_oracle,
    member_batches,
    rank_profile,
    span_violation,
)

__all__ = [
    "EXTREMAL_KINDS", "RANDOM_KINDS", "KINDS", "DEFAULT_CAP", "SPAN_CHECK_CAP",
    "AffineSpace", "Cell", "MatchingSelection",
    "ambient_dimension", "batch_rank", "canonicalize", "cell_basis", "check_structure",
    "colex_cmp", "congruence", "double_symmetric", "extremal", "extremal_dimension",
    "extremal_max_rank_member", "extremal_region", "folded", "is_canonical",
    "leading_cell", "leading_graph", "max_rank_member", "max_rank_oracle",
    "member_batches", "parse_matrix", "parse_space", "random_invertible",
    "random_low_rank_space", "random_matrix", "random_space", "random_subspace",
    "rank_profile", "restrict", "select_matching", "serialize_matrix",
    "serialize_space", "span_violation", "structural_rank_bound", "upper_cells",
]
