"""Concatenated sum-rank codes: construction, verification, and bounds."""

from .bounds import (
    BoundCurve,
    LrsParams,
    concat_line_rate,
    concat_presets,
    gamma_q,
    gv_asymptotic_rate,
    gv_exact_rate,
    line_rate,
    lrs_params,
    sample_curve,
    singleton_like_max_dim,
    tvz_hamming_rhs,
    tvz_like_sr_rate,
)
from .codes import (
    HammingLinearCode,
    SumRankLinearCode,
    concatenate,
    explicit_family,
    gabidulin,
    reed_solomon,
    sum_zero_code,
)
from .fields import (
    FieldCtx,
    FieldElem,
    field_from_order,
    frobenius_power,
    make_extension,
    make_prime_field,
    parse_field,
    pi_coords,
)
from .matspace import Mat
from .metrics import (
    BlockProfile,
    SumRankVector,
    hamming_distance,
    hamming_weight,
    min_distance_exhaustive,
    sum_rank_distance,
    sum_rank_weight,
)
from .tables import TableRow, build_table

__version__ = "0.1.0"
