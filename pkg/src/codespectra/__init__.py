"""Linear codes over prime fields with extremal weight spectra.

Construct, analyze, and exhaustively search [n,k]_q codes whose weight
spectra are full (every achievable weight occurs) or maximum (as many
distinct weights as the dimension allows) under component-wise weight
functions: Hamming, Lee, Manhattan, or a custom symbol-weight table.
"""

from .bounds import BoundReport, fws_max_length, mws_min_length, sandwich_check, spectrum_ceiling
from .constructions import (
    ColumnMultiset,
    expand,
    format_multiset_lines,
    general_fws,
    lee_mws,
    manhattan_fws,
    manhattan_mws,
    parse_multiset_lines,
)
from .errors import (
    BudgetExceeded,
    CodespectraError,
    NotFWS,
    NotInitialSegment,
    NotOdd,
    NotPrime,
    OutOfRange,
    ParseError,
    RankDeficient,
    SizeOverflow,
    UnknownWeightName,
    ZeroColumn,
)
from .field import (
    DEFAULT_ENUMERATION_BUDGET,
    FieldVector,
    GeneratorMatrix,
    PrimeField,
    enumerate_codewords,
    matrix_rank,
    validate_prime,
)
from .search import (
    DEFAULT_SEARCH_BUDGET,
    MwsLengthScan,
    SearchResult,
    SearchSpec,
    canonical_columns,
    min_mws_length,
    optimal_spectrum,
)
from .spectra import (
    SupportSummary,
    WeightSpectrum,
    is_fws,
    is_mws,
    multiset_spectrum,
    spectrum,
    spectrum_is_fws,
    spectrum_is_mws,
    support_properties,
    verify_basis_bound,
)
from .weights import (
    WeightConstants,
    WeightFunction,
    achievable_weights,
    builtin,
    constants,
    delta_witness_multiplicities,
    format_weight_table,
    parse_weight_table,
    weight_preserving_scalars,
    word_weight,
)

__version__ = "0.1.0"
