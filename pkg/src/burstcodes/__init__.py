"""Binary codes correcting a single burst of at most ``k`` deletions.

The package builds codes from four ingredients: a channel model of burst
deletions, pattern-dense strings, a locating code that narrows the burst to a
short window, and shifted VT codes that repair each interleaved residue
sequence inside that window.  :mod:`burstcodes.sysenc` turns the
construction into a systematic encoder.
"""

from .bitseq import BitString, as_bits, interleave_merge, parse_lines, format_lines, subsequence
from .burstcode import (
    CodeInstance,
    CodeParams,
    SearchResult,
    SyndromeSet,
    bucket_codewords,
    decode,
    enumerate_code,
    extract_syndromes,
    member,
    residue_pairs,
    search_best,
    syndrome_space_size,
)
from .channel import apply_burst, ball_exact, ball_upto, burst_interval, is_burst_code
from .errors import (
    AmbiguityError,
    BurstCodeError,
    DecodeFailure,
    DomainError,
    EncodeError,
    FormatError,
    RangeError,
    ResourceLimitError,
    ShapeError,
)
from .locator import LocateResult, LocSyndromes, loc_member, loc_syndromes, locate
from .pattern import (
    DensityEstimate,
    PatternParams,
    burst_pattern,
    count_patterns,
    default_delta,
    dense_count_exact,
    dense_fraction_mc,
    gap_vector,
    indicator,
    is_dense,
    pattern_positions,
)
from .sysenc import PipelineParams, encode, pipeline_decode
from .vtcodes import SvtParams, parity_checksum, svt_decode, svt_member, vt_checksum

__version__ = "0.1.0"
