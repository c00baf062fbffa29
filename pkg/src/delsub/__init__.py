"""Binary codes that survive one deletion plus one substitution.

A class of n-bit words is pinned by three residues: the weight mod 4,
the VT checksum mod 2n and its second-order analogue mod 2n^2.  Any
received (n-1)-bit word then lies in the corruption ball of at most two
class members, and the largest class at each length keeps the redundancy
within 3 log2(n) + 4.  The package constructs such classes by full-scan
bucket counting, list-decodes received words, and verifies the combinatorial
guarantees exhaustively at small lengths.
"""

from .channel import (
    CANONICAL_CLASS_BY_DELTA,
    WEIGHT_DELTA_TABLE,
    ErrorEvent,
    Substitution,
    WeightDeltaClass,
    WeightWindowError,
    apply_del_sub,
    classify_weight_delta,
    error_ball,
    iter_corruptions,
    iter_events,
)
from .code import (
    SCAN_CEILING,
    CodeParams,
    CodeStats,
    bucket_counts,
    choose_params,
    codeword_values,
    enumerate_code,
    is_codeword,
    matches_value,
    params_from_bucket,
    params_of,
    redundancy,
)
from .decoder import (
    DecodeResult,
    ListBoundError,
    all_witnesses,
    canonical_witness,
    list_decode,
    list_decode_brute,
)
from .scenarios import SCENARIOS, Scenario, ScenarioCheck, replay
from .syndromes import (
    SuffixDiff,
    SyndromeVector,
    sign_segments_ok,
    suffix_diff,
    syndrome_vector,
    vt_syndrome,
    vt_syndrome_from_suffix_sums,
    weight,
    wt_f1_f2,
)
from .verifier import (
    VERIFY_CEILING,
    Collision,
    CollisionOrderingResult,
    RedundancyRow,
    SignSplitResult,
    VerifyReport,
    classify_case,
    full_report,
    predicted_suffix_profile,
    redundancy_table,
    smoke_report,
    verify_collision_ordering,
    verify_list_size,
    verify_sign_split,
    verify_single_deletion,
    verify_weight_deltas,
    witness_pair_cases,
)
from .words import Word, delete_bit, flip_bit, get_bit, insert_bit

__version__ = "0.1.0"
