"""Strong multimedia IPP codes: construction, brute-force verification and tracing."""

from .code import (
    Code, CodeError, Pattern, coordinate_set, desc, hamming_distance, parse, parse_pattern,
    pattern_members, serialize, serialize_pattern, shortened,
)
from .construct import (
    INF, CdmMatrix, ConstructionSpec, Family, ScreenResult, UncoveredAlphabetError,
    build_cdm_d1, build_infinity_code, build_mod6_code, check_condisesc_screen,
    check_equi8_screen, check_infinity_conditions, check_mod6_conditions, compose_to_binary,
    construct_optimal, is_cdm, select_parameters,
)
from .trace import (
    DetectionStatistics, EmptyIntersectionError, NoParentSetError, TraceError, TraceResult,
    simulate_attack, trace_mippc, trace_qary, trace_ssc,
)
from .verify import (
    EnumerationCapExceeded, PairType, PropertyVerdict, check_pairwise_shortened,
    classify_pair_configuration, has_forbidden_type_iv, is_mippc, is_separable, is_smippc,
    max_code_size_bound, parent_sets,
)

__version__ = "0.1.0"
