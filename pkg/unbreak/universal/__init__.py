from .universal_set import (
    UniversalFamily,
    VerificationResult,
    build_universal_set,
    cached_universal_set,
    verify_universal_set,
    constraint_count,
    random_draw_count,
)
from .readwrite import read_universal_set, write_universal_set, format_universal_set
