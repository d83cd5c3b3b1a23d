# Copyright (c) 2025, Gavin D'souza and Contributors
# See license.txt

from enum import IntEnum

# exit codes
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DIVERGENT = 2
EXIT_VERIFICATION_FAILED = 3

# slot labels, 1-based as written in formulas
SL4_SLOT_NAMES = ("s1", "s2", "s3", "s4", "s5", "s6")
ZETA3_SLOT_NAMES = ("s1", "s2", "s3", "s4", "s5", "s6", "s7")

# numeric evaluation
MIN_WORKING_DPS = 30
DEFAULT_WORKING_DPS = 40
DEFAULT_MAX_SERIES_TERMS = 4096
MAX_PRECISION_RETRIES = 3
DEFAULT_TARGET_ERROR = 1e-12

# lattice oracles
DEFAULT_ORACLE_CUTOFF = 256
DEFAULT_ORACLE_LEVELS = 3
ORACLE_TOLERANCE = 1e-3

# cli
DEFAULT_PRINT_DIGITS = 15
DEFAULT_VERIFY_TOLERANCE = 1e-8
DEFAULT_ORACLE_SAMPLES = 200
DEFAULT_ORACLE_SEED = 7
TABLE_GROUPING_TOLERANCE = 1e-9
MAX_RANDOM_WEIGHT = 8


class NumericMethod(IntEnum):
    EXACT = 0
    ACCELERATED_SERIES = 1
    TRUNCATED_SUM = 2

    @property
    def label(self) -> str:
        return {
            NumericMethod.EXACT: "exact",
            NumericMethod.ACCELERATED_SERIES: "accelerated-series",
            NumericMethod.TRUNCATED_SUM: "truncated-sum+extrapolation",
        }[self]
