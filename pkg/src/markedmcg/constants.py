"""Shared defaults for presentation building, verification suites and the CLI."""

# Reproducibility
DEFAULT_RNG_SEED = 42
DEFAULT_SAMPLE_COUNT = 100
SAMPLE_COORDINATE_MIN = -20
SAMPLE_COORDINATE_MAX = 20

# Finite-quotient verification
DEFAULT_COSET_LIMIT = 10_000

# Exploration depths
DEFAULT_FLIP_DEPTH = 6
DEFAULT_ANNULUS_ORBIT_DEPTH = 8
DEFAULT_MUTATION_DEPTH = 4
DEFAULT_TWIST_POWERS = 20

# Realization equality is decided on tropical sample vectors
REALIZATION_SAMPLE_COUNT = 8
REALIZATION_SAMPLE_BOUND = 9

# Tagged group law tests
DEFAULT_TRIPLE_COUNT = 1000
RANDOM_WORD_MAX_LENGTH = 6

# Suite defaults
DEFAULT_BRAID_MAX_N = 7
DEFAULT_PUREBRAID_MAX_N = 6
DEFAULT_SPHERE_MAX_N = 8
DEFAULT_GENUS0_MAX_PUNCTURES = 4
GENUS0_BRAID_SAMPLE_COUNT = 20
GENUS0_BOUNDARY_GRID = ([], [1], [2], [1, 1], [2, 2], [1, 2], [3])
GENUS1_GENERA = (1, 2, 3)
GENUS1_MAX_PUNCTURES = 3
GENUS1_MAX_BOUNDARIES = 2
GENUS1_MAX_MARKS = 3
ANNULUS_GRID = ((1, 1), (1, 2), (2, 2), (2, 3))
ANNULUS_TWIST_MAX_M = 4

# Threading
DEFAULT_WORKER_COUNT = 4

# Symbols
INVERSE_MARK = "'"
BOUNDARY_SEGMENT_PREFIX = "~"

# Report formats
REPORT_LINE_FORMAT = "{status} {suite} {detail}"
PASS_STATUS = "PASS"
FAIL_STATUS = "FAIL"
SUITE_ALL = "all"
