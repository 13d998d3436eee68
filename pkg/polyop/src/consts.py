"""Constants for the operad engine."""

import polyop

APP_NAME = polyop.__name__

AMBIENT_CAP_ENV_VAR = "POLYOP_AMBIENT_CAP"
DEFAULT_AMBIENT_CAP = 24

DECOMPOSE_BOUND_ENV_VAR = "POLYOP_DECOMPOSE_BOUND"
DEFAULT_DECOMPOSE_BOUND = 6

# largest n for which all complexes on [n] are materialized
ENUMERATION_BOUND = 5
# largest n for which all hypergraphs on [n] are materialized
FAMILY_ENUMERATION_BOUND = 3

RECOGNIZER_MAX_DIM = 2

DEFAULT_SAMPLE_COUNT = 200
DEFAULT_SEED = 0
# violations kept per law, the count itself is never truncated
MAX_RECORDED_VIOLATIONS = 10

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_RESOURCE_ERROR = 2
EXIT_LAW_VIOLATION = 3

EMPTY_FACE_TOKEN = "-"  # noqa: S105
EMPTY_DIMENSION_TOKEN = "-inf"  # noqa: S105
PAIR_SEPARATOR = "---"
PAIR_SHORTHAND_SEPARATOR = "//"
