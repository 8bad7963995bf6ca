import os

# Double description is exponential in the ambient dimension
MAX_DIM=int(os.environ.get("POLYNORM_MAX_DIM", 8))
SWEEP_MAX_DIM=3
# Limits on what a single power in parsed text may expand to
MAX_DEGREE_SPAN=1024
MAX_EXPANDED_TERMS=20000
MAX_COEFFICIENT_BITS=65536

FORMAT_VERSION="polynorm/1"
INDETERMINATE_LABEL="indeterminate"
WHOLE_SPACE_MESSAGE="norm identically zero; unit ball is the whole dual space"

EXIT_OK=0
EXIT_GENERIC=1
EXIT_USAGE=2
EXIT_ZERO_POLYNOMIAL=3
EXIT_WHOLE_SPACE=4
EXIT_INTERNAL=5
