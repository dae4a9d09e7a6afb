from .criteria import (
    DEGREE_MISMATCH, INAPPLICABLE, NONMONIC, NONZERO_OK, STATUSES, ZERO_OBSTRUCTION,
    CriterionError, CriterionResult, ManifoldInput, check_epi, expected_degree, norm_estimate,
)
from .search import BudgetExceeded, ConsistentUpTo, ObstructionFound, escalate, search_obstruction, sweep
