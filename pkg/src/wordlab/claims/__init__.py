"""Registry of checkable statements about 0011 and 001011, each with a
checker, a frozen expected value and a provenance tag.

Importing this package registers every claim.
"""

from . import cat_factors, cat_lyndon, cat_palindromes, cat_repetitions, cat_search  # noqa: F401  (registration)
from .core import (
    REGISTRY,
    STATUSES,
    ClaimRecord,
    ClaimReport,
    all_tags,
    budget_scale,
    claim_ids,
    run_all,
    run_claim,
)
from .search import PREDICATES, SearchResult, bounded_search_max_length

__all__ = [
    "REGISTRY",
    "STATUSES",
    "ClaimRecord",
    "ClaimReport",
    "PREDICATES",
    "SearchResult",
    "all_tags",
    "bounded_search_max_length",
    "budget_scale",
    "claim_ids",
    "run_all",
    "run_claim",
]
