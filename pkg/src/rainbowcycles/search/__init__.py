from .engine import Budget, SearchOutcome, SearchStats, Verdict, exists_coloring, pick_edge, propagate, verify_witness
from .index import ConstraintIndex, cycle_count

__all__ = [
    "Budget", "SearchOutcome", "SearchStats", "Verdict", "exists_coloring", "pick_edge", "propagate",
    "verify_witness", "ConstraintIndex", "cycle_count",
]
