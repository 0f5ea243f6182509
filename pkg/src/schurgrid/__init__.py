"""Rainbow numbers of x1 + x2 = x3 on integer grids and intervals."""

from .certificates import ENGINE_VERSION, INTERVAL_ENGINE_VERSION, Certificate
from .coloring import (
    Coloring,
    SSequence,
    canonicalize,
    is_exact,
    is_rainbow,
    merge_colors,
    rgs_relabel,
    s_sequence,
    s_sequence_of,
)
from .constructions import (
    closed_form_rb_grid,
    closed_form_rb_interval,
    lower_bound_coloring,
    two_adic_valuation,
    valuation_coloring,
)
from .grid import (
    CoverVerdict,
    GridDims,
    GridPoint,
    Jump,
    SolutionTriple,
    covered_diagonals,
    detect_jump,
    diagonal_cells,
    diagonal_index,
    enumerate_solutions,
    jump_cover,
    jump_window,
    landing_diff,
    landing_sum,
)
from .search import (
    BudgetExceeded,
    RbResult,
    SearchBudget,
    enumerate_rainbow_free,
    exists_rainbow_free,
    naive_oracle,
    rb_search,
    rb_search_interval,
)
from .solutions import (
    GridSolutionIndex,
    IntervalSolutionIndex,
    find_rainbow_solution,
    grid_index,
    interval_index,
    is_rainbow_free,
    solution_index,
)

__version__ = "0.1.0"

__all__ = [
    "ENGINE_VERSION",
    "INTERVAL_ENGINE_VERSION",
    "Certificate",
    "Coloring",
    "SSequence",
    "canonicalize",
    "is_exact",
    "is_rainbow",
    "merge_colors",
    "rgs_relabel",
    "s_sequence",
    "s_sequence_of",
    "closed_form_rb_grid",
    "closed_form_rb_interval",
    "lower_bound_coloring",
    "two_adic_valuation",
    "valuation_coloring",
    "CoverVerdict",
    "GridDims",
    "GridPoint",
    "Jump",
    "SolutionTriple",
    "covered_diagonals",
    "detect_jump",
    "diagonal_cells",
    "diagonal_index",
    "enumerate_solutions",
    "jump_cover",
    "jump_window",
    "landing_diff",
    "landing_sum",
    "BudgetExceeded",
    "RbResult",
    "SearchBudget",
    "enumerate_rainbow_free",
    "exists_rainbow_free",
    "naive_oracle",
    "rb_search",
    "rb_search_interval",
    "GridSolutionIndex",
    "IntervalSolutionIndex",
    "find_rainbow_solution",
    "grid_index",
    "interval_index",
    "is_rainbow_free",
    "solution_index",
]
