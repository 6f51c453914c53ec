"""Local search for (weighted) vertex cover."""

from ._lsvc import (
    InputError,
    ModeError,
    PreconditionError,
    RefusalError,
    best_improvement,
    is_valid_swap,
    solve,
    widths,
)

ALGORITHMS = (
    "auto",
    "oracle",
    "degree",
    "hindex",
    "treewidth",
    "modular",
    "modular-degree",
    "split",
)

__all__ = [
    "ALGORITHMS",
    "InputError",
    "ModeError",
    "PreconditionError",
    "RefusalError",
    "best_improvement",
    "is_valid_swap",
    "solve",
    "widths",
]
