"""Work budget shared by the exhaustive solver and the enumeration oracle.

Exhaustive routines refuse to start when the number of candidates they would
visit exceeds the budget, unless the caller forces them.  The default can be
overridden globally through the ``FLEXQ_BUDGET`` environment variable.
"""

from __future__ import annotations

import os

DEFAULT_BUDGET = 10_000_000
ENV_VAR = "FLEXQ_BUDGET"


def resolve_budget(budget: int | None = None) -> int:
    """Pick the effective budget: explicit argument, then environment, then default."""
    if budget is not None:
        return int(budget)
    raw = os.environ.get(ENV_VAR)
    if raw is not None:
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    return DEFAULT_BUDGET
