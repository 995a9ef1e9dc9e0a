"""Resource budgets.

Normal forms and dialectica carriers grow exponentially, so every
potentially explosive operation is guarded by a budget.  The environment
variable ``SANDCASTLE_BUDGET`` overrides the node and carrier budgets in
one go; individual call sites also accept explicit keyword overrides.
"""

import os

DEFAULT_NODE_BUDGET = 10**6
DEFAULT_CARRIER_BUDGET = 4096
DEFAULT_ENUM_BUDGET = 10**6
DEFAULT_BASE_CAP = 12

_ENV_VAR = "SANDCASTLE_BUDGET"


def _env_override() -> int | None:
    raw = os.environ.get(_ENV_VAR)
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{_ENV_VAR} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError(f"{_ENV_VAR} must be positive, got {value}")
    return value


def node_budget(explicit: int | None = None) -> int:
    """Tree-size budget for normalization."""
    if explicit is not None:
        return explicit
    return _env_override() or DEFAULT_NODE_BUDGET


def carrier_budget(explicit: int | None = None) -> int:
    """Per-carrier size budget for dialectica space constructions."""
    if explicit is not None:
        return explicit
    return _env_override() or DEFAULT_CARRIER_BUDGET


def enum_budget(explicit: int | None = None) -> int:
    """Budget on candidate (f, F) pairs in morphism enumeration."""
    if explicit is not None:
        return explicit
    return _env_override() or DEFAULT_ENUM_BUDGET
