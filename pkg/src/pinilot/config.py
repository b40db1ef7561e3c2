"""Engine-wide bounds.

``max_order`` caps every group closure.  The default can be overridden with
the ``PINILOT_MAX_ORDER`` environment variable; explicit arguments override
both.  The hard ceiling is ``HARD_MAX_ORDER``.
"""
import os

DEFAULT_MAX_ORDER = 300
HARD_MAX_ORDER = 512
DEFAULT_LATTICE_CAP = 100_000
ENV_MAX_ORDER = "PINILOT_MAX_ORDER"


def resolve_max_order(value=None):
    """Return the effective order bound for a closure."""
    if value is None:
        raw = os.environ.get(ENV_MAX_ORDER)
        value = int(raw) if raw else DEFAULT_MAX_ORDER
    value = int(value)
    if value < 1 or value > HARD_MAX_ORDER:
        raise ValueError(f"max_order must lie in [1, {HARD_MAX_ORDER}], got {value}")
    return value
