"""Resource budgets, overridable through the environment.

Budgets keep runaway inputs from eating the machine.  Each one can be set
per-call (functions take keyword arguments), via the CLI, or globally with
environment variables:

    SKEINKIT_MAX_WIDTH      max open strand-ends during a sweep   (default 40)
    SKEINKIT_MAX_CROSSINGS  max crossings for brute-force sums    (default 20)
    SKEINKIT_MAX_NETWORK    max summands in a network expansion   (default 2_000_000)
    SKEINKIT_TIME_LIMIT     soft wall-clock limit in seconds for
                            multi-color stabilization scans       (default none)
"""

import os

_DEFAULTS = {
    "max_width": 40,
    "max_crossings": 20,
    "max_network": 2_000_000,
    "time_limit": None,
}

_ENV = {
    "max_width": "SKEINKIT_MAX_WIDTH",
    "max_crossings": "SKEINKIT_MAX_CROSSINGS",
    "max_network": "SKEINKIT_MAX_NETWORK",
    "time_limit": "SKEINKIT_TIME_LIMIT",
}


def get(name, override=None):
    """Resolve a budget: explicit override, else env var, else default."""
    if override is not None:
        return override
    raw = os.environ.get(_ENV[name])
    if raw is None or raw == "":
        return _DEFAULTS[name]
    if name == "time_limit":
        return float(raw)
    return int(raw)
