"""Enumeration bounds.

Every exhaustive enumeration in the library is guarded by a size bound so a
typo'd CLI argument cannot wedge the process.  The environment variable
PATTERNA_MAX_N, when set to an integer, overrides all per-operation defaults.
"""

import os

ENV_VAR = "PATTERNA_MAX_N"

# Per-operation defaults, overridable via PATTERNA_MAX_N.
BRUTE_FORCE_N = 16
IP_FAMILY_N = 16
CLIQUE_VERTICES = 12
SUBSET_PATTERN_N = 4  # Cooper / PMchar live on 2**n indices
MEMBERSHIP_N = 8
TREE_NODES = 4096
DOUBLING_VERTICES = 10


def enumeration_bound(default: int) -> int:
    """Return the effective bound: PATTERNA_MAX_N if set and parseable, else default."""
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        return default
