"""Exact partition counts through nuclear partitions (partitions with no part 1).

Big values come back as Python ints. Partitions are tuples of weakly
decreasing positive parts.
"""

from ._nucleus import (
    CacheError,
    PartitionStream,
    bounded_sum,
    check_congruence,
    check_custom,
    decay_capacity,
    decay_chain,
    decay_step,
    fuse,
    gamma,
    hr_gamma,
    hr_nu,
    hr_p,
    is_ground_state,
    is_nuclear,
    k_nuclear,
    nu,
    nu_bounded,
    nu_k,
    p,
    p_mod_m,
    parity_via_gamma,
    partitions,
    run_cli,
    table,
    theorem1,
    verify,
)

__version__ = "0.1.0"


def nuclear_partitions(n, max_part=None):
    """Partitions of n with every part at least 2 (and at most max_part)."""
    return partitions(n, min_part=2, max_part=max_part)


__all__ = [name for name in dir() if not name.startswith("_")]
