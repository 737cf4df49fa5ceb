"""Exact integer forms of the field widths and label-size bounds.

Everything here is computed with integer arithmetic so that the bounds
can be asserted without floating-point slack.
"""

from __future__ import annotations


def ceil_log2(n: int) -> int:
    """Smallest ``w`` with ``2**w >= n`` (``n >= 1``)."""
    if n < 1:
        raise ValueError(f"ceil_log2 needs n >= 1, got {n}")
    return (n - 1).bit_length()


def floor_log2(n: int) -> int:
    if n < 1:
        raise ValueError(f"floor_log2 needs n >= 1, got {n}")
    return n.bit_length() - 1


def ceil_log_three_halves(n: int) -> int:
    """Smallest ``d >= 0`` with ``(3/2)**d >= n``."""
    if n < 1:
        raise ValueError(f"ceil_log_three_halves needs n >= 1, got {n}")
    d = 0
    while 3**d < n * 2**d:
        d += 1
    return d


def index_width(n: int) -> int:
    # 1-based indices and distances are both < n; a zero-width field is
    # replaced by a single bit so n == 1 still has a well-formed layout
    return max(1, ceil_log2(n))


def count_width(n: int) -> int:
    """Width of a field holding a count in ``0..n``."""
    return ceil_log2(n + 1)


def gamma_length(value: int) -> int:
    return 2 * floor_log2(value) + 1


def trit_width(m: int) -> int:
    """``ceil(m * log2(3))``, the width of ``m`` packed trits."""
    if m < 0:
        raise ValueError(f"negative trit count {m}")
    return (3**m - 1).bit_length() if m else 0


def dv_label_bound(n: int) -> int:
    return 4 * n + 3 * ceil_log2(n + 1) + 3


HDV_LOG_SQUARED_CONSTANT = 8


def hdv_label_bound(n: int) -> int:
    return trit_width(n) + HDV_LOG_SQUARED_CONSTANT * ceil_log2(n + 1) ** 2


def separator_depth_bound(n: int) -> int:
    """Bag-tree depth (in nodes) reachable when every part shrinks to 2/3."""
    return ceil_log_three_halves(n) + 1


def sep_tree_label_bound(n: int) -> int:
    """Label bound for trees, where every separator is a single vertex."""
    return 2 * separator_depth_bound(n) * ceil_log2(n) + 3 * ceil_log2(n + 1) + 3


def blue_ancestor_bound(n: int) -> int:
    return floor_log2(n) + 1


BOUND_FORMULAS = {
    "dv": "4n + 3*ceil(log2(n+1)) + 3",
    "hdv": f"ceil(n*log2(3)) + {HDV_LOG_SQUARED_CONSTANT}*ceil(log2(n+1))^2",
    "sep": "2*(ceil(log_1.5(n))+1)*ceil(log2(n)) + 3*ceil(log2(n+1)) + 3",
}


def label_bound(scheme: str, n: int) -> int:
    if scheme == "dv":
        return dv_label_bound(n)
    if scheme == "hdv":
        return hdv_label_bound(n)
    if scheme == "sep":
        return sep_tree_label_bound(n)
    raise ValueError(f"unknown scheme {scheme!r}")
