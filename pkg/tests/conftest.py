"""Shared naive reference implementations.

Everything here is written directly from the arc definitions with plain
loops and sets, independently of the package's interval arithmetic and
bitset kernels, so tests can compare optimized code against an artifact
that is obviously correct.
"""

from __future__ import annotations

import itertools


def naive_out_neighbors(family: str, n: int, d: int, v: int) -> set[int]:
    if family == "debruijn":
        return {(d * v + i) % n for i in range(d)}
    if family == "kautz":
        return {(-d * v - i) % n for i in range(1, d + 1)}
    raise ValueError(family)


def naive_image(family: str, n: int, d: int, s: set[int]) -> set[int]:
    out: set[int] = set()
    for v in s:
        out |= naive_out_neighbors(family, n, d, v)
    return out


def naive_ball(family: str, n: int, d: int, s: set[int], k: int) -> set[int]:
    covered = set(s)
    frontier = set(s)
    for _ in range(k):
        frontier = naive_image(family, n, d, frontier)
        covered |= frontier
    return covered


def naive_is_dominating(family: str, n: int, d: int,
                        members, k: int) -> bool:
    return len(naive_ball(family, n, d, set(members), k)) == n


def naive_gamma(family: str, n: int, d: int, k: int) -> int:
    """Minimum size by raw subset enumeration; only sane for tiny n."""
    for size in range(1, n + 1):
        for combo in itertools.combinations(range(n), size):
            if naive_is_dominating(family, n, d, combo, k):
                return size
    raise AssertionError("unreachable: the full vertex set dominates")


def case_split_interval(i: int, j: int, n: int) -> set[int]:
    """The two-branch textbook definition of a wrapping residue run."""
    i %= n
    j %= n
    if i <= j:
        return set(range(i, j + 1))
    return set(range(i, n)) | set(range(0, j + 1))
