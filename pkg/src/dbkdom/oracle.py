"""Exact brute-force oracle for distance domination numbers.

The oracle enumerates nothing it does not have to: it builds the radius-k
coverage mask of every vertex once, then runs an exhaustive branch and bound
search for a dominating set of a given size.  Search answers are three
valued: found (with a witness), absent (the whole tree was exhausted), or
inconclusive (a configured node budget ran out first).  Absent is a proof;
inconclusive never is.

The search kernel is compiled when the extension module built, with a pure
Python fallback selected at import time.  Setting the environment variable
DBKDOM_PURE to a nonempty value forces the fallback.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from . import _cover_py
from .digraph import DEBRUIJN, GeneralizedDigraph, VertexSet
from .domination import bounds, verify

if os.environ.get("DBKDOM_PURE"):
    _kernel = _cover_py
else:
    try:
        from . import _cover_ext as _kernel  # type: ignore[no-redef]
    except ImportError:
        _kernel = _cover_py

FOUND = "found"
ABSENT = "absent"
INCONCLUSIVE = "inconclusive"

_STATUS = {
    _cover_py.FOUND: FOUND,
    _cover_py.ABSENT: ABSENT,
    _cover_py.INCONCLUSIVE: INCONCLUSIVE,
}

DEFAULT_TABLE_CEILING = 5000


def kernel_backend() -> str:
    """Name of the selected search kernel: 'compiled' or 'pure'."""
    return _kernel.BACKEND


@dataclass(frozen=True)
class OracleLimits:
    """Resource limits for oracle use inside classification and sweeps.

    max_nodes is the search node budget (None for unlimited, 0 to skip the
    oracle entirely); max_n is the largest instance the oracle is willing to
    tabulate during classification.
    """

    max_nodes: int | None = None
    max_n: int = 500

    def allows(self, n: int) -> bool:
        if self.max_nodes is not None and self.max_nodes <= 0:
            return False
        return n <= self.max_n


DEFAULT_LIMITS = OracleLimits()


@dataclass(frozen=True)
class CoverageTable:
    """Radius-k coverage masks for every vertex of one digraph."""

    graph: GeneralizedDigraph
    k: int
    kernel: object

    def ball_set(self, v: int) -> VertexSet:
        return VertexSet(self.graph.n, self.kernel.ball_mask(v))

    def ball_size(self, v: int) -> int:
        return self.kernel.ball_mask(v).bit_count()

    @property
    def max_ball(self) -> int:
        return self.kernel.max_ball


@dataclass(frozen=True)
class SearchResult:
    """Outcome of one fixed-size search."""

    status: str
    witness: VertexSet | None
    nodes: int

    def found(self) -> bool:
        return self.status == FOUND


@dataclass(frozen=True)
class MinDominationResult:
    """Outcome of a minimum search: exact value or an inconclusive abort."""

    status: str  # 'found' or 'inconclusive'
    gamma: int | None
    witness: VertexSet | None
    nodes: int


def coverage_table(g: GeneralizedDigraph, k: int, *,
                   ceiling: int = DEFAULT_TABLE_CEILING) -> CoverageTable:
    """Tabulate radius-k coverage for every vertex; refuses n > ceiling."""
    if k < 0:
        raise ValueError(f"radius must be >= 0, got {k}")
    if g.n > ceiling:
        raise ValueError(
            f"order {g.n} exceeds the oracle table ceiling {ceiling}")
    code = _kernel.DEBRUIJN if g.family == DEBRUIJN else _kernel.KAUTZ
    return CoverageTable(graph=g, k=k,
                         kernel=_kernel.KernelTable(code, g.n, g.d, k))


def exists_dominating_of_size(g: GeneralizedDigraph, k: int, size: int, *,
                              table: CoverageTable | None = None,
                              max_nodes: int | None = None,
                              ceiling: int = DEFAULT_TABLE_CEILING,
                              ) -> SearchResult:
    """Exhaustively decide whether some size-``size`` set k-dominates ``g``.

    The witness, when one exists within budget, is the first cover found by
    the kernel's fixed branching order, so repeated runs return the same
    set.  Every witness is re-verified before being returned.
    """
    if table is None:
        table = coverage_table(g, k, ceiling=ceiling)
    elif table.graph != g or table.k != k:
        raise ValueError("coverage table belongs to a different instance")
    status_code, members, nodes = table.kernel.search(size, max_nodes)
    status = _STATUS[status_code]
    witness = None
    if status == FOUND:
        witness = VertexSet.from_members(g.n, members)
        cert = verify(g, witness, k)
        if not cert.valid:
            raise RuntimeError(
                "kernel returned a non-dominating witness; kernels are "
                f"inconsistent with verification ({g}, k={k}, {members})")
    return SearchResult(status=status, witness=witness, nodes=nodes)


def min_dominating(g: GeneralizedDigraph, k: int, *,
                   table: CoverageTable | None = None,
                   max_nodes: int | None = None,
                   ceiling: int = DEFAULT_TABLE_CEILING,
                   ) -> MinDominationResult:
    """Exact minimum by searching sizes upward from the a priori lower bound.

    Stops at the first size that admits a dominating set.  An inconclusive
    size aborts the whole computation as inconclusive: skipping it could
    misreport the minimum.
    """
    if k < 1:
        raise ValueError(f"radius must be >= 1, got {k}")
    if table is None:
        table = coverage_table(g, k, ceiling=ceiling)
    size = bounds(g, k).lower
    total_nodes = 0
    while size <= g.n:
        result = exists_dominating_of_size(
            g, k, size, table=table, max_nodes=max_nodes)
        total_nodes += result.nodes
        if result.status == INCONCLUSIVE:
            return MinDominationResult(status=INCONCLUSIVE, gamma=None,
                                       witness=None, nodes=total_nodes)
        if result.status == FOUND:
            assert result.witness is not None
            return MinDominationResult(status=FOUND, gamma=size,
                                       witness=result.witness,
                                       nodes=total_nodes)
        size += 1
    raise RuntimeError(
        f"no dominating set of any size up to n for {g}; unreachable")
