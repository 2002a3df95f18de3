"""Distance domination certificates and a priori bounds.

A set D is a distance-k dominating set when every vertex lies in the union
of the 0-th through k-th out-neighborhoods of D.  ``verify`` is the referee
for every construction and oracle answer in this package: it recomputes the
ball by plain set expansion and reports the uncovered vertices, so a valid
certificate can always be rechecked independently of how the set was found.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import DEBRUIJN, KAUTZ, GeneralizedDigraph, VertexSet, ball
from .modular import ModInterval, ceil_div, geometric_sum, run_from_mask


@dataclass(frozen=True)
class DominationCertificate:
    """Outcome of checking one candidate set at one radius."""

    graph: GeneralizedDigraph
    dset: VertexSet
    k: int
    valid: bool
    uncovered: VertexSet

    def to_dict(self) -> dict:
        return {
            "family": self.graph.family,
            "n": self.graph.n,
            "d": self.graph.d,
            "k": self.k,
            "set": self.dset.members(),
            "valid": self.valid,
            "uncovered": self.uncovered.members(),
        }


@dataclass(frozen=True)
class Bounds:
    """A priori bounds on the distance-k domination number.

    ``lower`` is ceil(n / geometric_sum(d, k)); the upper bounds are the
    family's constructive ones, with the inapplicable family's field None.
    """

    lower: int
    upper_naive: int
    upper_debruijn: int | None
    upper_kautz: int | None


def verify(g: GeneralizedDigraph, dset: VertexSet,
           k: int) -> DominationCertificate:
    """Check whether ``dset`` distance-k dominates ``g``.

    Always returns a certificate; an invalid one carries the exact uncovered
    set so a failure is reproducible.
    """
    if dset.n != g.n:
        raise ValueError(f"ground set mismatch: {dset.n} != {g.n}")
    if k < 0:
        raise ValueError(f"radius must be >= 0, got {k}")
    covered = ball(g, dset, k).covered
    uncovered = covered.complement()
    return DominationCertificate(
        graph=g, dset=dset, k=k, valid=uncovered.is_empty(),
        uncovered=uncovered)


def bounds(g: GeneralizedDigraph, k: int) -> Bounds:
    """Lower and constructive upper bounds for the radius-k problem, k >= 1.

    A radius-k ball has at most geometric_sum(d, k) vertices, giving the
    lower bound.  On the de Bruijn side some run of lower+1 consecutive
    vertices always dominates; on the Kautz side the prefix run of length
    ceil(n / (d**k + d**(k-1))) always dominates.
    """
    if k < 1:
        raise ValueError(f"radius must be >= 1, got {k}")
    n, d = g.n, g.d
    lower = ceil_div(n, geometric_sum(d, k))
    upper_naive = ceil_div(n, d ** k)
    upper_debruijn = lower + 1 if g.family == DEBRUIJN else None
    upper_kautz = (ceil_div(n, d ** k + d ** (k - 1))
                   if g.family == KAUTZ else None)
    return Bounds(lower=lower, upper_naive=upper_naive,
                  upper_debruijn=upper_debruijn, upper_kautz=upper_kautz)


def is_consecutive_set(dset: VertexSet) -> ModInterval | None:
    """The run a vertex set forms mod n, or None when it is not one run."""
    return run_from_mask(dset.mask, dset.n)
