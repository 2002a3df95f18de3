"""Implicit generalized de Bruijn and Kautz digraphs.

Vertices are the residues 0..n-1 and arcs are given by a congruence in the
vertex index, so neighborhoods are computed on demand and nothing is stored:

* de Bruijn family: x -> (d*x + i) mod n for i = 0..d-1
* Kautz family:     x -> (-d*x - i) mod n for i = 1..d

Both families require d >= 2 and n >= d.  The out-neighborhood of a single
vertex is always a run of d consecutive residues, and the image of a run is
again a run, which is what makes closed-form neighborhood iteration possible.
The interval route (ModInterval arithmetic) and the set route (explicit
member expansion) are implemented separately on purpose; tests adjudicate
that they agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .modular import ModInterval, mod_interval, run_mask

DEBRUIJN = "debruijn"
KAUTZ = "kautz"
FAMILIES = (DEBRUIJN, KAUTZ)

EXPORT_GUARD = 10 ** 7  # refuse to materialize more than this many arcs


@dataclass(frozen=True)
class GeneralizedDigraph:
    """A generalized de Bruijn or Kautz digraph, identified by (family, n, d)."""

    family: str
    n: int
    d: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.d < 2:
            raise ValueError(f"degree must be >= 2, got {self.d}")
        if self.n < self.d:
            raise ValueError(
                f"order must be >= degree, got n={self.n} < d={self.d}")

    @classmethod
    def debruijn(cls, n: int, d: int) -> "GeneralizedDigraph":
        return cls(DEBRUIJN, n, d)

    @classmethod
    def kautz(cls, n: int, d: int) -> "GeneralizedDigraph":
        return cls(KAUTZ, n, d)

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range [0, {self.n})")


@dataclass(frozen=True)
class VertexSet:
    """An immutable vertex subset stored as a dense membership bitmask."""

    n: int
    mask: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"ground set size must be >= 1, got {self.n}")
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError("mask has bits outside [0, n)")

    @classmethod
    def from_members(cls, n: int, members) -> "VertexSet":
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range [0, {n})")
            mask |= 1 << v
        return cls(n, mask)

    @classmethod
    def from_interval(cls, interval: ModInterval) -> "VertexSet":
        return cls(interval.modulus, interval.mask())

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and (self.mask >> v) & 1 == 1

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self):
        mask = self.mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __or__(self, other: "VertexSet") -> "VertexSet":
        if self.n != other.n:
            raise ValueError("ground set mismatch")
        return VertexSet(self.n, self.mask | other.mask)

    def members(self) -> list[int]:
        """Members in ascending order."""
        return list(self)

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, self.mask ^ ((1 << self.n) - 1))

    def is_full(self) -> bool:
        return self.mask == (1 << self.n) - 1

    def is_empty(self) -> bool:
        return self.mask == 0


@dataclass(frozen=True)
class Ball:
    """Everything reachable from ``center`` by directed walks of length <= radius."""

    center: VertexSet
    radius: int
    covered: VertexSet


def out_neighbors(g: GeneralizedDigraph, v: int) -> ModInterval:
    """Out-neighborhood of one vertex, always a run of min(n, d) residues."""
    g.check_vertex(v)
    n, d = g.n, g.d
    if g.family == DEBRUIJN:
        start = (d * v) % n
    else:
        start = (-d * v - d) % n
    return ModInterval(start, min(n, d), n)


def interval_out_neighborhood(g: GeneralizedDigraph,
                              dset: ModInterval) -> ModInterval:
    """Image of a non-empty run under one step, in closed form.

    de Bruijn images of consecutive vertices abut end to start, Kautz images
    abut in reverse, so the image of a run of length m is a run of length
    min(n, d*m):

    * de Bruijn: starts at d*a where a is the first member
    * Kautz:     starts at -d*b - d where b is the last member
    """
    if dset.modulus != g.n:
        raise ValueError(f"modulus mismatch: {dset.modulus} != {g.n}")
    if dset.is_empty():
        raise ValueError("image of an empty run is undefined here")
    n, d = g.n, g.d
    if g.family == DEBRUIJN:
        start = (d * dset.start) % n
    else:
        start = (-d * dset.end - d) % n
    return ModInterval(start, min(n, d * dset.length), n)


def ith_out_neighborhood_interval(g: GeneralizedDigraph, dset: ModInterval,
                                  i: int) -> ModInterval:
    """i-fold closed-form image of a run; i = 0 returns the run itself."""
    if i < 0:
        raise ValueError(f"step count must be >= 0, got {i}")
    current = dset
    for _ in range(i):
        current = interval_out_neighborhood(g, current)
        if current.is_full():
            break  # full set is a fixed point of the image
    return current


def set_out_neighborhood(g: GeneralizedDigraph, s: VertexSet) -> VertexSet:
    """Image of an arbitrary vertex set: the union of members' out-runs.

    This is the reference expansion route.  It never consults the interval
    arithmetic above, so the two can be checked against each other.
    """
    if s.n != g.n:
        raise ValueError(f"ground set mismatch: {s.n} != {g.n}")
    n, d = g.n, g.d
    debruijn = g.family == DEBRUIJN
    width = min(n, d)
    mask = 0
    rest = s.mask
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        start = (d * v) % n if debruijn else (-d * v - d) % n
        mask |= run_mask(start, width, n)
        rest ^= low
    return VertexSet(g.n, mask)


def ball(g: GeneralizedDigraph, s: VertexSet, k: int) -> Ball:
    """Union of the 0-th through k-th out-neighborhoods of ``s``."""
    if k < 0:
        raise ValueError(f"radius must be >= 0, got {k}")
    if s.n != g.n:
        raise ValueError(f"ground set mismatch: {s.n} != {g.n}")
    full = (1 << g.n) - 1
    covered = s
    frontier = s
    for _ in range(k):
        if covered.mask == full:
            break
        frontier = set_out_neighborhood(g, frontier)
        covered = covered | frontier
    return Ball(center=s, radius=k, covered=covered)


def export_graph(g: GeneralizedDigraph, fmt: str = "edges") -> str:
    """Arc list of the digraph as 'edges' (tab separated) or 'dot' text.

    Arcs are emitted for v = 0..n-1 with the slot index ascending; self loops
    are kept and coincident targets are emitted once.  Refuses graphs with
    more than EXPORT_GUARD arcs.
    """
    if fmt not in ("edges", "dot"):
        raise ValueError(f"unknown export format {fmt!r}")
    if g.n * g.d > EXPORT_GUARD:
        raise ValueError(
            f"refusing to export {g.n * g.d} arcs (guard {EXPORT_GUARD})")
    lines = []
    if fmt == "edges":
        lines.append(f"# {g.family} {g.n} {g.d}")
    else:
        lines.append(f"digraph {g.family}_{g.n}_{g.d} {{")
    for v in range(g.n):
        seen = set()
        for i in range(g.d):
            if g.family == DEBRUIJN:
                y = (g.d * v + i) % g.n
            else:
                y = (-g.d * v - (i + 1)) % g.n
            if y in seen:
                continue
            seen.add(y)
            if fmt == "edges":
                lines.append(f"{v}\t{y}")
            else:
                lines.append(f"  {v} -> {y};")
    if fmt == "dot":
        lines.append("}")
    return "\n".join(lines) + "\n"
