"""Deterministic instance generators: structured families and random graphs.

Random graphs use SplitMix64, a small well-known 64-bit generator, rather
than anything platform- or version-dependent: given the same seed the edge
set is byte-identical everywhere.  For erdos_renyi(n, p, seed), the C(n, 2)
candidate pairs are visited in lexicographic order (0,1), (0,2), ...,
(n-2, n-1); pair number t is an edge iff the t-th SplitMix64 output is below
floor(p * 2**64).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import Graph

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "star",
    "complete_bipartite",
    "erdos_renyi",
    "gap_witness",
)

_MASK64 = (1 << 64) - 1


def splitmix64(seed: int) -> Iterator[int]:
    """Infinite stream of SplitMix64 outputs for a 64-bit seed."""
    state = seed & _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


@dataclass(frozen=True)
class FamilySpec:
    """Parameters naming one generated instance.

    Which fields matter depends on family: path/cycle/complete/star take n
    (total vertex count; star(n) is a center plus n-1 leaves),
    complete_bipartite takes a and b, erdos_renyi takes n, p and seed,
    gap_witness takes k and yields the star with 3k leaves whose center has
    the strictly largest closed neighborhood.
    """

    family: str
    n: int | None = None
    a: int | None = None
    b: int | None = None
    p: float | None = None
    seed: int | None = None
    k: int | None = None

    def instance_id(self) -> str:
        """Canonical id string, stable across runs."""
        if self.family == "complete_bipartite":
            return f"complete_bipartite(a={self.a},b={self.b})"
        if self.family == "erdos_renyi":
            return f"erdos_renyi(n={self.n},p={self.p!r},seed={self.seed})"
        if self.family == "gap_witness":
            return f"gap_witness(k={self.k})"
        return f"{self.family}(n={self.n})"


def generate(spec: FamilySpec) -> Graph:
    """Build the graph named by spec; same spec, same graph, bytes included."""
    fam = spec.family
    if fam == "path":
        n = _require_n(spec, minimum=1)
        return Graph(n, [(i, i + 1) for i in range(n - 1)])
    if fam == "cycle":
        n = _require_n(spec, minimum=3)
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])
    if fam == "complete":
        n = _require_n(spec, minimum=1)
        return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if fam == "star":
        n = _require_n(spec, minimum=2)
        return Graph(n, [(0, i) for i in range(1, n)])
    if fam == "complete_bipartite":
        if spec.a is None or spec.b is None or spec.a < 1 or spec.b < 1:
            raise ValueError(f"complete_bipartite needs a >= 1 and b >= 1, got {spec}")
        a, b = spec.a, spec.b
        return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if fam == "erdos_renyi":
        n = _require_n(spec, minimum=1)
        if spec.p is None or not 0.0 <= spec.p <= 1.0:
            raise ValueError(f"erdos_renyi needs 0 <= p <= 1, got {spec.p}")
        if spec.seed is None:
            raise ValueError("erdos_renyi needs an explicit seed")
        threshold = int(spec.p * (1 << 64))
        stream = splitmix64(spec.seed)
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if next(stream) < threshold
        ]
        return Graph(n, edges)
    if fam == "gap_witness":
        if spec.k is None or spec.k < 1:
            raise ValueError(f"gap_witness needs k >= 1, got {spec.k}")
        leaves = 3 * spec.k
        return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
    raise ValueError(f"unknown family {fam!r}; known: {', '.join(FAMILIES)}")


def _require_n(spec: FamilySpec, minimum: int) -> int:
    if spec.n is None or spec.n < minimum:
        raise ValueError(f"{spec.family} needs n >= {minimum}, got {spec.n}")
    return spec.n
