"""The graph on the ideal lattice whose arcs are omega-natural differences.

Vertices are all ideals of (P, omega) in (cardinality, mask) order; there
is an arc I -> J exactly when I is a proper subset of J and J \\ I is
omega-natural.  Arcs therefore always point from smaller ideal to larger,
the adjacency matrix is strictly upper triangular, and every directed path
from the empty set to P has at most |P| arcs.

Arc discovery walks submasks of each ideal rather than all ideal pairs:
the lattice can be exponential in |P| but each ideal only has its own
subsets as arc sources.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from posetpoly.matrices import RatMatrix
from posetpoly.polynomials import UniPoly
from posetpoly.posets import LabeledPoset, enumerate_ideals, iter_bits

__all__ = [
    "OmegaGraph",
    "PathCounts",
    "build_omega_graph",
    "count_paths",
    "multipath_matrix_route",
    "chain_polynomial",
    "to_dot",
]


@dataclass(frozen=True)
class OmegaGraph:
    labeled_poset: LabeledPoset
    ideals: tuple[int, ...]
    successors: tuple[tuple[int, ...], ...]

    @property
    def source(self) -> int:
        return 0

    @property
    def sink(self) -> int:
        return len(self.ideals) - 1

    def has_arc(self, i: int, j: int) -> bool:
        return j in self.successors[i]

    def arc_count(self) -> int:
        return sum(len(s) for s in self.successors)

    def adjacency(self) -> RatMatrix:
        return RatMatrix(
            len(self.ideals),
            [{j: Fraction(1) for j in succ} for succ in self.successors],
        )


def build_omega_graph(lp: LabeledPoset) -> OmegaGraph:
    ideals = enumerate_ideals(lp.poset)
    index = {mask: k for k, mask in enumerate(ideals)}
    successors: list[list[int]] = [[] for _ in ideals]
    for j, big in enumerate(ideals):
        if big == 0:
            continue
        sub = (big - 1) & big
        while True:
            i = index.get(sub)
            if i is not None and lp.is_omega_natural(big & ~sub):
                successors[i].append(j)
            if sub == 0:
                break
            sub = (sub - 1) & big
    return OmegaGraph(lp, tuple(ideals), tuple(tuple(sorted(s)) for s in successors))


@dataclass(frozen=True)
class PathCounts:
    """c[k] = number of source-to-sink paths with exactly k arcs."""

    c: tuple[int, ...]

    def multipath(self, n: int) -> int:
        """Multi-paths of length n: each of n steps may stand still."""
        return sum(comb(n, k) * ck for k, ck in enumerate(self.c))


def count_paths(graph: OmegaGraph) -> PathCounts:
    """Path counts by a (vertex, length) DP in lattice order."""
    size = graph.labeled_poset.size
    table: list[list[int]] = [[0] * (size + 1) for _ in graph.ideals]
    table[graph.source][0] = 1
    for v, row in enumerate(table):
        for length, ways in enumerate(row):
            if ways:
                for w in graph.successors[v]:
                    table[w][length + 1] += ways
    return PathCounts(tuple(table[graph.sink]))


def multipath_matrix_route(graph: OmegaGraph, n: int) -> Fraction:
    """The (source, sink) entry of (I + A)^n; must match PathCounts.multipath."""
    m = RatMatrix.identity(len(graph.ideals)) + graph.adjacency()
    return (m**n).entry(graph.source, graph.sink)


def chain_polynomial(graph: OmegaGraph) -> UniPoly:
    """Chain polynomial of the interior graph (source and sink removed).

    The coefficient of mu^j counts interior chains with j vertices that
    thread through the removed endpoints: the source must reach the first
    vertex by an arc and the last vertex must reach the sink.  The
    constant term is 1 exactly when the arc source -> sink itself exists.
    Indexing this way makes the j-th coefficient equal the count of
    source-to-sink paths with j+1 arcs, which is what the localized
    Eulerian identities consume.
    """
    size = graph.labeled_poset.size
    if size == 0:
        return UniPoly([1])
    source, sink = graph.source, graph.sink
    start = set(graph.successors[source])
    counts = [0] * (size + 1)
    counts[0] = 1 if sink in start else 0
    table: list[list[int]] = [[0] * size for _ in graph.ideals]
    for v in range(1, sink):
        row = table[v]
        if v in start:
            row[1] += 1
        ends_at_sink = sink in graph.successors[v]
        for length, ways in enumerate(row):
            if ways:
                if ends_at_sink:
                    counts[length] += ways
                for w in graph.successors[v]:
                    if w != sink:
                        table[w][length + 1] += ways
    return UniPoly(counts)


def to_dot(graph: OmegaGraph) -> str:
    """Graphviz text: one node per ideal, arcs as in the graph."""
    lines = ["digraph omega_graph {"]
    for k, ideal in enumerate(graph.ideals):
        members = ",".join(str(i) for i in iter_bits(ideal))
        lines.append(f'  v{k} [label="{{{members}}}"];')
    for v, succ in enumerate(graph.successors):
        for w in succ:
            lines.append(f"  v{v} -> v{w};")
    lines.append("}")
    return "\n".join(lines) + "\n"
