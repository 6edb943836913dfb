"""The ideal graph behind every recursion.

Vertices are the downward-closed subsets; an arc joins two of them when
the difference carries increasing labels.  Paths from the empty ideal to
the full poset, counted by length, drive the order and Eulerian
polynomials alike.
"""

from fractions import Fraction

from posetpoly import (
    LabeledPoset,
    build_omega_graph,
    chain_polynomial,
    count_paths,
    make_poset,
    phi,
)
from posetpoly.omegagraph import to_dot

shrub = make_poset(3, [(0, 1), (0, 2)])
lp = LabeledPoset(shrub, (3, 1, 2))  # the root gets the biggest label

graph = build_omega_graph(lp)
print(f"{len(graph.ideals)} ideals, {graph.arc_count()} arcs")
counts = count_paths(graph)
print("paths from bottom to top by length:", list(counts.c))

# the alternating sum of c_k/k is the linear coefficient of the order
# polynomial; for strictly labeled shrubs it is a Bernoulli number
alternating = sum(
    Fraction((-1) ** (k - 1), k) * c for k, c in enumerate(counts.c) if k
)
assert alternating == phi(lp)
print("alternating path sum:", alternating)

print("\ninterior chains, counted by vertex count:")
print(" ", chain_polynomial(graph).render("μ"))

print("\nGraphviz form:")
print(to_dot(graph), end="")
