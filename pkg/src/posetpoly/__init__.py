"""Exact invariants of labeled posets: order polynomials, Eulerian
polynomials, Bernoulli numbers via shrubs, and truncated quasi-symmetric
functions, all computed by ideal-lattice recursions over rational arithmetic.
"""

from posetpoly.eulerian import (
    EulerianPair,
    eulerian_from_chains,
    eulerian_recursive,
    eulerian_tilde_recursive,
)
from posetpoly.framework import (
    InvariantSpec,
    QSymTruncated,
    qsym_direct,
    qsym_recursive,
    run_invariant,
)
from posetpoly.invariants import (
    order_poly_bruteforce,
    order_poly_matrix,
    order_poly_recursive,
    phi,
)
from posetpoly.localized import LocalizedRatio
from posetpoly.omegagraph import OmegaGraph, build_omega_graph, chain_polynomial, count_paths
from posetpoly.polynomials import (
    UniPoly,
    binomial_poly,
    delta,
    delta_inverse,
    lagrange_interpolate,
    nabla,
    nabla_inverse,
)
from posetpoly.posetfile import PosetParseError, parse_poset_file
from posetpoly.posets import (
    LabeledPoset,
    Poset,
    enumerate_ideals,
    make_antichain,
    make_chain,
    make_poset,
    make_shrub,
    natural_labeling,
    reversed_labeling,
)
from posetpoly.unlabeled import (
    order_poly_unlabeled,
    signed_order_poly_nabla,
    strict_order_poly,
)

__all__ = [
    "EulerianPair",
    "InvariantSpec",
    "LabeledPoset",
    "LocalizedRatio",
    "OmegaGraph",
    "Poset",
    "PosetParseError",
    "QSymTruncated",
    "UniPoly",
    "binomial_poly",
    "build_omega_graph",
    "chain_polynomial",
    "count_paths",
    "delta",
    "delta_inverse",
    "enumerate_ideals",
    "eulerian_from_chains",
    "eulerian_recursive",
    "eulerian_tilde_recursive",
    "lagrange_interpolate",
    "make_antichain",
    "make_chain",
    "make_poset",
    "make_shrub",
    "nabla",
    "nabla_inverse",
    "natural_labeling",
    "order_poly_bruteforce",
    "order_poly_matrix",
    "order_poly_recursive",
    "order_poly_unlabeled",
    "parse_poset_file",
    "phi",
    "qsym_direct",
    "qsym_recursive",
    "reversed_labeling",
    "run_invariant",
    "signed_order_poly_nabla",
    "strict_order_poly",
]
