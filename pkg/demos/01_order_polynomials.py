"""Order polynomials three ways.

A labeled poset assigns distinct positive integers to the elements; maps
into {1..n} must respect the order, strictly wherever the labels run
against it.  Counting those maps for each n gives a polynomial, and the
package computes it by brute force, by a matrix exponential over the
ideal graph, and by a difference-calculus recursion.  They must agree.
"""

from posetpoly import (
    LabeledPoset,
    make_chain,
    make_poset,
    natural_labeling,
    order_poly_bruteforce,
    order_poly_matrix,
    order_poly_recursive,
    reversed_labeling,
)


def show(title, lp):
    routes = {
        "brute force": order_poly_bruteforce(lp),
        "matrix": order_poly_matrix(lp),
        "recursion": order_poly_recursive(lp),
    }
    print(f"{title}  (labels {lp.omega})")
    for name, poly in routes.items():
        print(f"  {name:12} {poly.render()}")
    assert len(set(routes.values())) == 1
    values = ", ".join(str(routes["recursion"](n)) for n in range(5))
    print(f"  values at 0..4: {values}")
    print()


chain = make_chain(3)
show("three-chain, labels along the order", LabeledPoset(chain, natural_labeling(chain)))
show("three-chain, labels against the order", LabeledPoset(chain, reversed_labeling(chain)))

vee = make_poset(3, [(0, 2), (1, 2)])
show("two minima under one top", LabeledPoset(vee, natural_labeling(vee)))

# a mixed labeling: neither natural nor reversed
show("same shape, scrambled labels", LabeledPoset(vee, (2, 3, 1)))
