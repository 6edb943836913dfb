"""Eulerian polynomials and the generating series they compress.

Summing order-polynomial values against powers of λ gives a rational
function: a polynomial numerator over a power of (1-λ).  On antichains
the numerator is the classical Eulerian polynomial, so a permutation
descent count doubles as an oracle.
"""

from math import comb

from posetpoly import (
    LabeledPoset,
    eulerian_from_chains,
    make_chain,
    natural_labeling,
    order_poly_recursive,
    reversed_labeling,
)
from posetpoly.eulerian import antichain_eulerian_binomial, eulerian_descent_oracle

chain = make_chain(2)
for omega in (natural_labeling(chain), reversed_labeling(chain)):
    lp = LabeledPoset(chain, omega)
    pair = eulerian_from_chains(lp)
    print(f"two-chain, labels {omega}: e = {pair.e.render('λ')},"
          f"  full form {pair.etilde.render('λ')}")

# spot-check the series: sum of Omega(n) λ^n against e/(1-λ)^{|P|+1}
lp = LabeledPoset(chain, natural_labeling(chain))
poly = order_poly_recursive(lp)
e = eulerian_from_chains(lp).e
window = 8
series = [poly(n) for n in range(window + 1)]
binomials = [comb(m + lp.size, lp.size) for m in range(window + 1)]
product = [
    sum(e.coeffs[k] * binomials[m - k] for k in range(min(m, e.degree) + 1))
    for m in range(window + 1)
]
print("series coefficients:", [str(v) for v in series])
print("e times binomial tail:", [str(v) for v in product])
assert series == product

print()
for n in range(1, 7):
    poly = antichain_eulerian_binomial(n)
    assert poly == eulerian_descent_oracle(n)
    print(f"antichain of {n}: {poly.render('λ')}")
