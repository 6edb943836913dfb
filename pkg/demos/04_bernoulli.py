"""Bernoulli numbers from a one-root tree.

Label the root of an n-leaf shrub above all its leaves, and the linear
coefficient of the order polynomial is b_n.  The classical recurrence
and an alternating sum over compositions give two independent checks,
and integrating the Bernoulli polynomial recovers the whole order
polynomial.
"""

from math import factorial

from posetpoly.bernoulli import (
    bernoulli_from_shrub,
    bernoulli_multinomial,
    bernoulli_numbers_oracle,
    strict_shrub,
)
from posetpoly.invariants import order_poly_recursive

table = bernoulli_numbers_oracle(10)
print(" n   recurrence      shrub         compositions   (n+1)!·b_n")
for n in range(1, 11):
    a, b, c = table.b[n], bernoulli_from_shrub(n), bernoulli_multinomial(n)
    assert a == b == c
    print(f"{n:2}   {str(a):12}  {str(b):12}  {str(c):12}   {a * factorial(n + 1)}")

print()
n = 3
lp = strict_shrub(n)
print(f"order polynomial of the {n}-leaf shrub:",
      order_poly_recursive(lp).render())
print(f"antiderivative of B_{n}:             ",
      table.B[n].integral().render())
assert order_poly_recursive(lp) == table.B[n].integral()
