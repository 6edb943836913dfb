"""One recursion, many carriers.

The same ideal recursion computes the order polynomial, the Eulerian
forms, and a multivariate refinement: the generating function of
compatible maps recorded variable by variable.  Truncated to N
variables it is an honest polynomial, quasi-symmetric by construction,
and collapses back to the order polynomial when every variable is 1.
"""

from posetpoly import (
    LabeledPoset,
    QSymTruncated,
    make_chain,
    make_poset,
    natural_labeling,
    order_poly_recursive,
    qsym_direct,
    qsym_recursive,
    run_invariant,
)
from posetpoly.framework import (
    etilde_spec,
    lambda_operator,
    omega_spec,
    shift_operator,
)

chain = make_chain(2)
lp = LabeledPoset(chain, (2, 1))

for nvars in (2, 3, 4):
    direct = qsym_direct(lp, nvars)
    assert direct == qsym_recursive(lp, nvars)
    total = direct.specialize_ones()
    assert total == order_poly_recursive(lp)(nvars)
    print(f"N={nvars}: {direct.render()}   (all ones -> {total})")

print()
vee = make_poset(3, [(0, 2), (1, 2)])
nat = LabeledPoset(vee, natural_labeling(vee))
print("vee, 3 variables:", qsym_direct(nat, 3).render())

# the building blocks: a shift that pushes variables out the window,
# and the operator that prepends one more value to every map
one = QSymTruncated.one(3)
x1 = QSymTruncated.variable(3, 1)
print("\nshift of x1:", shift_operator(x1).render())
print("double shift of x1:", shift_operator(x1, 2).render())
print("prepend onto x1:", lambda_operator(x1, 1).render())

# the same engine runs the univariate invariants
print("\nvia the generic engine:")
print("  order polynomial:", run_invariant(omega_spec(), nat).render())
print("  tilde form:      ", run_invariant(etilde_spec(), nat).render())
