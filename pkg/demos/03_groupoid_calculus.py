#!/usr/bin/env python3
"""Bisections, membership splitting, and the minimality search.

Bisections (mu, nu) are the basic compact open pieces of the shift
groupoid and double as the partial isometries S_mu S_nu*.  Against an
integer potential, each bisection splits cleanly into pieces inside or
outside the cocycle subgroupoid.
"""

from sftcocycles import (
    Bisection,
    LocFun,
    PointSpec,
    TransitionMatrix,
    canonicalize,
    compose,
    expectation_support,
    generator_fixed,
    invert,
    make_chi_H,
    membership_split,
    minimality_search,
)

golden = TransitionMatrix([[1, 1], [1, 0]])
full2 = TransitionMatrix([[1, 1], [1, 1]])

print("== canonicalization and the product ==")
print("(1) vs (2) over golden:", canonicalize(golden, (1,), (2,)))
print("(1) vs (2) over full2: ", canonicalize(full2, (1,), (2,)))
z1 = Bisection((1, 1), (2, 1))
z2 = Bisection((2, 1, 1), (1, 1))
print("compose:", z1, "*", z2, "=", compose(z1, z2))
print("inverse:", invert(z1))

print()
print("== membership splitting ==")
chi = make_chi_H(full2, {1})
for mu, nu in (((1, 2), (2, 1)), ((1,), (2,))):
    for piece in canonicalize(full2, mu, nu):
        split = membership_split(full2, chi, piece)
        print("split of", piece, "->", split)
print("depth-2 potential over golden:")
f = LocFun(golden, 2, {(1, 1): 1, (1, 2): 0, (2, 1): 1})
print("split of ((1),(2,1)) ->", membership_split(golden, f, Bisection((1,), (2, 1))))

print()
print("== fixed generators and expectation supports ==")
print("S_12 S_21* fixed under chi_{1}?", generator_fixed(full2, chi, (1, 2), (2, 1)))
print("S_1 S_2* fixed under chi_{1}? ", generator_fixed(full2, chi, (1,), (2,)))
print("support of averaged S_12 S_21*:", expectation_support(full2, chi, (1, 2), (2, 1)))

print()
print("== the minimality search ==")
z = PointSpec(full2, (), (2,))  # the fixed point 2^inf
print("chi_{1}, connect U_(1) to 2^inf:", minimality_search(full2, chi, z, (1,)))
one = LocFun.constant(full2, 1)
witness = minimality_search(full2, one, z, (1,))
print("constant 1, same question:      ", witness)
print("witness verifies:", witness.verify(full2, one, z, (1,)))
