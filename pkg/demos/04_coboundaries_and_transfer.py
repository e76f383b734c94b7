#!/usr/bin/env python3
"""Coboundary detection, potential solving, and transfer across maps.

A function with zero sums over all periodic orbits is a coboundary;
the solver recovers its potential exactly.  Potentials also transfer
across orbit equivalences: sliding conjugacies pull a function back to
its composition, and continuous-full-group elements turn the constant 1
into the unit coboundary of their cocycle.
"""

from sftcocycles import (
    FullGroupElement,
    LocFun,
    TransitionMatrix,
    classify_potential,
    coboundary_transform,
    cycle_sums,
    make_chi_H,
    psi_transfer,
    solve_potential,
)

golden = TransitionMatrix([[1, 1], [1, 0]])
full2 = TransitionMatrix([[1, 1], [1, 1]])

print("== cycle sums as the obstruction ==")
g = LocFun(golden, 1, {(1,): 1, (2,): -1})
for cyc, total in cycle_sums(golden, g):
    print("cycle", cyc, "sum", total)
print("-> not a coboundary (the self-loop obstructs)")

print()
print("== solving for the potential ==")
b = LocFun(full2, 2, {(1, 1): 3, (1, 2): 0, (2, 1): -1, (2, 2): 2})
g = b.shifted() - b
recovered = solve_potential(full2, g)
print("recovered:", recovered)
print("matches the base-normalized original:", recovered == b.base_normalized())

print()
print("== classifying potentials ==")
for name, f in (
    ("constant 1", LocFun.constant(golden, 1)),
    ("chi_{1}", make_chi_H(golden, {1})),
    ("1_b for b = chi of U_(1)", coboundary_transform(make_chi_H(full2, {1}))),
):
    cls = classify_potential(f.matrix, f)
    print("%-24s -> %s %s" % (name, cls.kinds, cls.note or ""))

print()
print("== transfer across a full-group element ==")
tau = FullGroupElement(full2, [((1, 1), (1,)), ((1, 2), (2, 1)), ((2,), (2, 2))])
print("cocycle d_tau:", tau.cocycle_function())
k1, l1 = tau.coe_pair()
transferred = psi_transfer(LocFun.constant(full2, 1), tau, k1, l1)
print("transfer of 1:", transferred)
print("equals 1 - d + d(sigma .):", transferred == coboundary_transform(tau.cocycle_function()))
