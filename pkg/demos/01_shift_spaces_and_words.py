#!/usr/bin/env python3
"""Walk through the basic shift-space objects: matrices, words, blocks.

Run as a script; each section prints what it computes.
"""

from sftcocycles import (
    PointSpec,
    TransitionMatrix,
    enumerate_words,
    has_cycle_within,
    higher_block,
)

# The two matrices used throughout the demos: the golden mean shift
# (no "22" allowed) and the full shift on two symbols.
golden = TransitionMatrix([[1, 1], [1, 0]])
full2 = TransitionMatrix([[1, 1], [1, 1]])

print("== predicate flags ==")
for name, A in (("golden mean", golden), ("full 2-shift", full2)):
    print(name, A.flags())

print()
print("== admissible words ==")
for m in range(1, 5):
    print("B_%d(golden) = %s" % (m, enumerate_words(golden, m)))

print()
print("== higher-block recoding ==")
block, labels = higher_block(golden, 2)
print("2-block vertices:", labels)
print("2-block matrix:  ", block.tolist())
print("flags carry over:", block.flags())

print()
print("== cycles inside a symbol set ==")
print("cycle within {2} of golden:", has_cycle_within(golden, {2}))
print("cycle within {2} of full2: ", has_cycle_within(full2, {2}))
print("cycle within everything:   ", has_cycle_within(golden, {1, 2}))

print()
print("== eventually periodic points ==")
p = PointSpec(golden, (2,), (1, 1, 2))
print("point 2.(112)^inf starts:", p.window(0, 8))
print("shifted by 2:            ", p.shift(2).window(0, 8))
print("equality is canonical:   ", PointSpec(full2, (2, 1), (1,)) == PointSpec(full2, (2,), (1,)))
