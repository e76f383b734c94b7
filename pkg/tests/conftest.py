"""Shared fixtures and small oracles used across the test modules."""

import pytest

from sftcocycles import Bisection, PointSpec, TransitionMatrix, enumerate_words


@pytest.fixture(scope="session")
def golden():
    return TransitionMatrix([[1, 1], [1, 0]])


@pytest.fixture(scope="session")
def full2():
    return TransitionMatrix([[1, 1], [1, 1]])


@pytest.fixture(scope="session")
def zero_diag3():
    return TransitionMatrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])


def words_up_to(A, max_len, min_len=1):
    out = []
    for length in range(min_len, max_len + 1):
        out.extend(enumerate_words(A, length))
    return out


def end_matched_bisections(A, max_len):
    words = words_up_to(A, max_len)
    return [
        Bisection(mu, nu)
        for mu in words
        for nu in words
        if mu[-1] == nu[-1]
    ]


def tail_from(A, symbol):
    """A deterministic eventually periodic point starting at `symbol`."""
    walk = [symbol]
    seen = {symbol: 0}
    while True:
        nxt = min(A.followers(walk[-1]))
        if nxt in seen:
            k = seen[nxt]
            return PointSpec(A, tuple(walk[:k]), tuple(walk[k:]))
        seen[nxt] = len(walk)
        walk.append(nxt)


def count_in(word, H):
    return sum(1 for s in word if s in H)


def brute_membership(A, f, x, n, z, k_bound):
    """Decide membership of (x, n, z) in the cocycle groupoid by scanning.

    Returns (exists, truths): `truths` collects the truth value of the
    cocycle condition at every exponent pair (k, l = k - n) at which the
    shifted points agree, so callers can also confirm that membership
    does not depend on the choice of exponents.
    """
    truths = []
    for k in range(max(n, 0), k_bound + 1):
        l = k - n
        if l < 0:
            continue
        if x.shift(k) != z.shift(l):
            continue
        fk = sum(f.eval_point(x, i) for i in range(k))
        fl = sum(f.eval_point(z, i) for i in range(l))
        truths.append(fk == fl)
    return any(truths), truths
