"""Transition matrices, admissible words, and block recodings.

A one-sided shift space is presented by a square 0/1 matrix ``A``: its
points are the infinite symbol sequences (x_1, x_2, ...) over the
alphabet {1, ..., n} with ``A(x_i, x_{i+1}) = 1`` throughout.  This
module holds the matrix wrapper with its graph-theoretic predicate
flags, word enumeration, the higher-block recoding, directed-cycle
search restricted to a symbol set, and a finite description of
eventually periodic points.  Everything else in the package builds on
these.

Symbols are 1-based integers and words are plain tuples of symbols, so
alphabets with more than nine letters need no special casing.  All
values are immutable after construction and all functions are pure, so
concurrent use needs no coordination.
"""

from functools import cached_property

import numpy as np

__all__ = [
    "TransitionMatrix",
    "PointSpec",
    "validate_matrix",
    "enumerate_words",
    "higher_block",
    "has_cycle_within",
    "extensions",
    "is_irreducible",
    "is_primitive",
]


def _as_entry_array(entries):
    arr = np.asarray(entries, dtype=object)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("transition matrix must be a square 2-D array")
    flat = [int(v) for row in arr.tolist() for v in row]
    if any(v not in (0, 1) for v in flat):
        raise ValueError("transition matrix entries must all be 0 or 1")
    return np.asarray(entries, dtype=np.int64)


def is_irreducible(entries):
    """Return True iff the 0/1 matrix is irreducible (strongly connected).

    Computed by the boolean reachability closure, so the answer is exact.
    """
    arr = np.asarray(entries) > 0
    n = arr.shape[0]
    reach = arr | np.eye(n, dtype=bool)
    for _ in range(max(1, n.bit_length())):
        reach = reach | (reach @ reach)
    return bool(reach.all())


def is_primitive(entries):
    """Return True iff some power of the nonnegative matrix is positive.

    Uses boolean powers up to the Wielandt bound (n-1)**2 + 1, which is
    sharp for primitivity, so no floating point is involved.
    """
    arr = np.asarray(entries) > 0
    n = arr.shape[0]
    power = arr
    for _ in range((n - 1) ** 2 + 1):
        if power.all():
            return True
        power = power @ arr
    return bool(power.all())


class TransitionMatrix:
    """A square 0/1 matrix presenting a one-sided shift of finite type.

    Construction validates that the matrix is square, 0/1, and has no
    zero row or zero column (a stranded symbol would make the shift
    space be smaller than the alphabet suggests).  Reducible or
    permutation matrices are representable; the predicate flags record
    those defects so callers can refuse a computation with an
    explanation instead of failing at parse time.

    Examples
    --------
    >>> A = TransitionMatrix([[1, 1], [1, 0]])
    >>> A.irreducible, A.primitive, A.permutation
    (True, True, False)
    >>> TransitionMatrix([[0, 1], [1, 0]]).primitive
    False
    """

    def __init__(self, entries):
        arr = _as_entry_array(entries)
        n = arr.shape[0]
        if n < 2:
            raise ValueError("alphabet must have at least two symbols")
        for i in range(n):
            if not arr[i].any():
                raise ValueError("row %d is zero: symbol %d has no follower" % (i + 1, i + 1))
            if not arr[:, i].any():
                raise ValueError("column %d is zero: symbol %d has no predecessor" % (i + 1, i + 1))
        arr.setflags(write=False)
        self.entries = arr
        self.n = n
        self._followers = tuple(
            tuple(j + 1 for j in range(n) if arr[i, j]) for i in range(n)
        )
        self._predecessors = tuple(
            tuple(i + 1 for i in range(n) if arr[i, j]) for j in range(n)
        )

    @cached_property
    def irreducible(self):
        return is_irreducible(self.entries)

    @cached_property
    def primitive(self):
        return is_primitive(self.entries)

    @cached_property
    def permutation(self):
        # Within validated matrices every row sums to one iff the matrix
        # is a permutation (a doubled column would force a zero column).
        return bool((self.entries.sum(axis=1) == 1).all())

    def flags(self):
        return {
            "irreducible": self.irreducible,
            "primitive": self.primitive,
            "permutation": self.permutation,
        }

    def followers(self, symbol):
        """Symbols j with A(symbol, j) = 1, ascending."""
        return self._followers[symbol - 1]

    def predecessors(self, symbol):
        """Symbols i with A(i, symbol) = 1, ascending."""
        return self._predecessors[symbol - 1]

    def is_admissible(self, word):
        """True iff every symbol is in range and every step is allowed."""
        for s in word:
            if not (isinstance(s, int) and 1 <= s <= self.n):
                return False
        for a, b in zip(word, word[1:]):
            if not self.entries[a - 1, b - 1]:
                return False
        return True

    def check_word(self, word):
        word = tuple(word)
        if not self.is_admissible(word):
            raise ValueError("word %r is not admissible for this matrix" % (word,))
        return word

    def same_matrix(self, other):
        return self is other or (
            isinstance(other, TransitionMatrix)
            and np.array_equal(self.entries, other.entries)
        )

    def tolist(self):
        return [[int(v) for v in row] for row in self.entries]

    def __repr__(self):
        return "TransitionMatrix(%r)" % (self.tolist(),)


def validate_matrix(entries):
    """Build a :class:`TransitionMatrix`, raising ValueError on defects.

    The returned matrix carries the computed flags ``irreducible``,
    ``primitive`` and ``permutation``; construction succeeds for
    reducible input, the flags just record the defects.
    """
    return TransitionMatrix(entries)


def enumerate_words(A, m):
    """All admissible words of length `m`, lexicographically sorted.

    ``m = 0`` returns the single empty word.  The lexicographic order is
    what fixes determinism for every downstream index (the first-passage
    family and its inclusion matrix, for instance).

    Examples
    --------
    >>> A = TransitionMatrix([[1, 1], [1, 0]])
    >>> enumerate_words(A, 2)
    [(1, 1), (1, 2), (2, 1)]
    """
    if m < 0:
        raise ValueError("word length must be nonnegative")
    if m == 0:
        return [()]
    words = [(i,) for i in range(1, A.n + 1)]
    for _ in range(m - 1):
        words = [w + (j,) for w in words for j in A.followers(w[-1])]
    return words


def extensions(A, symbol, length):
    """Admissible words of the given length that may follow `symbol`.

    ``length = 0`` returns the single empty extension.
    """
    if length == 0:
        return [()]
    words = [(j,) for j in A.followers(symbol)]
    for _ in range(length - 1):
        words = [w + (j,) for w in words for j in A.followers(w[-1])]
    return words


def higher_block(A, K):
    """The K-th higher block presentation of the shift.

    Vertices are the admissible K-words in lexicographic order; there is
    an edge from mu to nu exactly when the two words overlap in K-1
    symbols (``mu[1:] == nu[:-1]``).  Returns the new matrix together
    with the label table from new symbols to words.  ``K = 1`` returns
    `A` itself with identity labels.
    """
    if K < 1:
        raise ValueError("block length must be at least 1")
    if K == 1:
        return A, tuple((i,) for i in range(1, A.n + 1))
    words = enumerate_words(A, K)
    index = {w: i for i, w in enumerate(words)}
    arr = np.zeros((len(words), len(words)), dtype=np.int64)
    for w in words:
        for j in A.followers(w[-1]):
            arr[index[w], index[w[1:] + (j,)]] = 1
    return TransitionMatrix(arr), tuple(words)


def has_cycle_within(A, symbols):
    """Search for a directed cycle staying inside the symbol set.

    Returns the shortest such cycle as a word (lexicographically least
    among the shortest; the closing edge from last symbol back to first
    is admissible but not repeated), or None when the restricted graph
    is acyclic.  The full symbol set always yields a cycle, because a
    valid matrix has no zero row.
    """
    allowed = set(symbols)
    for s in allowed:
        if not (isinstance(s, int) and 1 <= s <= A.n):
            raise ValueError("symbol %r out of range" % (s,))
    best = None
    for start in sorted(allowed):
        # BFS with children expanded in ascending order finds, for each
        # vertex, the lexicographically least shortest path from start.
        if start in A.followers(start):
            candidate = (start,)
            if best is None or (1, candidate) < (len(best), best):
                best = candidate
            continue
        paths = {start: (start,)}
        frontier = [(start,)]
        while frontier and (best is None or len(frontier[0]) < len(best)):
            nxt = []
            for path in frontier:
                for j in A.followers(path[-1]):
                    if j not in allowed or j in paths:
                        continue
                    paths[j] = path + (j,)
                    nxt.append(path + (j,))
            for path in nxt:
                if start in A.followers(path[-1]):
                    if best is None or (len(path), path) < (len(best), best):
                        best = path
                    break
            frontier = nxt
    return best


def _primitive_root(word):
    for d in range(1, len(word) + 1):
        if len(word) % d == 0 and word == word[:d] * (len(word) // d):
            return word[:d]
    return word


class PointSpec:
    """An eventually periodic point, given by a preperiod and a period.

    This is the finite stand-in for points of the shift space: the point
    is ``preperiod`` followed by infinitely many repetitions of
    ``period``.  Construction checks that the whole infinite sequence is
    admissible, including the wrap from the end of the period back to
    its start.

    Two specs describe the same point iff their canonical forms agree;
    canonicalization reduces the period to its primitive root and
    absorbs any preperiod tail that merely rotates the period.
    """

    def __init__(self, matrix, preperiod, period):
        self.matrix = matrix
        self.preperiod = matrix.check_word(preperiod)
        self.period = matrix.check_word(period)
        if not self.period:
            raise ValueError("period must be nonempty")
        if not matrix.entries[self.period[-1] - 1, self.period[0] - 1]:
            raise ValueError("period %r does not close up" % (self.period,))
        if self.preperiod and not matrix.entries[
            self.preperiod[-1] - 1, self.period[0] - 1
        ]:
            raise ValueError("preperiod does not connect to period")

    def symbol(self, i):
        """The i-th symbol of the point, 1-based."""
        if i < 1:
            raise ValueError("positions are 1-based")
        if i <= len(self.preperiod):
            return self.preperiod[i - 1]
        return self.period[(i - len(self.preperiod) - 1) % len(self.period)]

    def window(self, offset, length):
        """The `length` symbols of the shifted point sigma^offset(.)."""
        return tuple(self.symbol(offset + 1 + i) for i in range(length))

    def shift(self, k):
        """The point shifted left k times, as a new PointSpec."""
        if k < 0:
            raise ValueError("shift offset must be nonnegative")
        if k <= len(self.preperiod):
            return PointSpec(self.matrix, self.preperiod[k:], self.period)
        r = (k - len(self.preperiod)) % len(self.period)
        return PointSpec(self.matrix, (), self.period[r:] + self.period[:r])

    def prepend(self, word):
        """The point `word` . self, validated at the splice."""
        word = tuple(word)
        return PointSpec(self.matrix, word + self.preperiod, self.period)

    def canonical(self):
        per = _primitive_root(self.period)
        pre = self.preperiod
        while pre and pre[-1] == per[-1]:
            per = (per[-1],) + per[:-1]
            pre = pre[:-1]
        return pre, per

    def __eq__(self, other):
        if not isinstance(other, PointSpec):
            return NotImplemented
        return (
            self.matrix.same_matrix(other.matrix)
            and self.canonical() == other.canonical()
        )

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        return "PointSpec(preperiod=%r, period=%r)" % (self.preperiod, self.period)
