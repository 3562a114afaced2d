"""The commutative ring of set maps on a finite ground set.

A set map assigns a value to every subset of {0, ..., n-1}.  Subsets are
machine-word bitmasks and tables are dense, indexed by mask, so a map on
n elements stores 2**n entries.  The product is convolution over ordered
disjoint decompositions,

    (g * h)_S = sum over (T, U) with T | U = S, T & U = 0 of g_T * h_U,

with unit the indicator of the empty set.  Maps that are constant on
cardinality are sequences in disguise; the product then reduces to the
binomial convolution, i.e. multiplication of exponential generating
functions.  Composing a sequence with a set map is the set-map form of
the exponential formula,

    (a o h)_S = sum over set partitions sigma of S of
                a_{len(sigma)} * prod over blocks T of h_T,

and generalizes EGF composition.  All arithmetic is exact: values are
fractions.Fraction, or any immutable type with compatible + and *
(polynomial-valued maps work unchanged).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator

MAX_GROUND_SIZE = 20
PARTITION_CAP = 14


class CapExceeded(RuntimeError):
    """An enumeration would exceed its configured size cap."""


def subsets_of(mask: int) -> Iterator[int]:
    """Yield every submask of ``mask`` exactly once, descending, ending at 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def partitions_of(mask: int, cap: int = PARTITION_CAP) -> Iterator[tuple[int, ...]]:
    """Yield every set partition of the subset ``mask`` exactly once.

    A partition is a tuple of pairwise disjoint nonempty block masks whose
    union is ``mask``, blocks ordered by smallest element.  The empty set
    has exactly one partition, the empty tuple.  Enumeration follows
    restricted growth strings over the elements of ``mask`` in increasing
    index order, so Bell(popcount) partitions come out in a fixed,
    reproducible order.  ``cap`` bounds the popcount.
    """
    elements = [i for i in range(mask.bit_length()) if (mask >> i) & 1]
    k = len(elements)
    if k > cap:
        raise CapExceeded(
            f"set-partition enumeration over {k} elements exceeds cap {cap} "
            f"(Bell({k}) = {bell_number(k)} partitions)"
        )
    if k == 0:
        yield ()
        return
    blocks = [0] * k
    blocks[0] = 1 << elements[0]

    def grow(i: int, used: int) -> Iterator[tuple[int, ...]]:
        if i == k:
            yield tuple(blocks[:used])
            return
        bit = 1 << elements[i]
        for j in range(used):
            blocks[j] |= bit
            yield from grow(i + 1, used)
            blocks[j] &= ~bit
        blocks[used] = bit
        yield from grow(i + 1, used + 1)

    yield from grow(1, 1)


@lru_cache(maxsize=None)
def bell_number(n: int) -> int:
    """Number of set partitions of an n-element set."""
    if n == 0:
        return 1
    return sum(math.comb(n - 1, j) * bell_number(j) for j in range(n))


class SetMap:
    """Immutable dense table from subset masks of a ground set to values.

    Values are exact rationals or polynomials; the two kinds should not be
    mixed inside one table.  Instances are safe to share freely.
    """

    __slots__ = ("n", "table")

    def __init__(self, n: int, table: Iterable):
        if not 0 <= n <= MAX_GROUND_SIZE:
            raise ValueError(f"ground-set size must be in 0..{MAX_GROUND_SIZE}, got {n}")
        tab = tuple(table)
        if len(tab) != 1 << n:
            raise ValueError(f"table length {len(tab)} != 2**{n}")
        self.n = n
        self.table = tab

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int], object]) -> "SetMap":
        return cls(n, (fn(mask) for mask in range(1 << n)))

    @classmethod
    def constant(cls, n: int, value) -> "SetMap":
        return cls(n, (value,) * (1 << n))

    @classmethod
    def unit(cls, n: int, one=Fraction(1)) -> "SetMap":
        """The ring unit: ``one`` on the empty set, zero elsewhere."""
        zero = one * 0
        return cls(n, (one if mask == 0 else zero for mask in range(1 << n)))

    @classmethod
    def from_sequence(cls, n: int, terms: Iterable) -> "SetMap":
        """Cardinality-constant map a_S = a_{|S|}; needs terms 0..n."""
        seq = tuple(terms)
        if len(seq) < n + 1:
            raise ValueError(
                f"sequence too short: ground-set size {n} needs terms 0..{n}, got {len(seq)}"
            )
        return cls(n, (seq[mask.bit_count()] for mask in range(1 << n)))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __getitem__(self, mask: int):
        if not 0 <= mask < len(self.table):
            raise IndexError(f"mask {mask} outside ground set of size {self.n}")
        return self.table[mask]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SetMap):
            return NotImplemented
        return self.n == other.n and self.table == other.table

    def __repr__(self) -> str:
        return f"SetMap(n={self.n}, table={list(self.table)!r})"

    def _same_ground(self, other: "SetMap") -> None:
        if self.n != other.n:
            raise ValueError(f"ground-set mismatch: {self.n} != {other.n}")

    def __add__(self, other):
        if not isinstance(other, SetMap):
            return NotImplemented
        self._same_ground(other)
        return SetMap(self.n, (a + b for a, b in zip(self.table, other.table)))

    def __sub__(self, other):
        if not isinstance(other, SetMap):
            return NotImplemented
        self._same_ground(other)
        return SetMap(self.n, (a - b for a, b in zip(self.table, other.table)))

    def __neg__(self):
        return SetMap(self.n, (-a for a in self.table))

    def __mul__(self, other):
        """Convolution over ordered disjoint decompositions of each subset."""
        if not isinstance(other, SetMap):
            return NotImplemented
        self._same_ground(other)
        g, h = self.table, other.table
        out = []
        for S in range(1 << self.n):
            acc = None
            sub = S
            while True:
                term = g[sub] * h[S ^ sub]
                acc = term if acc is None else acc + term
                if sub == 0:
                    break
                sub = (sub - 1) & S
            out.append(acc)
        return SetMap(self.n, out)

    def map_values(self, fn: Callable) -> "SetMap":
        return SetMap(self.n, (fn(v) for v in self.table))

    def inverse(self, cap: int = PARTITION_CAP) -> "SetMap":
        """Multiplicative inverse of a map with value 1 on the empty set.

        Computed by the closed partition formula

            inv_S = sum over sigma of S of (-1)^len(sigma) len(sigma)!
                    * prod over blocks W of h_W,

        which satisfies h * inv = unit.
        """
        if self.table[0] != 1:
            raise ValueError("inverse requires value 1 on the empty set")
        one = self.table[0]
        out = []
        for S in range(1 << self.n):
            acc = None
            for sigma in partitions_of(S, cap):
                length = len(sigma)
                coeff = math.factorial(length) if length % 2 == 0 else -math.factorial(length)
                term = one * coeff
                for block in sigma:
                    term = term * self.table[block]
                acc = term if acc is None else acc + term
            out.append(acc)
        return SetMap(self.n, out)


def compose(terms: Iterable, inner: SetMap, cap: int = PARTITION_CAP) -> SetMap:
    """Compose a sequence with a set map vanishing on the empty set.

    (a o h)_S sums a_{len(sigma)} * prod h_T over all set partitions sigma
    of S; the empty set gets a_0 (empty-product convention).  The sequence
    must supply terms 0..n; shortfalls are a hard error, never padding.
    """
    n = inner.n
    if inner.table[0] != 0:
        raise ValueError("composition requires value 0 on the empty set")
    seq = tuple(terms)
    if len(seq) < n + 1:
        raise ValueError(
            f"sequence too short: composition over ground-set size {n} needs terms 0..{n}, "
            f"got {len(seq)}"
        )
    out = []
    for S in range(1 << n):
        acc = None
        for sigma in partitions_of(S, cap):
            term = seq[len(sigma)]
            for block in sigma:
                term = term * inner.table[block]
            acc = term if acc is None else acc + term
        out.append(acc)
    return SetMap(n, out)


def sequence_product(a: Iterable, b: Iterable) -> tuple:
    """Binomial convolution (a . b)_m = sum_k C(m,k) a_k b_{m-k}.

    This is the set-map product restricted to cardinality-constant maps,
    i.e. multiplication of exponential generating functions.
    """
    sa, sb = tuple(a), tuple(b)
    length = min(len(sa), len(sb))
    out = []
    for m in range(length):
        acc = None
        for k in range(m + 1):
            term = (sa[k] * sb[m - k]) * math.comb(m, k)
            acc = term if acc is None else acc + term
        out.append(acc)
    return tuple(out)


def decompose(outer: SetMap, terms: Iterable, cap: int = PARTITION_CAP) -> SetMap:
    """Solve compose(terms, h) == outer for the unique h with h_empty = 0.

    Requires terms[0] == outer value on the empty set and terms[1] != 0;
    h_S is obtained by induction over subsets, peeling the single-block
    partition off the composition sum and dividing by terms[1].
    """
    n = outer.n
    seq = tuple(terms)
    if len(seq) < n + 1:
        raise ValueError(
            f"sequence too short: decomposition over ground-set size {n} needs terms 0..{n}, "
            f"got {len(seq)}"
        )
    if seq[0] != outer.table[0]:
        raise ValueError("terms[0] must equal the empty-set value of the map")
    if seq[1] == 0:
        raise ValueError("terms[1] must be nonzero")
    a1 = seq[1]
    zero = outer.table[0] * 0
    h: list = [zero] * (1 << n)
    for S in range(1, 1 << n):
        acc = None
        for sigma in partitions_of(S, cap):
            if len(sigma) == 1:
                continue
            term = seq[len(sigma)]
            for block in sigma:
                term = term * h[block]
            acc = term if acc is None else acc + term
        remainder = outer.table[S] if acc is None else outer.table[S] - acc
        h[S] = remainder / a1
    return SetMap(n, h)


def recover_sequence(outer: SetMap, inner: SetMap, max_n: int, cap: int = PARTITION_CAP) -> tuple:
    """Recover terms 0..max_n of a with compose(a, inner) == outer.

    The inner map must vanish on the empty set and be nonzero on the
    one-element subsets used by the induction (elements 0..max_n-1); term
    m is solved on the subset {0, ..., m-1}, where the all-singletons
    partition isolates a_m.  A final pass over every subset of size
    <= max_n rejects maps that are not compositions with ``inner``.
    """
    n = outer.n
    if inner.n != n:
        raise ValueError(f"ground-set mismatch: {n} != {inner.n}")
    if inner.table[0] != 0:
        raise ValueError("recovery requires inner value 0 on the empty set")
    if max_n > n:
        raise ValueError(f"ground set of size {n} cannot determine terms beyond index {n}")
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    for v in range(max_n):
        if inner.table[1 << v] == 0:
            raise ValueError("recovery requires nonzero values on one-element subsets")
    terms: list = [outer.table[0]]
    for m in range(1, max_n + 1):
        S = (1 << m) - 1
        acc = None
        for sigma in partitions_of(S, cap):
            length = len(sigma)
            if length == m:
                continue
            term = terms[length]
            for block in sigma:
                term = term * inner.table[block]
            acc = term if acc is None else acc + term
        remainder = outer.table[S] if acc is None else outer.table[S] - acc
        denom = inner.table[1]
        for v in range(1, m):
            denom = denom * inner.table[1 << v]
        terms.append(remainder / denom)
    for S in range(1 << n):
        if S.bit_count() > max_n:
            continue
        acc = None
        for sigma in partitions_of(S, cap):
            term = terms[len(sigma)]
            for block in sigma:
                term = term * inner.table[block]
            acc = term if acc is None else acc + term
        if acc != outer.table[S]:
            raise ValueError("map is not a composition of any sequence with the inner map")
    return tuple(terms)
