"""Abel-type polynomial set maps on the blocks of a set partition.

Fix a partition of a finite set into blocks B_0, ..., B_{n-1}.  On every
subset pi of the blocks put

    f_pi(x) = x * (x + w(pi))^(len(pi) - 1),

where w(pi) is the number of underlying elements the blocks of pi cover.
This map is of binomial type, and with all blocks of size a it collapses
to the Abel sequence x(x + a n)^{n-1}.  Its monomial coefficients count
tail forests: sets of tails (block, element) with distinct origin blocks
whose induced digraph on blocks is a directed forest, the set-partition
analogue of planted forests.  Only block sizes matter, so the type below
stores nothing else; elements are addressed as (block, offset) pairs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Optional

from .ring import CapExceeded, SetMap, partitions_of
from .umbral import Poly

ABEL_BLOCK_CAP = 12
PARTITION_SUM_CAP = 10
TAIL_BLOCK_CAP = 5
TAIL_WEIGHT_CAP = 8


@dataclass(frozen=True)
class BlockPartition:
    """Block sizes of a set partition; the ground set for the induced algebra
    is the set of blocks."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.sizes)
        if any(s < 1 for s in sizes):
            raise ValueError("block sizes must be positive")
        object.__setattr__(self, "sizes", sizes)

    @property
    def block_count(self) -> int:
        return len(self.sizes)

    @property
    def weight(self) -> int:
        return sum(self.sizes)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.sizes)) - 1

    def subset_weight(self, mask: int) -> int:
        """Total element count of the blocks selected by ``mask``."""
        if mask & ~self.full_mask:
            raise ValueError(f"block subset {mask} outside {self.block_count} blocks")
        return sum(self.sizes[i] for i in range(len(self.sizes)) if (mask >> i) & 1)

    def elements(self) -> list[tuple[int, int]]:
        """All elements as (block index, offset) pairs, in block-major order."""
        return [(b, off) for b, size in enumerate(self.sizes) for off in range(size)]


def abel_poly(blocks: BlockPartition, mask: int) -> Poly:
    """The polynomial x(x + w)^(len-1) attached to a subset of the blocks.

    The empty subset gets 1, the only value consistent with a nontrivial
    binomial-type map.
    """
    count = mask.bit_count()
    if count == 0:
        if mask & ~blocks.full_mask:
            raise ValueError("block subset outside partition")
        return Poly.one()
    w = blocks.subset_weight(mask)
    return Poly.x() * Poly((w, 1)) ** (count - 1)


def abel_setmap(blocks: BlockPartition, cap: int = ABEL_BLOCK_CAP) -> SetMap:
    """The full table of abel_poly over all subsets of the blocks."""
    n = blocks.block_count
    if n > cap:
        raise CapExceeded(f"Abel set map over {n} blocks exceeds cap {cap}")
    return SetMap(n, (abel_poly(blocks, mask) for mask in range(1 << n)))


def abel_general_setmap(alpha: SetMap, cap: int = ABEL_BLOCK_CAP) -> SetMap:
    """The map S -> x(x + alpha_S)^(|S|-1) for an additive rational map alpha.

    Additivity (alpha_S equals the sum of alpha over the singletons of S)
    is what makes the result binomial type; it is checked, not assumed.
    With alpha constant -a on singletons the diagonal is the Abel sequence
    x(x - a n)^{n-1}.
    """
    n = alpha.n
    if n > cap:
        raise CapExceeded(f"Abel set map over ground size {n} exceeds cap {cap}")
    for S in range(1 << n):
        expected = Fraction(0)
        for v in range(n):
            if (S >> v) & 1:
                expected += alpha[1 << v]
        if alpha[S] != expected:
            raise ValueError(f"alpha is not additive at subset {S}")
    table = []
    for S in range(1 << n):
        size = S.bit_count()
        if size == 0:
            table.append(Poly.one())
        else:
            table.append(Poly.x() * Poly((alpha[S], 1)) ** (size - 1))
    return SetMap(n, table)


def verify_closed_form_partition_sum(
    blocks: BlockPartition, subset: Optional[int] = None, cap: int = PARTITION_SUM_CAP
) -> bool:
    """Check f_pi = sum over partitions gamma of pi of x^len(gamma) * prod w(rho)^(len(rho)-1).

    gamma runs over set partitions of the chosen blocks; rho is a block of
    gamma, i.e. a set of blocks, with w its total element count.
    """
    target = blocks.full_mask if subset is None else subset
    if target & ~blocks.full_mask:
        raise ValueError(f"block subset {target} outside {blocks.block_count} blocks")
    if target.bit_count() > cap:
        raise CapExceeded(
            f"partition sum over {target.bit_count()} blocks exceeds cap {cap}"
        )
    acc = Poly.zero()
    for gamma in partitions_of(target):
        term = Poly.monomial(len(gamma))
        for rho in gamma:
            term = term * blocks.subset_weight(rho) ** (rho.bit_count() - 1)
        acc = acc + term
    return acc == abel_poly(blocks, target)


def verify_forest_coefficients(
    blocks: BlockPartition,
    subset: Optional[int] = None,
    k: Optional[int] = None,
    cap: int = PARTITION_SUM_CAP,
) -> bool:
    """Check C(n-1, k-1) w^(n-k) = sum over k-part partitions of prod w(rho)^(len(rho)-1).

    n is the number of chosen blocks and w their total weight; with
    k = None every k in 1..n is checked.
    """
    target = blocks.full_mask if subset is None else subset
    if target & ~blocks.full_mask:
        raise ValueError(f"block subset {target} outside {blocks.block_count} blocks")
    n = target.bit_count()
    if n > cap:
        raise CapExceeded(f"partition sum over {n} blocks exceeds cap {cap}")
    if n == 0:
        raise ValueError("the identity needs at least one block")
    ks = range(1, n + 1) if k is None else (k,)
    for kk in ks:
        if not 1 <= kk <= n:
            raise ValueError(f"k must be in 1..{n}, got {kk}")
    w = blocks.subset_weight(target)
    sums = [0] * (n + 1)
    for gamma in partitions_of(target):
        term = 1
        for rho in gamma:
            term *= blocks.subset_weight(rho) ** (rho.bit_count() - 1)
        sums[len(gamma)] += term
    return all(math.comb(n - 1, kk - 1) * w ** (n - kk) == sums[kk] for kk in ks)


def _forest_acyclic(n: int, successor: dict[int, int]) -> bool:
    """Cycle test for a digraph with out-degree at most one per block."""
    state = [0] * n  # 0 unseen, 1 on current walk, 2 done
    for start in range(n):
        if state[start]:
            continue
        walk = []
        node = start
        while node is not None and state[node] == 0:
            state[node] = 1
            walk.append(node)
            node = successor.get(node)
        if node is not None and state[node] == 1:
            return False  # walked into the current path: a directed cycle
        for visited in walk:
            state[visited] = 2
    return True


def count_tail_forests(
    blocks: BlockPartition,
    k: int,
    block_cap: int = TAIL_BLOCK_CAP,
    weight_cap: int = TAIL_WEIGHT_CAP,
) -> int:
    """Count tail forests with k components by exhaustive enumeration.

    A tail is a pair (origin block, target element); a tail forest is a
    set of tails with pairwise distinct origins whose induced digraph on
    blocks (origin -> block containing the target) is acyclic.  A forest
    with k components has exactly n - k tails.  A tail pointing inside its
    own origin block induces a self-loop and is never acyclic.
    """
    n = blocks.block_count
    if n > block_cap:
        raise CapExceeded(f"tail-forest enumeration over {n} blocks exceeds cap {block_cap}")
    if blocks.weight > weight_cap:
        raise CapExceeded(
            f"tail-forest enumeration over weight {blocks.weight} exceeds cap {weight_cap}"
        )
    if not 1 <= k <= n:
        raise ValueError(f"component count must be in 1..{n}, got {k}")
    targets = blocks.elements()
    total = 0
    for origins in combinations(range(n), n - k):
        for assignment in product(targets, repeat=n - k):
            successor = {origin: element[0] for origin, element in zip(origins, assignment)}
            if _forest_acyclic(n, successor):
                total += 1
    return total
