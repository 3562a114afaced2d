"""Simple graphs, chromatic polynomials, and brute-force counting oracles.

Three independent routes to the chromatic polynomial live here: the
deletion-contraction recursion (the production path, memoized on a
relabeled canonical form), the edge-subset expansion

    chi_G(x) = sum over F subset of E of (-1)^|F| x^(components of (V, F)),

and exact Newton interpolation through backtracking coloring counts.
Their agreement is an acceptance check, so none of them may share logic.

The counting oracles (proper colorings, acyclic orientations, stable
partitions, unique-sink and sink-source orientations, per Stanley and
Greene-Zaslavsky) are deliberately naive enumerations; they exist to
validate coefficient interpretations, not to be fast.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from .ring import MAX_GROUND_SIZE, CapExceeded, SetMap, partitions_of
from .umbral import Poly, interpolate

EDGE_ENUM_CAP = 20
STABLE_PARTITION_CAP = 12


class GraphFormatError(ValueError):
    """Malformed graph file."""


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Edges are deduplicated and stored sorted as (u, v) with u < v; loops
    are rejected.  Instances are immutable and hashable.
    """

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            seen.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = tuple(sorted(seen))

    @classmethod
    def edgeless(cls, n: int) -> "Graph":
        return cls(n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, [(u, v) for u in range(n) for v in range(u + 1, n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def restrict(self, mask: int) -> "Graph":
        """Induced subgraph on the vertex subset ``mask``, relabeled to 0..|S|-1."""
        if mask & ~self.vertex_mask:
            raise ValueError(f"subset {mask} outside vertex range of {self.n} vertices")
        verts = [v for v in range(self.n) if (mask >> v) & 1]
        rank = {v: i for i, v in enumerate(verts)}
        kept = [(rank[u], rank[v]) for u, v in self.edges if (mask >> u) & 1 and (mask >> v) & 1]
        return Graph(len(verts), kept)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {list(self.edges)!r})"

    def to_text(self) -> str:
        lines = [f"{self.n} {len(self.edges)}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse the plain-text graph format: line `n m`, then m lines `u v`.

    Requires 0 <= u < v < n on every edge line; `#` starts a comment.
    """
    rows = []
    for raw in text.splitlines():
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            rows.append(stripped)
    if not rows:
        raise GraphFormatError("empty graph file")
    head = rows[0].split()
    if len(head) != 2:
        raise GraphFormatError(f"header must be 'n m', got {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphFormatError(f"header must be two integers, got {rows[0]!r}") from None
    if n < 0 or m < 0:
        raise GraphFormatError("vertex and edge counts must be nonnegative")
    if len(rows) - 1 != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        pair = row.split()
        if len(pair) != 2:
            raise GraphFormatError(f"edge line must be 'u v', got {row!r}")
        try:
            u, v = int(pair[0]), int(pair[1])
        except ValueError:
            raise GraphFormatError(f"edge line must be two integers, got {row!r}") from None
        if not 0 <= u < v < n:
            raise GraphFormatError(f"edge ({u}, {v}) violates 0 <= u < v < {n}")
        edges.append((u, v))
    if len(set(edges)) != len(edges):
        raise GraphFormatError("duplicate edge")
    return Graph(n, edges)


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


# ---------------------------------------------------------------------------
# chromatic polynomial, three ways
# ---------------------------------------------------------------------------

_chromatic_cache: dict = {}


def _canonical(n: int, edges: tuple) -> tuple:
    """Relabel vertices by (degree, index) and return the relabeled edge tuple.

    Equal keys imply isomorphic graphs (the key is itself a labeled graph),
    so memoizing on it is sound; the sort merely improves hit rates.
    """
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    order = sorted(range(n), key=lambda w: (deg[w], w))
    rank = [0] * n
    for i, w in enumerate(order):
        rank[w] = i
    relabeled = sorted(
        (rank[u], rank[v]) if rank[u] < rank[v] else (rank[v], rank[u]) for u, v in edges
    )
    return (n, tuple(relabeled))


def _chromatic(n: int, edges: tuple) -> Poly:
    key = _canonical(n, edges)
    hit = _chromatic_cache.get(key)
    if hit is not None:
        return hit
    n, edges = key
    if not edges:
        result = Poly.monomial(n)
    else:
        u, v = edges[0]
        deleted = edges[1:]
        # contract v into u: drop v, shift higher labels down, merge parallels
        merged = set()
        for a, b in deleted:
            a = u if a == v else (a - 1 if a > v else a)
            b = u if b == v else (b - 1 if b > v else b)
            merged.add((a, b) if a < b else (b, a))
        result = _chromatic(n, deleted) - _chromatic(n - 1, tuple(sorted(merged)))
    _chromatic_cache[key] = result
    return result


def chromatic_poly(graph: Graph) -> Poly:
    """Chromatic polynomial by memoized deletion-contraction."""
    if graph.n > MAX_GROUND_SIZE:
        raise CapExceeded(f"chromatic polynomial capped at {MAX_GROUND_SIZE} vertices")
    return _chromatic(graph.n, graph.edges)


def chromatic_setmap(graph: Graph) -> SetMap:
    """The map S -> chromatic polynomial of the induced subgraph on S."""
    if graph.n > MAX_GROUND_SIZE:
        raise CapExceeded(f"chromatic set map capped at {MAX_GROUND_SIZE} vertices")
    return SetMap(graph.n, (chromatic_poly(graph.restrict(S)) for S in range(1 << graph.n)))


def subgraph_expansion(graph: Graph, cap: int = EDGE_ENUM_CAP) -> Poly:
    """Signed edge-subset expansion of the chromatic polynomial.

    Sums (-1)^(#edges) x^(#components) over all 2^m spanning subgraphs,
    counting components with union-find.
    """
    m = len(graph.edges)
    if m > cap:
        raise CapExceeded(f"subgraph expansion over {m} edges exceeds cap {cap}")
    coeff = [0] * (graph.n + 1)
    for bits in range(1 << m):
        parent = list(range(graph.n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        components = graph.n
        for i in range(m):
            if (bits >> i) & 1:
                ra, rb = find(graph.edges[i][0]), find(graph.edges[i][1])
                if ra != rb:
                    parent[ra] = rb
                    components -= 1
        coeff[components] += 1 if bits.bit_count() % 2 == 0 else -1
    return Poly(coeff)


def count_proper_colorings(graph: Graph, colors: int) -> int:
    """Number of proper colorings with the given color count, by backtracking."""
    if colors < 0:
        raise ValueError("color count must be nonnegative")
    n = graph.n
    earlier = [[] for _ in range(n)]
    for u, v in graph.edges:
        earlier[max(u, v)].append(min(u, v))
    assigned = [0] * n

    def rec(v: int) -> int:
        if v == n:
            return 1
        total = 0
        for c in range(colors):
            if all(assigned[w] != c for w in earlier[v]):
                assigned[v] = c
                total += rec(v + 1)
        return total

    return rec(0)


def chromatic_by_interpolation(graph: Graph) -> Poly:
    """Chromatic polynomial interpolated through coloring counts at 0..n."""
    points = [(x, count_proper_colorings(graph, x)) for x in range(graph.n + 1)]
    return interpolate(points)


# ---------------------------------------------------------------------------
# orientation and partition oracles
# ---------------------------------------------------------------------------


def acyclic_orientations(graph: Graph, cap: int = EDGE_ENUM_CAP) -> Iterator[tuple]:
    """Yield each acyclic orientation as a tuple of directed (source, target) pairs.

    Backtracks over edges, rejecting a direction as soon as it would close
    a directed cycle, so only acyclic prefixes are ever extended.
    """
    m = len(graph.edges)
    if m > cap:
        raise CapExceeded(f"orientation enumeration over {m} edges exceeds cap {cap}")
    succ: list[list[int]] = [[] for _ in range(graph.n)]
    chosen: list[tuple[int, int]] = []

    def reaches(src: int, dst: int) -> bool:
        if src == dst:
            return True
        stack = [src]
        seen = {src}
        while stack:
            w = stack.pop()
            for nxt in succ[w]:
                if nxt == dst:
                    return True
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return False

    def rec(i: int) -> Iterator[tuple]:
        if i == m:
            yield tuple(chosen)
            return
        u, v = graph.edges[i]
        for s, t in ((u, v), (v, u)):
            if not reaches(t, s):
                succ[s].append(t)
                chosen.append((s, t))
                yield from rec(i + 1)
                succ[s].pop()
                chosen.pop()

    return rec(0)


@lru_cache(maxsize=None)
def _acyclic_count(graph: Graph) -> int:
    # cap already enforced by the caller
    return sum(1 for _ in acyclic_orientations(graph, cap=len(graph.edges)))


def count_acyclic_orientations(graph: Graph, cap: int = EDGE_ENUM_CAP) -> int:
    """Number of acyclic orientations; equals (-1)^n chi(-1) (Stanley)."""
    if len(graph.edges) > cap:
        raise CapExceeded(f"orientation enumeration over {len(graph.edges)} edges exceeds cap {cap}")
    return _acyclic_count(graph)


def _sinks_and_sources(n: int, orientation: tuple) -> tuple[list[int], list[int]]:
    outdeg = [0] * n
    indeg = [0] * n
    for s, t in orientation:
        outdeg[s] += 1
        indeg[t] += 1
    sinks = [w for w in range(n) if outdeg[w] == 0]
    sources = [w for w in range(n) if indeg[w] == 0]
    return sinks, sources


def count_acyclic_unique_sink(graph: Graph, sink: int, cap: int = EDGE_ENUM_CAP) -> int:
    """Acyclic orientations whose only sink is the given vertex.

    Isolated vertices have no out-edges and therefore count as sinks, so a
    graph with an isolated vertex other than ``sink`` counts zero.
    """
    if not 0 <= sink < graph.n:
        raise ValueError(f"vertex {sink} outside range 0..{graph.n - 1}")
    total = 0
    for orientation in acyclic_orientations(graph, cap):
        sinks, _ = _sinks_and_sources(graph.n, orientation)
        if sinks == [sink]:
            total += 1
    return total


def count_acyclic_sink_source(graph: Graph, source: int, sink: int, cap: int = EDGE_ENUM_CAP) -> int:
    """Acyclic orientations with unique sink and unique source at adjacent vertices.

    Requires at least one edge, no isolated vertices, and adjacent
    endpoints; this count equals |chi'(1)| (Greene-Zaslavsky), and outside
    those hypotheses the relationship is not defined, so the inputs are
    refused rather than answered.
    """
    if not 0 <= source < graph.n or not 0 <= sink < graph.n:
        raise ValueError("source or sink outside vertex range")
    if not graph.edges:
        raise ValueError("sink-source counting requires at least one edge")
    key = (source, sink) if source < sink else (sink, source)
    if key not in set(graph.edges):
        raise ValueError(f"vertices {source} and {sink} are not adjacent")
    if 0 in graph.degrees():
        raise ValueError("sink-source counting requires no isolated vertices")
    total = 0
    for orientation in acyclic_orientations(graph, cap):
        sinks, sources = _sinks_and_sources(graph.n, orientation)
        if sinks == [sink] and sources == [source]:
            total += 1
    return total


def _edgeless_table(graph: Graph) -> list[bool]:
    table = [True] * (1 << graph.n)
    for u, v in graph.edges:
        pair = (1 << u) | (1 << v)
        for S in range(1 << graph.n):
            if S & pair == pair:
                table[S] = False
    return table


def count_stable_partitions(graph: Graph, cap: int = STABLE_PARTITION_CAP) -> int:
    """Number of vertex partitions all of whose blocks induce no edges."""
    if graph.n > cap:
        raise CapExceeded(f"stable-partition counting over {graph.n} vertices exceeds cap {cap}")
    stable = _edgeless_table(graph)
    total = 0
    for sigma in partitions_of(graph.vertex_mask, cap=max(graph.n, 1)):
        if all(stable[block] for block in sigma):
            total += 1
    return total
