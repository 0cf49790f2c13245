"""Small immutable graphs with bitset adjacency.

Vertices are dense integers 0..n-1; an optional side table carries
human-readable role names.  Adjacency is one Python int per vertex, so
neighbourhood intersections and subset-degree tests reduce to mask
arithmetic.  This keeps the exhaustive checks elsewhere in the package honest
at desk scale without leaving pure Python.

Graph values are immutable after construction (adjacency is a tuple of ints);
they can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .budget import Budget, BudgetExhausted

MAX_PATTERN_VERTICES = 8


def _bits(mask):
    """Yield set bit positions of `mask` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Undirected simple graph on vertices 0..n-1."""

    __slots__ = ("n", "adj", "names")

    def __init__(self, n, edges=(), names=None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if names is not None:
            names = tuple(names)
            if len(names) != n:
                raise ValueError("names table must have one entry per vertex")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError("edge (%r, %r) out of range" % (u, v))
            if u == v:
                raise ValueError("loop edge at vertex %r" % u)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self.names = names

    @classmethod
    def _from_masks(cls, n, masks, names=None):
        """Internal fast path: adopt prebuilt adjacency masks (not validated)."""
        g = cls.__new__(cls)
        g.n = n
        g.adj = tuple(masks)
        g.names = names
        return g

    # -- queries ----------------------------------------------------------

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v):
        return tuple(_bits(self.adj[v]))

    def degree(self, v):
        return self.adj[v].bit_count()

    def edges(self):
        """All edges as (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            high = self.adj[u] >> (u + 1) << (u + 1)
            for v in _bits(high):
                out.append((u, v))
        return out

    @property
    def edge_count(self):
        return sum(m.bit_count() for m in self.adj) // 2

    def name(self, v):
        return self.names[v] if self.names is not None else "v%d" % v

    # -- derived graphs ----------------------------------------------------

    def complement(self):
        full = (1 << self.n) - 1
        masks = [full & ~self.adj[v] & ~(1 << v) for v in range(self.n)]
        return Graph._from_masks(self.n, masks, self.names)

    def induced(self, subset):
        """Induced subgraph, reindexed to 0..k-1 in sorted(subset) order."""
        subset = sorted(set(subset))
        if subset and not (0 <= subset[0] and subset[-1] < self.n):
            raise ValueError("subset out of range")
        index = {v: i for i, v in enumerate(subset)}
        edges = [(index[u], index[v]) for u, v in combinations(subset, 2)
                 if self.has_edge(u, v)]
        names = tuple(self.name(v) for v in subset) if self.names else None
        return Graph(len(subset), edges, names)

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other):
        """Structural equality: same vertex count and adjacency (names ignored)."""
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return "Graph(n=%d, edges=%r)" % (self.n, self.edges())


def complement(g):
    return g.complement()


def induced(g, subset):
    return g.induced(subset)


@dataclass(frozen=True)
class Cycle:
    """A cycle stored in canonical vertex order.

    Canonical form is the lexicographically least among all rotations and
    reflections of the vertex sequence, so equal cycles compare equal no
    matter how they were traversed.
    """

    vertices: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", canonical_rotation(self.vertices))

    @property
    def length(self):
        return len(self.vertices)

    @property
    def is_odd(self):
        return len(self.vertices) % 2 == 1

    def is_chordless_in(self, g):
        """True when this cycle is induced (consecutive pairs adjacent, all
        other pairs non-adjacent) in `g`."""
        vs = self.vertices
        k = len(vs)
        if k < 3 or len(set(vs)) != k:
            return False
        for i, u in enumerate(vs):
            if not g.has_edge(u, vs[(i + 1) % k]):
                return False
        for i, j in combinations(range(k), 2):
            if j - i not in (1, k - 1) and g.has_edge(vs[i], vs[j]):
                return False
        return True


def canonical_rotation(vertices):
    """Lexicographically least rotation/reflection of a cyclic sequence."""
    vs = tuple(vertices)
    if len(vs) <= 1:
        return vs
    best = None
    for seq in (vs, tuple(reversed(vs))):
        for i in range(len(seq)):
            rot = seq[i:] + seq[:i]
            if best is None or rot < best:
                best = rot
    return best


def iter_chordless_cycles(g, min_len=4, budget=None, max_len=None):
    """Yield every chordless cycle of length >= min_len exactly once.

    Search strategy: grow chordless paths anchored at their smallest vertex.
    A path [a, b, ..., t] keeps every vertex above the anchor a, allows no
    chord (a candidate must be adjacent only to the tail among path vertices),
    and vertices adjacent to the anchor may only close the cycle, never extend
    the path.  Requiring the closing vertex to exceed the second vertex fixes
    the traversal direction, so each cycle appears once, in canonical order.

    `budget` is a Budget counting path expansions; exhaustion raises
    BudgetExhausted.  `max_len` prunes paths that could only close into longer
    cycles (used for targeted C5 searches).
    """
    if budget is None:
        budget = Budget(None)
    adj = g.adj
    for a in range(g.n):
        low = (1 << (a + 1)) - 1
        for b in _bits(adj[a] & ~low):
            # stack entries: (path, block) where block masks vertices unusable
            # for extension: anchor-and-below, path members, and neighbours of
            # internal (non-tail) path vertices.
            stack = [((a, b), low | (1 << b))]
            while stack:
                path, block = stack.pop()
                budget.spend()
                tail = path[-1]
                closing = adj[tail] & adj[a] & ~block
                for y in _bits(closing):
                    if y > path[1] and len(path) + 1 >= min_len:
                        yield Cycle(path + (y,))
                if max_len is not None and len(path) + 1 >= max_len:
                    continue
                extending = adj[tail] & ~block & ~adj[a]
                # Reversed push order so the smallest candidate pops first.
                for y in reversed(tuple(_bits(extending))):
                    stack.append((path + (y,), block | (1 << y) | adj[tail]))


def chordless_cycles(g, min_len=4, budget=None):
    """All chordless cycles of length >= min_len, canonical and deduplicated.

    `budget` is a step count (int) or None for unlimited.  On exhaustion a
    BudgetExhausted carrying the cycles found so far is raised.
    """
    tracker = Budget(budget)
    found = []
    try:
        for cyc in iter_chordless_cycles(g, min_len, tracker):
            found.append(cyc)
    except BudgetExhausted as exc:
        raise BudgetExhausted(str(exc), partial=found) from None
    return sorted(found, key=lambda c: (c.length, c.vertices))


def triangles(g):
    """All 3-cliques as sorted (u, v, w) tuples, lexicographic order."""
    out = []
    adj = g.adj
    for u in range(g.n):
        above_u = adj[u] >> (u + 1) << (u + 1)
        for v in _bits(above_u):
            common = adj[u] & adj[v]
            for w in _bits(common >> (v + 1) << (v + 1)):
                out.append((u, v, w))
    return out


def find_subgraph(g, pattern):
    """An injective map sending pattern edges onto g edges, or None.

    Subgraph containment is *not* induced: pattern non-edges may map onto
    edges of g.  Returns a tuple `m` with m[i] = image of pattern vertex i.
    Patterns are capped at MAX_PATTERN_VERTICES vertices.
    """
    k = pattern.n
    if k > MAX_PATTERN_VERTICES:
        raise ValueError("pattern has %d vertices; at most %d supported"
                         % (k, MAX_PATTERN_VERTICES))
    if k == 0:
        return ()
    if k > g.n:
        return None

    # Order pattern vertices so each one (after the first) touches a placed
    # vertex when possible; candidates then shrink to neighbourhood
    # intersections.
    order = []
    placed = set()
    degs = [pattern.degree(v) for v in range(k)]
    while len(order) < k:
        best = None
        for v in range(k):
            if v in placed:
                continue
            back = sum(1 for u in pattern.neighbors(v) if u in placed)
            key = (back, degs[v], -v)
            if best is None or key > best[0]:
                best = (key, v)
        order.append(best[1])
        placed.add(best[1])

    g_degs = [g.degree(v) for v in range(g.n)]
    full = (1 << g.n) - 1
    image = {}

    def place(idx, used_mask):
        if idx == k:
            return True
        pv = order[idx]
        cand = full & ~used_mask
        for pu in pattern.neighbors(pv):
            if pu in image:
                cand &= g.adj[image[pu]]
        for gv in _bits(cand):
            if g_degs[gv] < degs[pv]:
                continue
            image[pv] = gv
            if place(idx + 1, used_mask | (1 << gv)):
                return True
            del image[pv]
        return False

    if place(0, 0):
        return tuple(image[v] for v in range(k))
    return None


def contains_subgraph(g, pattern):
    """True when g contains pattern as a (not necessarily induced) subgraph."""
    return find_subgraph(g, pattern) is not None


def find_induced_path(g, k):
    """Vertices of an induced path on k vertices, or None.

    Depth-first over paths whose extensions must avoid every earlier path
    vertex's neighbourhood, so candidate sets are neighbourhood
    intersections and stay small even in dense graphs.
    """
    if k <= 0:
        return None
    if k == 1:
        return (0,) if g.n else None
    adj = g.adj

    def extend(path, tail_mask, forbid):
        if len(path) == k:
            return path
        tail = path[-1]
        cand = adj[tail] & ~forbid & ~tail_mask
        for v in _bits(cand):
            found = extend(path + (v,), tail_mask | (1 << v),
                           forbid | adj[tail])
            if found:
                return found
        return None

    # Both traversal directions of a path start at an endpoint, so every
    # ordered first edge must be tried; no orientation symmetry to break.
    for a in range(g.n):
        for b in _bits(adj[a]):
            found = extend((a, b), (1 << a) | (1 << b), adj[a])
            if found:
                return found
    return None


# -- small named graphs ----------------------------------------------------

def path_graph(k):
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k):
    if k < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k):
    return Graph(k, list(combinations(range(k), 2)))


def gem_graph():
    """A four-vertex path plus one vertex adjacent to all of it.

    Equivalently the complement of (P4 + isolated vertex).  This is the
    five-vertex pattern whose absence as a subgraph certifies that no
    complement-of-long-path (and hence no long antihole) can occur.
    """
    return Graph(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])
