"""Immutable simple graphs and the structural routines built on them.

Vertices are dense integers ``0..n-1``.  Adjacency is one bitmask per
vertex, so the membership tests in the search-heavy callers stay O(1).
Distances are plain ints, with ``math.inf`` standing for "no walk exists";
infinity is never encoded as a sentinel integer.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import CapExceeded

INF = math.inf


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with bitset adjacency rows.

    ``adj[v]`` has bit ``u`` set iff ``uv`` is an edge.  ``labels`` is an
    optional per-vertex annotation used by product constructors to record
    where each vertex came from.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError("adjacency bit outside vertex range")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(self.n):
            for u in _bits(self.adj[v]):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency at ({u},{v})")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("label count does not match vertex count")
        object.__setattr__(
            self, "_nbrs", tuple(tuple(_bits(row)) for row in self.adj)
        )

    @classmethod
    def from_edges(cls, n: int, edges, labels=None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(labels) if labels is not None else None)

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range 0..{self.n - 1}")

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def edges(self):
        for v in range(self.n):
            for u in self._nbrs[v]:
                if u > v:
                    yield (v, u)

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self._nbrs) // 2

    def label(self, v: int) -> str:
        if self.labels is None:
            return str(v)
        return self.labels[v]


@dataclass(frozen=True)
class ParityDistance:
    """Shortest even- and odd-length walk lengths between one vertex pair."""

    even: int | float
    odd: int | float


@dataclass(frozen=True)
class StructuralPredicates:
    is_complete: bool
    is_connected: bool
    is_bipartite: bool
    is_tree: bool
    min_degree: int
    every_edge_in_triangle: bool
    has_dist2_pair_with_unique_common_neighbor: bool


def bfs_distances(G: Graph, source: int) -> list:
    """Distances from ``source`` to every vertex (INF where unreachable)."""
    G.check_vertex(source)
    dist = [INF] * G.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        d = dist[v] + 1
        for u in G.neighbors(v):
            if dist[u] == INF:
                dist[u] = d
                queue.append(u)
    return dist


def distance(G: Graph, u: int, v: int):
    G.check_vertex(u)
    G.check_vertex(v)
    return bfs_distances(G, u)[v]


def diameter(G: Graph):
    worst = 0
    for v in range(G.n):
        worst = max(worst, max(bfs_distances(G, v)))
    return worst


def parity_bfs(G: Graph, source: int):
    """Shortest even/odd walk lengths from ``source`` to every vertex.

    Runs BFS over (vertex, parity) states; a walk may repeat vertices, so
    this is genuinely about walks, not paths.  ``even[source] == 0`` via
    the empty walk.  Also returns the BFS parent of each state for walk
    reconstruction (parent of (v, p) is a (u, 1-p) state, or None).
    """
    G.check_vertex(source)
    dist = [[INF, INF] for _ in range(G.n)]
    parent: list[list] = [[None, None] for _ in range(G.n)]
    dist[source][0] = 0
    queue = deque([(source, 0)])
    while queue:
        v, p = queue.popleft()
        d = dist[v][p] + 1
        q = 1 - p
        for u in G.neighbors(v):
            if dist[u][q] == INF:
                dist[u][q] = d
                parent[u][q] = (v, p)
                queue.append((u, q))
    return dist, parent


def parity_distances(G: Graph, u: int, v: int) -> ParityDistance:
    G.check_vertex(v)
    dist, _ = parity_bfs(G, u)
    return ParityDistance(even=dist[v][0], odd=dist[v][1])


def shortest_parity_walk(G: Graph, u: int, v: int, parity: int):
    """A shortest u-v walk of the given parity (0 even, 1 odd), or None.

    Such a walk never revisits a vertex at the same position parity: the
    segment between two equal-parity visits has even length and could be
    spliced out, contradicting minimality.
    """
    dist, parent = parity_bfs(G, u)
    if dist[v][parity] == INF:
        return None
    walk = [v]
    state = (v, parity)
    while parent[state[0]][state[1]] is not None:
        state = parent[state[0]][state[1]]
        walk.append(state[0])
    walk.reverse()
    return walk


def is_connected(G: Graph) -> bool:
    return all(d != INF for d in bfs_distances(G, 0))


def is_complete(G: Graph) -> bool:
    return G.edge_count == G.n * (G.n - 1) // 2


def is_bipartite(G: Graph) -> bool:
    side = [None] * G.n
    for start in range(G.n):
        if side[start] is not None:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in G.neighbors(v):
                if side[u] is None:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return False
    return True


def is_tree(G: Graph) -> bool:
    return is_connected(G) and G.edge_count == G.n - 1


def min_degree(G: Graph) -> int:
    return min(G.degree(v) for v in range(G.n))


def every_edge_in_triangle(G: Graph) -> bool:
    return all(G.adj[u] & G.adj[v] for u, v in G.edges())


def has_dist2_pair_with_unique_common_neighbor(G: Graph) -> bool:
    for u in range(G.n):
        for v in range(u + 1, G.n):
            if (G.adj[u] >> v) & 1:
                continue
            common = G.adj[u] & G.adj[v]
            if common and common == common & -common:
                return True
    return False


def structural_predicates(G: Graph) -> StructuralPredicates:
    """One-shot summary of the predicates the product theorems branch on."""
    return StructuralPredicates(
        is_complete=is_complete(G),
        is_connected=is_connected(G),
        is_bipartite=is_bipartite(G),
        is_tree=is_tree(G),
        min_degree=min_degree(G),
        every_edge_in_triangle=every_edge_in_triangle(G),
        has_dist2_pair_with_unique_common_neighbor=(
            has_dist2_pair_with_unique_common_neighbor(G)
        ),
    )


def spanning_tree(G: Graph, root: int):
    """BFS spanning tree rooted at ``root`` plus the depth of each vertex."""
    G.check_vertex(root)
    depth = [INF] * G.n
    depth[root] = 0
    edges = []
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in G.neighbors(v):
            if depth[u] == INF:
                depth[u] = depth[v] + 1
                edges.append((v, u))
                queue.append(u)
    if any(d == INF for d in depth):
        raise ValueError("spanning tree requires a connected graph")
    tree = Graph.from_edges(G.n, edges, labels=G.labels)
    return tree, tuple(depth)


def max_internally_disjoint_paths(G: Graph, s: int, t: int, limit=None) -> int:
    """Menger count: the maximum number of internally disjoint s-t paths.

    Unit-capacity max-flow on the split-vertex network.  Every edge and
    every internal vertex carries capacity 1, so each augmentation adds
    exactly one path.  ``limit`` stops early once that many paths exist.
    """
    G.check_vertex(s)
    G.check_vertex(t)
    if s == t:
        raise ValueError("endpoints must differ")
    n = G.n
    big = n + 1
    cap: dict[tuple[int, int], int] = {}
    adjn: list[list[int]] = [[] for _ in range(2 * n)]

    def add(a, b, c):
        if (a, b) not in cap:
            adjn[a].append(b)
            adjn[b].append(a)
            cap[(a, b)] = 0
            cap.setdefault((b, a), 0)
        cap[(a, b)] += c

    for v in range(n):
        add(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in G.edges():
        add(2 * u + 1, 2 * v, 1)
        add(2 * v + 1, 2 * u, 1)
    source, sink = 2 * s + 1, 2 * t
    bound = limit if limit is not None else n
    flow = 0
    while flow < bound:
        prev = {source: None}
        queue = deque([source])
        while queue and sink not in prev:
            a = queue.popleft()
            for b in adjn[a]:
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            break
        b = sink
        while prev[b] is not None:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    return flow


@lru_cache(maxsize=4096)
def vertex_connectivity(G: Graph) -> int:
    """kappa(G): n-1 for complete graphs, 0 when disconnected, otherwise the
    size of a minimum vertex cut.

    Exhaustive cut enumeration up to n=12, max-flow over all nonadjacent
    pairs beyond that.
    """
    n = G.n
    if n == 1:
        return 0
    if is_complete(G):
        return n - 1
    if not is_connected(G):
        return 0
    if n <= 12:
        for size in range(1, n - 1):
            for cut in combinations(range(n), size):
                if _disconnects(G, set(cut)):
                    return size
        return n - 1
    best = n - 1
    for s in range(n):
        for t in range(s + 1, n):
            if not (G.adj[s] >> t) & 1:
                best = min(best, max_internally_disjoint_paths(G, s, t, limit=best))
    return best


def _disconnects(G: Graph, removed: set) -> bool:
    rest = [v for v in range(G.n) if v not in removed]
    seen = {rest[0]}
    queue = deque([rest[0]])
    while queue:
        v = queue.popleft()
        for u in G.neighbors(v):
            if u not in removed and u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) < len(rest)


def _greedy_clique(G: Graph) -> list[int]:
    order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    clique: list[int] = []
    for v in order:
        if all((G.adj[v] >> u) & 1 for u in clique):
            clique.append(v)
    return clique


def _dsatur(G: Graph):
    n = G.n
    colors = [0] * n
    neighbor_colors = [set() for _ in range(n)]
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] == 0),
            key=lambda u: (len(neighbor_colors[u]), G.degree(u), -u),
        )
        c = 1
        while c in neighbor_colors[v]:
            c += 1
        colors[v] = c
        for u in G.neighbors(v):
            neighbor_colors[u].add(c)
    return max(colors), tuple(colors)


def chromatic_number(G: Graph, cap: int = 32):
    """Exact chromatic number plus one optimal proper coloring.

    Branch-and-bound seeded with a greedy clique (lower bound, pre-colored
    to break symmetry) and a DSATUR coloring (upper bound).
    """
    if G.n > cap:
        raise CapExceeded(f"chromatic_number capped at n<={cap}, got n={G.n}")
    n = G.n
    clique = _greedy_clique(G)
    ub, ub_colors = _dsatur(G)
    if len(clique) == ub:
        return ub, ub_colors
    in_clique = set(clique)
    order = clique + sorted(
        (v for v in range(n) if v not in in_clique),
        key=lambda v: (-G.degree(v), v),
    )
    best = [ub, ub_colors]
    assign = [0] * n
    for i, v in enumerate(clique):
        assign[v] = i + 1

    def walk(idx: int, used: int) -> None:
        if used >= best[0]:
            return
        if idx == n:
            best[0] = used
            best[1] = tuple(assign)
            return
        v = order[idx]
        taken = {assign[u] for u in G.neighbors(v) if assign[u]}
        top = min(used + 1, best[0] - 1)
        for c in range(1, top + 1):
            if c in taken:
                continue
            assign[v] = c
            walk(idx + 1, max(used, c))
            assign[v] = 0

    walk(len(clique), len(clique))
    return best[0], best[1]
