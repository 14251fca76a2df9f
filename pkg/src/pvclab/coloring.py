"""Decision procedures for vertex-colored connection requirements.

A path is vertex-proper when any two consecutive *internal* vertices get
different colors; endpoints are never constrained.  The three requirements
checked here: some proper path joins a pair, some proper geodesic joins a
pair, and k internally disjoint proper paths join a pair.

All procedures are pure functions of immutable inputs and never share
search state, so per-pair checks can run concurrently.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExceeded
from .graph import (
    INF,
    Graph,
    bfs_distances,
    is_connected,
    max_internally_disjoint_paths,
    vertex_connectivity,
)

# Node budget for the disjoint-path backtracking search.  Exhausting it
# raises BudgetExceeded rather than guessing a verdict.
DEFAULT_NODE_BUDGET = 2_000_000

K_DISJOINT = "k_disjoint"
GEODESIC = "geodesic"


@dataclass(frozen=True)
class VertexColoring:
    """Positive integer colors, one per vertex of a specific graph."""

    graph: Graph
    colors: tuple[int, ...]

    def __post_init__(self):
        if len(self.colors) != self.graph.n:
            raise ValueError("one color per vertex required")
        for c in self.colors:
            if not isinstance(c, int) or c < 1:
                raise ValueError("colors are positive integers")

    @property
    def palette_size(self) -> int:
        return max(self.colors)

    @classmethod
    def monochromatic(cls, G: Graph) -> "VertexColoring":
        return cls(G, (1,) * G.n)


@dataclass(frozen=True)
class Witness:
    """Paths certifying one pair's connection requirement."""

    u: int
    v: int
    mode: str
    paths: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class WitnessCheck:
    ok: bool
    reason: str | None = None


def _require_simple_path(G: Graph, path) -> None:
    if len(path) < 2:
        raise ValueError("a path visits at least two vertices")
    if len(set(path)) != len(path):
        raise ValueError("path repeats a vertex")
    for a, b in zip(path, path[1:]):
        if not G.has_edge(a, b):
            raise ValueError(f"({a},{b}) is not an edge")


def is_vertex_proper_path(G: Graph, coloring: VertexColoring, path) -> bool:
    """True iff consecutive internal vertices all differ in color.

    Raises if ``path`` is not a simple path of G.  Paths with at most one
    internal vertex are vacuously proper.
    """
    _require_simple_path(G, path)
    colors = coloring.colors
    return all(
        colors[path[i]] != colors[path[i + 1]] for i in range(1, len(path) - 2)
    )


def exists_proper_path(G: Graph, coloring: VertexColoring, u: int, v: int) -> bool:
    """Whether some vertex-proper u-v path exists.

    BFS over single vertices: the first step from u is unconstrained, a
    step between internal vertices needs a color change, and arriving at v
    is always allowed.  A shortest proper walk never needs to repeat a
    vertex (splicing at a repeat preserves the local constraints), so walk
    reachability equals path existence.
    """
    return _proper_path_bfs(G, coloring, u, v) is not None


def _proper_path_bfs(G: Graph, coloring: VertexColoring, u: int, v: int):
    G.check_vertex(u)
    G.check_vertex(v)
    if u == v:
        raise ValueError("endpoints must differ")
    colors = coloring.colors
    parent = {u: None}
    queue = deque([u])
    while queue:
        w = queue.popleft()
        if w == v:
            path = []
            while w is not None:
                path.append(w)
                w = parent[w]
            return tuple(reversed(path))
        first_step = w == u
        for z in G.neighbors(w):
            if z in parent:
                continue
            if first_step or z == v or colors[z] != colors[w]:
                parent[z] = w
                queue.append(z)
    return None


def exists_proper_geodesic(
    G: Graph, coloring: VertexColoring, u: int, v: int, dist_u=None
) -> bool:
    """Whether some vertex-proper u-v geodesic exists (exact, polynomial).

    Dynamic programming over the BFS shortest-path dag from u: an internal
    vertex w is feasible when some dag predecessor is u, or is feasible
    with a different color.  ``dist_u`` may pass a precomputed BFS array.
    """
    G.check_vertex(u)
    G.check_vertex(v)
    if u == v:
        raise ValueError("endpoints must differ")
    dist = dist_u if dist_u is not None else bfs_distances(G, u)
    d = dist[v]
    if d == INF:
        raise ValueError("vertices are not connected")
    if d == 1:
        return True
    colors = coloring.colors
    feasible = [False] * G.n
    layers: list[list[int]] = [[] for _ in range(d)]
    for w in range(G.n):
        if w != v and 1 <= dist[w] < d:
            layers[dist[w]].append(w)
    for w in layers[1]:
        feasible[w] = True
    for t in range(2, d):
        for w in layers[t]:
            cw = colors[w]
            feasible[w] = any(
                dist[p] == t - 1 and feasible[p] and colors[p] != cw
                for p in G.neighbors(w)
            )
    return any(dist[p] == d - 1 and feasible[p] for p in G.neighbors(v))


def find_proper_geodesic(G: Graph, coloring: VertexColoring, u: int, v: int):
    """One vertex-proper u-v geodesic (lexicographically least back-trace),
    or None."""
    dist = bfs_distances(G, u)
    if not exists_proper_geodesic(G, coloring, u, v, dist_u=dist):
        return None
    d = dist[v]
    if d == 1:
        return (u, v)
    colors = coloring.colors
    # recompute feasibility, then walk back from v picking smallest indices
    feasible = [False] * G.n
    order = sorted(
        (w for w in range(G.n) if w != v and 1 <= dist[w] < d),
        key=lambda w: dist[w],
    )
    for w in order:
        if dist[w] == 1:
            feasible[w] = True
        else:
            feasible[w] = any(
                dist[p] == dist[w] - 1 and feasible[p] and colors[p] != colors[w]
                for p in G.neighbors(w)
            )
    path = [v]
    cur = v
    while cur != u:
        t = dist[cur]
        for p in sorted(G.neighbors(cur)):
            if t - 1 == 0:
                if p == u:
                    cur = u
                    break
                continue
            if (
                dist[p] == t - 1
                and feasible[p]
                and (cur == v or colors[p] != colors[cur])
            ):
                cur = p
                break
        else:
            raise AssertionError("feasible geodesic lost during back-trace")
        path.append(cur)
    return tuple(reversed(path))


def find_k_disjoint_proper_paths(
    G: Graph,
    coloring: VertexColoring,
    u: int,
    v: int,
    k: int,
    node_budget: int | None = None,
):
    """k pairwise internally disjoint vertex-proper u-v paths, or None.

    Exact backtracking over ordered path tuples: candidate paths come out
    shortest-first then lexicographic, and each chosen path forbids its
    internal vertices for the rest.  A Menger max-flow precheck discards
    pairs that lack k disjoint paths regardless of colors.  The search
    raises BudgetExceeded when the node budget runs out.
    """
    G.check_vertex(u)
    G.check_vertex(v)
    if u == v:
        raise ValueError("endpoints must differ")
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        path = _proper_path_bfs(G, coloring, u, v)
        if path is None:
            return None
        return Witness(u, v, K_DISJOINT, (path,))
    if max_internally_disjoint_paths(G, u, v, limit=k) < k:
        return None
    budget = [DEFAULT_NODE_BUDGET if node_budget is None else node_budget]
    colors = coloring.colors
    chosen: list[tuple[int, ...]] = []

    def candidates(forbidden: frozenset):
        dist_v = _restricted_dist(G, v, forbidden)
        if dist_v[u] == INF:
            return
        path = [u]
        used = {u}

        def extend(w: int, remaining: int):
            budget[0] -= 1
            if budget[0] < 0:
                raise BudgetExceeded(
                    "disjoint-path search exceeded its node budget"
                )
            for z in G.neighbors(w):
                if z == v:
                    if remaining == 1:
                        path.append(z)
                        yield tuple(path)
                        path.pop()
                    continue
                if remaining == 1 or z in used or z in forbidden:
                    continue
                if w != u and colors[z] == colors[w]:
                    continue
                if dist_v[z] > remaining - 1:
                    continue
                path.append(z)
                used.add(z)
                yield from extend(z, remaining - 1)
                path.pop()
                used.remove(z)

        for length in range(dist_v[u], G.n):
            yield from extend(u, length)

    def solve(forbidden: frozenset, need: int) -> bool:
        if need == 0:
            return True
        for path in candidates(forbidden):
            chosen.append(path)
            if solve(forbidden | frozenset(path[1:-1]), need - 1):
                return True
            chosen.pop()
        return False

    if solve(frozenset(), k):
        return Witness(u, v, K_DISJOINT, tuple(chosen))
    return None


def _restricted_dist(G: Graph, target: int, forbidden: frozenset):
    """BFS distances to ``target`` avoiding forbidden vertices (as interior)."""
    dist = [INF] * G.n
    dist[target] = 0
    queue = deque([target])
    while queue:
        w = queue.popleft()
        for z in G.neighbors(w):
            if dist[z] == INF and z not in forbidden:
                dist[z] = dist[w] + 1
                queue.append(z)
    return dist


def all_pairs(G: Graph):
    return combinations(range(G.n), 2)


def is_proper_vertex_k_connected(
    G: Graph,
    coloring: VertexColoring,
    k: int,
    node_budget: int | None = None,
    pairs=None,
) -> bool:
    """True iff every vertex pair is joined by k disjoint proper paths.

    Defined only for 1 <= k <= kappa(G); anything else raises.  ``pairs``
    may override the pair schedule (e.g. hardest-first for early exits).
    """
    kappa = vertex_connectivity(G)
    if not 1 <= k <= kappa:
        raise ValueError(f"k={k} outside 1..kappa={kappa}")
    if pairs is None:
        pairs = all_pairs(G)
    for u, v in pairs:
        if k == 1:
            if not exists_proper_path(G, coloring, u, v):
                return False
        elif (
            find_k_disjoint_proper_paths(G, coloring, u, v, k, node_budget)
            is None
        ):
            return False
    return True


def is_strong_proper_vertex_connected(
    G: Graph, coloring: VertexColoring, pairs=None
) -> bool:
    """True iff every vertex pair is joined by a vertex-proper geodesic."""
    if not is_connected(G):
        raise ValueError("strong proper vertex-connection needs a connected graph")
    if pairs is None:
        pairs = all_pairs(G)
    dist_cache: dict[int, list] = {}
    for u, v in pairs:
        if u not in dist_cache:
            dist_cache[u] = bfs_distances(G, u)
        if not exists_proper_geodesic(G, coloring, u, v, dist_u=dist_cache[u]):
            return False
    return True


def check_witness(G: Graph, coloring: VertexColoring, w: Witness) -> WitnessCheck:
    """Validate a witness: real simple paths, proper, disjoint/geodesic as
    its mode demands.  Returns a reason code instead of raising."""
    if w.mode not in (K_DISJOINT, GEODESIC):
        return WitnessCheck(False, "bad_mode")
    if not (0 <= w.u < G.n and 0 <= w.v < G.n) or w.u == w.v:
        return WitnessCheck(False, "bad_endpoints")
    if not w.paths:
        return WitnessCheck(False, "empty")
    for path in w.paths:
        if path[0] != w.u or path[-1] != w.v:
            return WitnessCheck(False, "bad_endpoints")
        try:
            proper = is_vertex_proper_path(G, coloring, path)
        except ValueError:
            return WitnessCheck(False, "not_path")
        if not proper:
            return WitnessCheck(False, "not_proper")
    if w.mode == K_DISJOINT:
        seen: set[int] = set()
        for path in w.paths:
            interior = set(path[1:-1])
            if interior & seen:
                return WitnessCheck(False, "not_disjoint")
            seen |= interior
    else:
        if len(w.paths) != 1:
            return WitnessCheck(False, "wrong_count")
        d = bfs_distances(G, w.u)[w.v]
        if len(w.paths[0]) - 1 != d:
            return WitnessCheck(False, "not_geodesic")
    return WitnessCheck(True, None)
