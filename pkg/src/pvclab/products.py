"""The join and the four standard graph products, with vertex provenance.

Product vertex (g, h) sits at index ``g * |H| + h`` so that colorings and
witnesses serialize against a fixed, documented layout.  The join tags its
vertices ``L:i`` / ``R:j`` instead, since its vertex set is a disjoint
union rather than a pair set.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .graph import Graph, bfs_distances, parity_bfs


class ProductKind(str, Enum):
    JOIN = "join"
    CARTESIAN = "cartesian"
    LEXICOGRAPHIC = "lexicographic"
    STRONG = "strong"
    DIRECT = "direct"


@dataclass(frozen=True)
class ProductGraph:
    """A constructed product together with its factor bookkeeping."""

    graph: Graph
    kind: ProductKind
    factor_dims: tuple[int, int]

    def index(self, g: int, h: int) -> int:
        """Index of product vertex (g, h); for joins, of left vertex g or
        right vertex h via :meth:`left` / :meth:`right` instead."""
        if self.kind is ProductKind.JOIN:
            raise ValueError("join vertices are not coordinate pairs")
        ng, nh = self.factor_dims
        if not (0 <= g < ng and 0 <= h < nh):
            raise ValueError(f"({g},{h}) outside factors {self.factor_dims}")
        return g * nh + h

    def pair(self, v: int) -> tuple[int, int]:
        if self.kind is ProductKind.JOIN:
            raise ValueError("join vertices are not coordinate pairs")
        self.graph.check_vertex(v)
        return divmod(v, self.factor_dims[1])

    def left(self, i: int) -> int:
        if self.kind is not ProductKind.JOIN:
            raise ValueError("left/right only apply to joins")
        if not 0 <= i < self.factor_dims[0]:
            raise ValueError("left index out of range")
        return i

    def right(self, j: int) -> int:
        if self.kind is not ProductKind.JOIN:
            raise ValueError("left/right only apply to joins")
        if not 0 <= j < self.factor_dims[1]:
            raise ValueError("right index out of range")
        return self.factor_dims[0] + j

    def side(self, v: int) -> str:
        """'L' or 'R' for a join vertex."""
        if self.kind is not ProductKind.JOIN:
            raise ValueError("side only applies to joins")
        self.graph.check_vertex(v)
        return "L" if v < self.factor_dims[0] else "R"

    def is_cartesian_edge(self, u: int, v: int) -> bool:
        """For strong (and Cartesian) products: True iff the edge moves in
        exactly one coordinate."""
        if self.kind not in (ProductKind.STRONG, ProductKind.CARTESIAN):
            raise ValueError("edge classification applies to strong/Cartesian")
        if not self.graph.has_edge(u, v):
            raise ValueError(f"({u},{v}) is not an edge")
        gu, hu = self.pair(u)
        gv, hv = self.pair(v)
        return gu == gv or hu == hv


def _pair_labels(G: Graph, H: Graph) -> tuple[str, ...]:
    return tuple(
        f"({G.label(g)},{H.label(h)})" for g in range(G.n) for h in range(H.n)
    )


def join(G: Graph, H: Graph) -> ProductGraph:
    n = G.n + H.n
    edges = list(G.edges())
    edges += [(G.n + u, G.n + v) for u, v in H.edges()]
    edges += [(i, G.n + j) for i in range(G.n) for j in range(H.n)]
    labels = tuple(f"L:{i}" for i in range(G.n)) + tuple(
        f"R:{j}" for j in range(H.n)
    )
    return ProductGraph(
        Graph.from_edges(n, edges, labels), ProductKind.JOIN, (G.n, H.n)
    )


def cartesian(G: Graph, H: Graph) -> ProductGraph:
    nh = H.n
    edges = []
    for g in range(G.n):
        for u, v in H.edges():
            edges.append((g * nh + u, g * nh + v))
    for u, v in G.edges():
        for h in range(nh):
            edges.append((u * nh + h, v * nh + h))
    return ProductGraph(
        Graph.from_edges(G.n * nh, edges, _pair_labels(G, H)),
        ProductKind.CARTESIAN,
        (G.n, H.n),
    )


def lexicographic(G: Graph, H: Graph) -> ProductGraph:
    nh = H.n
    edges = []
    for u, v in G.edges():
        for a in range(nh):
            for b in range(nh):
                edges.append((u * nh + a, v * nh + b))
    for g in range(G.n):
        for u, v in H.edges():
            edges.append((g * nh + u, g * nh + v))
    return ProductGraph(
        Graph.from_edges(G.n * nh, edges, _pair_labels(G, H)),
        ProductKind.LEXICOGRAPHIC,
        (G.n, H.n),
    )


def strong(G: Graph, H: Graph) -> ProductGraph:
    nh = H.n
    edges = list(cartesian(G, H).graph.edges())
    for u, v in G.edges():
        for a, b in H.edges():
            edges.append((u * nh + a, v * nh + b))
            edges.append((u * nh + b, v * nh + a))
    return ProductGraph(
        Graph.from_edges(G.n * nh, edges, _pair_labels(G, H)),
        ProductKind.STRONG,
        (G.n, H.n),
    )


def direct(G: Graph, H: Graph) -> ProductGraph:
    nh = H.n
    edges = []
    for u, v in G.edges():
        for a, b in H.edges():
            edges.append((u * nh + a, v * nh + b))
            edges.append((u * nh + b, v * nh + a))
    return ProductGraph(
        Graph.from_edges(G.n * nh, edges, _pair_labels(G, H)),
        ProductKind.DIRECT,
        (G.n, H.n),
    )


def build(kind: ProductKind, G: Graph, H: Graph) -> ProductGraph:
    ctor = {
        ProductKind.JOIN: join,
        ProductKind.CARTESIAN: cartesian,
        ProductKind.LEXICOGRAPHIC: lexicographic,
        ProductKind.STRONG: strong,
        ProductKind.DIRECT: direct,
    }[ProductKind(kind)]
    return ctor(G, H)


@dataclass(frozen=True)
class DistanceFormulaReport:
    kind: ProductKind
    pairs_checked: int
    ok: bool
    counterexample: tuple | None  # ((g,h),(g',h'), expected, actual)


def _formula_distance(kind, G, H, dG, dH, peG, peH, g, h, g2, h2):
    if kind is ProductKind.CARTESIAN:
        return dG[g][g2] + dH[h][h2]
    if kind is ProductKind.STRONG:
        return max(dG[g][g2], dH[h][h2])
    if kind is ProductKind.LEXICOGRAPHIC:
        if g != g2:
            return dG[g][g2]
        if G.degree(g) == 0:
            return dH[h][h2]
        return min(dH[h][h2], 2)
    if kind is ProductKind.DIRECT:
        even = max(peG[g][g2][0], peH[h][h2][0])
        odd = max(peG[g][g2][1], peH[h][h2][1])
        return min(even, odd)
    raise ValueError(f"no distance formula for {kind}")


def verify_distance_formula(
    kind: ProductKind,
    G: Graph,
    H: Graph,
    pair_limit: int = 256,
    samples: int = 10000,
    seed: int = 0,
) -> DistanceFormulaReport:
    """Compare the closed-form product distance against BFS on the product.

    Exhaustive over all ordered vertex pairs while the product has at most
    ``pair_limit`` vertices, seeded random sampling beyond that.  Returns
    the first counterexample if any.
    """
    kind = ProductKind(kind)
    if kind is ProductKind.JOIN:
        raise ValueError("the join has no factor distance formula")
    P = build(kind, G, H)
    n = P.graph.n
    dG = [bfs_distances(G, v) for v in range(G.n)]
    dH = [bfs_distances(H, v) for v in range(H.n)]
    peG = peH = None
    if kind is ProductKind.DIRECT:
        peG = [parity_bfs(G, v)[0] for v in range(G.n)]
        peH = [parity_bfs(H, v)[0] for v in range(H.n)]

    if n <= pair_limit:
        pairs = ((u, v) for u in range(n) for v in range(n))
        total = n * n
    else:
        rng = random.Random(seed)
        pairs = (
            (rng.randrange(n), rng.randrange(n)) for _ in range(samples)
        )
        total = samples

    dist_cache: dict[int, list] = {}
    checked = 0
    for u, v in pairs:
        if u not in dist_cache:
            dist_cache[u] = bfs_distances(P.graph, u)
        actual = dist_cache[u][v]
        g, h = P.pair(u)
        g2, h2 = P.pair(v)
        expected = _formula_distance(kind, G, H, dG, dH, peG, peH, g, h, g2, h2)
        checked += 1
        if expected != actual:
            return DistanceFormulaReport(
                kind, checked, False, ((g, h), (g2, h2), expected, actual)
            )
    assert checked == total
    return DistanceFormulaReport(kind, checked, True, None)
