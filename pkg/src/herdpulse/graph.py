"""Undirected interaction graph over authors and its clustering measures.

Edges come from mentions and retweets, deduplicated and undirected. All
triangle and triple counting is exact integer arithmetic; the single floating
division happens last, so results are reproducible bit-for-bit and the
brute-force oracles in the test suite can match them exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from .corpus import Corpus


class SocialGraph:
    """Simple undirected graph keyed by author_id; no self-loops."""

    def __init__(self):
        self._adj: dict[str, set[str]] = {}

    def add_node(self, node: str) -> None:
        self._adj.setdefault(node, set())

    def add_edge(self, a: str, b: str) -> None:
        if a == b:
            return
        self.add_node(a)
        self.add_node(b)
        self._adj[a].add(b)
        self._adj[b].add(a)

    def __contains__(self, node: str) -> bool:
        return node in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def nodes(self) -> list[str]:
        return sorted(self._adj)

    def neighbors(self, node: str) -> set[str]:
        return self._adj[node]

    def degree(self, node: str) -> int:
        return len(self._adj[node])

    def edges(self) -> list[tuple[str, str]]:
        """Each undirected edge once, as (a, b) with a < b, sorted."""
        out = []
        for node, nbrs in self._adj.items():
            for other in nbrs:
                if node < other:
                    out.append((node, other))
        return sorted(out)

    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2


@dataclass(frozen=True)
class ClusteringStats:
    local: dict[str, float]
    mean_clustering: float
    global_clustering: float
    degree: dict[str, int]
    ck_curve: list[tuple[int, float]]


def build_graph(corpus: Corpus) -> SocialGraph:
    """Graph over authors, mention targets and retweet targets.

    An undirected edge {a, b} exists when a mentions b or a retweets b;
    self-interactions are dropped and repeats collapse.
    """
    graph = SocialGraph()
    for record in corpus.records:
        graph.add_node(record.author_id)
        for mentioned in record.mentions:
            graph.add_edge(record.author_id, mentioned)
        if record.retweet_of is not None:
            graph.add_edge(record.author_id, record.retweet_of)
    return graph


def _neighbor_edge_count(graph: SocialGraph, node: str) -> int:
    """Number of edges among the neighbors of ``node`` (exact integer)."""
    nbrs = graph.neighbors(node)
    total = 0
    for u in nbrs:
        total += len(graph.neighbors(u) & nbrs)
    return total // 2


def local_clustering(graph: SocialGraph, node: str) -> float:
    """Fraction of a node's neighbor pairs that are connected; 0 below degree 2."""
    if node not in graph:
        raise KeyError(f"unknown node: {node!r}")
    k = graph.degree(node)
    if k < 2:
        return 0.0
    return 2.0 * _neighbor_edge_count(graph, node) / (k * (k - 1))


def local_clustering_all(graph: SocialGraph) -> dict[str, float]:
    return {node: local_clustering(graph, node) for node in graph.nodes()}


def triangle_count(graph: SocialGraph) -> int:
    """Exact triangle count via neighbor intersection, each edge scanned once."""
    common_total = 0
    for a, b in graph.edges():
        common_total += len(graph.neighbors(a) & graph.neighbors(b))
    # each triangle contributes one common neighbor per each of its 3 edges
    return common_total // 3


def connected_triple_count(graph: SocialGraph) -> int:
    """Paths of length two centered at each node: sum of k*(k-1)/2."""
    return sum(
        graph.degree(node) * (graph.degree(node) - 1) // 2 for node in graph.nodes()
    )


def global_clustering(graph: SocialGraph) -> float:
    """Closed connected triples over all connected triples (transitivity).

    Each triangle closes three triples, so the numerator is 3 x triangles;
    a graph without any connected triple scores 0.
    """
    triples = connected_triple_count(graph)
    if triples == 0:
        return 0.0
    return 3.0 * triangle_count(graph) / triples


def mean_clustering(graph: SocialGraph) -> float:
    if len(graph) == 0:
        raise ValueError("mean clustering of an empty graph is undefined")
    local = local_clustering_all(graph)
    return math.fsum(local.values()) / len(local)


def ck_curve(graph: SocialGraph) -> list[tuple[int, float]]:
    """Mean local clustering per degree, ascending degree; [] for empty graph."""
    by_degree: dict[int, list[float]] = {}
    for node in graph.nodes():
        by_degree.setdefault(graph.degree(node), []).append(local_clustering(graph, node))
    return [(k, math.fsum(vals) / len(vals)) for k, vals in sorted(by_degree.items())]


def clustering_stats(graph: SocialGraph) -> ClusteringStats:
    local = local_clustering_all(graph)
    mean = math.fsum(local.values()) / len(local) if local else 0.0
    return ClusteringStats(
        local=local,
        mean_clustering=mean,
        global_clustering=global_clustering(graph),
        degree={node: graph.degree(node) for node in graph.nodes()},
        ck_curve=ck_curve(graph),
    )


def write_edgelist(graph: SocialGraph, path: str | Path) -> None:
    """Export "a<TAB>b" lines, each edge once with a < b, for external tools."""
    lines = [f"{a}\t{b}" for a, b in graph.edges()]
    Path(path).write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")
