#!/usr/bin/env python3
"""Walkthrough: interaction graph and its clustering structure.

Builds the undirected author graph from mentions/retweets in the demo corpus
and prints the local coefficients, the transitivity, and the mean clustering
per degree (the data behind the C(k) curve).
"""

from pathlib import Path

from herdpulse import (
    build_graph,
    ck_curve,
    global_clustering,
    load_corpus,
    local_clustering,
    mean_clustering,
    triangle_count,
)

DATA = Path(__file__).parent / "data"

corpus = load_corpus(DATA / "demo_tweets.jsonl", "demo").corpus
graph = build_graph(corpus)

print(f"graph: {len(graph)} authors, {graph.edge_count()} interaction edges")
print(f"triangles: {triangle_count(graph)}")

# Local coefficient: the share of an author's neighbor pairs that interact
# with each other. Degree < 2 scores 0 by convention.
print("\nper-author local clustering:")
for node in graph.nodes():
    k = graph.degree(node)
    c = local_clustering(graph, node)
    print(f"  {node}  degree {k}  C = {c:.4f}")

print(f"\nmean clustering  : {mean_clustering(graph):.6f}")
print(f"transitivity     : {global_clustering(graph):.6f}")

# Highly connected hubs tending to lower C is the classic hierarchy signal;
# with a corpus this small the curve is just a handful of points.
print("\nmean clustering per degree:")
for k, c in ck_curve(graph):
    print(f"  k = {k:>2}  mean C = {c:.4f}")
