#!/usr/bin/env python3
"""Generate all 3-edge-connected cubic graphs up to a given order.

Every 3-connected cubic graph other than K4 arises from a smaller one by
subdividing two distinct edges and joining the new vertices. Isomorphs are
removed with networkx (distance-profile buckets + exact isomorphism test), so the
output is independent of the Rust canonical labelling code.

Usage: gen_corpus.py MAX_N > corpus.g6
"""
import sys
from collections import defaultdict

import networkx as nx


def expand(g):
    edges = list(g.edges())
    n = g.number_of_nodes()
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            h = g.copy()
            (a, b), (c, d) = edges[i], edges[j]
            h.remove_edge(a, b)
            h.remove_edge(c, d)
            x, y = n, n + 1
            h.add_edges_from([(a, x), (x, b), (c, y), (y, d), (x, y)])
            yield h


def invariant(g):
    # WL hashing cannot split regular graphs; BFS layer sizes can.
    profiles = []
    for v in g:
        layers = defaultdict(int)
        for d in nx.single_source_shortest_path_length(g, v).values():
            layers[d] += 1
        tri = nx.triangles(g, v)
        profiles.append((tri, tuple(layers[d] for d in sorted(layers))))
    return tuple(sorted(profiles))


def main():
    max_n = int(sys.argv[1])
    level = [nx.complete_graph(4)]
    out = []
    while level and level[0].number_of_nodes() <= max_n:
        out.extend(level)
        if level[0].number_of_nodes() + 2 > max_n:
            break
        buckets = defaultdict(list)
        nxt = []
        for g in level:
            for h in expand(g):
                key = invariant(h)
                if any(nx.is_isomorphic(h, o) for o in buckets[key]):
                    continue
                buckets[key].append(h)
                nxt.append(h)
        level = nxt
    counts = defaultdict(int)
    for g in out:
        assert nx.edge_connectivity(g) == 3
        assert all(d == 3 for _, d in g.degree())
        counts[g.number_of_nodes()] += 1
        sys.stdout.write(nx.to_graph6_bytes(g, header=False).decode())
    print(dict(counts), file=sys.stderr)


if __name__ == "__main__":
    main()
