"""Slow reference implementations the fast code is checked against.

Nothing here shares code with the package beyond the Graph container.
"""
from __future__ import annotations

import math
from itertools import combinations

INF = math.inf


def floyd_warshall(n, edges):
    """All-pairs hop distances by O(n^3) relaxation."""
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == INF:
                continue
            di = d[i]
            for j in range(n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return d


def aipl_oracle(n, edges):
    if n <= 1:
        return 0.0
    d = floyd_warshall(n, edges)
    total = sum(1.0 / d[i][j] for i in range(n) for j in range(n) if i != j and d[i][j] < INF)
    return total / (n * (n - 1))


def all_shortest_paths(n, edges, s, t, dist):
    """Every shortest s-t path as a vertex list, by explicit DFS."""
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    target = dist[s][t]
    out = []

    def walk(path):
        u = path[-1]
        if u == t:
            out.append(list(path))
            return
        for w in adj[u]:
            # stay on a geodesic: one hop further from s, one hop closer to t
            if dist[s][w] == len(path) and dist[w][t] == target - len(path):
                path.append(w)
                walk(path)
                path.pop()

    walk([s])
    return out


def brute_betweenness(n, edges):
    """Raw vertex and edge betweenness over unordered pairs by path enumeration."""
    dist = floyd_warshall(n, edges)
    vb = {v: 0.0 for v in range(n)}
    eb = {tuple(sorted(e)): 0.0 for e in edges}
    for s, t in combinations(range(n), 2):
        if dist[s][t] == INF:
            continue
        paths = all_shortest_paths(n, edges, s, t, dist)
        share = 1.0 / len(paths)
        for p in paths:
            for v in p[1:-1]:
                vb[v] += share
            for a, b in zip(p, p[1:]):
                eb[(min(a, b), max(a, b))] += share
    return vb, eb


def floyd_warshall_np(n, edges):
    """Same relaxation as :func:`floyd_warshall`, vectorised over one pivot at a time."""
    import numpy as np

    d = np.full((n, n), INF)
    np.fill_diagonal(d, 0.0)
    for u, v in edges:
        d[u, v] = d[v, u] = 1.0
    for k in range(n):
        np.minimum(d, d[:, k, None] + d[None, k, :], out=d)
    return d
