"""Slow, obviously-correct reference computations used by the tests.

Nothing here imports the package's traversal code.
"""

import math
from collections import deque
from itertools import combinations


def adjacency(n, edges):
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return [sorted(a) for a in adj]


def bfs(n, edges, src, adj=None):
    adj = adj or adjacency(n, edges)
    dist = [math.inf] * n
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] == math.inf:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def all_pairs(n, edges):
    adj = adjacency(n, edges)
    return [bfs(n, edges, s, adj) for s in range(n)]


def dfs_parents(n, edges, root=0):
    """Recursive DFS visiting neighbours in ascending order."""
    adj = adjacency(n, edges)
    parent = [None] * n
    seen = [False] * n

    def visit(u):
        seen[u] = True
        for w in adj[u]:
            if not seen[w]:
                parent[w] = u
                visit(w)

    visit(root)
    return parent


def is_connected(n, edges):
    return n > 0 and all(d != math.inf for d in bfs(n, edges, 0))


def brute_force_connected_count(n):
    pairs = list(combinations(range(n), 2))
    total = 0
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        total += is_connected(n, edges)
    return total


def is_automorphism(n, edges, perm):
    es = {frozenset(e) for e in edges}
    return {frozenset((perm[u], perm[v])) for u, v in edges} == es
