"""
Heavy paths keep ancestor lists short
=====================================

List each heavy child right after its parent.  A root path then breaks into
at most floor(log2 n) + 1 runs of consecutive indices, so a label can store
its ancestors as a few (first, last) pairs.
"""

from collections import Counter

import numpy as np

from isolabel import dfs_spanning_tree, heavy_coloring, random_tree
from isolabel.bounds import floor_log2
from isolabel.hdv import index_runs

n = 5000
tree = dfs_spanning_tree(random_tree(n, 11), 0)
coloring = heavy_coloring(tree)
pos = coloring.ordering.positions

runs = Counter()
for v in range(n):
    path = tree.root_path(v)
    runs[len(index_runs(np.array([pos[a] for a in path])))] += 1

print(f"tree depth {int(tree.depth.max())}, limit floor(log2 n) + 1 = {floor_log2(n) + 1}")
for k in sorted(runs):
    print(f"  {runs[k]:5d} vertices whose root path has {k} runs")
