"""
How long are the labels?
========================

Maximum label length on random graphs and trees, next to the explicit
bounds the encoders promise.  The flat scheme is capped at about four bits
per vertex; the hierarchical one at about log2(3) = 1.585 bits per vertex
plus a polylogarithmic part; separator labels on trees stay
polylogarithmic.
"""

import numpy as np

from isolabel.bench import run_bench

for scheme, family in (("dv", "random"), ("hdv", "random"), ("sep", "tree")):
    for row in run_bench(scheme, family, [100, 1000, 3000], seeds=3):
        p = "" if row.p is None else f"p={row.p:<5}"
        print(f"{scheme:4}{family:7}n={row.n:<5} {p:8} max {row.max_label_bits:6d}  "
              f"bound {row.bound_bits:6d}  ratio {row.ratio:.3f}")

# bits per vertex on a dense graph
for scheme in ("dv", "hdv"):
    (row,) = run_bench(scheme, "random", [3000], seeds=1, ps=[0.5])
    print(f"{scheme}: {row.max_label_bits / row.n:.3f} bits per vertex (log2 3 = {np.log2(3):.3f})")
