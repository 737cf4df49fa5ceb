"""
One graph containing all small graphs isometrically
===================================================

Collect the labels of every connected graph on at most five vertices.  Join
two labels when the decoded data say the vertices could be adjacent.  Each
source graph then sits inside that graph with all its distances intact.
"""

import time

from isolabel import (
    build_full_universal,
    build_realized_universal,
    complete_graph,
    disjoint_union_universal,
    embed_disjoint,
    embed_labels,
    enumerate_all_graphs,
    enumerate_connected_graphs,
    verify_isometric,
    verify_members,
)

for scheme in ("hdv", "dv", "sep"):
    start = time.perf_counter()
    graphs = [g for n in range(1, 6) for g in enumerate_connected_graphs(n)]
    h = build_realized_universal(graphs, scheme)
    reports = verify_members(h)
    print(f"{scheme}: {len(graphs)} graphs -> {h.order} vertices, {h.graph.size} edges, "
          f"all isometric: {all(r.passed for r in reports)} ({time.perf_counter() - start:.1f}s)")

# disconnected graphs: one copy per component
connected = [g for n in range(1, 5) for g in enumerate_connected_graphs(n)]
union = disjoint_union_universal([build_realized_universal(connected, "hdv")] * 4)
ok = all(verify_isometric(g, union, embed_disjoint(g, union)).passed for g in enumerate_all_graphs(4))
print(f"all 64 graphs on 4 vertices embed into the 4-fold union ({union.order} vertices): {ok}")

# every bit string that decodes, not just the realized ones
for scheme in ("dv", "hdv"):
    h = build_full_universal(14, scheme)
    k2 = complete_graph(2)
    print(f"{scheme}, strings up to 14 bits: {h.order} vertices; "
          f"K2 isometric: {verify_isometric(k2, h, embed_labels(k2, h)).passed}")
