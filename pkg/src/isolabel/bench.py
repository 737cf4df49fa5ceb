"""Label-size measurements against the explicit bounds."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable, Sequence

from .bounds import BOUND_FORMULAS, label_bound
from .generators import random_graph, random_tree
from .graph import Graph
from .schemes import encode_components

DEFAULT_PS = (0.01, 0.1, 0.5)


@dataclass(frozen=True)
class BenchRow:
    scheme: str
    family: str
    n: int
    p: float | None
    seeds: int
    max_label_bits: int
    bound_bits: int

    @property
    def ratio(self) -> float:
        return self.max_label_bits / self.bound_bits

    @property
    def within_bound(self) -> bool:
        return self.max_label_bits <= self.bound_bits


def max_label_bits(g: Graph, scheme: str) -> int:
    """Longest label over all vertices; components are labelled separately."""
    return max(len(c.label) for c in encode_components(g, scheme))


def bench_graphs(family: str, n: int, p: float | None, seeds: Iterable[int]) -> Iterable[Graph]:
    for seed in seeds:
        if family == "tree":
            yield random_tree(n, seed)
        elif family == "random":
            yield random_graph(n, p, seed)
        else:
            raise ValueError(f"unknown family {family!r}")


def run_bench(scheme: str, family: str, sizes: Sequence[int], seeds: int, ps: Sequence[float] = DEFAULT_PS) -> list[BenchRow]:
    rows = []
    for n in sizes:
        for p in (ps if family == "random" else (None,)):
            worst = max(max_label_bits(g, scheme) for g in bench_graphs(family, n, p, range(seeds)))
            rows.append(BenchRow(scheme, family, n, p, seeds, worst, label_bound(scheme, n)))
    return rows


def rows_to_csv(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["scheme", "family", "n", "p", "seeds", "max_label_bits", "bound_bits", "ratio", "bound_formula"])
    for r in rows:
        w.writerow([
            r.scheme, r.family, r.n, "" if r.p is None else r.p, r.seeds,
            r.max_label_bits, r.bound_bits, f"{r.ratio:.4f}", BOUND_FORMULAS[r.scheme],
        ])
    return buf.getvalue()
