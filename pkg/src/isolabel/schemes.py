"""Uniform access to the three labelling schemes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

from .bits import BitString
from .dv import dv_decode, dv_encode
from .graph import INF, Graph, VertexOrdering, components
from .hdv import hdv_decode, hdv_encode
from .hierarchy import hub_distance
from .separator import SeparatorOracle, sep_decode, sep_encode_graph

SCHEME_NAMES = ("dv", "hdv", "sep")


@dataclass(frozen=True)
class Scheme:
    name: str
    encode: Callable[[Graph], tuple[VertexOrdering, tuple[BitString, ...]]]
    decode: Callable[[BitString], object]
    distance: Callable[[object, object], int]
    hierarchical: bool


def _dv_encode(g: Graph):
    codebook, labels = dv_encode(g)
    return codebook.ordering, labels


def _dv_distance(a: tuple, b: tuple) -> int:
    if len(a) != len(b):
        raise ValueError("labels come from graphs of different order")
    return b[a.index(0)]


def _sep_encode(g: Graph, oracle: SeparatorOracle | None = None):
    _, ordering, labels = sep_encode_graph(g, oracle)
    return ordering, labels


SCHEMES = {
    "dv": Scheme("dv", _dv_encode, dv_decode, _dv_distance, hierarchical=False),
    "hdv": Scheme("hdv", hdv_encode, hdv_decode, hub_distance, hierarchical=True),
    "sep": Scheme("sep", _sep_encode, sep_decode, hub_distance, hierarchical=True),
}


def get_scheme(name: str) -> Scheme:
    try:
        return SCHEMES[name]
    except KeyError:
        raise ValueError(f"unknown scheme {name!r}; expected one of {', '.join(SCHEME_NAMES)}") from None


def label_distance(scheme: str, a: BitString, b: BitString) -> int:
    s = get_scheme(scheme)
    return s.distance(s.decode(a), s.decode(b))


class ComponentLabel(NamedTuple):
    """A label for a vertex of a possibly disconnected graph.

    ``component`` is the index of the vertex's component (ordered by smallest
    vertex id); ``label`` comes from encoding that component on its own.
    """

    component: int
    label: BitString


def encode_components(g: Graph, scheme: str) -> tuple[ComponentLabel, ...]:
    """Label each component separately, relabelling it ``0..c-1`` in id order."""
    s = get_scheme(scheme)
    comps = components(g)
    if len(comps) == 1:
        return tuple(ComponentLabel(0, label) for label in s.encode(g)[1])
    out: list[ComponentLabel | None] = [None] * g.order
    for i, comp in enumerate(comps):
        sub, back = g.induced_subgraph(comp)
        _, labels = s.encode(sub)
        for local, v in enumerate(back):
            out[v] = ComponentLabel(i, labels[local])
    return tuple(out)


def component_distance(scheme: str, a: ComponentLabel, b: ComponentLabel) -> float:
    if a.component != b.component:
        return INF
    return label_distance(scheme, a.label, b.label)
