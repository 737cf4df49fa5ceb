"""Text format for label sets.

::

    <n> <scheme>
    order: <v_1> <v_2> ... <v_n>
    <vertex-id> <bit-length> <hex, MSB first, zero-padded to whole bytes>
    ...
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .bits import BitString
from .graph import VertexOrdering
from .schemes import SCHEME_NAMES


class LabelFileError(ValueError):
    pass


@dataclass(frozen=True)
class LabelFile:
    scheme: str
    ordering: VertexOrdering
    labels: tuple[BitString, ...]

    @property
    def order(self) -> int:
        return len(self.labels)


def format_labels(lf: LabelFile) -> str:
    lines = [f"{lf.order} {lf.scheme}", "order: " + " ".join(map(str, lf.ordering.perm))]
    lines.extend(f"{v} {label.length} {label.to_hex()}" for v, label in enumerate(lf.labels))
    return "\n".join(lines) + "\n"


def parse_labels(text: str) -> LabelFile:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2:
        raise LabelFileError("label file needs a header and an order line")
    head = lines[0].split()
    if len(head) != 2 or not head[0].isdigit() or head[1] not in SCHEME_NAMES:
        raise LabelFileError(f"bad header {lines[0]!r}; expected '<n> <scheme>'")
    n, scheme = int(head[0]), head[1]
    if not lines[1].startswith("order:"):
        raise LabelFileError("second line must start with 'order:'")
    try:
        ordering = VertexOrdering(tuple(int(t) for t in lines[1][len("order:"):].split()))
    except ValueError as exc:
        raise LabelFileError(f"bad order line: {exc}") from None
    if len(ordering) != n or len(lines) - 2 != n:
        raise LabelFileError(f"header declares {n} vertices")
    labels: list[BitString | None] = [None] * n
    for line in lines[2:]:
        toks = line.split()
        try:
            v, length = int(toks[0]), int(toks[1])
            label = BitString.from_hex(toks[2] if len(toks) > 2 else "", length)
        except (ValueError, IndexError) as exc:
            raise LabelFileError(f"bad label line {line!r}: {exc}") from None
        if not 0 <= v < n or labels[v] is not None:
            raise LabelFileError(f"vertex id {v} out of range or repeated")
        labels[v] = label
    return LabelFile(scheme, ordering, tuple(labels))


def read_labels(path: str | Path) -> LabelFile:
    return parse_labels(Path(path).read_text())


def write_labels(lf: LabelFile, path: str | Path) -> None:
    Path(path).write_text(format_labels(lf))


def format_mapping(labels) -> str:
    """Sidecar for a universal graph: ``<vertex-id> <bit-length> <hex>`` per vertex."""
    return "".join(f"{v} {label.length} {label.to_hex()}\n" for v, label in enumerate(labels))


def parse_mapping(text: str) -> tuple[BitString, ...]:
    out = []
    for i, line in enumerate(ln for ln in text.splitlines() if ln.strip()):
        toks = line.split()
        try:
            v, length = int(toks[0]), int(toks[1])
            label = BitString.from_hex(toks[2] if len(toks) > 2 else "", length)
        except (ValueError, IndexError) as exc:
            raise LabelFileError(f"bad mapping line {line!r}: {exc}") from None
        if v != i:
            raise LabelFileError(f"mapping lines must list vertices 0, 1, ... in order (got {v})")
        out.append(label)
    return tuple(out)
