"""Crystal graph generation, classical decomposition and export.

Graphs are generated by breadth-first closure under the requested
operator labels, with nodes ordered layer by layer and canonically inside
each layer, so identical invocations produce identical graphs, byte for
byte after export.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .tableau import Column
from .tensor import TensorElt, act_e, act_f, rank_of, weight_of
from .weight import Weight

DEFAULT_NODE_BUDGET = 10_000_000


class NodeBudgetExceeded(RuntimeError):
    """Raised when a closure grows past the configured node budget."""


def sort_key(x):
    if isinstance(x, Column):
        return (0, x.sort_key())
    return (1, len(x.factors), tuple(sort_key(f) for f in x.factors))


@dataclass(frozen=True)
class CrystalGraph:
    n: int
    nodes: tuple
    edges: tuple[tuple[int, int, int], ...]
    labels: tuple[int, ...]
    classical_only: bool
    _index: dict = field(default_factory=dict, compare=False, repr=False)

    def index_of(self, node) -> int:
        if not self._index:
            self._index.update({b: i for i, b in enumerate(self.nodes)})
        return self._index[node]


def generate(
    seeds: Iterable,
    labels: Sequence[int],
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> CrystalGraph:
    """Closure of the seed set under the lowering and raising operators
    of the given labels."""
    labels = tuple(sorted(set(labels)))
    layer = sorted(set(seeds), key=sort_key)
    if not layer:
        raise ValueError("at least one seed element is required")
    n = rank_of(layer[0])
    seen = set(layer)
    ordered = []
    while layer:
        ordered.extend(layer)
        if len(ordered) > node_budget:
            raise NodeBudgetExceeded(
                f"crystal closure exceeded the node budget of {node_budget}"
            )
        nxt = set()
        for b in layer:
            for i in labels:
                for op in (act_f, act_e):
                    y = op(i, b)
                    if y is not None and y not in seen:
                        nxt.add(y)
        seen.update(nxt)
        layer = sorted(nxt, key=sort_key)
    index = {b: j for j, b in enumerate(ordered)}
    edges = []
    for j, b in enumerate(ordered):
        for i in labels:
            y = act_f(i, b)
            if y is not None:
                edges.append((j, i, index[y]))
    return CrystalGraph(
        n=n,
        nodes=tuple(ordered),
        edges=tuple(edges),
        labels=labels,
        classical_only=0 not in labels,
    )


def generate_kr(n: int, k: int, labels: Sequence[int] | None = None,
                node_budget: int = DEFAULT_NODE_BUDGET) -> CrystalGraph:
    """The full KR column crystal, generated from the top column 1..k."""
    seed = Column(n, tuple(range(1, k + 1)))
    if labels is None:
        labels = range(0, n + 1)
    return generate([seed], labels, node_budget)


def classical_labels(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def classical_highest(elements: Iterable) -> list:
    """Elements killed by every classical raising operator."""
    out = []
    for b in sorted(elements, key=sort_key):
        n = rank_of(b)
        if all(act_e(i, b) is None for i in range(1, n + 1)):
            out.append(b)
    return out


def _check_classically_closed(elements: set) -> None:
    for b in elements:
        n = rank_of(b)
        for i in range(1, n + 1):
            for op in (act_f, act_e):
                y = op(i, b)
                if y is not None and y not in elements:
                    raise ValueError(
                        f"set is not closed under classical operators: "
                        f"label {i} maps {b} outside"
                    )


def decompose(elements: Iterable) -> Counter:
    """Multiset of classical highest weights of a classically closed set.

    By general crystal theory this multiset determines the decomposition
    into classical components.
    """
    elements = set(elements)
    _check_classically_closed(elements)
    return Counter(weight_of(b) for b in classical_highest(elements))


def component(seed, node_budget: int = DEFAULT_NODE_BUDGET) -> set:
    """The classical component through a single element."""
    n = rank_of(seed)
    return set(generate([seed], classical_labels(n), node_budget).nodes)


@dataclass(frozen=True)
class Character:
    """A formal character: weight -> multiplicity."""

    multiplicities: tuple[tuple[Weight, int], ...]

    @staticmethod
    def of(elements: Iterable) -> "Character":
        counts = Counter(weight_of(b) for b in elements)
        return Character(tuple(sorted(counts.items(), key=lambda kv: kv[0].coords2)))

    def mass(self) -> int:
        return sum(m for _, m in self.multiplicities)

    def __add__(self, other: "Character") -> "Character":
        counts = Counter(dict(self.multiplicities))
        counts.update(dict(other.multiplicities))
        return Character(tuple(sorted(counts.items(), key=lambda kv: kv[0].coords2)))


def character(elements: Iterable) -> Character:
    return Character.of(elements)


def characters_equal(a: Character, b: Character) -> bool:
    return a.multiplicities == b.multiplicities


# ---------------------------------------------------------------------------
# export


def _node_text(b) -> str:
    return str(b)


def to_dot(g: CrystalGraph) -> str:
    lines = ["digraph crystal {"]
    for j, b in enumerate(g.nodes):
        lines.append(f'  {j} [label="{_node_text(b)}"];')
    for s, i, t in g.edges:
        lines.append(f'  {s} -> {t} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: CrystalGraph) -> str:
    doc = {
        "n": g.n,
        "classical_only": g.classical_only,
        "labels": list(g.labels),
        "nodes": [_node_text(b) for b in g.nodes],
        "edges": [list(e) for e in g.edges],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _parse_node(text: str, n: int):
    if " | " in text or "|" in text:
        parts = [p.strip() for p in text.split("|")]
        return TensorElt(tuple(Column.parse(p, n) for p in parts))
    return Column.parse(text, n)


def from_json(text: str) -> CrystalGraph:
    doc = json.loads(text)
    n = doc["n"]
    nodes = tuple(_parse_node(t, n) for t in doc["nodes"])
    edges = tuple(tuple(e) for e in doc["edges"])
    return CrystalGraph(
        n=n,
        nodes=nodes,
        edges=edges,
        labels=tuple(doc["labels"]),
        classical_only=doc["classical_only"],
    )


def export(g: CrystalGraph, fmt: str) -> bytes:
    if fmt == "dot":
        return to_dot(g).encode()
    if fmt == "json":
        return to_json(g).encode()
    raise ValueError(f"unknown export format {fmt!r}")
