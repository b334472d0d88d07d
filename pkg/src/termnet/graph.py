"""Weighted collocation networks over document terms.

A collocation network links unique terms (words or noun phrases) of a
single document; edge weights count co-occurrences.  Networks come in
directed and undirected flavours, each optionally "simplified"
(self-loops removed).  Instances are immutable after construction and
safe to share across threads.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Iterable, Mapping


@dataclass(frozen=True)
class TermNode:
    """A unique term with its in-document occurrence count."""

    label: str
    term_frequency: int

    def __post_init__(self):
        if not self.label:
            raise ValueError("node label must be nonempty")
        if self.label != self.label.lower():
            raise ValueError(f"node label must be lowercase: {self.label!r}")
        if self.term_frequency < 1:
            raise ValueError(f"term_frequency must be >= 1: {self.label!r}")


class CollocationNetwork:
    """Immutable weighted graph over :class:`TermNode` objects.

    Edges are stored as a map from node-label pair to positive weight.
    Undirected networks keep each unordered pair exactly once (keys are
    canonicalized); repeated insertions of the same pair accumulate into
    one weight, so parallel edges never exist.
    """

    def __init__(
        self,
        nodes: Iterable[TermNode],
        edges: Mapping[tuple[str, str], float],
        *,
        directed: bool,
        simplified: bool = False,
    ):
        node_map: dict[str, TermNode] = {}
        for node in nodes:
            previous = node_map.get(node.label)
            if previous is not None and previous != node:
                raise ValueError(f"conflicting nodes for label {node.label!r}")
            node_map[node.label] = node

        edge_map: dict[tuple[str, str], float] = {}
        for (u, v), weight in edges.items():
            if weight <= 0:
                raise ValueError(f"edge weight must be > 0: ({u!r}, {v!r}) -> {weight}")
            if u not in node_map or v not in node_map:
                raise ValueError(f"edge endpoint missing from node set: ({u!r}, {v!r})")
            if simplified and u == v:
                raise ValueError(f"simplified network may not contain self-loop {u!r}")
            key = (u, v) if directed else _undirected_key(u, v)
            edge_map[key] = edge_map.get(key, 0.0) + float(weight)

        self._nodes = node_map
        self._edges = edge_map
        self._directed = bool(directed)
        self._simplified = bool(simplified)

    # -- basic introspection ------------------------------------------------

    @property
    def directed(self) -> bool:
        return self._directed

    @property
    def simplified(self) -> bool:
        return self._simplified

    @property
    def nodes(self) -> list[TermNode]:
        """Nodes in label order."""
        return [self._nodes[label] for label in sorted(self._nodes)]

    def labels(self) -> list[str]:
        return sorted(self._nodes)

    def __contains__(self, label: str) -> bool:
        return label in self._nodes

    def __len__(self) -> int:
        return len(self._nodes)

    @property
    def node_count(self) -> int:
        return len(self._nodes)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def term_frequency(self, label: str) -> int:
        return self._nodes[label].term_frequency

    def edges(self) -> list[tuple[str, str, float]]:
        """Edges as (source, target, weight), sorted for determinism."""
        return sorted((u, v, w) for (u, v), w in self._edges.items())

    def edge_weight(self, u: str, v: str) -> float:
        key = (u, v) if self._directed else _undirected_key(u, v)
        return self._edges.get(key, 0.0)

    def total_weight(self) -> float:
        """Sum of edge weights, counting each stored edge (loops included) once."""
        return sum(self._edges.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, CollocationNetwork):
            return NotImplemented
        return (
            self._directed == other._directed
            and self._simplified == other._simplified
            and self._nodes == other._nodes
            and self._edges == other._edges
        )

    def __repr__(self) -> str:
        kind = "directed" if self._directed else "undirected"
        if self._simplified:
            kind += " simplified"
        return (
            f"<CollocationNetwork {kind}, {self.node_count} nodes, "
            f"{self.edge_count} edges>"
        )

    # -- transformations ----------------------------------------------------

    def to_undirected(self) -> "CollocationNetwork":
        """Merge reciprocal edges u->v and v->u into one edge with summed weight.

        The node set is unchanged; self-loops are preserved.
        """
        if not self._directed:
            raise ValueError("network is already undirected")
        merged: dict[tuple[str, str], float] = {}
        for (u, v), w in self._edges.items():
            key = _undirected_key(u, v)
            merged[key] = merged.get(key, 0.0) + w
        return CollocationNetwork(
            self._nodes.values(), merged, directed=False, simplified=self._simplified
        )

    def simplify(self) -> "CollocationNetwork":
        """Drop all self-loops; every node and non-loop edge survives."""
        kept = {pair: w for pair, w in self._edges.items() if pair[0] != pair[1]}
        return CollocationNetwork(
            self._nodes.values(), kept, directed=self._directed, simplified=True
        )

    # -- edge-list text format ----------------------------------------------

    def dumps(self) -> str:
        """Serialize as edge-list text (see :func:`loads`).

        All nodes are listed with their term frequencies, so isolated
        nodes survive a round trip.
        """
        out = io.StringIO()
        out.write(
            f"# collocation-network directed={int(self._directed)} "
            f"simplified={int(self._simplified)}\n"
        )
        out.write("*nodes\n")
        for label in sorted(self._nodes):
            out.write(f"{label}\t{self._nodes[label].term_frequency}\n")
        out.write("*edges\n")
        for u, v, w in self.edges():
            out.write(f"{u}\t{v}\t{_format_weight(w)}\n")
        return out.getvalue()


def _undirected_key(u: str, v: str) -> tuple[str, str]:
    return (u, v) if u <= v else (v, u)


def _format_weight(w: float) -> str:
    return str(int(w)) if float(w).is_integer() else repr(float(w))


def loads(text: str) -> CollocationNetwork:
    """Parse the edge-list text produced by :meth:`CollocationNetwork.dumps`."""
    directed = simplified = None
    nodes: list[TermNode] = []
    edges: dict[tuple[str, str], float] = {}
    section = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            for field in line[1:].split():
                if field.startswith("directed="):
                    directed = bool(int(field.split("=", 1)[1]))
                elif field.startswith("simplified="):
                    simplified = bool(int(field.split("=", 1)[1]))
            continue
        if line == "*nodes":
            section = "nodes"
            continue
        if line == "*edges":
            section = "edges"
            continue
        parts = line.split("\t")
        if section == "nodes" and len(parts) == 2:
            nodes.append(TermNode(parts[0], int(parts[1])))
        elif section == "edges" and len(parts) == 3:
            edges[(parts[0], parts[1])] = float(parts[2])
        else:
            raise ValueError(f"malformed edge-list line {lineno}: {raw!r}")
    if directed is None or simplified is None:
        raise ValueError("edge-list header missing directed=/simplified= fields")
    return CollocationNetwork(nodes, edges, directed=directed, simplified=simplified)
