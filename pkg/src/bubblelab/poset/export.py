"""DOT and JSON export of Hasse diagrams of the word lattices."""

from __future__ import annotations

from typing import Any

import networkx as nx
import orjson
from networkx.readwrite import json_graph

from bubblelab.poset.engine import FinitePoset
from bubblelab.poset.lattices import WordOrder
from bubblelab.word import ShuffleWord, cover_label


def word_hasse_graph(
    poset: FinitePoset[ShuffleWord], order: WordOrder, labels: bool = False
) -> nx.DiGraph[int]:
    """Hasse diagram of a word lattice; bubble edges optionally carry cover labels.

    Raises:
        ValueError: If labels are requested for the shuffle order.
    """
    if labels and order is not WordOrder.BUBBLE:
        raise ValueError("Edge labels are only defined for the bubble lattice")
    edge_label = (lambda u, v: str(cover_label(u, v))) if labels else None
    return poset.hasse_graph(node_label=str, edge_label=edge_label)


def _quote(text: str) -> str:
    return '"' + text.replace('"', '\\"') + '"'


def to_dot(graph: nx.DiGraph[int]) -> str:
    """Render a Hasse graph as DOT, drawn bottom to top.

    Example:
        ``digraph { rankdir=BT; "x1 y1" -> "y1 x1" [label="x1-y1"]; }`` on
        separate lines.
    """
    lines = ["digraph {", "  rankdir=BT;"]
    for node in sorted(graph.nodes):
        lines.append(f"  {_quote(graph.nodes[node]['label'])};")
    for source, target in sorted(graph.edges):
        line = f"  {_quote(graph.nodes[source]['label'])} -> {_quote(graph.nodes[target]['label'])}"
        label = graph.edges[source, target].get("label")
        if label is not None:
            line += f" [label={_quote(label)}]"
        lines.append(line + ";")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(graph: nx.DiGraph[int], **metadata: Any) -> bytes:
    """Serialize a Hasse graph in networkx node-link form with extra metadata."""
    data = json_graph.node_link_data(graph, edges="links")
    data.update(metadata)
    return orjson.dumps(data, option=orjson.OPT_SORT_KEYS)
