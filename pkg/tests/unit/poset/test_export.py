"""Unit tests for Hasse-diagram export."""

import warnings

import orjson
import pytest

from bubblelab.poset import (
    WordOrder,
    bubble_poset,
    shuffle_poset,
    to_dot,
    to_json,
    word_hasse_graph,
)
from bubblelab.word import Params


class TestWordHasseGraph:
    """Tests for word_hasse_graph."""

    def test_nodes_carry_words(self) -> None:
        """Node labels are the word serializations."""
        graph = word_hasse_graph(bubble_poset(Params(1, 1)), WordOrder.BUBBLE)
        labels = {graph.nodes[node]["label"] for node in graph.nodes}
        assert labels == {"-", "x1", "y1", "x1 y1", "y1 x1"}
        assert graph.number_of_edges() == 5

    def test_bubble_edges_carry_cover_labels(self) -> None:
        """With labels=True, each bubble cover carries its loop or edge label."""
        graph = word_hasse_graph(bubble_poset(Params(1, 1)), WordOrder.BUBBLE, labels=True)
        edge_labels = {
            (graph.nodes[u]["label"], graph.nodes[v]["label"]): data["label"]
            for u, v, data in graph.edges(data=True)
        }
        assert edge_labels[("x1 y1", "y1 x1")] == "x1-y1"
        assert edge_labels[("x1", "-")] == "x1"
        assert edge_labels[("-", "y1")] == "y1"

    def test_shuffle_labels_rejected(self) -> None:
        """Cover labels exist for the bubble lattice only."""
        with pytest.raises(ValueError, match="bubble lattice"):
            word_hasse_graph(shuffle_poset(Params(1, 1)), WordOrder.SHUFFLE, labels=True)


class TestSerialization:
    """Tests for to_dot and to_json."""

    def test_dot(self) -> None:
        """DOT output is drawn bottom to top and quotes words."""
        graph = word_hasse_graph(bubble_poset(Params(1, 1)), WordOrder.BUBBLE, labels=True)
        dot = to_dot(graph)
        assert dot.startswith("digraph {\n  rankdir=BT;\n")
        assert '  "x1 y1" -> "y1 x1" [label="x1-y1"];' in dot
        assert dot.endswith("}\n")

    def test_dot_without_labels(self) -> None:
        """Unlabelled edges have no attribute list."""
        graph = word_hasse_graph(shuffle_poset(Params(1, 0)), WordOrder.SHUFFLE)
        assert '  "x1" -> "-";' in to_dot(graph)

    def test_json_includes_metadata(self) -> None:
        """JSON is node-link data plus the given metadata."""
        graph = word_hasse_graph(shuffle_poset(Params(1, 1)), WordOrder.SHUFFLE)
        data = orjson.loads(to_json(graph, order="shuf", m=1, n=1))
        assert data["order"] == "shuf"
        assert (data["m"], data["n"]) == (1, 1)
        assert len(data["nodes"]) == 5

    def test_json_edges_are_links(self) -> None:
        """Edges go under "links" and networkx emits no deprecation warning."""
        graph = word_hasse_graph(shuffle_poset(Params(1, 1)), WordOrder.SHUFFLE)
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            data = orjson.loads(to_json(graph))
        assert "edges" not in data
        assert len(data["links"]) == 6
        assert {"source", "target"} <= set(data["links"][0])
