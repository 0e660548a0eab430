#  Copyright (c) doobcodes contributors 2026. All Rights Reserved.
#
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at:
#
#       https://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
#  or implied. See the License for the specific language governing
#  permissions and limitations under the License.
import networkx as nx
import numpy as np
import pytest
from pydantic import ValidationError

from doobcodes.codes.weights import IntersectionArray
from doobcodes.exceptions import ShapeMismatchError
from doobcodes.graphs.graph import (
    Graph,
    SrgParams,
    distance_regular_array,
    distances,
    srg_params,
)


def _petersen() -> Graph:
    return Graph.from_edges(10, nx.petersen_graph().edges())


def test_small_strongly_regular_graphs() -> None:
    """The pentagon and the Petersen graph."""
    assert srg_params(Graph.cycle(5)) == SrgParams(v=5, k=2, lambda_=0, mu=1)
    assert str(srg_params(_petersen())) == "(10,3,0,1)"


def test_trivial_cases_are_not_strongly_regular() -> None:
    """Complete, edgeless and irregular graphs give `None`."""
    assert srg_params(Graph.complete(4)) is None
    assert srg_params(Graph(np.zeros((4, 4), dtype=bool))) is None
    assert srg_params(Graph.from_edges(3, [(0, 1), (1, 2)])) is None
    assert srg_params(Graph.cycle(6)) is None


def test_infeasible_parameters() -> None:
    """`k(k - lambda - 1) = (v - k - 1) mu` is enforced."""
    with pytest.raises(ValidationError):
        SrgParams(v=5, k=2, lambda_=1, mu=1)


def test_distance_regular_arrays() -> None:
    """Even cycles, the Petersen graph, and graphs that are not."""
    assert distance_regular_array(Graph.cycle(6)) == IntersectionArray(
        b=(2, 1, 1), c=(1, 1, 2)
    )
    assert str(distance_regular_array(_petersen())) == "{3,2;1,1}"
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert distance_regular_array(path) is None
    two_edges = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert distance_regular_array(two_edges) is None
    assert (distances(two_edges)[0] == [0, 1, -1, -1]).all()


def test_adjacency_validation() -> None:
    """Matrices must be square, symmetric and loop-free."""
    with pytest.raises(ShapeMismatchError):
        Graph(np.zeros((2, 3), dtype=bool))
    with pytest.raises(ShapeMismatchError):
        Graph(np.array([[0, 1], [0, 0]], dtype=bool))
    with pytest.raises(ShapeMismatchError):
        Graph(np.eye(2, dtype=bool))


def test_accessors() -> None:
    """Neighbours, degrees, equality and the networkx view."""
    graph = _petersen()
    assert graph.neighbours(0) == sorted(nx.petersen_graph()[0])
    assert graph.degrees().tolist() == [3] * 10
    assert graph == _petersen()
    assert hash(graph) == hash(_petersen())
    assert graph != Graph.cycle(10)
    assert repr(graph) == "Graph(order=10, edges=15)"
    assert nx.is_isomorphic(graph.to_networkx(), nx.petersen_graph())


def test_relabeling(rng: np.random.Generator) -> None:
    """Relabeling gives an isomorphic graph with the same parameters."""
    graph = _petersen()
    perm = rng.permutation(graph.order)
    moved = graph.relabel(perm)
    assert moved.adjacency()[perm[0], perm[1]] == graph.adjacency()[0, 1]
    assert srg_params(moved) == srg_params(graph)
    assert nx.is_isomorphic(moved.to_networkx(), graph.to_networkx())


def test_adjacency_lists() -> None:
    """The text format lists sorted neighbours per vertex."""
    text = Graph.cycle(4).to_adjacency_list()
    assert text == "0: 1 3\n1: 0 2\n2: 1 3\n3: 0 2\n"
    assert Graph.from_adjacency_list(text) == Graph.cycle(4)
    assert Graph.from_adjacency_list("0:\n1:\n").order == 2
    with pytest.raises(ValueError):
        Graph.from_adjacency_list("0 1\n")
    with pytest.raises(ShapeMismatchError):
        Graph.from_adjacency_list("0: 1\n1:\n")
