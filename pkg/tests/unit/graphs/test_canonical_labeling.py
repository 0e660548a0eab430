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
from typing import Dict, List

import networkx as nx
import numpy as np
import pytest

from doobcodes.alphabet.shape import Shape
from doobcodes.codes.additive_code import AdditiveCode
from doobcodes.codes.duality import dual
from doobcodes.config.budgets import Budgets
from doobcodes.exceptions import BudgetExceededError
from doobcodes.graphs.canonical import (
    canonical_graph,
    canonical_labeling,
    classify_isomorphism,
    refine,
)
from doobcodes.graphs.coset_graph import ambient_graph, coset_graph
from doobcodes.graphs.graph import Graph

GRAPH_CLASSES = [
    ["B1", "C2", "D2", "D6"],
    ["B2", "B3", "C1", "C3", "C8", "D1", "D5"],
    ["B4"],
    ["B5", "C4", "C6"],
    ["B6", "C5", "C7"],
    ["D3", "D4", "D7"],
    ["D8"],
]


def _sample_graphs() -> List[Graph]:
    return [
        Graph.cycle(7),
        Graph.from_edges(10, nx.petersen_graph().edges()),
        ambient_graph(Shape.of(1, 0, 0)),
        Graph.from_edges(12, nx.gnp_random_graph(12, 0.4, seed=7).edges()),
        Graph.from_edges(9, nx.star_graph(8).edges()),
    ]


def test_refinement() -> None:
    """Regular graphs stay one cell; a path splits ends from the middle."""
    petersen = nx.to_numpy_array(nx.petersen_graph(), dtype=np.int64)
    assert set(refine(petersen, np.zeros(10, dtype=np.int64))) == {0}
    path = Graph.from_edges(3, [(0, 1), (1, 2)]).adjacency().astype(np.int64)
    colors = refine(path, np.zeros(3, dtype=np.int64))
    assert colors[0] == colors[2] != colors[1]


@pytest.mark.parametrize("index", range(5))
def test_canonical_form_ignores_vertex_names(
    index: int, rng: np.random.Generator
) -> None:
    """Relabeled copies share their canonical serialization."""
    graph = _sample_graphs()[index]
    labels = canonical_labeling(graph)
    assert sorted(labels.tolist()) == list(range(graph.order))
    form = canonical_graph(graph)
    for _ in range(3):
        moved = graph.relabel(rng.permutation(graph.order))
        assert canonical_graph(moved) == form


def test_cospectral_mates_are_told_apart() -> None:
    """Shrikhande and rook's graphs are not isomorphic."""
    shrikhande = ambient_graph(Shape.of(1, 0, 0))
    rook = ambient_graph(Shape.of(0, 0, 2))
    assert canonical_graph(shrikhande) != canonical_graph(rook)


def test_classes_in_order_of_first_member(rng: np.random.Generator) -> None:
    """Isomorphism classes of a mixed list."""
    cycle = Graph.cycle(5)
    graphs = [
        cycle,
        Graph.complete(5),
        cycle.relabel(rng.permutation(5)),
        Graph.complete(5).relabel(rng.permutation(5)),
        Graph.from_edges(5, [(0, 1)]),
    ]
    assert classify_isomorphism(graphs, threads=2) == [[0, 2], [1, 3], [4]]
    assert classify_isomorphism([]) == []


def test_graph_order_budget() -> None:
    """Graphs beyond the budget are refused."""
    with pytest.raises(BudgetExceededError):
        canonical_graph(Graph.cycle(20), Budgets(graph_order=10))
    assert canonical_graph(Graph(np.zeros((0, 0), dtype=bool))) == b"\x00\x00"


@pytest.mark.slow
def test_coset_graphs_of_the_size_64_tables(
    table_codes: Dict[str, AdditiveCode],
) -> None:
    """The 26 two-weight codes give seven non-isomorphic SRGs."""
    labels = sorted(table_codes, key=lambda label: (label[0], int(label[1:])))
    graphs = [coset_graph(dual(table_codes[label])) for label in labels]
    classes = classify_isomorphism(graphs)
    found = sorted(sorted(labels[i] for i in group) for group in classes)
    assert found == sorted(sorted(group) for group in GRAPH_CLASSES)
