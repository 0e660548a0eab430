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
"""Canonical labeling of graphs by individualization and refinement.

Colour refinement splits vertex colours by the colour histograms of their
neighbourhoods until the colouring is equitable. When cells remain that are
not singletons, the first smallest one is split by individualizing each of
its vertices in turn. Leaves (discrete colourings) are ordered by the
sequence of node invariants on their path and then by the relabeled
adjacency matrix; the smallest leaf is the canonical labeling.

Subtrees are skipped when their invariants exceed those of the best leaf,
and children lying in one orbit of the automorphisms known so far (those
fixing the individualized vertices) are explored once.
"""
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from doobcodes.config.budgets import DEFAULT_BUDGETS, Budgets
from doobcodes.graphs.graph import Graph

_Key = Tuple[Tuple[bytes, ...], bytes]


def refine(matrix: "np.ndarray", colors: "np.ndarray") -> "np.ndarray":
    """Coarsest equitable refinement of a colouring.

    New colours are numbered by sorting `(old colour, neighbour histogram)`,
    so the result is invariant under relabeling the vertices.
    """
    _, colors = np.unique(colors, return_inverse=True)
    colors = colors.reshape(-1)
    while True:
        cells = int(colors.max()) + 1 if colors.size else 0
        onehot = np.eye(cells, dtype=np.int64)[colors]
        keys = np.concatenate([colors[:, None], matrix @ onehot], axis=1)
        unique, refined = np.unique(keys, axis=0, return_inverse=True)
        if unique.shape[0] == cells:
            return colors
        colors = refined.reshape(-1)


def _node_invariant(matrix: "np.ndarray", colors: "np.ndarray") -> bytes:
    cells = int(colors.max()) + 1
    sizes = np.bincount(colors, minlength=cells)
    representatives = np.array(
        [int(np.flatnonzero(colors == c)[0]) for c in range(cells)]
    )
    quotient = matrix[representatives] @ np.eye(cells, dtype=np.int64)[colors]
    return np.concatenate([sizes, quotient.ravel()]).astype(">i4").tobytes()


def _certificate(matrix: "np.ndarray", labels: "np.ndarray") -> bytes:
    inverse = np.empty_like(labels)
    inverse[labels] = np.arange(labels.size)
    relabeled = matrix[np.ix_(inverse, inverse)] > 0
    return np.packbits(relabeled, axis=1).tobytes()


def _orbit_roots(order: int, generators: Sequence["np.ndarray"]) -> List[int]:
    parent = list(range(order))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in generators:
        for v, w in enumerate(perm.tolist()):
            a, b = find(v), find(w)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(order)]


class _Search:
    def __init__(self, graph: Graph) -> None:
        self.matrix = graph.adjacency().astype(np.int64)
        self.order = graph.order
        self.generators: List["np.ndarray"] = list(graph.known_automorphisms)
        self.best: Optional[_Key] = None
        self.best_labels: Optional["np.ndarray"] = None

    def run(self) -> "np.ndarray":
        self._visit(np.zeros(self.order, dtype=np.int64), [], ())
        assert self.best_labels is not None
        return self.best_labels

    def _visit(
        self, colors: "np.ndarray", path: List[int], trace: Tuple[bytes, ...]
    ) -> None:
        colors = refine(self.matrix, colors)
        trace = trace + (_node_invariant(self.matrix, colors),)
        if self.best is not None and trace > self.best[0][: len(trace)]:
            return
        sizes = np.bincount(colors)
        if (sizes == 1).all():
            self._leaf(colors, trace)
            return
        smallest = sizes[sizes > 1].min()
        target = int(np.flatnonzero(sizes == smallest)[0])
        explored: List[int] = []
        for vertex in np.flatnonzero(colors == target).tolist():
            if explored:
                fixing = [
                    g for g in self.generators if all(g[p] == p for p in path)
                ]
                roots = _orbit_roots(self.order, fixing)
                if roots[vertex] in {roots[v] for v in explored}:
                    continue
            explored.append(vertex)
            child = 2 * colors + 1
            child[vertex] -= 1
            self._visit(child, path + [vertex], trace)

    def _leaf(self, labels: "np.ndarray", trace: Tuple[bytes, ...]) -> None:
        key = (trace, _certificate(self.matrix, labels))
        if self.best is None or key < self.best:
            self.best, self.best_labels = key, labels
        elif key == self.best:
            assert self.best_labels is not None
            inverse = np.empty_like(self.best_labels)
            inverse[self.best_labels] = np.arange(self.order)
            automorphism = inverse[labels]
            if (automorphism != np.arange(self.order)).any():
                self.generators.append(automorphism)


def canonical_labeling(
    graph: Graph, budgets: Budgets = DEFAULT_BUDGETS
) -> "np.ndarray":
    """Canonical position of every vertex.

    Raises:
        BudgetExceededError: if the graph exceeds the graph-order budget.
    """
    budgets.check("graph_order", graph.order)
    if graph.order == 0:
        return np.zeros(0, dtype=np.int64)
    return _Search(graph).run()


def canonical_graph(graph: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> bytes:
    """Canonical adjacency serialization; equal iff graphs are isomorphic.

    Raises:
        BudgetExceededError: if the graph exceeds the graph-order budget.
    """
    labels = canonical_labeling(graph, budgets)
    matrix = graph.adjacency().astype(np.int64)
    header = graph.order.to_bytes(2, "big")
    if graph.order == 0:
        return header
    return header + _certificate(matrix, labels)


def classify_isomorphism(
    graphs: Sequence[Graph],
    threads: int = 0,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> List[List[int]]:
    """Partition of graph indices into isomorphism classes.

    Classes are ordered by their first member; canonical forms are computed
    in parallel, the grouping is sequential.
    """
    with ThreadPoolExecutor(max_workers=threads or None) as executor:
        forms = list(
            executor.map(lambda g: canonical_graph(g, budgets), graphs)
        )
    classes: Dict[bytes, List[int]] = {}
    for index, form in enumerate(forms):
        classes.setdefault(form, []).append(index)
    return list(classes.values())
