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

from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from pydantic import BaseModel, root_validator

from doobcodes.codes.weights import IntersectionArray
from doobcodes.exceptions import ShapeMismatchError


class SrgParams(BaseModel):
    """Parameters `(v, k, lambda, mu)` of a strongly regular graph."""

    v: int
    k: int
    lambda_: int
    mu: int

    @root_validator(skip_on_failure=True)
    def _feasible(cls, values: dict) -> dict:  # type: ignore[type-arg]
        v, k = values["v"], values["k"]
        lam, mu = values["lambda_"], values["mu"]
        if k * (k - lam - 1) != (v - k - 1) * mu:
            raise ValueError(
                f"({v},{k},{lam},{mu}) violates k(k-lambda-1) = (v-k-1)mu"
            )
        return values

    class Config:
        """Pydantic configuration class."""

        frozen = True

    def as_tuple(self) -> Tuple[int, int, int, int]:
        """`(v, k, lambda, mu)`."""
        return self.v, self.k, self.lambda_, self.mu

    def __str__(self) -> str:
        return "({},{},{},{})".format(*self.as_tuple())


class Graph:
    """An undirected simple graph on vertices `0..order-1`.

    Adjacency rows are kept as packed bitsets.

    Attributes:
        order: Number of vertices.
        rows: uint8 array `(order, ceil(order / 8))` of packed adjacency rows.
        known_automorphisms: Vertex permutations known to preserve the graph
            (e.g. the translations of a Cayley graph).
    """

    def __init__(
        self,
        adjacency: "np.ndarray",
        known_automorphisms: Sequence["np.ndarray"] = (),
    ) -> None:
        """Builds a graph from a square boolean adjacency matrix.

        Raises:
            ShapeMismatchError: if the matrix is not square, not symmetric or
                has loops.
        """
        matrix = np.asarray(adjacency, dtype=bool)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ShapeMismatchError(
                f"Adjacency matrix of shape {matrix.shape} is not square."
            )
        if (matrix != matrix.T).any() or matrix.diagonal().any():
            raise ShapeMismatchError(
                "Adjacency must be symmetric and loop-free."
            )
        self.order = matrix.shape[0]
        self.rows = np.packbits(matrix, axis=1)
        self.known_automorphisms = tuple(
            np.asarray(perm, dtype=np.int64) for perm in known_automorphisms
        )

    @classmethod
    def from_edges(
        cls, order: int, edges: Iterable[Tuple[int, int]]
    ) -> "Graph":
        """Graph with the given edge list."""
        matrix = np.zeros((order, order), dtype=bool)
        for u, w in edges:
            matrix[u, w] = matrix[w, u] = True
        return cls(matrix)

    @classmethod
    def cycle(cls, order: int) -> "Graph":
        """The cycle `C_order`."""
        edges = [(i, (i + 1) % order) for i in range(order)]
        return cls.from_edges(order, edges)

    @classmethod
    def complete(cls, order: int) -> "Graph":
        """The complete graph `K_order`."""
        return cls(~np.eye(order, dtype=bool))

    def adjacency(self) -> "np.ndarray":
        """Boolean adjacency matrix."""
        return np.unpackbits(self.rows, axis=1, count=self.order).astype(bool)

    def neighbours(self, vertex: int) -> List[int]:
        """Sorted neighbours of a vertex."""
        row = np.unpackbits(self.rows[vertex], count=self.order)
        return [int(w) for w in np.flatnonzero(row)]

    def degrees(self) -> "np.ndarray":
        """Degree of every vertex."""
        return self.adjacency().sum(axis=1)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """The graph with vertex `v` renamed `perm[v]`."""
        perm = np.asarray(perm, dtype=np.int64)
        inverse = np.empty_like(perm)
        inverse[perm] = np.arange(self.order)
        matrix = self.adjacency()[np.ix_(inverse, inverse)]
        return Graph(matrix)

    def to_networkx(self) -> "nx.Graph":
        """The same graph as a `networkx.Graph`."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.order))
        rows, cols = np.nonzero(np.triu(self.adjacency()))
        graph.add_edges_from(zip(rows.tolist(), cols.tolist()))
        return graph

    def to_adjacency_list(self) -> str:
        """Plain text, one line `v: w1 w2 ...` per vertex."""
        lines = []
        for vertex in range(self.order):
            neighbours = " ".join(map(str, self.neighbours(vertex)))
            lines.append(f"{vertex}: {neighbours}".rstrip())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_adjacency_list(cls, text: str) -> "Graph":
        """Parses the format of `to_adjacency_list`.

        Raises:
            ValueError: on a malformed line or an asymmetric adjacency.
        """
        entries = []
        for number, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            head, sep, tail = line.partition(":")
            if not sep:
                raise ValueError(f"line {number}: expected `v: neighbours`")
            entries.append((int(head), [int(w) for w in tail.split()]))
        order = len(entries)
        matrix = np.zeros((order, order), dtype=bool)
        for vertex, neighbours in entries:
            matrix[vertex, neighbours] = True
        return cls(matrix)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and other.order == self.order
            and bool(np.array_equal(other.rows, self.rows))
        )

    def __hash__(self) -> int:
        return hash((self.order, self.rows.tobytes()))

    def __repr__(self) -> str:
        edges = int(self.adjacency().sum()) // 2
        return f"Graph(order={self.order}, edges={edges})"


def srg_params(graph: Graph) -> Optional[SrgParams]:
    """Parameters of a strongly regular graph, `None` if it is not one.

    Complete and edgeless graphs are not strongly regular here: both
    adjacent and non-adjacent pairs must exist.
    """
    matrix = graph.adjacency()
    n = graph.order
    degrees = matrix.sum(axis=1)
    if n < 2 or (degrees != degrees[0]).any():
        return None
    k = int(degrees[0])
    if k == 0 or k == n - 1:
        return None
    counts = matrix.astype(np.int64) @ matrix.astype(np.int64)
    off_diagonal = ~np.eye(n, dtype=bool)
    adjacent = counts[matrix]
    apart = counts[~matrix & off_diagonal]
    if (adjacent != adjacent[0]).any() or (apart != apart[0]).any():
        return None
    return SrgParams(v=n, k=k, lambda_=int(adjacent[0]), mu=int(apart[0]))


def distances(graph: Graph) -> "np.ndarray":
    """All-pairs distance matrix; -1 between components."""
    matrix = graph.adjacency()
    n = graph.order
    dist = np.full((n, n), -1, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    reached = np.eye(n, dtype=bool)
    frontier = np.eye(n, dtype=bool)
    level = 0
    while frontier.any():
        level += 1
        stepped = frontier.astype(np.int64) @ matrix.astype(np.int64)
        frontier = (stepped > 0) & ~reached
        dist[frontier] = level
        reached |= frontier
    return dist


def distance_regular_array(graph: Graph) -> Optional[IntersectionArray]:
    """Intersection array of a distance-regular connected graph, else
    `None`."""
    dist = distances(graph)
    if graph.order == 0 or (dist < 0).any():
        return None
    matrix = graph.adjacency().astype(np.int64)
    diameter = int(dist.max())
    b: List[int] = []
    c: List[int] = []
    for level in range(diameter + 1):
        at_level = dist == level
        farther = (dist == level + 1).astype(np.int64) @ matrix
        closer = (dist == level - 1).astype(np.int64) @ matrix
        for counts, out in ((farther, b), (closer, c)):
            values = counts[at_level]
            if (values != values[0]).any():
                return None
            out.append(int(values[0]))
    return IntersectionArray(b=tuple(b[:diameter]), c=tuple(c[1:]))
