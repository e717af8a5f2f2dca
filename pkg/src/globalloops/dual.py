"""Dual graph of a triangulation.

One dual node per face plus one leaf node per boundary edge; one dual edge
per primal edge, reusing the primal edge id.  Face f is dual node f, and the
leaf for boundary edge e sits after all face nodes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .surface import SurfaceComplex


@dataclass
class DualGraph:
    num_face_nodes: int
    num_boundary_nodes: int
    boundary_node_of_edge: dict[int, int]  # boundary edge id -> dual node id
    edge_of_boundary_node: list[int]  # dual node id - num_face_nodes -> edge id
    dual_edges: list[tuple[int, int]]  # per primal edge id: its two dual endpoints
    adjacency: list[list[tuple[int, int]]]  # node -> [(edge id, neighbor node)]

    @property
    def num_nodes(self) -> int:
        return self.num_face_nodes + self.num_boundary_nodes

    def is_face_node(self, node: int) -> bool:
        return node < self.num_face_nodes


def build_dual(complex: SurfaceComplex) -> DualGraph:
    """Construct the dual graph with adjacency lists for O(1) traversal."""
    nf = complex.num_faces
    boundary_node_of_edge: dict[int, int] = {}
    edge_of_boundary_node: list[int] = []
    for eid in complex.boundary_edge_ids:
        boundary_node_of_edge[eid] = nf + len(edge_of_boundary_node)
        edge_of_boundary_node.append(eid)

    dual_edges: list[tuple[int, int]] = []
    for eid in range(complex.num_edges):
        incident = complex.edge_faces[eid]
        if len(incident) == 2:
            dual_edges.append((incident[0], incident[1]))
        else:
            dual_edges.append((incident[0], boundary_node_of_edge[eid]))

    adjacency: list[list[tuple[int, int]]] = [
        [] for _ in range(nf + len(edge_of_boundary_node))
    ]
    for eid, (u, w) in enumerate(dual_edges):
        adjacency[u].append((eid, w))
        adjacency[w].append((eid, u))

    return DualGraph(
        num_face_nodes=nf,
        num_boundary_nodes=len(edge_of_boundary_node),
        boundary_node_of_edge=boundary_node_of_edge,
        edge_of_boundary_node=edge_of_boundary_node,
        dual_edges=dual_edges,
        adjacency=adjacency,
    )
