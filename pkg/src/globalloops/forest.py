"""Tree-cotree decomposition: boundary-first primal tree, constrained dual
tree with its boundary augmentation, and unique tree paths.

The primal spanning tree is grown breadth first inside each boundary circle
(covering all but one edge of the circle) and then extended breadth first
over the rest of the complex.  The dual tree spans the face nodes using only
dual edges whose primal edge avoids the primal tree; afterwards the dual
edge and leaf node of each circle's leftover edge are appended.  The edges
in neither tree index the candidate generators.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .dual import DualGraph
from .errors import CountMismatch, DisconnectedComplex, DualDisconnected, NodeNotInTree
from .surface import BoundaryCycle, SurfaceComplex, euler_characteristic


@dataclass
class Path:
    """Alternating node/edge walk: edges[i] joins nodes[i] and nodes[i+1]."""

    nodes: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.nodes)


class Tree:
    """Rooted tree over dense integer node ids with parent-pointer paths.

    Path extraction lifts the deeper endpoint to the common level and then
    walks both chains to the meeting node, so each query costs O(path
    length) after the O(size) construction.
    """

    def __init__(self, num_nodes: int):
        self.parent = [-1] * num_nodes
        self.parent_edge = [-1] * num_nodes
        self.depth = [0] * num_nodes
        self.member = [False] * num_nodes
        self.edge_ids: set[int] = set()

    def __contains__(self, node: int) -> bool:
        return self.member[node]

    def add_root(self, node: int) -> None:
        self.member[node] = True

    def attach(self, child: int, parent: int, edge_id: int) -> None:
        self.parent[child] = parent
        self.parent_edge[child] = edge_id
        self.depth[child] = self.depth[parent] + 1
        self.member[child] = True
        self.edge_ids.add(edge_id)

    def path(self, a: int, b: int) -> Path:
        if not self.member[a]:
            raise NodeNotInTree(a)
        if not self.member[b]:
            raise NodeNotInTree(b)
        left_nodes: list[int] = []
        left_edges: list[int] = []
        right_nodes: list[int] = []
        right_edges: list[int] = []
        while self.depth[a] > self.depth[b]:
            left_nodes.append(a)
            left_edges.append(self.parent_edge[a])
            a = self.parent[a]
        while self.depth[b] > self.depth[a]:
            right_nodes.append(b)
            right_edges.append(self.parent_edge[b])
            b = self.parent[b]
        while a != b:
            left_nodes.append(a)
            left_edges.append(self.parent_edge[a])
            a = self.parent[a]
            right_nodes.append(b)
            right_edges.append(self.parent_edge[b])
            b = self.parent[b]
        nodes = left_nodes + [a] + right_nodes[::-1]
        edges = left_edges + right_edges[::-1]
        return Path(nodes=tuple(nodes), edges=tuple(edges))


@dataclass
class TreeCotree:
    """Primal and dual spanning trees plus the leftover edge bookkeeping."""

    primal: Tree
    dual: Tree
    primal_edge_ids: set[int]
    dual_edge_ids_preaug: set[int]
    dual_edge_ids: set[int]
    leftover_per_hole: list[int]  # one boundary edge per circle, in circle order
    candidate_edges: list[int] = field(default_factory=list)  # sorted, in neither tree


def build_primal_tree(
    complex: SurfaceComplex, holes: list[BoundaryCycle]
) -> tuple[Tree, list[int]]:
    """Boundary-first primal spanning tree.

    Returns the tree and the per-circle leftover boundary edges.  When the
    global BFS first touches a circle's partial tree, the whole fragment is
    absorbed at once (re-rooted at the touched vertex) so none of its edges
    are lost.  Raises DisconnectedComplex when the complex is not connected.
    """
    nv = complex.num_vertices
    fragment_of = [-1] * nv
    fragment_adj: list[dict[int, list[tuple[int, int]]]] = []
    fragment_root: list[int] = []
    leftovers: list[int] = []
    boundary = set(complex.boundary_edge_ids)

    for k, cyc in enumerate(holes):
        root = min(cyc.vertices)
        comp_edges = set(cyc.edges)
        # BFS restricted to this circle, lower vertex id first.
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in cyc.vertices}
        for eid in cyc.edges:
            a, b = complex.edges[eid]
            adj[a].append((eid, b))
            adj[b].append((eid, a))
        for v in adj:
            adj[v].sort(key=lambda item: item[1])
        visited = {root}
        used: set[int] = set()
        queue = deque([root])
        tree_adj: dict[int, list[tuple[int, int]]] = {v: [] for v in cyc.vertices}
        while queue:
            u = queue.popleft()
            for eid, w in adj[u]:
                if w not in visited:
                    visited.add(w)
                    used.add(eid)
                    tree_adj[u].append((eid, w))
                    tree_adj[w].append((eid, u))
                    queue.append(w)
        leftover = sorted(comp_edges - used)
        if len(leftover) != 1:
            raise CountMismatch(
                f"boundary circle {k} left {len(leftover)} edges out of its tree"
            )
        leftovers.append(leftover[0])
        for v in cyc.vertices:
            fragment_of[v] = k
        fragment_adj.append(tree_adj)
        fragment_root.append(root)

    tree = Tree(nv)
    queue: deque[int] = deque()

    def absorb(entry: int, parent: int, edge_id: int) -> None:
        # Attach the fragment containing `entry`, re-rooted at `entry`.
        if parent < 0:
            tree.add_root(entry)
        else:
            tree.attach(entry, parent, edge_id)
        queue.append(entry)
        k = fragment_of[entry]
        if k < 0:
            return
        adj = fragment_adj[k]
        inner = deque([entry])
        while inner:
            u = inner.popleft()
            for eid, w in adj[u]:
                if not tree.member[w]:
                    tree.attach(w, u, eid)
                    queue.append(w)
                    inner.append(w)

    absorb(0, -1, -1)
    while queue:
        u = queue.popleft()
        for eid, w in complex.vertex_edges[u]:
            if eid in boundary or tree.member[w]:
                continue
            absorb(w, u, eid)

    if not all(tree.member):
        raise DisconnectedComplex("primal spanning tree does not reach every vertex")
    return tree, leftovers


def build_dual_tree(
    complex: SurfaceComplex,
    dual: DualGraph,
    primal_edge_ids: set[int],
    leftovers: list[int],
) -> tuple[Tree, set[int]]:
    """Dual spanning tree over face nodes, avoiding primal-tree duals.

    Returns the augmented tree and its pre-augmentation edge set.  The
    leftover boundary dual edges are appended as leaves afterwards.
    """
    tree = Tree(dual.num_nodes)
    if dual.num_face_nodes == 0:
        return tree, set()
    tree.add_root(0)
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for eid, w in dual.adjacency[u]:
            if w >= dual.num_face_nodes or eid in primal_edge_ids:
                continue
            if not tree.member[w]:
                tree.attach(w, u, eid)
                queue.append(w)
    if not all(tree.member[:dual.num_face_nodes]):
        raise DualDisconnected(
            "constrained dual graph does not connect all face nodes"
        )
    preaug = set(tree.edge_ids)
    for eid in leftovers:
        face = complex.edge_faces[eid][0]
        tree.attach(dual.boundary_node_of_edge[eid], face, eid)
    return tree, preaug


def build_tree_cotree(
    complex: SurfaceComplex, dual: DualGraph, holes: list[BoundaryCycle]
) -> TreeCotree:
    """Full decomposition for a connected complex, candidate edges included."""
    primal, leftovers = build_primal_tree(complex, holes)
    dual_tree, preaug = build_dual_tree(complex, dual, primal.edge_ids, leftovers)
    tc = TreeCotree(
        primal=primal,
        dual=dual_tree,
        primal_edge_ids=primal.edge_ids,
        dual_edge_ids_preaug=preaug,
        dual_edge_ids=set(dual_tree.edge_ids),
        leftover_per_hole=leftovers,
    )
    tc.candidate_edges = compute_candidate_edges(complex, tc, len(holes))
    return tc


def compute_candidate_edges(
    complex: SurfaceComplex, tc: TreeCotree, num_holes: int
) -> list[int]:
    """Edges in neither tree; these index the candidate generators.

    For a connected complex their number must equal 2 minus the Euler
    characteristic of the closed-up surface; a mismatch means the trees are
    inconsistent and raises CountMismatch.
    """
    candidates = [
        eid
        for eid in range(complex.num_edges)
        if eid not in tc.primal_edge_ids and eid not in tc.dual_edge_ids
    ]
    expected = 2 - euler_characteristic(complex) - num_holes
    if len(candidates) != expected:
        raise CountMismatch(
            f"{len(candidates)} candidate edges, expected {expected}"
        )
    for eid in candidates:
        if complex.is_boundary_edge(eid):
            raise CountMismatch(f"boundary edge {eid} escaped both trees")
    return candidates
