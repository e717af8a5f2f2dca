"""Construction of the three generator classes and the assembled basis.

Per connected component the pipeline produces:

* handle generators, one per candidate edge (edges in neither spanning
  tree), via self-pair transport around the dual tree; on non-orientable
  components the twisted candidates are combined pairwise against a fixed
  anchor edge instead,
* hole generators, one per boundary circle except a fixed one, as vertex
  coboundaries of circle indicators,
* contact generators, one per contact component except a fixed one, via
  transport between contact edges, plus one extra generator anchored at the
  twisted edge when the component is non-orientable.

All coefficients are integers; the same representatives serve as a basis
over the reals.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cochain import Cochain1
from .dual import build_dual
from .errors import CountMismatch, NotABoundaryEdge, UnsupportedContactLayout
from .forest import TreeCotree, build_tree_cotree
from .surface import (
    BoundaryPartition,
    SurfaceComplex,
    classify_boundary,
    connected_components,
)
from .transport import transport

HANDLE = "ha"
HOLE = "ho"
CONTACT = "co"


@dataclass
class Generator:
    kind: str  # "ha" | "ho" | "co"
    component: int
    cochain: Cochain1


@dataclass
class ComponentMeta:
    """Per-component bookkeeping mirrored into reports."""

    component_id: int
    num_holes: int
    num_contacts: int
    num_candidate_edges: int
    num_twisted_edges: int
    orientable: bool
    betti1: int
    fixed_hole: int | None = None
    fixed_contact: int | None = None
    anchor_edge: int | None = None  # twisted edge all combinations anchor to


@dataclass
class GeneratorSet:
    generators: list[Generator] = field(default_factory=list)
    components: list[ComponentMeta] = field(default_factory=list)

    def of_kind(self, kind: str) -> list[Cochain1]:
        return [g.cochain for g in self.generators if g.kind == kind]

    @property
    def ha(self) -> list[Cochain1]:
        return self.of_kind(HANDLE)

    @property
    def ho(self) -> list[Cochain1]:
        return self.of_kind(HOLE)

    @property
    def co(self) -> list[Cochain1]:
        return self.of_kind(CONTACT)

    @property
    def num_holes(self) -> int:
        return sum(m.num_holes for m in self.components)

    @property
    def num_contacts(self) -> int:
        return sum(m.num_contacts for m in self.components)

    @property
    def num_candidate_edges(self) -> int:
        return sum(m.num_candidate_edges for m in self.components)

    @property
    def num_twisted_edges(self) -> int:
        return sum(m.num_twisted_edges for m in self.components)

    @property
    def orientable(self) -> bool:
        return all(m.orientable for m in self.components)

    @property
    def betti1(self) -> int:
        return len(self.generators)


def handles(
    complex: SurfaceComplex, tc: TreeCotree
) -> tuple[list[Cochain1], list[int], int | None]:
    """Handle generators for one connected component.

    Returns (generators, twisted candidate edges, anchor edge).  Twisted
    candidates are the ones whose self-pair transport fails; when present,
    the minimal one becomes the anchor, is dropped from the output, and every
    other twisted candidate is rebuilt by combining its two face-to-face
    transports toward the anchor.
    """
    by_edge: dict[int, Cochain1] = {}
    twisted: list[int] = []
    for eid in tc.candidate_edges:
        f1, f2 = sorted(complex.edge_faces[eid])
        path = tc.dual.path(f1, f2)
        result = transport(complex, path, eid, eid)
        if result.consistent:
            by_edge[eid] = result.cochain
        else:
            twisted.append(eid)

    if not twisted:
        return [by_edge[eid] for eid in tc.candidate_edges], [], None

    anchor = min(twisted)
    fa1, fa2 = sorted(complex.edge_faces[anchor])
    for eid in twisted:
        if eid == anchor:
            continue
        by_edge[eid] = _combine_through_anchor(complex, tc, eid, anchor, fa1, fa2)
    gens = [by_edge[eid] for eid in tc.candidate_edges if eid != anchor]
    return gens, twisted, anchor


def _combine_through_anchor(complex, tc, eid, anchor, anchor_f1, anchor_f2):
    """Pairwise combination of the two transports from a twisted edge to the
    anchor; the combined cochain keeps the first transport's values on the
    edge pair and sums elsewhere."""
    f1, f2 = sorted(complex.edge_faces[eid])
    first = transport(complex, tc.dual.path(f1, anchor_f1), eid, anchor)
    second = transport(complex, tc.dual.path(f2, anchor_f2), eid, anchor)
    out = dict(first.cochain.coeffs)
    for k, v in second.cochain.coeffs.items():
        if k == eid or k == anchor:
            continue
        out[k] = out.get(k, 0) + v
    return Cochain1(out)


def holes(complex: SurfaceComplex, partition: BoundaryPartition) -> list[Cochain1]:
    """Hole generators: vertex coboundary of each non-fixed circle indicator.

    The fixed circle is the one whose minimal vertex id is largest.  The
    support of each generator consists exactly of the edges with one
    endpoint on the circle, so no boundary edge is touched and the result is
    a relative cocycle even under full insulation.
    """
    cycles = partition.hole_components
    out = []
    for cyc in cycles[:-1]:
        members = set(cyc.vertices)
        coeffs: dict[int, int] = {}
        for v in cyc.vertices:
            for eid, w in complex.vertex_edges[v]:
                if w not in members:
                    # Indicator coboundary: +1 when the circle holds the head.
                    coeffs[eid] = 1 if complex.edges[eid][1] == v else -1
        out.append(Cochain1(coeffs))
    return out


def contacts(
    complex: SurfaceComplex,
    tc: TreeCotree,
    partition: BoundaryPartition,
    twisted: list[int],
    anchor: int | None,
) -> list[Cochain1]:
    """Contact generators, reusing the dual tree and the twisted-edge data.

    One transport generator per contact component short of the fixed one
    (largest minimal vertex id); non-orientable components get one extra
    generator built from the two paths to the anchor edge.
    """
    comps = partition.contact_components
    fixed_edge = min(comps[-1])
    fixed_face = complex.edge_faces[fixed_edge][0]
    out = []
    for comp in comps[:-1]:
        eid = min(comp)
        face = complex.edge_faces[eid][0]
        path = tc.dual.path(face, fixed_face)
        result = transport(complex, path, eid, fixed_edge)
        out.append(result.cochain)

    if twisted:
        assert anchor is not None
        fa1, fa2 = sorted(complex.edge_faces[anchor])
        first = transport(
            complex, tc.dual.path(fixed_face, fa1), fixed_edge, anchor
        )
        second = transport(
            complex, tc.dual.path(fixed_face, fa2), fixed_edge, anchor
        )
        coeffs = dict(first.cochain.coeffs)
        for k, v in second.cochain.coeffs.items():
            if k == anchor:
                continue
            coeffs[k] = coeffs.get(k, 0) + v
        out.append(Cochain1(coeffs))
    return out


def _expected_counts(meta: ComponentMeta) -> tuple[int, int, int]:
    n_ha = meta.num_candidate_edges - (1 if meta.num_twisted_edges else 0)
    n_ho = max(meta.num_holes - 1, 0)
    if meta.num_contacts == 0:
        n_co = 0
    elif meta.orientable:
        n_co = meta.num_contacts - 1
    else:
        n_co = meta.num_contacts
    return n_ha, n_ho, n_co


def compute_component(
    complex: SurfaceComplex, contact_edges: set[int], component_id: int = 0
) -> tuple[list[Generator], ComponentMeta]:
    """Run the full pipeline on one connected component."""
    partition = classify_boundary(complex, contact_edges)
    _reject_full_circle_contacts(complex, partition)
    dual = build_dual(complex)
    tc = build_tree_cotree(complex, dual, partition.hole_components)

    ha, twisted, anchor = handles(complex, tc)
    ho = holes(complex, partition) if partition.num_holes else []
    co = (
        contacts(complex, tc, partition, twisted, anchor)
        if partition.num_contacts
        else []
    )

    meta = ComponentMeta(
        component_id=component_id,
        num_holes=partition.num_holes,
        num_contacts=partition.num_contacts,
        num_candidate_edges=len(tc.candidate_edges),
        num_twisted_edges=len(twisted),
        orientable=not twisted,
        betti1=len(ha) + len(ho) + len(co),
        fixed_hole=partition.num_holes - 1 if partition.num_holes else None,
        fixed_contact=partition.num_contacts - 1 if partition.num_contacts else None,
        anchor_edge=anchor,
    )
    expected = _expected_counts(meta)
    if (len(ha), len(ho), len(co)) != expected:
        raise CountMismatch(
            f"class sizes {(len(ha), len(ho), len(co))} do not match {expected}"
        )

    gens = (
        [Generator(HANDLE, component_id, g) for g in ha]
        + [Generator(HOLE, component_id, g) for g in ho]
        + [Generator(CONTACT, component_id, g) for g in co]
    )
    return gens, meta


def _reject_full_circle_contacts(complex, partition):
    circle_sizes = {
        min(cyc.edges): len(cyc.edges) for cyc in partition.hole_components
    }
    circle_of_edge: dict[int, int] = {}
    for cyc in partition.hole_components:
        key = min(cyc.edges)
        for eid in cyc.edges:
            circle_of_edge[eid] = key
    for j, comp in enumerate(partition.contact_components):
        key = circle_of_edge[comp[0]]
        if len(comp) == circle_sizes[key]:
            raise UnsupportedContactLayout(
                f"contact component {j} covers an entire boundary circle; "
                "leave at least one insulated edge on each circle with contacts"
            )


def compute_generators(
    complex: SurfaceComplex, contact_edges: set[int] | frozenset[int] = frozenset()
) -> GeneratorSet:
    """Compute the full generator basis, one component at a time.

    Results are re-embedded into the parent complex's edge ids; metadata
    (anchor edges included) is reported in parent ids as well.
    """
    contact_edges = set(contact_edges)
    for eid in contact_edges:
        if not 0 <= eid < complex.num_edges:
            raise NotABoundaryEdge(f"edge id {eid} is not an edge of the mesh")

    out = GeneratorSet()
    for cid, emb in enumerate(connected_components(complex)):
        sub = emb.complex
        global_of_sub = emb.edges
        sub_of_global = {g: s for s, g in enumerate(global_of_sub)}
        sub_contacts = {
            sub_of_global[eid] for eid in contact_edges if eid in sub_of_global
        }
        gens, meta = compute_component(sub, sub_contacts, component_id=cid)
        for gen in gens:
            remapped = Cochain1(
                {global_of_sub[eid]: v for eid, v in gen.cochain.coeffs.items()}
            )
            out.generators.append(Generator(gen.kind, cid, remapped))
        if meta.anchor_edge is not None:
            meta.anchor_edge = global_of_sub[meta.anchor_edge]
        out.components.append(meta)
    return out
