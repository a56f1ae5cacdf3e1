"""Domain types: layout primitives, relations, and document trees."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import MalformedAnnotationError
from .geometry import Box, box_is_valid, box_union

# Logical role vocabulary. The first twelve roles are always available;
# list-item and formula are optional extensions enabled by configuration.
DEFAULT_ROLES = (
    "title",
    "author",
    "mail",
    "affiliation",
    "section-heading",
    "paragraph",
    "table",
    "figure",
    "caption",
    "footer",
    "header",
    "footnote",
)
EXTENSION_ROLES = ("list-item", "formula")

GRAPHICAL_CATEGORIES = ("table", "figure", "formula")

RELATION_LEVELS = ("page", "doc")
RELATION_KINDS = ("intra", "inter", "logical_role")
KIND_SUBTYPES = {
    "intra": ("reading_order", "self_referential", "continuity"),
    "inter": ("reading_order", "semantic_association", "hierarchy"),
    "logical_role": ("role_assignment",),
}
LEVEL_KINDS = {
    "page": ("intra", "inter", "logical_role"),
    "doc": ("intra", "inter"),
}


class RoleVocab:
    """Ordered logical-role vocabulary with index lookup."""

    def __init__(self, roles=None):
        roles = tuple(roles) if roles is not None else DEFAULT_ROLES
        if len(roles) != len(set(roles)):
            raise ValueError("duplicate role names in vocabulary")
        self.roles = roles
        self._index = {r: i for i, r in enumerate(roles)}

    @classmethod
    def with_extensions(cls) -> "RoleVocab":
        return cls(DEFAULT_ROLES + EXTENSION_ROLES)

    def __len__(self) -> int:
        return len(self.roles)

    def __iter__(self):
        return iter(self.roles)

    def __contains__(self, role: str) -> bool:
        return role in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, RoleVocab) and self.roles == other.roles

    def index(self, role: str) -> int:
        if role not in self._index:
            raise KeyError(f"role {role!r} not in vocabulary {self.roles}")
        return self._index[role]

    def name(self, index: int) -> str:
        return self.roles[index]


@dataclass
class TextLine:
    """One OCR-style text line with its normalized box and region slot."""

    id: int
    page_index: int
    text: str
    bbox: Box
    region_id: int
    order_in_region: int

    def validate(self):
        if not box_is_valid(self.bbox):
            raise MalformedAnnotationError(f"line {self.id}: invalid bbox {self.bbox}")
        if self.order_in_region < 0:
            raise MalformedAnnotationError(f"line {self.id}: negative order_in_region")


@dataclass
class GraphicalObject:
    """A table, figure or formula instance; fragments of a cross-page
    object share group_id."""

    id: int
    page_index: int
    bbox: Box
    category: str
    group_id: Optional[int] = None

    def validate(self):
        if not box_is_valid(self.bbox):
            raise MalformedAnnotationError(f"graphic {self.id}: invalid bbox {self.bbox}")
        if self.category not in GRAPHICAL_CATEGORIES:
            raise MalformedAnnotationError(
                f"graphic {self.id}: unknown category {self.category!r}"
            )


@dataclass
class Region:
    """A semantic text unit: ordered lines sharing a logical role.

    assoc_id links captions/footnotes to the graphic they describe;
    group_id links fragments of a paragraph split across pages.
    """

    id: int
    role: str
    line_ids: list[int]
    page_index: int
    assoc_id: Optional[int] = None
    group_id: Optional[int] = None

    def validate(self):
        if not self.line_ids:
            raise MalformedAnnotationError(f"region {self.id}: empty line list")


@dataclass(frozen=True)
class Relation:
    """A typed directed edge at page or document level."""

    src_id: int
    dst_id: int
    level: str
    kind: str
    subtype: str

    def __post_init__(self):
        if self.level not in RELATION_LEVELS:
            raise ValueError(f"unknown relation level {self.level!r}")
        if self.kind not in LEVEL_KINDS[self.level]:
            raise ValueError(f"kind {self.kind!r} not allowed at level {self.level!r}")
        if self.subtype not in KIND_SUBTYPES[self.kind]:
            raise ValueError(
                f"subtype {self.subtype!r} inconsistent with kind {self.kind!r}"
            )


@dataclass
class Page:
    """Annotated single page. `image` is an HxWx3 float array in [0,1]
    (None when rendering is skipped)."""

    index: int
    lines: list[TextLine]
    graphics: list[GraphicalObject]
    regions: list[Region]
    reading_order: list[int]
    image: Optional[np.ndarray] = None

    def region_by_id(self, rid: int) -> Region:
        for r in self.regions:
            if r.id == rid:
                return r
        raise KeyError(rid)

    def line_by_id(self, lid: int) -> TextLine:
        for ln in self.lines:
            if ln.id == lid:
                return ln
        raise KeyError(lid)

    def graphic_by_id(self, gid: int) -> GraphicalObject:
        for g in self.graphics:
            if g.id == gid:
                return g
        raise KeyError(gid)

    def region_box(self, region: Region) -> Box:
        by_id = {ln.id: ln for ln in self.lines}
        return box_union(by_id[lid].bbox for lid in region.line_ids)

    def validate(self):
        for ln in self.lines:
            ln.validate()
        for g in self.graphics:
            g.validate()
        line_ids = [ln.id for ln in self.lines]
        if len(set(line_ids)) != len(line_ids):
            raise MalformedAnnotationError(f"page {self.index}: duplicate line ids")
        slots = [(ln.region_id, ln.order_in_region) for ln in self.lines]
        if len(set(slots)) != len(slots):
            raise MalformedAnnotationError(
                f"page {self.index}: duplicate (region, order) slots"
            )
        by_id = {ln.id: ln for ln in self.lines}
        for region in self.regions:
            region.validate()
            orders = []
            for lid in region.line_ids:
                if lid not in by_id:
                    raise MalformedAnnotationError(
                        f"region {region.id}: unknown line {lid}"
                    )
                ln = by_id[lid]
                if ln.region_id != region.id:
                    raise MalformedAnnotationError(
                        f"line {lid}: region_id {ln.region_id} != {region.id}"
                    )
                if ln.page_index != self.index:
                    raise MalformedAnnotationError(
                        f"region {region.id}: line {lid} on another page"
                    )
                orders.append(ln.order_in_region)
            if orders != list(range(len(orders))):
                raise MalformedAnnotationError(
                    f"region {region.id}: line orders {orders} are not 0..k-1"
                )
        element_ids = {r.id for r in self.regions} | {g.id for g in self.graphics}
        if len(element_ids) != len(self.regions) + len(self.graphics):
            raise MalformedAnnotationError(
                f"page {self.index}: region/graphic id collision"
            )
        if sorted(self.reading_order) != sorted(element_ids):
            raise MalformedAnnotationError(
                f"page {self.index}: reading_order is not a permutation of elements"
            )


@dataclass
class DocNode:
    """Node of a decoded or ground-truth document tree."""

    id: int
    role: str
    text: str
    source_ids: list[int]
    children: list["DocNode"] = field(default_factory=list)

    def to_tuple(self):
        """Canonical structural form used for equality and hashing."""
        return (
            self.role,
            self.text,
            tuple(sorted(self.source_ids)),
            tuple(c.to_tuple() for c in self.children),
        )

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()


@dataclass
class DocTree:
    """Rooted ordered tree over document entities. The root is virtual
    (not a document element)."""

    roots: list[DocNode] = field(default_factory=list)

    def to_tuple(self):
        return tuple(r.to_tuple() for r in self.roots)

    def __eq__(self, other) -> bool:
        return isinstance(other, DocTree) and self.to_tuple() == other.to_tuple()

    def walk(self):
        for r in self.roots:
            yield from r.walk()

    def node_count(self) -> int:
        return sum(1 for _ in self.walk())

    def heading_tree(self) -> "DocTree":
        """Project onto section-heading nodes, splicing out other nodes."""

        def collect(node: DocNode) -> list[DocNode]:
            kept = []
            for child in node.children:
                kept.extend(collect(child))
            if node.role == "section-heading":
                return [DocNode(node.id, node.role, node.text, list(node.source_ids), kept)]
            return kept

        out: list[DocNode] = []
        for r in self.roots:
            out.extend(collect(r))
        return DocTree(out)


@dataclass
class DocumentSample:
    """A whole annotated document plus its document-level ground truth.

    page_relations holds the generator's emitted page-level relation sets
    (one per page); it is not serialized — loaders and trainers recompute
    page relations from the annotations.
    """

    doc_id: str
    pages: list[Page]
    doc_relations: set[Relation]
    toc_tree: DocTree
    tree: DocTree
    rng_seed: int
    page_relations: Optional[list[set[Relation]]] = None

    def validate(self):
        for page in self.pages:
            page.validate()
        all_ids = set()
        for page in self.pages:
            for coll in (page.lines, page.graphics, page.regions):
                for item in coll:
                    if item.id in all_ids:
                        raise MalformedAnnotationError(f"duplicate id {item.id}")
                    all_ids.add(item.id)
        for rel in self.doc_relations:
            if rel.level != "doc":
                raise MalformedAnnotationError("page relation stored at doc level")
            if rel.src_id not in all_ids or rel.dst_id not in all_ids:
                raise MalformedAnnotationError(
                    f"doc relation ({rel.src_id}->{rel.dst_id}) references unknown ids"
                )

    def all_regions(self):
        for page in self.pages:
            yield from page.regions

    def all_graphics(self):
        for page in self.pages:
            yield from page.graphics
