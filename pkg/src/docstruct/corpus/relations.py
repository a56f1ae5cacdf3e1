"""Derive relation sets and the ground-truth tree from annotations.

These functions recompute, from the annotation objects alone, exactly
what the generator emits during construction; the pair acts as a
consistency oracle over the corpus.
"""

from __future__ import annotations

from ..errors import MalformedAnnotationError
from ..types import (
    DocNode,
    DocTree,
    DocumentSample,
    Page,
    Relation,
    RoleVocab,
)

# Two list items closer than this in x start at the same indent level.
_INDENT_TOL = 0.005


def derive_page_relations(page: Page, vocab: RoleVocab | None = None) -> set[Relation]:
    """All page-level relations of one annotated page.

    Intra edges chain adjacent lines of each region (self-loop for
    single-line regions); inter reading-order edges connect consecutive
    reading-order elements, realized last-line(src) -> first-line(dst)
    with graphical objects as their own endpoints; annotated captions
    and graphic footnotes yield semantic associations; every line and
    graphic points at its logical role.
    """
    vocab = vocab or RoleVocab.with_extensions()
    rels: set[Relation] = set()
    regions_by_id = {r.id: r for r in page.regions}
    graphics_by_id = {g.id: g for g in page.graphics}

    for region in page.regions:
        if not region.line_ids:
            raise MalformedAnnotationError(f"region {region.id}: empty line list")
        ids = region.line_ids
        if len(ids) == 1:
            rels.add(Relation(ids[0], ids[0], "page", "intra", "self_referential"))
        else:
            for a, b in zip(ids, ids[1:]):
                rels.add(Relation(a, b, "page", "intra", "reading_order"))
        role_idx = vocab.index(region.role)
        for lid in ids:
            rels.add(Relation(lid, role_idx, "page", "logical_role", "role_assignment"))

    for g in page.graphics:
        rels.add(
            Relation(g.id, vocab.index(g.category), "page", "logical_role", "role_assignment")
        )

    def first_endpoint(eid: int) -> int:
        return regions_by_id[eid].line_ids[0] if eid in regions_by_id else eid

    def last_endpoint(eid: int) -> int:
        return regions_by_id[eid].line_ids[-1] if eid in regions_by_id else eid

    for a, b in zip(page.reading_order, page.reading_order[1:]):
        rels.add(
            Relation(last_endpoint(a), first_endpoint(b), "page", "inter", "reading_order")
        )

    for region in page.regions:
        if region.assoc_id is None:
            continue
        if region.assoc_id not in graphics_by_id:
            raise MalformedAnnotationError(
                f"region {region.id}: assoc_id {region.assoc_id} is not a graphic on the page"
            )
        if region.role == "caption":
            rels.add(
                Relation(
                    region.line_ids[-1], region.assoc_id, "page", "inter", "semantic_association"
                )
            )
        elif region.role == "footnote":
            rels.add(
                Relation(
                    region.assoc_id, region.line_ids[0], "page", "inter", "semantic_association"
                )
            )
        else:
            raise MalformedAnnotationError(
                f"region {region.id}: assoc_id on role {region.role!r}"
            )
    return rels


def _continuity_chains(doc: DocumentSample) -> list[list[int]]:
    """Group-id chains of region/graphic fragments, page-ordered."""
    groups: dict[tuple, list[tuple[int, int]]] = {}
    for page in doc.pages:
        for r in page.regions:
            if r.group_id is not None:
                groups.setdefault(("region", r.group_id), []).append((page.index, r.id))
        for g in page.graphics:
            if g.group_id is not None:
                groups.setdefault(("graphic", g.group_id), []).append((page.index, g.id))
    chains = []
    for key, members in sorted(groups.items()):
        members.sort()
        if len(members) < 2:
            raise MalformedAnnotationError(f"continuity group {key} has a single fragment")
        pages = [p for p, _ in members]
        for a, b in zip(pages, pages[1:]):
            if b != a + 1:
                raise MalformedAnnotationError(
                    f"continuity group {key} crosses non-consecutive pages {a}->{b}"
                )
        chains.append([eid for _, eid in members])
    return chains


def _list_item_parents(doc: DocumentSample) -> dict[int, int]:
    """Structural list nesting: within each run of consecutive list-item
    regions in the page reading order, indent depth orders the items and
    each item's parent is the nearest preceding shallower item."""
    parents: dict[int, int] = {}
    for page in doc.pages:
        regions_by_id = {r.id: r for r in page.regions}
        lines_by_id = {ln.id: ln for ln in page.lines}
        run: list[tuple[float, int]] = []  # (x1, region id)

        def flush(run):
            if len(run) < 2:
                return
            xs = sorted({x for x, _ in run})
            levels: list[float] = []
            for x in xs:
                if not levels or x - levels[-1] > _INDENT_TOL:
                    levels.append(x)

            def depth_of(x):
                for d, lx in enumerate(levels):
                    if abs(x - lx) <= _INDENT_TOL:
                        return d
                return 0

            depths = [depth_of(x) for x, _ in run]
            for i, (x, rid) in enumerate(run):
                if depths[i] == 0:
                    continue
                for j in range(i - 1, -1, -1):
                    if depths[j] < depths[i]:
                        parents[rid] = run[j][1]
                        break

        for eid in page.reading_order:
            region = regions_by_id.get(eid)
            if region is not None and region.role == "list-item":
                x1 = lines_by_id[region.line_ids[0]].bbox[0]
                run.append((x1, eid))
            else:
                flush(run)
                run = []
        flush(run)
    return parents


def derive_doc_relations(doc: DocumentSample) -> set[Relation]:
    """Document-level relations: continuity edges along fragment chains,
    child->parent hierarchy edges for section headings (from the ToC
    annotation) and list items (from structural indents)."""
    rels: set[Relation] = set()
    for chain in _continuity_chains(doc):
        for a, b in zip(chain, chain[1:]):
            rels.add(Relation(a, b, "doc", "intra", "continuity"))

    def walk(node: DocNode):
        for child in node.children:
            rels.add(Relation(child.id, node.id, "doc", "inter", "hierarchy"))
            walk(child)

    for root in doc.toc_tree.roots:
        walk(root)

    for child, parent in _list_item_parents(doc).items():
        rels.add(Relation(child, parent, "doc", "inter", "hierarchy"))
    return rels


def build_annotation_tree(doc: DocumentSample) -> DocTree:
    """Reconstruct the full ground-truth tree from annotations.

    Fragments linked by continuity merge into one node (text joined in
    reading order); headings nest per the ToC; list items nest per their
    structural parents; every other block attaches under the nearest
    preceding heading in reading order, or the root.
    """
    merge_root: dict[int, int] = {}
    for chain in _continuity_chains(doc):
        for eid in chain[1:]:
            merge_root[eid] = chain[0]

    heading_parent: dict[int, int] = {}

    def walk(node: DocNode):
        for child in node.children:
            heading_parent[child.id] = node.id
            walk(child)

    for root in doc.toc_tree.roots:
        walk(root)
    item_parent = _list_item_parents(doc)

    roots: list[DocNode] = []
    nodes: dict[int, DocNode] = {}
    last_heading: DocNode | None = None
    for page in doc.pages:
        regions_by_id = {r.id: r for r in page.regions}
        lines_by_id = {ln.id: ln for ln in page.lines}
        graphics_by_id = {g.id: g for g in page.graphics}
        for eid in page.reading_order:
            if eid in merge_root:
                target = nodes[merge_root[eid]]
                target.source_ids.append(eid)
                if eid in regions_by_id:
                    text = " ".join(lines_by_id[lid].text for lid in regions_by_id[eid].line_ids)
                    target.text = (target.text + " " + text).strip()
                continue
            if eid in regions_by_id:
                region = regions_by_id[eid]
                text = " ".join(lines_by_id[lid].text for lid in region.line_ids)
                node = DocNode(eid, region.role, text, [eid])
                role = region.role
            else:
                node = DocNode(eid, graphics_by_id[eid].category, "", [eid])
                role = graphics_by_id[eid].category
            nodes[eid] = node
            parent: DocNode | None = None
            if role == "section-heading":
                parent = nodes.get(heading_parent.get(eid))
            elif eid in item_parent:
                parent = nodes.get(item_parent[eid])
            else:
                parent = last_heading
            if parent is None:
                roots.append(node)
            else:
                parent.children.append(node)
            if role == "section-heading":
                last_heading = node
    return DocTree(roots)
