"""Seeded synthetic multi-page document generator with exact ground truth.

Documents are single-column pages built top to bottom: optional front
matter, a running flow of headings, paragraphs, lists, tables, figures
and display formulas, plus page furniture. Paragraphs and tables may
split across consecutive pages. Every relation the model is supposed to
predict is emitted during construction, independently of the derivation
ops in :mod:`docstruct.corpus.relations` that recompute them from the
annotations alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import ConfigurationError
from ..types import (
    DocNode,
    DocTree,
    DocumentSample,
    GraphicalObject,
    Page,
    Region,
    Relation,
    RoleVocab,
    TextLine,
)
from . import render, text as ptext


@dataclass
class GeneratorConfig:
    pages_min: int = 3
    pages_max: int = 5
    raster_size: int = 512
    render: bool = True
    roles: tuple = None  # None -> RoleVocab.with_extensions()

    margin: float = 0.08
    line_height: float = 0.019
    line_gap: float = 0.007
    block_gap: float = 0.022

    # Body block mix (sampling weights).
    w_paragraph: float = 1.0
    w_heading: float = 0.7
    w_list: float = 0.35
    w_table: float = 0.3
    w_figure: float = 0.28
    w_formula: float = 0.3

    heading_depth_max: int = 3
    split_prob: float = 0.7
    header_prob: float = 0.8
    footer_prob: float = 0.9
    front_matter: bool = True
    table_footnote_prob: float = 0.5

    paragraph_lines: tuple = (2, 5)
    list_items: tuple = (2, 4)
    list_depth_max: int = 2
    table_rows: tuple = (2, 4)
    table_cols: tuple = (2, 4)
    max_body_blocks_per_page: int = 0  # 0 = unlimited

    def role_vocab(self) -> RoleVocab:
        return RoleVocab(self.roles) if self.roles else RoleVocab.with_extensions()

    def validate(self):
        if self.pages_min < 1:
            raise ConfigurationError("pages_min must be >= 1 (zero pages requested)")
        if self.pages_max < self.pages_min:
            raise ConfigurationError("pages_max < pages_min")
        weights = self.block_weights()
        if sum(w for _, w in weights) <= 0:
            raise ConfigurationError("empty role mix: all block weights are zero")
        if not (1 <= self.heading_depth_max <= 4):
            raise ConfigurationError("heading_depth_max must be in 1..4")
        if not (0.0 < self.margin < 0.3):
            raise ConfigurationError("margin out of range")
        vocab = self.role_vocab()
        needed = {"paragraph", "footer", "header"}
        if self.w_heading > 0:
            needed.add("section-heading")
        if self.w_list > 0:
            needed.add("list-item")
        if self.w_table > 0:
            needed.update({"table", "caption", "footnote"})
        if self.w_figure > 0:
            needed.update({"figure", "caption"})
        if self.w_formula > 0:
            needed.add("formula")
        missing = [r for r in needed if r not in vocab]
        if missing:
            raise ConfigurationError(f"role vocabulary lacks {missing}")

    def block_weights(self):
        return [
            ("paragraph", self.w_paragraph),
            ("heading", self.w_heading),
            ("list", self.w_list),
            ("table", self.w_table),
            ("figure", self.w_figure),
            ("formula", self.w_formula),
        ]

    @classmethod
    def minimal(cls) -> "GeneratorConfig":
        """One page holding a single one-line paragraph."""
        return cls(
            pages_min=1,
            pages_max=1,
            front_matter=False,
            header_prob=0.0,
            footer_prob=0.0,
            w_heading=0.0,
            w_list=0.0,
            w_table=0.0,
            w_figure=0.0,
            w_formula=0.0,
            paragraph_lines=(1, 1),
            max_body_blocks_per_page=1,
            split_prob=0.0,
        )


@dataclass
class _Carry:
    """Block fragment continued on the next page."""

    kind: str  # paragraph | table
    group_id: int
    prev_node: DocNode
    # paragraph: remaining line texts; table: remaining row count + layout
    par_lines: list = field(default_factory=list)
    rows: int = 0
    cols: int = 0
    width: float = 0.0
    footnote: bool = False
    prev_elem_id: int = 0


class _DocBuilder:
    def __init__(self, seed: int, cfg: GeneratorConfig):
        self.cfg = cfg
        self.rng = np.random.default_rng(seed)
        self.seed = seed
        self.vocab = cfg.role_vocab()
        self.next_id = 0
        self.next_group = 0
        self.pages: list[Page] = []
        self.page_relations: list[set[Relation]] = []
        self.doc_relations: set[Relation] = set()
        self.tree_roots: list[DocNode] = []
        self.heading_stack: list[tuple[int, DocNode]] = []  # region id, node
        self.section_counters: list[int] = []
        self.caption_counts = {"table": 0, "figure": 0}

        # per-page state
        self.lines: list[TextLine] = []
        self.graphics: list[GraphicalObject] = []
        self.regions: list[Region] = []
        self.reading: list[int] = []
        self.prev_endpoint: int | None = None  # last line id or graphic id
        self.page_index = 0
        self.rels: set[Relation] = set()

    # -- id and tree helpers -------------------------------------------------

    def _fresh_id(self) -> int:
        self.next_id += 1
        return self.next_id - 1

    def _attach(self, node: DocNode, parent: DocNode | None):
        if parent is None:
            self.tree_roots.append(node)
        else:
            parent.children.append(node)

    def _current_heading(self) -> DocNode | None:
        return self.heading_stack[-1][1] if self.heading_stack else None

    # -- element emission ----------------------------------------------------

    def _emit_reading(self, element_id: int, first_line: int | None, last_line: int | None):
        """Append an element to the page reading order and emit its
        inter reading-order edge from the previous element."""
        self.reading.append(element_id)
        endpoint_in = first_line if first_line is not None else element_id
        if self.prev_endpoint is not None:
            self.rels.add(
                Relation(self.prev_endpoint, endpoint_in, "page", "inter", "reading_order")
            )
        self.prev_endpoint = last_line if last_line is not None else element_id

    def add_region(self, role: str, spans: list[tuple[str, tuple]], assoc_id=None, group_id=None) -> Region:
        """Create a region from (text, bbox) spans, emitting intra and
        logical-role edges plus the reading-order link."""
        rid = self._fresh_id()
        line_ids = []
        for k, (txt, bbox) in enumerate(spans):
            lid = self._fresh_id()
            self.lines.append(
                TextLine(lid, self.page_index, txt, bbox, rid, k)
            )
            line_ids.append(lid)
            self.rels.add(
                Relation(lid, self.vocab.index(role), "page", "logical_role", "role_assignment")
            )
        if len(line_ids) == 1:
            self.rels.add(Relation(line_ids[0], line_ids[0], "page", "intra", "self_referential"))
        else:
            for a, b in zip(line_ids, line_ids[1:]):
                self.rels.add(Relation(a, b, "page", "intra", "reading_order"))
        region = Region(rid, role, line_ids, self.page_index, assoc_id=assoc_id, group_id=group_id)
        self.regions.append(region)
        self._emit_reading(rid, line_ids[0], line_ids[-1])
        return region

    def add_graphic(self, category: str, bbox, group_id=None) -> GraphicalObject:
        gid = self._fresh_id()
        g = GraphicalObject(gid, self.page_index, bbox, category, group_id=group_id)
        self.graphics.append(g)
        self.rels.add(
            Relation(gid, self.vocab.index(category), "page", "logical_role", "role_assignment")
        )
        self._emit_reading(gid, None, None)
        return g

    def _region_node(self, region: Region, parent: DocNode | None) -> DocNode:
        texts = {ln.id: ln.text for ln in self.lines}
        node = DocNode(
            region.id,
            region.role,
            " ".join(texts[lid] for lid in region.line_ids),
            [region.id],
        )
        self._attach(node, parent)
        return node

    def _graphic_node(self, g: GraphicalObject, parent: DocNode | None) -> DocNode:
        node = DocNode(g.id, g.category, "", [g.id])
        self._attach(node, parent)
        return node

    # -- text layout helpers ---------------------------------------------------

    def _line_box(self, x1: float, y: float, width: float, height=None):
        h = height if height is not None else self.cfg.line_height
        x2 = min(x1 + width, 1.0 - self.cfg.margin * 0.5)
        return (x1, y, x2, y + h)

    # -- block placement -------------------------------------------------------

    def _place_front_matter(self, y: float) -> float:
        cfg, rng = self.cfg, self.rng
        heading_parent = self._current_heading()
        rows = [
            ("title", ptext.title_text(rng), 0.62, cfg.line_height * 1.9),
            ("author", ptext.author_text(rng), 0.5, cfg.line_height),
            ("mail", ptext.mail_text(rng), 0.34, cfg.line_height * 0.9),
            ("affiliation", ptext.affiliation_text(rng), 0.44, cfg.line_height * 0.9),
        ]
        for role, txt, width, h in rows:
            x1 = (1.0 - width) / 2.0
            region = self.add_region(role, [(txt, self._line_box(x1, y, width, h))])
            self._region_node(region, heading_parent)
            y += h + cfg.line_gap * 1.6
        return y + cfg.block_gap

    def _place_heading(self, y: float, y_bot: float) -> float | None:
        cfg, rng = self.cfg, self.rng
        h = cfg.line_height * 1.35
        if y + h > y_bot:
            return None
        depth = self._next_heading_depth()
        self.section_counters = self.section_counters[: depth - 1] + [
            (self.section_counters[depth - 1] + 1)
            if len(self.section_counters) >= depth
            else 1
        ]
        txt = ptext.heading_text(rng, self.section_counters)
        x1 = cfg.margin
        width = 0.32 + rng.random() * 0.3
        region = self.add_region("section-heading", [(txt, self._line_box(x1, y, width, h))])
        parent_entry = self.heading_stack[depth - 2] if depth >= 2 else None
        if parent_entry is not None:
            self.doc_relations.add(
                Relation(region.id, parent_entry[0], "doc", "inter", "hierarchy")
            )
        node = DocNode(region.id, "section-heading", txt, [region.id])
        self._attach(node, parent_entry[1] if parent_entry else None)
        self.heading_stack = self.heading_stack[: depth - 1] + [(region.id, node)]
        return y + h + cfg.block_gap

    def _next_heading_depth(self) -> int:
        depth = len(self.heading_stack)
        if depth == 0:
            return 1
        r = self.rng.random()
        if r < 0.35 and depth < self.cfg.heading_depth_max:
            return depth + 1
        if r < 0.8 or depth == 1:
            return depth
        return int(self.rng.integers(1, depth))

    def _paragraph_spans(self, texts: list[str], y: float) -> list[tuple[str, tuple]]:
        cfg = self.cfg
        spans = []
        x1 = cfg.margin
        full = 1.0 - 2 * cfg.margin
        for i, txt in enumerate(texts):
            width = full if i < len(texts) - 1 else full * (0.45 + self.rng.random() * 0.5)
            spans.append((txt, self._line_box(x1, y, width)))
            y += cfg.line_height + cfg.line_gap
        return spans

    def _make_paragraph_texts(self) -> list[str]:
        cfg, rng = self.cfg, self.rng
        n = int(rng.integers(cfg.paragraph_lines[0], cfg.paragraph_lines[1] + 1))
        lines = [" ".join(ptext.paragraph_line_words(rng)) for _ in range(n)]
        lines[-1] += "."
        return lines

    def _place_paragraph(
        self, y: float, y_bot: float, texts=None, carry: _Carry | None = None, allow_split=True
    ):
        """Place a (possibly continued) paragraph; returns (new_y, carry)."""
        cfg, rng = self.cfg, self.rng
        if texts is None:
            texts = self._make_paragraph_texts()
        step = cfg.line_height + cfg.line_gap
        fit = int((y_bot - y + cfg.line_gap) // step)
        if fit <= 0:
            return None  # nothing fits; caller defers
        new_carry = None
        placed = texts
        group_id = carry.group_id if carry else None
        if len(texts) > fit:
            if carry is None and (not allow_split or rng.random() >= cfg.split_prob):
                return None  # defer whole block to the next page
            placed = texts[:fit]
            if carry is not None and not allow_split:
                pass  # final page: drop the tail, the chain stays >= 2 fragments
            else:
                if group_id is None:
                    group_id = self.next_group
                    self.next_group += 1
                new_carry = _Carry("paragraph", group_id, None, par_lines=texts[fit:])
        region = self.add_region("paragraph", self._paragraph_spans(placed, y), group_id=group_id)
        if carry is not None:
            self.doc_relations.add(
                Relation(carry.prev_elem_id, region.id, "doc", "intra", "continuity")
            )
            carry.prev_node.source_ids.append(region.id)
            texts_map = {ln.id: ln.text for ln in self.lines}
            carry.prev_node.text += " " + " ".join(texts_map[lid] for lid in region.line_ids)
            node = carry.prev_node
        else:
            node = self._region_node(region, self._current_heading())
        if new_carry is not None:
            new_carry.prev_node = node
            new_carry.prev_elem_id = region.id
        return y + len(placed) * step - cfg.line_gap + cfg.block_gap, new_carry

    def _place_list(self, y: float, y_bot: float) -> float | None:
        cfg, rng = self.cfg, self.rng
        n = int(rng.integers(cfg.list_items[0], cfg.list_items[1] + 1))
        step = cfg.line_height + cfg.line_gap
        if y + step > y_bot:
            return None
        depth = 0
        item_stack: list[tuple[int, DocNode]] = []
        placed_any = False
        for _ in range(n):
            if y + cfg.line_height > y_bot:
                break
            txt = ptext.list_item_text(rng, depth)
            x1 = cfg.margin + 0.02 + depth * 0.035
            width = 0.3 + rng.random() * 0.25
            region = self.add_region("list-item", [(txt, self._line_box(x1, y, width))])
            if depth > 0:
                parent_rid, parent_node = item_stack[depth - 1]
                self.doc_relations.add(
                    Relation(region.id, parent_rid, "doc", "inter", "hierarchy")
                )
                node = DocNode(region.id, "list-item", txt, [region.id])
                parent_node.children.append(node)
            else:
                node = self._region_node(region, self._current_heading())
            item_stack = item_stack[:depth] + [(region.id, node)]
            placed_any = True
            y += step
            r = rng.random()
            if r < 0.3 and depth < cfg.list_depth_max - 1:
                depth += 1
            elif r < 0.45 and depth > 0:
                depth -= 1
        if not placed_any:
            return None
        return y - cfg.line_gap + cfg.block_gap

    def _table_geometry(self, rows: int, width: float):
        row_h = self.cfg.line_height * 1.5
        return rows * row_h, row_h

    def _place_table_fragment(
        self, y: float, rows: int, cols: int, width: float, group_id, carry: _Carry | None
    ):
        """Emit one table graphic plus its internal cell-text region."""
        cfg, rng = self.cfg, self.rng
        height, row_h = self._table_geometry(rows, width)
        x1 = cfg.margin + (1.0 - 2 * cfg.margin - width) * rng.random() * 0.5
        box = (x1, y, x1 + width, y + height)
        g = self.add_graphic("table", box, group_id=group_id)
        g._rows = rows  # rendering hint, not part of the annotation
        g._cols = cols
        if carry is not None:
            self.doc_relations.add(
                Relation(carry.prev_elem_id, g.id, "doc", "intra", "continuity")
            )
            carry.prev_node.source_ids.append(g.id)
            table_node = carry.prev_node
        else:
            table_node = self._graphic_node(g, self._current_heading())
        # one text line per row, confined to a cell of that row
        spans = []
        col_w = width / cols
        for r in range(rows):
            c = int(rng.integers(0, cols))
            cx1 = x1 + c * col_w + col_w * 0.12
            cy1 = y + r * row_h + row_h * 0.28
            spans.append(
                (ptext.cell_text(rng), (cx1, cy1, cx1 + col_w * 0.72, cy1 + row_h * 0.5))
            )
        content = self.add_region("table", spans)
        self._region_node(content, self._current_heading())
        return g, table_node, y + height

    def _place_table(self, y: float, y_bot: float, carry: _Carry | None = None, allow_split=True):
        cfg, rng = self.cfg, self.rng
        if carry is None:
            rows = int(rng.integers(cfg.table_rows[0], cfg.table_rows[1] + 1))
            cols = int(rng.integers(cfg.table_cols[0], cfg.table_cols[1] + 1))
            width = 0.45 + rng.random() * 0.25
            want_footnote = rng.random() < cfg.table_footnote_prob
            cap = ptext.caption_text(rng, "table", self.caption_counts["table"] + 1)
            cap_h = cfg.line_height
            _, row_h = self._table_geometry(1, width)
            if y + cap_h + cfg.line_gap + row_h > y_bot:
                return None
            self.caption_counts["table"] += 1
            cap_region = self.add_region(
                "caption", [(cap, self._line_box(cfg.margin + 0.04, y, 0.5))]
            )
            self._region_node(cap_region, self._current_heading())
            y += cap_h + cfg.line_gap
        else:
            rows, cols, width = carry.rows, carry.cols, carry.width
            want_footnote = carry.footnote
            cap_region = None

        height, row_h = self._table_geometry(rows, width)
        fit_rows = int((y_bot - y) // row_h)
        new_carry = None
        if fit_rows < rows:
            fit_rows = max(1, fit_rows)
            do_split = allow_split and (carry is not None or rng.random() < cfg.split_prob)
            if not do_split:
                # keep the table whole but trimmed to what fits
                rows = fit_rows
            else:
                group_id = carry.group_id if carry else self.next_group
                if carry is None:
                    self.next_group += 1
                g, node, y_end = self._place_table_fragment(
                    y, fit_rows, cols, width, group_id, carry
                )
                if cap_region is not None:
                    cap_region.assoc_id = g.id
                    self.rels.add(
                        Relation(
                            cap_region.line_ids[-1], g.id, "page", "inter", "semantic_association"
                        )
                    )
                new_carry = _Carry(
                    "table",
                    group_id,
                    node,
                    rows=rows - fit_rows,
                    cols=cols,
                    width=width,
                    footnote=want_footnote,
                    prev_elem_id=g.id,
                )
                return y_end + cfg.block_gap, new_carry
        g, node, y_end = self._place_table_fragment(
            y, rows, cols, width, carry.group_id if carry else None, carry
        )
        if cap_region is not None:
            cap_region.assoc_id = g.id
            last_line = cap_region.line_ids[-1]
            self.rels.add(Relation(last_line, g.id, "page", "inter", "semantic_association"))
        y = y_end + cfg.line_gap
        if want_footnote and y + cfg.line_height * 0.9 <= y_bot:
            fn = self.add_region(
                "footnote",
                [(ptext.footnote_text(rng), self._line_box(cfg.margin + 0.04, y, 0.4, cfg.line_height * 0.85))],
                assoc_id=g.id,
            )
            self.rels.add(
                Relation(g.id, fn.line_ids[0], "page", "inter", "semantic_association")
            )
            self._region_node(fn, self._current_heading())
            y += cfg.line_height * 0.85 + cfg.line_gap
        return y + cfg.block_gap, new_carry

    def _place_figure(self, y: float, y_bot: float) -> float | None:
        cfg, rng = self.cfg, self.rng
        height = 0.1 + rng.random() * 0.1
        width = 0.4 + rng.random() * 0.3
        cap_h = cfg.line_height
        if y + height + cfg.line_gap + cap_h > y_bot:
            return None
        x1 = cfg.margin + (1.0 - 2 * cfg.margin - width) * rng.random() * 0.6
        g = self.add_graphic("figure", (x1, y, x1 + width, y + height))
        self._graphic_node(g, self._current_heading())
        y += height + cfg.line_gap
        self.caption_counts["figure"] += 1
        cap = ptext.caption_text(rng, "figure", self.caption_counts["figure"])
        region = self.add_region(
            "caption", [(cap, self._line_box(cfg.margin + 0.04, y, 0.5))], assoc_id=g.id
        )
        self.rels.add(
            Relation(region.line_ids[-1], g.id, "page", "inter", "semantic_association")
        )
        self._region_node(region, self._current_heading())
        return y + cap_h + cfg.block_gap

    def _place_formula(self, y: float, y_bot: float) -> float | None:
        cfg, rng = self.cfg, self.rng
        height = cfg.line_height * 1.9
        if y + height > y_bot:
            return None
        width = 0.3 + rng.random() * 0.2
        x1 = (1.0 - width) / 2.0
        g = self.add_graphic("formula", (x1, y, x1 + width, y + height))
        self._graphic_node(g, self._current_heading())
        inset_y = y + height * 0.22
        content = self.add_region(
            "formula",
            [(ptext.formula_text(rng), (x1 + width * 0.08, inset_y, x1 + width * 0.92, inset_y + height * 0.5))],
        )
        self._region_node(content, self._current_heading())
        return y + height + cfg.block_gap

    # -- page assembly ---------------------------------------------------------

    def build_page(self, index: int, carry: _Carry | None, allow_split: bool) -> _Carry | None:
        cfg, rng = self.cfg, self.rng
        self.page_index = index
        self.lines, self.graphics, self.regions, self.reading = [], [], [], []
        self.prev_endpoint = None
        self.rels = set()

        y_top, y_bot = cfg.margin, 1.0 - cfg.margin
        if rng.random() < cfg.header_prob:
            region = self.add_region(
                "header",
                [(ptext.header_text(rng), self._line_box(cfg.margin, cfg.margin * 0.3, 0.3, cfg.line_height * 0.85))],
            )
            self._region_node(region, self._current_heading())
        want_footer = rng.random() < cfg.footer_prob

        y = y_top
        if index == 0 and cfg.front_matter:
            y = self._place_front_matter(y)

        if carry is not None:
            if carry.kind == "paragraph":
                placed = self._place_paragraph(
                    y, y_bot, texts=carry.par_lines, carry=carry, allow_split=allow_split
                )
            else:
                placed = self._place_table(y, y_bot, carry=carry, allow_split=allow_split)
            assert placed is not None, "continuation fragment must fit on a fresh page"
            y, carry = placed
        blocks = 0
        weights = cfg.block_weights()
        names = [n for n, _ in weights]
        probs = np.array([w for _, w in weights], dtype=np.float64)
        probs = probs / probs.sum()
        while y < y_bot - cfg.line_height and carry is None:
            if cfg.max_body_blocks_per_page and blocks >= cfg.max_body_blocks_per_page:
                break
            kind = names[int(rng.choice(len(names), p=probs))]
            if kind == "paragraph":
                out = self._place_paragraph(y, y_bot, allow_split=allow_split)
                if out is None:
                    break
                y, carry = out
            elif kind == "heading":
                out = self._place_heading(y, y_bot)
                if out is None:
                    break
                y = out
            elif kind == "list":
                out = self._place_list(y, y_bot)
                if out is None:
                    break
                y = out
            elif kind == "table":
                out = self._place_table(y, y_bot, allow_split=allow_split)
                if out is None:
                    break
                y, carry = out
            elif kind == "figure":
                out = self._place_figure(y, y_bot)
                if out is None:
                    break
                y = out
            else:
                out = self._place_formula(y, y_bot)
                if out is None:
                    break
                y = out
            blocks += 1

        if want_footer:
            region = self.add_region(
                "footer",
                [(ptext.footer_text(rng, index + 1), self._line_box(0.46, 1.0 - cfg.margin * 0.7, 0.1, cfg.line_height * 0.8))],
            )
            self._region_node(region, self._current_heading())

        image = self._render() if cfg.render else None
        page = Page(index, self.lines, self.graphics, self.regions, self.reading, image)
        self.pages.append(page)
        self.page_relations.append(self.rels)
        return carry

    def _render(self) -> np.ndarray:
        size = self.cfg.raster_size
        img = np.ones((size, size, 3), dtype=np.float32)
        for g in self.graphics:
            if g.category == "table":
                render.draw_table(img, g.bbox, getattr(g, "_rows", 3), getattr(g, "_cols", 3))
            elif g.category == "figure":
                render.draw_figure(img, g.bbox)
            else:
                render.draw_formula_panel(img, g.bbox)
        role_of = {r.id: r.role for r in self.regions}
        for ln in self.lines:
            ink = render.EMPHASIS_INK.get(role_of[ln.region_id], render.DEFAULT_INK)
            if role_of[ln.region_id] in ("header", "footer"):
                ink = render.LIGHT_INK
            render.draw_text_line(img, ln.bbox, ln.text, ink)
        return img

    def build(self) -> DocumentSample:
        n_pages = int(self.rng.integers(self.cfg.pages_min, self.cfg.pages_max + 1))
        carry = None
        for p in range(n_pages):
            carry = self.build_page(p, carry, allow_split=p < n_pages - 1)
        assert carry is None
        tree = DocTree(self.tree_roots)
        sample = DocumentSample(
            doc_id=f"doc{self.seed:08d}",
            pages=self.pages,
            doc_relations=self.doc_relations,
            toc_tree=tree.heading_tree(),
            tree=tree,
            rng_seed=self.seed,
            page_relations=self.page_relations,
        )
        sample.validate()
        return sample


def generate_document(seed: int, config: GeneratorConfig | None = None) -> DocumentSample:
    """Deterministically generate one annotated document."""
    cfg = config or GeneratorConfig()
    cfg.validate()
    return _DocBuilder(int(seed), cfg).build()


def generate_corpus(base_seed: int, count: int, config: GeneratorConfig | None = None) -> list[DocumentSample]:
    """Generate `count` documents with per-document seeds spawned from
    `base_seed`; document i is independent of the others."""
    cfg = config or GeneratorConfig()
    cfg.validate()
    seeds = np.random.SeedSequence(base_seed).generate_state(count)
    out = []
    for i, s in enumerate(seeds):
        sample = generate_document(int(s), cfg)
        sample.doc_id = f"doc{base_seed}_{i:04d}"
        out.append(sample)
    return out
