"""Dataset serialization: one JSON file plus PNG pages per document.

Two on-disk layouts are readable: the native `synthetic_json` schema
written by this package, and a tolerant `comphrdoc_json` variant that
accepts common key aliases and pixel-space boxes.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
from PIL import Image

from ..errors import IngestionError, ParseError
from ..geometry import box_is_valid
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
from .relations import build_annotation_tree

_FORMATS = ("synthetic_json", "comphrdoc_json")


def _toc_to_json(node: DocNode) -> dict:
    return {
        "title": node.text,
        "region_id": node.id,
        "children": [_toc_to_json(c) for c in node.children],
    }


def _toc_from_json(obj, remap, path) -> DocNode:
    try:
        rid = remap[("region", obj["region_id"])]
    except KeyError as e:
        raise ParseError(path, "toc.region_id", f"unknown region {obj.get('region_id')}") from e
    return DocNode(
        rid,
        "section-heading",
        obj.get("title", ""),
        [rid],
        [_toc_from_json(c, remap, path) for c in obj.get("children", [])],
    )


def write_dataset(samples: list[DocumentSample], out_dir) -> list[Path]:
    """Write one `<doc_id>.json` (plus PNG pages when rendered) per sample."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for sample in samples:
        doc = {
            "doc_id": sample.doc_id,
            "rng_seed": sample.rng_seed,
            "pages": [],
            "doc_relations": [
                {"src": r.src_id, "dst": r.dst_id, "level": r.level, "kind": r.kind, "subtype": r.subtype}
                for r in sorted(sample.doc_relations, key=lambda r: (r.src_id, r.dst_id, r.subtype))
            ],
            "toc": [_toc_to_json(n) for n in sample.toc_tree.roots],
        }
        for page in sample.pages:
            image_path = None
            if page.image is not None:
                image_path = f"{sample.doc_id}_{page.index:03d}.png"
                arr = np.clip(page.image * 255.0 + 0.5, 0, 255).astype(np.uint8)
                Image.fromarray(arr).save(out / image_path)
            doc["pages"].append(
                {
                    "index": page.index,
                    "image_path": image_path,
                    "lines": [
                        {
                            "id": ln.id,
                            "text": ln.text,
                            "bbox": list(ln.bbox),
                            "region_id": ln.region_id,
                            "order_in_region": ln.order_in_region,
                        }
                        for ln in page.lines
                    ],
                    "graphics": [
                        {
                            "id": g.id,
                            "bbox": list(g.bbox),
                            "category": g.category,
                            "group_id": g.group_id,
                        }
                        for g in page.graphics
                    ],
                    "regions": [
                        {
                            "id": r.id,
                            "role": r.role,
                            "line_ids": list(r.line_ids),
                            "assoc_id": r.assoc_id,
                            "group_id": r.group_id,
                        }
                        for r in page.regions
                    ],
                    "reading_order": list(page.reading_order),
                }
            )
        path = out / f"{sample.doc_id}.json"
        path.write_text(json.dumps(doc, indent=1, sort_keys=True))
        written.append(path)
    return written


def _need(obj: dict, key: str, path, ctx: str, aliases=()):
    for k in (key, *aliases):
        if k in obj and obj[k] is not None:
            return obj[k]
    raise ParseError(path, f"{ctx}.{key}", "missing required field")


def _parse_box(raw, path, ctx, scale=(1.0, 1.0)):
    if not isinstance(raw, (list, tuple)):
        raise ParseError(path, ctx, f"bbox must be a list, got {type(raw).__name__}")
    if len(raw) == 4 and all(isinstance(v, (int, float)) for v in raw):
        box = (raw[0] / scale[0], raw[1] / scale[1], raw[2] / scale[0], raw[3] / scale[1])
    elif all(isinstance(p, (list, tuple)) and len(p) == 2 for p in raw):
        xs = [p[0] / scale[0] for p in raw]
        ys = [p[1] / scale[1] for p in raw]
        box = (min(xs), min(ys), max(xs), max(ys))
    else:
        raise ParseError(path, ctx, f"cannot interpret bbox {raw!r}")
    if not box_is_valid(box, tol=1e-6):
        raise ParseError(path, ctx, f"invalid normalized bbox {box}")
    return tuple(float(v) for v in box)


def _load_document(path: Path, fmt: str, vocab: RoleVocab, id_base: int) -> DocumentSample:
    comp = fmt == "comphrdoc_json"
    try:
        raw = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise ParseError(path, "<root>", f"invalid JSON: {e}") from e
    doc_id = _need(raw, "doc_id", path, "doc", aliases=("doc_name",) if comp else ())
    pages_raw = _need(raw, "pages", path, "doc")

    # First pass: collect ids so references can be remapped to a dense
    # document-local namespace.
    remap: dict[tuple, int] = {}
    next_id = id_base

    def assign(kind, old, ctx):
        nonlocal next_id
        if (kind, old) in remap:
            raise ParseError(path, ctx, f"duplicate {kind} id {old}")
        remap[(kind, old)] = next_id
        next_id += 1

    for p_i, praw in enumerate(pages_raw):
        for l_i, lraw in enumerate(praw.get("lines") or praw.get("text_lines") or []):
            assign("line", _need(lraw, "id", path, f"pages[{p_i}].lines[{l_i}]"), f"pages[{p_i}].lines[{l_i}].id")
        for g_i, graw in enumerate(praw.get("graphics") or praw.get("graphical_objects") or []):
            assign("graphic", _need(graw, "id", path, f"pages[{p_i}].graphics[{g_i}]"), f"pages[{p_i}].graphics[{g_i}].id")
        for r_i, rraw in enumerate(praw.get("regions") or []):
            assign("region", _need(rraw, "id", path, f"pages[{p_i}].regions[{r_i}]"), f"pages[{p_i}].regions[{r_i}].id")

    def elem_ref(old, ctx):
        for kind in ("region", "graphic", "line"):
            if (kind, old) in remap:
                return remap[(kind, old)]
        raise ParseError(path, ctx, f"reference to unknown id {old}")

    pages = []
    for p_i, praw in enumerate(pages_raw):
        ctx = f"pages[{p_i}]"
        scale = (1.0, 1.0)
        if comp and "width" in praw and "height" in praw:
            scale = (float(praw["width"]), float(praw["height"]))
        lines = []
        for l_i, lraw in enumerate(praw.get("lines") or praw.get("text_lines") or []):
            lctx = f"{ctx}.lines[{l_i}]"
            bbox = _parse_box(_need(lraw, "bbox", path, lctx, aliases=("box", "polygon")), path, f"{lctx}.bbox", scale)
            region_old = lraw.get("region_id", lraw.get("region"))
            order = lraw.get("order_in_region", lraw.get("order"))
            lines.append(
                TextLine(
                    remap[("line", lraw["id"])],
                    p_i,
                    str(_need(lraw, "text", path, lctx)),
                    bbox,
                    remap[("region", region_old)] if region_old is not None else -1,
                    int(order) if order is not None else -1,
                )
            )
        graphics = []
        for g_i, graw in enumerate(praw.get("graphics") or praw.get("graphical_objects") or []):
            gctx = f"{ctx}.graphics[{g_i}]"
            cat = _need(graw, "category", path, gctx, aliases=("class", "label") if comp else ())
            bbox = _parse_box(_need(graw, "bbox", path, gctx, aliases=("box",)), path, f"{gctx}.bbox", scale)
            if cat not in ("table", "figure", "formula"):
                raise ParseError(path, f"{gctx}.category", f"unknown category {cat!r}")
            graphics.append(
                GraphicalObject(
                    remap[("graphic", graw["id"])], p_i, bbox, cat, graw.get("group_id")
                )
            )
        regions = []
        lines_by_id = {ln.id: ln for ln in lines}
        for r_i, rraw in enumerate(praw.get("regions") or []):
            rctx = f"{ctx}.regions[{r_i}]"
            role = _need(rraw, "role", path, rctx, aliases=("label",) if comp else ())
            if role not in vocab:
                raise ParseError(path, f"{rctx}.role", f"role {role!r} not in vocabulary")
            rid = remap[("region", rraw["id"])]
            line_ids = []
            raw_line_ids = _need(rraw, "line_ids", path, rctx, aliases=("lines",) if comp else ())
            for k, old in enumerate(raw_line_ids):
                if ("line", old) not in remap:
                    raise ParseError(path, f"{rctx}.line_ids[{k}]", f"unknown line {old}")
                lid = remap[("line", old)]
                line_ids.append(lid)
                ln = lines_by_id[lid]
                if ln.region_id == -1:
                    ln.region_id = rid
                    ln.order_in_region = k
            assoc_old = rraw.get("assoc_id")
            assoc = None
            if assoc_old is not None:
                if ("graphic", assoc_old) not in remap:
                    raise ParseError(path, f"{rctx}.assoc_id", f"unknown graphic {assoc_old}")
                assoc = remap[("graphic", assoc_old)]
            regions.append(Region(rid, role, line_ids, p_i, assoc, rraw.get("group_id")))
        reading_raw = praw.get("reading_order", praw.get("orders"))
        if reading_raw is None:
            raise ParseError(path, f"{ctx}.reading_order", "missing required field")
        reading = [elem_ref(old, f"{ctx}.reading_order[{k}]") for k, old in enumerate(reading_raw)]

        image = None
        image_path = praw.get("image_path", praw.get("image"))
        if image_path is not None:
            img_file = path.parent / image_path
            if not img_file.exists():
                raise IngestionError(f"{path}: page {p_i} image missing: {img_file}")
            with Image.open(img_file) as im:
                image = np.asarray(im.convert("RGB"), dtype=np.float32) / 255.0
        pages.append(Page(p_i, lines, graphics, regions, reading, image))

    rels = set()
    for k, rr in enumerate(raw.get("doc_relations", raw.get("relations")) or []):
        rctx = f"doc_relations[{k}]"
        try:
            rels.add(
                Relation(
                    elem_ref(_need(rr, "src", path, rctx), f"{rctx}.src"),
                    elem_ref(_need(rr, "dst", path, rctx), f"{rctx}.dst"),
                    _need(rr, "level", path, rctx),
                    _need(rr, "kind", path, rctx),
                    _need(rr, "subtype", path, rctx),
                )
            )
        except ValueError as e:
            raise ParseError(path, rctx, str(e)) from e

    region_remap = {old: new for (kind, old), new in remap.items() if kind == "region"}
    toc = DocTree([_toc_from_json(n, {("region", k): v for k, v in region_remap.items()}, path) for n in raw.get("toc") or []])

    sample = DocumentSample(
        doc_id=str(doc_id),
        pages=pages,
        doc_relations=rels,
        toc_tree=toc,
        tree=DocTree([]),
        rng_seed=int(raw.get("rng_seed", 0)),
    )
    try:
        sample.validate()
    except Exception as e:
        raise ParseError(path, "<document>", str(e)) from e
    sample.tree = build_annotation_tree(sample)
    return sample


def load_dataset(path, fmt: str = "synthetic_json", vocab: RoleVocab | None = None) -> list[DocumentSample]:
    """Load every document JSON under `path` (sorted by filename).

    Ids are remapped to a locally unique dense namespace per call so
    documents from different sources can be mixed safely.
    """
    if fmt not in _FORMATS:
        raise ValueError(f"unknown dataset format {fmt!r}; expected one of {_FORMATS}")
    vocab = vocab or RoleVocab.with_extensions()
    root = Path(path)
    if not root.exists():
        raise IngestionError(f"dataset path does not exist: {root}")
    files = sorted(p for p in root.glob("*.json") if p.name != "manifest.json")
    samples = []
    id_base = 0
    for f in files:
        sample = _load_document(f, fmt, vocab, id_base)
        id_base += sum(
            len(p.lines) + len(p.graphics) + len(p.regions) for p in sample.pages
        )
        samples.append(sample)
    return samples


def split_documents(doc_ids: list[str], seed: int, fractions=(0.7, 0.15, 0.15)) -> dict[str, list[str]]:
    """Deterministic by-document train/val/test split."""
    ids = list(doc_ids)
    rng = np.random.default_rng(seed)
    order = rng.permutation(len(ids))
    n_train = int(round(fractions[0] * len(ids)))
    n_val = int(round(fractions[1] * len(ids)))
    shuffled = [ids[i] for i in order]
    return {
        "train": sorted(shuffled[:n_train]),
        "val": sorted(shuffled[n_train : n_train + n_val]),
        "test": sorted(shuffled[n_train + n_val :]),
    }
