"""Raster rendering of synthetic pages.

Text lines become word-chunked filled rectangles; graphical objects get
a category-specific texture (grid, tinted panel with diagonals, tinted
strip) so a vision backbone has a learnable signal. Photographic realism
is out of scope.
"""

from __future__ import annotations

import numpy as np

from ..geometry import Box

# Ink levels per role family; darker ink marks emphasized text.
EMPHASIS_INK = {"title": 0.08, "section-heading": 0.12}
DEFAULT_INK = 0.32
LIGHT_INK = 0.5

FIGURE_FILL = (0.80, 0.85, 0.95)
FORMULA_FILL = (0.97, 0.94, 0.85)
TABLE_HEADER_FILL = (0.88, 0.88, 0.90)
BORDER_INK = 0.15


def _px(v: float, size: int) -> int:
    return int(round(v * size))


def _clip_box(box: Box, size: int) -> tuple[int, int, int, int]:
    x1 = max(0, min(size, _px(box[0], size)))
    y1 = max(0, min(size, _px(box[1], size)))
    x2 = max(x1 + 1, min(size, _px(box[2], size)))
    y2 = max(y1 + 1, min(size, _px(box[3], size)))
    return x1, y1, x2, y2


def fill_rect(img: np.ndarray, box: Box, color) -> None:
    size = img.shape[0]
    x1, y1, x2, y2 = _clip_box(box, size)
    if y2 <= y1 or x2 <= x1:
        return
    img[y1:y2, x1:x2] = color


def draw_text_line(img: np.ndarray, box: Box, text: str, ink: float) -> None:
    """Fill one word-chunk rectangle per word, advanced left to right."""
    x1, y1, x2, y2 = box
    words = text.split() or [text or "x"]
    total_chars = sum(len(w) for w in words)
    gap = (x2 - x1) * 0.02
    avail = (x2 - x1) - gap * (len(words) - 1)
    if avail <= 0 or total_chars == 0:
        fill_rect(img, box, ink)
        return
    x = x1
    for w in words:
        w_width = avail * len(w) / total_chars
        fill_rect(img, (x, y1, min(x + w_width, x2), y2), ink)
        x += w_width + gap


def draw_table(img: np.ndarray, box: Box, rows: int, cols: int) -> None:
    size = img.shape[0]
    x1, y1, x2, y2 = _clip_box(box, size)
    img[y1:y2, x1:x2] = 1.0
    header_y2 = y1 + max(1, (y2 - y1) // max(rows, 1))
    img[y1:header_y2, x1:x2] = TABLE_HEADER_FILL
    t = max(1, size // 512)
    for r in range(rows + 1):
        ry = y1 + round(r * (y2 - y1) / max(rows, 1))
        img[max(y1, ry - t) : min(y2, ry + t), x1:x2] = BORDER_INK
    for c in range(cols + 1):
        cx = x1 + round(c * (x2 - x1) / max(cols, 1))
        img[y1:y2, max(x1, cx - t) : min(x2, cx + t)] = BORDER_INK


def draw_figure(img: np.ndarray, box: Box) -> None:
    size = img.shape[0]
    x1, y1, x2, y2 = _clip_box(box, size)
    img[y1:y2, x1:x2] = FIGURE_FILL
    t = max(1, size // 512)
    img[y1 : y1 + t, x1:x2] = BORDER_INK
    img[y2 - t : y2, x1:x2] = BORDER_INK
    img[y1:y2, x1 : x1 + t] = BORDER_INK
    img[y1:y2, x2 - t : x2] = BORDER_INK
    # Two diagonals give the panel an orientation-free internal pattern.
    n = max(x2 - x1, y2 - y1) * 2
    ts = np.linspace(0.0, 1.0, n)
    xs = (x1 + ts * (x2 - 1 - x1)).round().astype(int)
    ys = (y1 + ts * (y2 - 1 - y1)).round().astype(int)
    img[ys, xs] = BORDER_INK
    img[ys[::-1], xs] = BORDER_INK


def draw_formula_panel(img: np.ndarray, box: Box) -> None:
    size = img.shape[0]
    x1, y1, x2, y2 = _clip_box(box, size)
    img[y1:y2, x1:x2] = FORMULA_FILL
