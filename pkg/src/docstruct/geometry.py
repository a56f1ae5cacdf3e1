"""Axis-aligned box utilities.

Boxes are 4-tuples or arrays (x1, y1, x2, y2) in normalized page
coordinates unless a function says otherwise.
"""

from __future__ import annotations

import numpy as np

Box = tuple[float, float, float, float]


def box_is_valid(box, tol: float = 0.0) -> bool:
    x1, y1, x2, y2 = box
    return (
        x1 < x2
        and y1 < y2
        and x1 >= -tol
        and y1 >= -tol
        and x2 <= 1.0 + tol
        and y2 <= 1.0 + tol
    )


def box_union(boxes) -> Box:
    """Smallest box covering all input boxes. Input must be non-empty."""
    arr = np.asarray(list(boxes), dtype=np.float64).reshape(-1, 4)
    return (
        float(arr[:, 0].min()),
        float(arr[:, 1].min()),
        float(arr[:, 2].max()),
        float(arr[:, 3].max()),
    )


def box_area(box) -> float:
    x1, y1, x2, y2 = box
    return max(0.0, x2 - x1) * max(0.0, y2 - y1)


def box_iou(a, b) -> float:
    ix1 = max(a[0], b[0])
    iy1 = max(a[1], b[1])
    ix2 = min(a[2], b[2])
    iy2 = min(a[3], b[3])
    inter = max(0.0, ix2 - ix1) * max(0.0, iy2 - iy1)
    union = box_area(a) + box_area(b) - inter
    return inter / union if union > 0 else 0.0


def box_giou(a, b) -> float:
    """Generalized IoU in [-1, 1]; 1 for identical boxes."""
    ix1 = max(a[0], b[0])
    iy1 = max(a[1], b[1])
    ix2 = min(a[2], b[2])
    iy2 = min(a[3], b[3])
    inter = max(0.0, ix2 - ix1) * max(0.0, iy2 - iy1)
    union = box_area(a) + box_area(b) - inter
    iou = inter / union if union > 0 else 0.0
    hx1 = min(a[0], b[0])
    hy1 = min(a[1], b[1])
    hx2 = max(a[2], b[2])
    hy2 = max(a[3], b[3])
    hull = (hx2 - hx1) * (hy2 - hy1)
    if hull <= 0:
        return iou
    return iou - (hull - union) / hull


def pairwise_iou(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """IoU matrix between two (N,4) and (M,4) box arrays."""
    a = np.asarray(a, dtype=np.float64).reshape(-1, 4)
    b = np.asarray(b, dtype=np.float64).reshape(-1, 4)
    ix1 = np.maximum(a[:, None, 0], b[None, :, 0])
    iy1 = np.maximum(a[:, None, 1], b[None, :, 1])
    ix2 = np.minimum(a[:, None, 2], b[None, :, 2])
    iy2 = np.minimum(a[:, None, 3], b[None, :, 3])
    inter = np.clip(ix2 - ix1, 0, None) * np.clip(iy2 - iy1, 0, None)
    area_a = (a[:, 2] - a[:, 0]) * (a[:, 3] - a[:, 1])
    area_b = (b[:, 2] - b[:, 0]) * (b[:, 3] - b[:, 1])
    union = area_a[:, None] + area_b[None, :] - inter
    with np.errstate(divide="ignore", invalid="ignore"):
        iou = np.where(union > 0, inter / union, 0.0)
    return iou


def xyxy_to_cxcywh(box) -> Box:
    x1, y1, x2, y2 = box
    return ((x1 + x2) / 2.0, (y1 + y2) / 2.0, x2 - x1, y2 - y1)


def cxcywh_to_xyxy(box) -> Box:
    cx, cy, w, h = box
    return (cx - w / 2.0, cy - h / 2.0, cx + w / 2.0, cy + h / 2.0)
