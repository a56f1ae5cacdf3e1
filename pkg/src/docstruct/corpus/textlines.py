"""Group word-level text units into text lines.

Two units merge when both their horizontal and vertical gaps are below
the page-wide average unit height; merging is the transitive closure of
that pairwise rule. Used for datasets whose OCR splits lines into words
or characters.
"""

from __future__ import annotations

from ..geometry import Box, box_union
from ..types import TextLine


def _gap(a1: float, a2: float, b1: float, b2: float) -> float:
    """Signed 1-D gap between intervals (a1,a2) and (b1,b2); negative
    when they overlap."""
    return max(a1, b1) - min(a2, b2)


def units_mergeable(a: Box, b: Box, threshold: float) -> bool:
    return (
        _gap(a[0], a[2], b[0], b[2]) < threshold
        and _gap(a[1], a[3], b[1], b[3]) < threshold
    )


def group_words_into_lines(units: list[tuple[str, Box]]) -> list[TextLine]:
    """Merge (text, bbox) units into TextLines.

    Output is canonically ordered by (y1, x1, text) and therefore
    invariant to the input order. The returned lines are not yet part of
    any region; region_id is set to the line's own id as a placeholder.
    """
    n = len(units)
    if n == 0:
        return []
    threshold = sum(b[3] - b[1] for _, b in units) / n

    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if units_mergeable(units[i][1], units[j][1], threshold):
                parent[find(i)] = find(j)

    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)

    merged = []
    for members in groups.values():
        members.sort(key=lambda i: (units[i][1][0], units[i][1][1]))
        text = " ".join(units[i][0] for i in members)
        bbox = box_union(units[i][1] for i in members)
        merged.append((text, bbox))
    merged.sort(key=lambda tb: (tb[1][1], tb[1][0], tb[0]))
    return [
        TextLine(i, 0, text, bbox, region_id=i, order_in_region=0)
        for i, (text, bbox) in enumerate(merged)
    ]
