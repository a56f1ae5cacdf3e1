"""Seeded pseudo-text with role-correlated lexical cues.

The text embedder only sees bytes, so the cues are surface patterns:
heading numbers, caption prefixes, list markers, page numbers, and
case/punctuation conventions.
"""

from __future__ import annotations

import numpy as np

_CONSONANTS = "bcdfghklmnprstvwz"
_VOWELS = "aeiou"


def pseudo_word(rng: np.random.Generator, min_syll: int = 1, max_syll: int = 3) -> str:
    n = int(rng.integers(min_syll, max_syll + 1))
    out = []
    for _ in range(n):
        out.append(_CONSONANTS[int(rng.integers(len(_CONSONANTS)))])
        out.append(_VOWELS[int(rng.integers(len(_VOWELS)))])
    if rng.random() < 0.3:
        out.append(_CONSONANTS[int(rng.integers(len(_CONSONANTS)))])
    return "".join(out)


def pseudo_words(rng: np.random.Generator, count: int, **kw) -> list[str]:
    return [pseudo_word(rng, **kw) for _ in range(count)]


def title_case(words: list[str]) -> list[str]:
    return [w.capitalize() for w in words]


def heading_text(rng: np.random.Generator, counters: list[int]) -> str:
    number = ".".join(str(c) for c in counters)
    words = title_case(pseudo_words(rng, int(rng.integers(2, 5))))
    return f"{number} {' '.join(words)}"


def title_text(rng: np.random.Generator) -> str:
    return " ".join(title_case(pseudo_words(rng, int(rng.integers(4, 7)))))


def author_text(rng: np.random.Generator) -> str:
    names = []
    for _ in range(int(rng.integers(1, 4))):
        names.append(" ".join(title_case(pseudo_words(rng, 2, min_syll=2, max_syll=2))))
    return ", ".join(names)


def mail_text(rng: np.random.Generator) -> str:
    return f"{pseudo_word(rng, 2, 3)}@{pseudo_word(rng, 2, 2)}.{pseudo_word(rng, 1, 1)}"


def affiliation_text(rng: np.random.Generator) -> str:
    return (
        f"Dept of {pseudo_word(rng, 2, 3).capitalize()}, "
        f"Univ of {pseudo_word(rng, 2, 3).capitalize()}"
    )


def caption_text(rng: np.random.Generator, category: str, number: int) -> str:
    kind = "Table" if category == "table" else "Figure"
    words = pseudo_words(rng, int(rng.integers(3, 7)))
    return f"{kind} {number}: {' '.join(words)}."


def footnote_text(rng: np.random.Generator) -> str:
    return f"* {' '.join(pseudo_words(rng, int(rng.integers(3, 6))))}."


def header_text(rng: np.random.Generator) -> str:
    return " ".join(title_case(pseudo_words(rng, int(rng.integers(2, 4)))))


def footer_text(rng: np.random.Generator, page_number: int) -> str:
    return f"Page {page_number}"


def list_item_text(rng: np.random.Generator, depth: int) -> str:
    marker = "-" if depth == 0 else "*"
    words = pseudo_words(rng, int(rng.integers(2, 6)))
    return f"{marker} {' '.join(words)}"


def formula_text(rng: np.random.Generator) -> str:
    lhs = pseudo_word(rng, 1, 1)
    rhs = " + ".join(pseudo_words(rng, int(rng.integers(2, 4)), min_syll=1, max_syll=1))
    return f"{lhs} = {rhs}"


def cell_text(rng: np.random.Generator) -> str:
    if rng.random() < 0.5:
        return str(int(rng.integers(0, 1000)))
    return pseudo_word(rng, 1, 2)


def paragraph_line_words(rng: np.random.Generator) -> list[str]:
    return pseudo_words(rng, int(rng.integers(4, 8)))
