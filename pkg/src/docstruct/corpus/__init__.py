"""Synthetic corpus generation, relation derivation, and dataset IO."""

from .dataset import load_dataset, split_documents, write_dataset
from .generator import GeneratorConfig, generate_corpus, generate_document
from .relations import (
    build_annotation_tree,
    derive_doc_relations,
    derive_page_relations,
)
from .textlines import group_words_into_lines

__all__ = [
    "GeneratorConfig",
    "generate_document",
    "generate_corpus",
    "derive_page_relations",
    "derive_doc_relations",
    "build_annotation_tree",
    "group_words_into_lines",
    "load_dataset",
    "write_dataset",
    "split_documents",
]
