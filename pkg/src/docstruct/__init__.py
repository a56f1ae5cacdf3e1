"""docstruct: hierarchical document structure analysis as unified
relation prediction, with a synthetic desk-scale corpus, an end-to-end
trainable model, structure decoding, and an evaluation suite."""

__version__ = "0.1.0"
