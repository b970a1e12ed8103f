"""hatlm: a desk-scale hierarchical byte/word language model.

Rule-based word splitting over UTF-8 bytes, a byte-encoder ->
word-backbone -> byte-decoder transformer with exact parameter accounting,
dual-cache incremental generation with batched scheduling, toy training
with verified gradients, and corpus compression metrics.
"""

__version__ = "0.1.0"
