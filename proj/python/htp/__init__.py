"""Deterministic, reversible text embeddings via modular harmonic projection.

Tokens are serialized to integers through their UTF-16 code units, reduced
modulo a basis of pairwise-coprime primes, and projected onto (sin, cos)
pairs. The mapping is analytically invertible: phases recover residues and
the Chinese Remainder Theorem recovers the integer. Sentence vectors are
weighted means of token embeddings, scored with cosine similarity.
"""

from htp._htp import (
    Basis,
    Codec,
    HtpError,
    SentenceEncoder,
    cosine_similarity,
    evaluate,
    evaluate_tsv,
    pearson,
    spearman,
    __version__,
)

__all__ = [
    "Basis",
    "Codec",
    "HtpError",
    "SentenceEncoder",
    "cosine_similarity",
    "evaluate",
    "evaluate_tsv",
    "pearson",
    "spearman",
    "__version__",
]
