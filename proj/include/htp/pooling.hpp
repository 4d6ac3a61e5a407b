#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "htp/codec.hpp"
#include "htp/lexicon.hpp"

namespace htp {

struct SentenceVector {
    std::vector<double> components;
    bool normalized = false;
    std::size_t dim() const noexcept { return components.size(); }
};

/// Weighted mean of the embeddings followed by L2 normalization.
/// Weights may be zero but their sum must be positive.
SentenceVector pool(std::span<const HarmonicEmbedding> embeddings,
                    std::span<const double> weights);

/// Cosine of the angle between two vectors, clamped to [-1, 1].
double cosine_similarity(const SentenceVector& x, const SentenceVector& y);

struct EmbeddedSentence {
    SentenceVector vector;
    /// True when stopword removal emptied the sentence and pooling fell
    /// back to the unfiltered uniform mean.
    bool used_fallback = false;
};

/// tokenize -> (filter) -> encode each token -> weight -> pool.
EmbeddedSentence embed_sentence_traced(std::string_view sentence, const WeightingScheme& scheme,
                                       const CodecConfig& codec, const TokenizerConfig& tokenizer);

SentenceVector embed_sentence(std::string_view sentence, const WeightingScheme& scheme,
                              const CodecConfig& codec, const TokenizerConfig& tokenizer);

}  // namespace htp
