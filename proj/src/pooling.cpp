#include "htp/pooling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "htp/errors.hpp"
#include "htp/unicode.hpp"

namespace htp {

SentenceVector pool(std::span<const HarmonicEmbedding> embeddings,
                    std::span<const double> weights) {
    if (embeddings.empty())
        throw Error(ErrorCode::EmptySentence, "nothing to pool");
    if (embeddings.size() != weights.size())
        throw Error(ErrorCode::LengthMismatch,
                    std::to_string(embeddings.size()) + " embeddings vs " +
                        std::to_string(weights.size()) + " weights");
    std::size_t dim = embeddings.front().dim();
    for (const auto& e : embeddings) {
        if (e.dim() != dim)
            throw Error(ErrorCode::DimensionMismatch, "embeddings differ in dimension");
    }

    double weight_sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("pool weights must be non-negative");
        weight_sum += w;
    }
    if (!(weight_sum > 0.0))
        throw Error(ErrorCode::ZeroWeightSum, "weights sum to zero");

    SentenceVector out;
    out.components.assign(dim, 0.0);
    for (std::size_t t = 0; t < embeddings.size(); ++t) {
        double w = weights[t];
        if (w == 0.0) continue;
        const auto& comp = embeddings[t].components;
        for (std::size_t d = 0; d < dim; ++d) out.components[d] += w * comp[d];
    }
    double norm_sq = 0.0;
    for (double& c : out.components) {
        c /= weight_sum;
        norm_sq += c * c;
    }
    double norm = std::sqrt(norm_sq);
    if (norm == 0.0)
        throw Error(ErrorCode::ZeroVector, "weighted mean is the zero vector");
    for (double& c : out.components) c /= norm;
    out.normalized = true;
    return out;
}

double cosine_similarity(const SentenceVector& x, const SentenceVector& y) {
    if (x.dim() != y.dim())
        throw Error(ErrorCode::DimensionMismatch,
                    std::to_string(x.dim()) + " vs " + std::to_string(y.dim()));
    double dot = 0.0, nx = 0.0, ny = 0.0;
    for (std::size_t d = 0; d < x.dim(); ++d) {
        dot += x.components[d] * y.components[d];
        nx += x.components[d] * x.components[d];
        ny += y.components[d] * y.components[d];
    }
    if (nx == 0.0 || ny == 0.0)
        throw Error(ErrorCode::ZeroVector, "cosine undefined for the zero vector");
    return std::clamp(dot / (std::sqrt(nx) * std::sqrt(ny)), -1.0, 1.0);
}

namespace {

/// Splits an over-long token into l_max-unit chunks without cutting a
/// surrogate pair in half.
std::vector<std::string> chunk_token(const std::string& token, int l_max) {
    std::vector<char32_t> cps = unicode::utf8_to_codepoints(token);
    std::vector<std::string> chunks;
    std::vector<char32_t> current;
    int units = 0;
    for (char32_t cp : cps) {
        int width = cp >= 0x10000 ? 2 : 1;
        if (units + width > l_max && !current.empty()) {
            chunks.push_back(unicode::codepoints_to_utf8(current));
            current.clear();
            units = 0;
        }
        current.push_back(cp);
        units += width;
    }
    if (!current.empty()) chunks.push_back(unicode::codepoints_to_utf8(current));
    return chunks;
}

std::vector<std::string> encodable_tokens(std::vector<std::string> tokens,
                                          const CodecConfig& codec, bool chunk_overlong) {
    if (!chunk_overlong) return tokens;
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (auto& tok : tokens) {
        std::vector<char32_t> cps = unicode::utf8_to_codepoints(tok);
        std::size_t units = 0;
        for (char32_t cp : cps) units += cp >= 0x10000 ? 2 : 1;
        if (units <= static_cast<std::size_t>(codec.l_max)) {
            out.push_back(std::move(tok));
        } else {
            for (auto& chunk : chunk_token(tok, codec.l_max)) out.push_back(std::move(chunk));
        }
    }
    return out;
}

SentenceVector pool_uniform(std::span<const std::string> tokens, const CodecConfig& codec) {
    std::vector<HarmonicEmbedding> embeddings;
    embeddings.reserve(tokens.size());
    for (const auto& tok : tokens) embeddings.push_back(encode(tok, codec));
    std::vector<double> weights(tokens.size(), 1.0);
    return pool(embeddings, weights);
}

}  // namespace

EmbeddedSentence embed_sentence_traced(std::string_view sentence, const WeightingScheme& scheme,
                                       const CodecConfig& codec,
                                       const TokenizerConfig& tokenizer) {
    std::vector<std::string> tokens =
        encodable_tokens(tokenize(sentence, tokenizer), codec, tokenizer.chunk_overlong);
    if (tokens.empty())
        throw Error(ErrorCode::EmptySentence, "no tokens after tokenization");

    EmbeddedSentence result;
    switch (scheme.kind) {
        case SchemeKind::Uniform: {
            result.vector = pool_uniform(tokens, codec);
            break;
        }
        case SchemeKind::StopwordRemoval: {
            if (!scheme.stopwords)
                throw std::invalid_argument("stopword scheme has no stopword set");
            std::vector<std::string> kept = filter_stopwords(tokens, *scheme.stopwords);
            if (kept.empty()) {
                // every token was a stopword: fall back to the unfiltered
                // uniform mean so the record still gets a score
                result.used_fallback = true;
                result.vector = pool_uniform(tokens, codec);
            } else {
                result.vector = pool_uniform(kept, codec);
            }
            break;
        }
        case SchemeKind::Itf:
        case SchemeKind::TfIdf: {
            if (!scheme.table)
                throw std::invalid_argument("frequency-weighted scheme has no table");
            std::vector<double> weights;
            if (scheme.kind == SchemeKind::Itf) {
                weights.reserve(tokens.size());
                for (const auto& tok : tokens)
                    weights.push_back(itf_weight(tok, *scheme.table));
            } else {
                weights = tfidf_weights(tokens, *scheme.table);
            }
            std::vector<HarmonicEmbedding> embeddings;
            embeddings.reserve(tokens.size());
            for (const auto& tok : tokens) embeddings.push_back(encode(tok, codec));
            result.vector = pool(embeddings, weights);
            break;
        }
    }
    return result;
}

SentenceVector embed_sentence(std::string_view sentence, const WeightingScheme& scheme,
                              const CodecConfig& codec, const TokenizerConfig& tokenizer) {
    return embed_sentence_traced(sentence, scheme, codec, tokenizer).vector;
}

}  // namespace htp
