#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "htp/codec.hpp"
#include "htp/lexicon.hpp"

namespace htp {

struct StsRecord {
    std::string sentence_a;
    std::string sentence_b;
    double gold_score = 0.0;  // [0, 5]
};

/// 0-based column indices into a tab-separated row. Defaults match the
/// SemEval benchmark distribution (score in column 4, sentences in 5/6);
/// simple() is the bare three-column layout.
struct ColumnMap {
    std::size_t sentence_a = 5;
    std::size_t sentence_b = 6;
    std::size_t score = 4;

    static ColumnMap semeval() { return {}; }
    static ColumnMap simple() { return {0, 1, 2}; }
    std::size_t max_index() const;
};

struct LoadedDataset {
    std::vector<StsRecord> records;
    std::size_t skipped_rows = 0;
    std::vector<std::string> row_errors;  // one message per skipped row
};

/// Reads UTF-8 TSV rows, skipping (and counting) malformed ones:
/// too few columns, non-numeric scores, scores outside [0, 5].
/// Throws FileNotFound and NoValidRows.
LoadedDataset load_sts_tsv(const std::string& path, const ColumnMap& columns);

struct EvalOptions {
    int threads = 1;
};

struct EvalReport {
    double spearman_rho = 0.0;
    double pearson_r = 0.0;
    std::size_t n_pairs = 0;
    double mean_latency_ms_per_pair = 0.0;
    std::string config_fingerprint;
    std::vector<std::size_t> flagged_pairs;  // records scored via the empty-sentence fallback
    std::vector<double> predictions;         // cosine score per record, input order
    std::size_t dim = 0;
    std::string scheme_name;

    std::string to_json() const;
};

/// Builds the frequency table over every sentence in the records (both
/// sides of each pair), embeds each side, scores the pairs with cosine
/// similarity, and correlates predictions against the gold scores.
/// Latency covers the embed+score loop only. Scores are collected in
/// input order regardless of thread count.
EvalReport run_eval(std::span<const StsRecord> records, const WeightingScheme& scheme,
                    const CodecConfig& codec, const TokenizerConfig& tokenizer,
                    const EvalOptions& options = {});

/// Re-runs the evaluation once per dimension with a fresh basis of
/// k = D/2 moduli (same min_modulus and l_max as `codec`).
std::vector<EvalReport> dimension_sweep(std::span<const StsRecord> records,
                                        const WeightingScheme& scheme,
                                        const CodecConfig& codec,
                                        std::span<const std::size_t> dims,
                                        const TokenizerConfig& tokenizer,
                                        const EvalOptions& options = {});

/// Stable hash over everything that affects scores (not latency):
/// dimension, l_max, moduli provenance, scheme, tokenizer settings,
/// normalization, and the stopword inventory in use.
std::string config_fingerprint(const CodecConfig& codec, const WeightingScheme& scheme,
                               const TokenizerConfig& tokenizer);

}  // namespace htp
