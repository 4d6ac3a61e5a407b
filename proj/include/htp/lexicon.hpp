#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace htp {

enum class Splitter { UnicodeWords, Whitespace, Pretokenized };

struct TokenizerConfig {
    bool lowercase = true;
    Splitter splitter = Splitter::UnicodeWords;
    /// When set, tokens longer than the codec's l_max are split into
    /// l_max-unit chunks instead of raising TokenTooLong. Lossy; off by
    /// default.
    bool chunk_overlong = false;
};

/// UnicodeWords keeps maximal runs of alphanumeric code points
/// (underscore is a separator); Whitespace splits on ASCII whitespace
/// only; Pretokenized passes the input through as a single token.
/// Lowercasing, when enabled, applies the simple Unicode mapping.
std::vector<std::string> tokenize(std::string_view sentence, const TokenizerConfig& config);

struct FrequencyTable {
    std::unordered_map<std::string, std::uint64_t> counts;
    std::unordered_map<std::string, std::uint64_t> doc_freq;
    std::uint64_t num_docs = 0;

    std::uint64_t count(std::string_view token) const;
    std::uint64_t document_frequency(std::string_view token) const;
};

FrequencyTable build_frequency_table(std::span<const std::vector<std::string>> corpus);

/// (token, count, doc_freq) rows, tokens sorted lexicographically.
void frequency_table_to_tsv(const FrequencyTable& table, std::ostream& out);

/// Inverse token frequency 1 / ln(1 + f). Frequencies are clamped to
/// >= 1, so unseen tokens get the maximal weight 1 / ln 2.
double itf_weight(std::string_view token, const FrequencyTable& table);

namespace detail {
/// The bare curve, exposed for the weighting math tests.
double itf_from_frequency(double frequency);
}  // namespace detail

/// Smoothed inverse document frequency per token position:
/// ln((1 + N) / (1 + df)) + 1. Term frequency enters through the pooled
/// sum over positions, so duplicated tokens contribute once per
/// occurrence; the weight itself carries no tf factor.
std::vector<double> tfidf_weights(std::span<const std::string> tokens,
                                  const FrequencyTable& table);

using StopwordSet = std::set<std::string, std::less<>>;

/// Order-preserving removal of exact matches.
std::vector<std::string> filter_stopwords(std::span<const std::string> tokens,
                                          const StopwordSet& stopwords);

/// UTF-8, one token per line, '#' starts a comment.
StopwordSet load_stopwords(const std::string& path);

/// Bundled English function-word list (mirrors data/stopwords_en.txt).
const StopwordSet& builtin_english_stopwords();

enum class SchemeKind { Uniform, Itf, TfIdf, StopwordRemoval };

const char* scheme_kind_name(SchemeKind kind);
SchemeKind scheme_kind_from_name(std::string_view name);

/// Lexical weighting policy. Frequency-backed kinds need a table before
/// they can weight anything; the evaluation harness attaches the table
/// it builds from the records being scored (with_table).
struct WeightingScheme {
    SchemeKind kind = SchemeKind::Uniform;
    std::shared_ptr<const FrequencyTable> table;
    std::shared_ptr<const StopwordSet> stopwords;

    static WeightingScheme uniform();
    static WeightingScheme itf(std::shared_ptr<const FrequencyTable> table);
    static WeightingScheme tfidf(std::shared_ptr<const FrequencyTable> table);
    static WeightingScheme stopword_removal(std::shared_ptr<const StopwordSet> stopwords);
    /// Deferred-table selector for the eval pipeline.
    static WeightingScheme deferred(SchemeKind kind,
                                    std::shared_ptr<const StopwordSet> stopwords = nullptr);

    WeightingScheme with_table(std::shared_ptr<const FrequencyTable> t) const;
    bool needs_table() const noexcept {
        return kind == SchemeKind::Itf || kind == SchemeKind::TfIdf;
    }
};

}  // namespace htp
