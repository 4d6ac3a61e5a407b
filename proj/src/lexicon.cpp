#include "htp/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <stdexcept>

#include "htp/errors.hpp"
#include "htp/unicode.hpp"

namespace htp {

std::vector<std::string> tokenize(std::string_view sentence, const TokenizerConfig& config) {
    std::vector<std::string> tokens;
    if (sentence.empty()) return tokens;

    if (config.splitter == Splitter::Pretokenized) {
        std::string tok(sentence);
        if (config.lowercase) tok = unicode::lowercase_utf8(tok);
        tokens.push_back(std::move(tok));
        return tokens;
    }

    if (config.splitter == Splitter::Whitespace) {
        std::size_t i = 0;
        while (i < sentence.size()) {
            while (i < sentence.size() &&
                   std::isspace(static_cast<unsigned char>(sentence[i])))
                ++i;
            std::size_t start = i;
            while (i < sentence.size() &&
                   !std::isspace(static_cast<unsigned char>(sentence[i])))
                ++i;
            if (i > start) {
                std::string tok(sentence.substr(start, i - start));
                if (config.lowercase) tok = unicode::lowercase_utf8(tok);
                tokens.push_back(std::move(tok));
            }
        }
        return tokens;
    }

    // UnicodeWords: maximal alphanumeric runs
    std::vector<char32_t> cps = unicode::utf8_to_codepoints(sentence);
    std::vector<char32_t> run;
    auto flush = [&] {
        if (run.empty()) return;
        if (config.lowercase) {
            for (char32_t& c : run) c = unicode::to_lowercase(c);
        }
        tokens.push_back(unicode::codepoints_to_utf8(run));
        run.clear();
    };
    for (char32_t cp : cps) {
        if (unicode::is_alphanumeric(cp)) {
            run.push_back(cp);
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

std::uint64_t FrequencyTable::count(std::string_view token) const {
    auto it = counts.find(std::string(token));
    return it == counts.end() ? 0 : it->second;
}

std::uint64_t FrequencyTable::document_frequency(std::string_view token) const {
    auto it = doc_freq.find(std::string(token));
    return it == doc_freq.end() ? 0 : it->second;
}

FrequencyTable build_frequency_table(std::span<const std::vector<std::string>> corpus) {
    FrequencyTable table;
    table.num_docs = corpus.size();
    for (const auto& doc : corpus) {
        for (const auto& token : doc) ++table.counts[token];
        std::set<std::string_view> seen(doc.begin(), doc.end());
        for (std::string_view token : seen) ++table.doc_freq[std::string(token)];
    }
    return table;
}

void frequency_table_to_tsv(const FrequencyTable& table, std::ostream& out) {
    std::map<std::string_view, std::uint64_t> sorted(table.counts.begin(), table.counts.end());
    for (const auto& [token, count] : sorted) {
        auto df = table.doc_freq.find(std::string(token));
        out << token << '\t' << count << '\t'
            << (df == table.doc_freq.end() ? 0 : df->second) << '\n';
    }
}

namespace detail {
double itf_from_frequency(double frequency) {
    return 1.0 / std::log1p(frequency);
}
}  // namespace detail

double itf_weight(std::string_view token, const FrequencyTable& table) {
    std::uint64_t f = table.count(token);
    if (f < 1) f = 1;  // unseen tokens weigh like hapaxes
    return detail::itf_from_frequency(static_cast<double>(f));
}

std::vector<double> tfidf_weights(std::span<const std::string> tokens,
                                  const FrequencyTable& table) {
    if (table.num_docs == 0)
        throw Error(ErrorCode::EmptyCorpus, "document frequencies need a nonempty corpus");
    std::vector<double> weights;
    weights.reserve(tokens.size());
    double n = static_cast<double>(table.num_docs);
    for (const auto& token : tokens) {
        double df = static_cast<double>(table.document_frequency(token));
        weights.push_back(std::log((1.0 + n) / (1.0 + df)) + 1.0);
    }
    return weights;
}

std::vector<std::string> filter_stopwords(std::span<const std::string> tokens,
                                          const StopwordSet& stopwords) {
    std::vector<std::string> kept;
    kept.reserve(tokens.size());
    for (const auto& token : tokens) {
        if (!stopwords.contains(token)) kept.push_back(token);
    }
    return kept;
}

StopwordSet load_stopwords(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::FileNotFound, path);
    StopwordSet words;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        words.insert(line.substr(begin, end - begin + 1));
    }
    return words;
}

const char* scheme_kind_name(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::Uniform: return "uniform";
        case SchemeKind::Itf: return "itf";
        case SchemeKind::TfIdf: return "tfidf";
        case SchemeKind::StopwordRemoval: return "stopword";
    }
    return "unknown";
}

SchemeKind scheme_kind_from_name(std::string_view name) {
    if (name == "uniform") return SchemeKind::Uniform;
    if (name == "itf") return SchemeKind::Itf;
    if (name == "tfidf") return SchemeKind::TfIdf;
    if (name == "stopword" || name == "stopword_removal") return SchemeKind::StopwordRemoval;
    throw std::invalid_argument("unknown weighting scheme: " + std::string(name));
}

WeightingScheme WeightingScheme::uniform() {
    return WeightingScheme{SchemeKind::Uniform, nullptr, nullptr};
}

WeightingScheme WeightingScheme::itf(std::shared_ptr<const FrequencyTable> table) {
    if (!table) throw std::invalid_argument("itf weighting requires a frequency table");
    return WeightingScheme{SchemeKind::Itf, std::move(table), nullptr};
}

WeightingScheme WeightingScheme::tfidf(std::shared_ptr<const FrequencyTable> table) {
    if (!table) throw std::invalid_argument("tfidf weighting requires a frequency table");
    return WeightingScheme{SchemeKind::TfIdf, std::move(table), nullptr};
}

WeightingScheme WeightingScheme::stopword_removal(std::shared_ptr<const StopwordSet> stopwords) {
    if (!stopwords) throw std::invalid_argument("stopword removal requires a stopword set");
    return WeightingScheme{SchemeKind::StopwordRemoval, nullptr, std::move(stopwords)};
}

WeightingScheme WeightingScheme::deferred(SchemeKind kind,
                                          std::shared_ptr<const StopwordSet> stopwords) {
    WeightingScheme scheme;
    scheme.kind = kind;
    if (kind == SchemeKind::StopwordRemoval) {
        scheme.stopwords = stopwords
                               ? std::move(stopwords)
                               : std::shared_ptr<const StopwordSet>(
                                     &builtin_english_stopwords(), [](const StopwordSet*) {});
    }
    return scheme;
}

WeightingScheme WeightingScheme::with_table(std::shared_ptr<const FrequencyTable> t) const {
    WeightingScheme copy = *this;
    copy.table = std::move(t);
    return copy;
}

}  // namespace htp
