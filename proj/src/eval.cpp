#include "htp/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "htp/correlation.hpp"
#include "htp/errors.hpp"
#include "htp/pooling.hpp"

namespace htp {

std::size_t ColumnMap::max_index() const {
    return std::max({sentence_a, sentence_b, score});
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return fields;
}

}  // namespace

LoadedDataset load_sts_tsv(const std::string& path, const ColumnMap& columns) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::FileNotFound, path);

    LoadedDataset out;
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields = split_tabs(line);
        auto skip = [&](const std::string& why) {
            ++out.skipped_rows;
            out.row_errors.push_back("row " + std::to_string(row) + ": " + why);
        };
        if (fields.size() <= columns.max_index()) {
            skip("expected at least " + std::to_string(columns.max_index() + 1) + " columns, got " +
                 std::to_string(fields.size()));
            continue;
        }
        double score = 0.0;
        try {
            std::size_t consumed = 0;
            score = std::stod(fields[columns.score], &consumed);
            if (consumed != fields[columns.score].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            skip("non-numeric score '" + fields[columns.score] + "'");
            continue;
        }
        if (!std::isfinite(score) || score < 0.0 || score > 5.0) {
            skip("score " + fields[columns.score] + " outside [0, 5]");
            continue;
        }
        out.records.push_back(StsRecord{std::move(fields[columns.sentence_a]),
                                        std::move(fields[columns.sentence_b]), score});
    }
    if (out.records.empty()) throw Error(ErrorCode::NoValidRows, path);
    return out;
}

std::string config_fingerprint(const CodecConfig& codec, const WeightingScheme& scheme,
                               const TokenizerConfig& tokenizer) {
    std::string canonical = "v1";
    canonical += "|dim=" + std::to_string(2 * codec.basis.size());
    canonical += "|lmax=" + std::to_string(codec.l_max);
    canonical += "|minmod=" + std::to_string(codec.basis.min_modulus());
    if (codec.basis.min_modulus() == 0) {
        canonical += "|moduli=";
        for (std::uint64_t m : codec.basis.moduli()) canonical += std::to_string(m) + ",";
    }
    canonical += "|nfc=" + std::to_string(codec.normalization == Normalization::NFC);
    canonical += "|scheme=" + std::string(scheme_kind_name(scheme.kind));
    canonical += "|lower=" + std::to_string(tokenizer.lowercase);
    canonical += "|split=" + std::to_string(static_cast<int>(tokenizer.splitter));
    canonical += "|chunk=" + std::to_string(tokenizer.chunk_overlong);
    if (scheme.kind == SchemeKind::StopwordRemoval && scheme.stopwords) {
        canonical += "|stop=";
        for (const auto& w : *scheme.stopwords) canonical += w + "\n";
    }

    // FNV-1a, 64-bit
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : canonical) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return std::string(buf);
}

EvalReport run_eval(std::span<const StsRecord> records, const WeightingScheme& scheme,
                    const CodecConfig& codec, const TokenizerConfig& tokenizer,
                    const EvalOptions& options) {
    if (records.size() < 2)
        throw Error(ErrorCode::NoValidRows, "need at least 2 records to correlate");

    // corpus = both sides of every pair, one document per sentence
    WeightingScheme resolved = scheme;
    if (scheme.needs_table()) {
        std::vector<std::vector<std::string>> corpus;
        corpus.reserve(2 * records.size());
        for (const auto& rec : records) {
            corpus.push_back(tokenize(rec.sentence_a, tokenizer));
            corpus.push_back(tokenize(rec.sentence_b, tokenizer));
        }
        resolved = scheme.with_table(
            std::make_shared<FrequencyTable>(build_frequency_table(corpus)));
    }
    if (resolved.kind == SchemeKind::StopwordRemoval && !resolved.stopwords) {
        resolved.stopwords = std::shared_ptr<const StopwordSet>(&builtin_english_stopwords(),
                                                                [](const StopwordSet*) {});
    }

    std::vector<double> predictions(records.size());
    std::vector<char> fallback(records.size(), 0);

    auto score_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            EmbeddedSentence a =
                embed_sentence_traced(records[i].sentence_a, resolved, codec, tokenizer);
            EmbeddedSentence b =
                embed_sentence_traced(records[i].sentence_b, resolved, codec, tokenizer);
            predictions[i] = cosine_similarity(a.vector, b.vector);
            fallback[i] = a.used_fallback || b.used_fallback;
        }
    };

    int threads = std::max(1, options.threads);
    auto start = std::chrono::steady_clock::now();
    if (threads == 1) {
        score_range(0, records.size());
    } else {
        std::vector<std::thread> workers;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
        std::size_t chunk = (records.size() + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            std::size_t begin = std::min(records.size(), t * chunk);
            std::size_t end = std::min(records.size(), begin + chunk);
            if (begin >= end) continue;
            workers.emplace_back([&, t, begin, end] {
                try {
                    score_range(begin, end);
                } catch (...) {
                    errors[static_cast<std::size_t>(t)] = std::current_exception();
                }
            });
        }
        for (auto& w : workers) w.join();
        for (const auto& error : errors) {
            if (error) std::rethrow_exception(error);
        }
    }
    auto elapsed = std::chrono::steady_clock::now() - start;

    std::vector<double> gold;
    gold.reserve(records.size());
    for (const auto& rec : records) gold.push_back(rec.gold_score);

    EvalReport report;
    report.spearman_rho = spearman(predictions, gold);
    report.pearson_r = pearson(predictions, gold);
    report.n_pairs = records.size();
    report.mean_latency_ms_per_pair =
        std::chrono::duration<double, std::milli>(elapsed).count() /
        static_cast<double>(records.size());
    report.config_fingerprint = config_fingerprint(codec, resolved, tokenizer);
    for (std::size_t i = 0; i < fallback.size(); ++i) {
        if (fallback[i]) report.flagged_pairs.push_back(i);
    }
    report.predictions = std::move(predictions);
    report.dim = 2 * codec.basis.size();
    report.scheme_name = scheme_kind_name(scheme.kind);
    return report;
}

std::vector<EvalReport> dimension_sweep(std::span<const StsRecord> records,
                                        const WeightingScheme& scheme,
                                        const CodecConfig& codec,
                                        std::span<const std::size_t> dims,
                                        const TokenizerConfig& tokenizer,
                                        const EvalOptions& options) {
    std::vector<EvalReport> reports;
    reports.reserve(dims.size());
    for (std::size_t dim : dims) {
        if (dim < 4 || dim % 2 != 0)
            throw std::invalid_argument("sweep dimensions must be even and >= 4");
        CodecConfig swept = codec;
        std::uint64_t min_modulus =
            codec.basis.min_modulus() == 0 ? 3 : codec.basis.min_modulus();
        swept.basis = generate_basis(dim / 2, min_modulus);
        reports.push_back(run_eval(records, scheme, swept, tokenizer, options));
    }
    return reports;
}

std::string EvalReport::to_json() const {
    nlohmann::json j;
    j["config_fingerprint"] = config_fingerprint;
    j["scheme"] = scheme_name;
    j["D"] = dim;
    j["rho"] = spearman_rho;
    j["r"] = pearson_r;
    j["n_pairs"] = n_pairs;
    j["latency_ms"] = mean_latency_ms_per_pair;
    j["flagged_pairs"] = flagged_pairs;
    return j.dump();
}

}  // namespace htp
