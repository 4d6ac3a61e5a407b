#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "htp/codec.hpp"
#include "htp/errors.hpp"
#include "htp/eval.hpp"
#include "htp/lexicon.hpp"
#include "htp/pooling.hpp"
#include "htp/vector_io.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct RunConfig {
    std::size_t dim = 512;
    int l_max = 24;
    std::uint64_t min_modulus = 3;
    std::string scheme = "tfidf";
    std::string splitter = "unicode";
    bool no_nfc = false;
    bool no_lowercase = false;
    bool chunk_overlong = false;
    std::string stopword_file;
    int threads = 1;
};

void apply_config_file(const std::string& path, RunConfig& run) {
    std::ifstream in(path);
    if (!in) throw htp::Error(htp::ErrorCode::FileNotFound, path);
    json j = json::parse(in);
    run.dim = j.value("dim", run.dim);
    run.l_max = j.value("l_max", run.l_max);
    run.min_modulus = j.value("min_modulus", run.min_modulus);
    run.scheme = j.value("scheme", run.scheme);
    run.splitter = j.value("splitter", run.splitter);
    run.no_nfc = !j.value("nfc", !run.no_nfc);
    run.no_lowercase = !j.value("lowercase", !run.no_lowercase);
    run.chunk_overlong = j.value("chunk_overlong", run.chunk_overlong);
    run.stopword_file = j.value("stopwords", run.stopword_file);
    run.threads = j.value("threads", run.threads);
}

htp::CodecConfig make_codec(const RunConfig& run) {
    return htp::default_codec_config(
        run.dim, run.l_max, run.min_modulus,
        run.no_nfc ? htp::Normalization::None : htp::Normalization::NFC);
}

htp::TokenizerConfig make_tokenizer(const RunConfig& run) {
    htp::TokenizerConfig tokenizer;
    tokenizer.lowercase = !run.no_lowercase;
    tokenizer.chunk_overlong = run.chunk_overlong;
    if (run.splitter == "whitespace")
        tokenizer.splitter = htp::Splitter::Whitespace;
    else if (run.splitter != "unicode")
        throw std::invalid_argument("unknown splitter: " + run.splitter);
    return tokenizer;
}

htp::WeightingScheme make_scheme(const RunConfig& run) {
    std::shared_ptr<const htp::StopwordSet> stopwords;
    if (!run.stopword_file.empty())
        stopwords = std::make_shared<htp::StopwordSet>(htp::load_stopwords(run.stopword_file));
    return htp::WeightingScheme::deferred(htp::scheme_kind_from_name(run.scheme),
                                          std::move(stopwords));
}

std::string fingerprint_of(const RunConfig& run) {
    return htp::config_fingerprint(make_codec(run), make_scheme(run), make_tokenizer(run));
}

void print_fingerprint(const RunConfig& run) {
    std::cerr << "config fingerprint: " << fingerprint_of(run) << "\n";
}

std::string format_score(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    return buf;
}

void print_report_table(const htp::EvalReport& report, std::size_t skipped) {
    std::printf("%-10s %6s %8s %8s %12s %8s\n", "scheme", "D", "rho", "r", "ms/pair", "pairs");
    std::printf("%-10s %6zu %8.4f %8.4f %12.3f %8zu\n", report.scheme_name.c_str(), report.dim,
                report.spearman_rho, report.pearson_r, report.mean_latency_ms_per_pair,
                report.n_pairs);
    if (skipped > 0) std::printf("skipped rows: %zu\n", skipped);
    if (!report.flagged_pairs.empty())
        std::printf("pairs scored via empty-sentence fallback: %zu\n",
                    report.flagged_pairs.size());
    std::printf("config fingerprint: %s\n", report.config_fingerprint.c_str());
}

json report_with_skipped(const htp::EvalReport& report, std::size_t skipped) {
    json j = json::parse(report.to_json());
    j["skipped_rows"] = skipped;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"htp — deterministic, reversible harmonic text embeddings"};
    app.require_subcommand(1);

    RunConfig run;
    bool as_json = false;
    std::string config_file;
    app.add_flag("--json", as_json, "machine-readable JSON output");
    app.add_option("--config", config_file, "JSON file with run configuration defaults")
        ->check(CLI::ExistingFile);

    auto add_common = [&](CLI::App* cmd, bool with_scheme) {
        cmd->add_option("--dim", run.dim, "embedding dimension (even)")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--lmax", run.l_max, "maximum token length in code units")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--min-modulus", run.min_modulus, "smallest basis prime");
        cmd->add_flag("--no-nfc", run.no_nfc, "skip Unicode NFC normalization");
        if (with_scheme) {
            cmd->add_option("--scheme", run.scheme,
                            "weighting scheme: uniform, itf, tfidf, stopword");
            cmd->add_option("--stopwords", run.stopword_file,
                            "stopword list file (one token per line)")
                ->check(CLI::ExistingFile);
            cmd->add_option("--splitter", run.splitter,
                            "token splitter: unicode (alphanumeric runs) or whitespace")
                ->check(CLI::IsMember({"unicode", "whitespace"}));
            cmd->add_flag("--no-lowercase", run.no_lowercase, "keep original casing");
            cmd->add_flag("--chunk-overlong", run.chunk_overlong,
                          "split tokens longer than lmax into chunks (lossy)");
            cmd->add_option("--threads", run.threads, "worker threads")
                ->check(CLI::PositiveNumber);
        }
    };

    // encode
    auto* cmd_encode = app.add_subcommand("encode", "token -> harmonic vector");
    std::string token;
    std::string out_file;
    cmd_encode->add_option("--token", token, "token to encode")->required();
    cmd_encode->add_option("--out", out_file, "write binary vector to this file");
    add_common(cmd_encode, false);

    // decode
    auto* cmd_decode = app.add_subcommand("decode", "harmonic vector -> token");
    std::string vector_file;
    cmd_decode->add_option("--vector-file", vector_file, "binary vector file")
        ->required()
        ->check(CLI::ExistingFile);
    add_common(cmd_decode, false);

    // sim
    auto* cmd_sim = app.add_subcommand("sim", "cosine similarity of sentence pairs");
    std::vector<std::string> sentences;
    std::string pair_file;
    cmd_sim->add_option("sentences", sentences, "two sentences");
    cmd_sim->add_option("--file", pair_file, "TSV of sentence pairs (two columns)")
        ->check(CLI::ExistingFile);
    add_common(cmd_sim, true);

    // eval
    auto* cmd_eval = app.add_subcommand("eval", "score a similarity benchmark file");
    std::string input_file;
    bool simple_columns = false;
    std::size_t col_a = 5, col_b = 6, col_score = 4;
    std::string json_out;
    cmd_eval->add_option("--input", input_file, "benchmark TSV")
        ->required()
        ->check(CLI::ExistingFile);
    cmd_eval->add_flag("--simple", simple_columns,
                       "three-column input: sentence1, sentence2, score");
    cmd_eval->add_option("--col-s1", col_a, "0-based column of sentence 1");
    cmd_eval->add_option("--col-s2", col_b, "0-based column of sentence 2");
    cmd_eval->add_option("--col-score", col_score, "0-based column of the gold score");
    cmd_eval->add_option("--json-out", json_out, "also write the JSON report here");
    add_common(cmd_eval, true);

    // sweep
    auto* cmd_sweep = app.add_subcommand("sweep", "evaluate across dimensions");
    std::vector<std::size_t> dims{32, 128, 512};
    std::string sweep_input;
    bool sweep_simple = false;
    cmd_sweep->add_option("--input", sweep_input, "benchmark TSV")
        ->required()
        ->check(CLI::ExistingFile);
    cmd_sweep->add_option("--dims", dims, "dimensions to evaluate")->delimiter(',');
    cmd_sweep->add_flag("--simple", sweep_simple,
                        "three-column input: sentence1, sentence2, score");
    add_common(cmd_sweep, true);

    // basis
    auto* cmd_basis = app.add_subcommand("basis", "print the modulus basis for a dimension");
    add_common(cmd_basis, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (!config_file.empty()) {
            RunConfig defaults;
            apply_config_file(config_file, defaults);
            // explicit flags win over config-file values
            auto keep = [&](CLI::App* cmd, const std::string& name, auto& target, auto fallback) {
                if (auto* opt = cmd->get_option_no_throw(name); !opt || opt->count() == 0)
                    target = fallback;
            };
            CLI::App* sub = app.get_subcommands().front();
            keep(sub, "--dim", run.dim, defaults.dim);
            keep(sub, "--lmax", run.l_max, defaults.l_max);
            keep(sub, "--min-modulus", run.min_modulus, defaults.min_modulus);
            keep(sub, "--scheme", run.scheme, defaults.scheme);
            keep(sub, "--splitter", run.splitter, defaults.splitter);
            keep(sub, "--no-nfc", run.no_nfc, defaults.no_nfc);
            keep(sub, "--no-lowercase", run.no_lowercase, defaults.no_lowercase);
            keep(sub, "--chunk-overlong", run.chunk_overlong, defaults.chunk_overlong);
            keep(sub, "--stopwords", run.stopword_file, defaults.stopword_file);
            keep(sub, "--threads", run.threads, defaults.threads);
        }

        if (cmd_encode->parsed()) {
            htp::CodecConfig codec = make_codec(run);
            htp::HarmonicEmbedding embedding = htp::encode(token, codec);
            if (!out_file.empty()) {
                htp::write_embedding_file(out_file, embedding);
            } else if (as_json) {
                json j;
                j["config_fingerprint"] = fingerprint_of(run);
                j["dim"] = embedding.dim();
                j["vector"] = embedding.components;
                std::cout << j.dump() << "\n";
                return kExitOk;
            } else {
                std::cout << htp::embedding_to_json(embedding) << "\n";
            }
            print_fingerprint(run);
            return kExitOk;
        }

        if (cmd_decode->parsed()) {
            htp::CodecConfig codec = make_codec(run);
            htp::HarmonicEmbedding embedding = htp::read_embedding_file(vector_file);
            htp::DecodeResult result = htp::decode(embedding, codec);
            if (result.capacity_limited)
                std::cerr << "warning: basis capacity below the token space; "
                             "reconstruction is modulo the capacity\n";
            if (as_json) {
                json j;
                j["config_fingerprint"] = fingerprint_of(run);
                j["token"] = result.token;
                j["capacity_limited"] = result.capacity_limited;
                std::cout << j.dump() << "\n";
                return kExitOk;
            }
            std::cout << result.token << "\n";
            print_fingerprint(run);
            return kExitOk;
        }

        if (cmd_sim->parsed()) {
            htp::CodecConfig codec = make_codec(run);
            htp::TokenizerConfig tokenizer = make_tokenizer(run);
            htp::WeightingScheme scheme = make_scheme(run);

            std::vector<std::pair<std::string, std::string>> pairs;
            if (!pair_file.empty()) {
                std::ifstream in(pair_file);
                std::string line;
                while (std::getline(in, line)) {
                    if (!line.empty() && line.back() == '\r') line.pop_back();
                    if (line.empty()) continue;
                    auto tab = line.find('\t');
                    if (tab == std::string::npos)
                        throw htp::Error(htp::ErrorCode::NoValidRows,
                                         "pair file rows need two tab-separated sentences");
                    pairs.emplace_back(line.substr(0, tab), line.substr(tab + 1));
                }
                if (pairs.empty())
                    throw htp::Error(htp::ErrorCode::NoValidRows, pair_file);
            } else if (sentences.size() == 2) {
                pairs.emplace_back(sentences[0], sentences[1]);
            } else {
                std::cerr << "sim needs two sentences or --file\n";
                return kExitUsage;
            }

            if (scheme.needs_table()) {
                std::vector<std::vector<std::string>> corpus;
                for (const auto& [a, b] : pairs) {
                    corpus.push_back(htp::tokenize(a, tokenizer));
                    corpus.push_back(htp::tokenize(b, tokenizer));
                }
                scheme = scheme.with_table(std::make_shared<htp::FrequencyTable>(
                    htp::build_frequency_table(corpus)));
            }

            json scores = json::array();
            for (const auto& [a, b] : pairs) {
                double score = htp::cosine_similarity(
                    htp::embed_sentence(a, scheme, codec, tokenizer),
                    htp::embed_sentence(b, scheme, codec, tokenizer));
                if (as_json)
                    scores.push_back(score);
                else
                    std::cout << format_score(score) << "\n";
            }
            if (as_json) {
                json j;
                j["config_fingerprint"] = fingerprint_of(run);
                j["scores"] = scores;
                std::cout << j.dump() << "\n";
                return kExitOk;
            }
            print_fingerprint(run);
            return kExitOk;
        }

        if (cmd_eval->parsed() || cmd_sweep->parsed()) {
            bool sweeping = cmd_sweep->parsed();
            const std::string& path = sweeping ? sweep_input : input_file;
            htp::ColumnMap columns = (sweeping ? sweep_simple : simple_columns)
                                         ? htp::ColumnMap::simple()
                                         : htp::ColumnMap{col_a, col_b, col_score};
            htp::LoadedDataset data = htp::load_sts_tsv(path, columns);
            htp::CodecConfig codec = make_codec(run);
            htp::TokenizerConfig tokenizer = make_tokenizer(run);
            htp::WeightingScheme scheme = make_scheme(run);
            htp::EvalOptions options;
            options.threads = run.threads;

            if (!sweeping) {
                htp::EvalReport report =
                    htp::run_eval(data.records, scheme, codec, tokenizer, options);
                if (!json_out.empty()) {
                    std::ofstream out(json_out);
                    out << report_with_skipped(report, data.skipped_rows).dump(2) << "\n";
                }
                if (as_json)
                    std::cout << report_with_skipped(report, data.skipped_rows).dump() << "\n";
                else
                    print_report_table(report, data.skipped_rows);
                return kExitOk;
            }

            std::vector<htp::EvalReport> reports =
                htp::dimension_sweep(data.records, scheme, codec, dims, tokenizer, options);
            if (as_json) {
                json j = json::array();
                for (const auto& report : reports)
                    j.push_back(report_with_skipped(report, data.skipped_rows));
                std::cout << j.dump() << "\n";
            } else {
                std::printf("%6s %8s %8s %12s\n", "D", "rho", "r", "ms/pair");
                for (const auto& report : reports)
                    std::printf("%6zu %8.4f %8.4f %12.3f\n", report.dim, report.spearman_rho,
                                report.pearson_r, report.mean_latency_ms_per_pair);
                std::printf("config fingerprint: %s\n",
                            reports.empty() ? fingerprint_of(run).c_str()
                                            : reports.back().config_fingerprint.c_str());
            }
            return kExitOk;
        }

        if (cmd_basis->parsed()) {
            htp::CodecConfig codec = make_codec(run);
            if (as_json) {
                json j;
                j["config_fingerprint"] = fingerprint_of(run);
                j["k"] = codec.basis.size();
                j["moduli"] = codec.basis.moduli();
                j["capacity"] = codec.basis.capacity().to_decimal();
                j["reversible"] = codec.capacity_covers_tokens();
                std::cout << j.dump() << "\n";
                return kExitOk;
            }
            std::cout << "moduli:";
            for (std::uint64_t m : codec.basis.moduli()) std::cout << ' ' << m;
            std::cout << "\ncapacity: " << codec.basis.capacity().to_decimal() << "\n";
            std::cout << "covers token space (reversible): "
                      << (codec.capacity_covers_tokens() ? "yes" : "no") << "\n";
            print_fingerprint(run);
            return kExitOk;
        }
    } catch (const htp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
