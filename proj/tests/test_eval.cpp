#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "htp/errors.hpp"
#include "htp/eval.hpp"
#include "htp/pooling.hpp"

namespace {
const std::string kDataDir = std::string(HTP_SOURCE_DIR) + "/tests/data";
}

TEST_CASE("loads simple three-column files") {
    auto data = htp::load_sts_tsv(kDataDir + "/sts_mini.tsv", htp::ColumnMap::simple());
    CHECK(data.records.size() == 12);
    CHECK(data.skipped_rows == 0);
    CHECK(data.records[0].sentence_a == "A man is playing a guitar.");
    CHECK(data.records[0].sentence_b == "A man plays the guitar.");
    CHECK(data.records[0].gold_score == doctest::Approx(4.2));
}

TEST_CASE("loads the benchmark column layout") {
    auto data = htp::load_sts_tsv(kDataDir + "/sts_semeval.tsv", htp::ColumnMap::semeval());
    CHECK(data.records.size() == 4);
    CHECK(data.records[0].gold_score == doctest::Approx(5.0));
    CHECK(data.records[0].sentence_a == "A plane is taking off.");
    CHECK(data.records[3].sentence_b == "Two men are playing chess.");
}

TEST_CASE("malformed rows are skipped and counted") {
    auto data = htp::load_sts_tsv(kDataDir + "/sts_malformed.tsv", htp::ColumnMap::simple());
    CHECK(data.records.size() == 2);
    CHECK(data.skipped_rows == 5);
    REQUIRE(data.row_errors.size() == 5);
    CHECK(data.row_errors[0].find("non-numeric") != std::string::npos);
    CHECK(data.row_errors[1].find("columns") != std::string::npos);
    CHECK(data.row_errors[2].find("outside [0, 5]") != std::string::npos);
    // non-finite scores parse but fail the range gate
    CHECK(data.row_errors[3].find("nan") != std::string::npos);
    CHECK(data.row_errors[4].find("inf") != std::string::npos);
}

TEST_CASE("loader error paths") {
    CHECK_THROWS_AS(htp::load_sts_tsv(kDataDir + "/nope.tsv", htp::ColumnMap::simple()),
                    htp::Error);
    try {
        htp::load_sts_tsv(kDataDir + "/nope.tsv", htp::ColumnMap::simple());
    } catch (const htp::Error& e) {
        CHECK(e.code() == htp::ErrorCode::FileNotFound);
    }

    // a file with rows but no valid ones
    std::string path = "no_valid_rows_tmp.tsv";
    {
        std::ofstream out(path);
        out << "only\ttwo columns here\n\n";
    }
    try {
        htp::load_sts_tsv(path, htp::ColumnMap::simple());
        FAIL("expected NoValidRows");
    } catch (const htp::Error& e) {
        CHECK(e.code() == htp::ErrorCode::NoValidRows);
    }
    std::remove(path.c_str());
}

TEST_CASE("perfect predictions give perfect correlations") {
    // gold equals the model score by construction: identical sentences
    std::vector<htp::StsRecord> records = {
        {"a b c", "a b c", 5.0},
        {"d e f", "d e f", 5.0},
    };
    // distinct gold values are required for nonzero variance, so mix in
    // a pair whose prediction is strictly smaller
    records.push_back({"x y z", "totally different words", 1.0});
    auto codec = htp::default_codec_config(64);
    htp::TokenizerConfig tokenizer;
    auto report = htp::run_eval(records, htp::WeightingScheme::uniform(), codec, tokenizer);
    CHECK(report.n_pairs == 3);
    CHECK(report.spearman_rho == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.predictions[0] == doctest::Approx(1.0));
    CHECK(report.predictions[1] == doctest::Approx(1.0));
    CHECK(report.predictions[2] < 1.0);
}

TEST_CASE("eval runs every scheme on the mini fixture") {
    auto data = htp::load_sts_tsv(kDataDir + "/sts_mini.tsv", htp::ColumnMap::simple());
    auto codec = htp::default_codec_config(64);
    htp::TokenizerConfig tokenizer;
    for (auto kind : {htp::SchemeKind::Uniform, htp::SchemeKind::Itf, htp::SchemeKind::TfIdf,
                      htp::SchemeKind::StopwordRemoval}) {
        auto report = htp::run_eval(data.records, htp::WeightingScheme::deferred(kind), codec,
                                    tokenizer);
        CHECK(report.n_pairs == 12);
        CHECK(report.spearman_rho >= -1.0);
        CHECK(report.spearman_rho <= 1.0);
        CHECK(report.pearson_r >= -1.0);
        CHECK(report.pearson_r <= 1.0);
        CHECK(report.mean_latency_ms_per_pair > 0.0);
        CHECK(!report.config_fingerprint.empty());
        if (kind == htp::SchemeKind::StopwordRemoval) {
            // the all-stopword pair is flagged
            REQUIRE(report.flagged_pairs.size() == 1);
            CHECK(report.flagged_pairs[0] == 11);
        } else {
            CHECK(report.flagged_pairs.empty());
        }
    }
}

TEST_CASE("eval is deterministic and thread-count independent") {
    auto data = htp::load_sts_tsv(kDataDir + "/sts_mini.tsv", htp::ColumnMap::simple());
    auto codec = htp::default_codec_config(64);
    htp::TokenizerConfig tokenizer;
    auto scheme = htp::WeightingScheme::deferred(htp::SchemeKind::TfIdf);

    htp::EvalOptions one;
    one.threads = 1;
    htp::EvalOptions four;
    four.threads = 4;
    auto a = htp::run_eval(data.records, scheme, codec, tokenizer, one);
    auto b = htp::run_eval(data.records, scheme, codec, tokenizer, one);
    auto c = htp::run_eval(data.records, scheme, codec, tokenizer, four);

    CHECK(a.spearman_rho == b.spearman_rho);  // bitwise
    CHECK(a.pearson_r == b.pearson_r);
    CHECK(a.predictions == b.predictions);
    CHECK(a.spearman_rho == c.spearman_rho);
    CHECK(a.pearson_r == c.pearson_r);
    CHECK(a.predictions == c.predictions);
    CHECK(a.config_fingerprint == c.config_fingerprint);
}

TEST_CASE("worker exceptions surface from threaded eval") {
    // second record holds a token longer than l_max; strict policy errors
    std::vector<htp::StsRecord> records = {
        {"fine pair", "fine pair", 5.0},
        {"zzzzzzzzzzzzzzzzzzzzzzzzzzzzzz problem", "ok", 1.0},
        {"more fine", "rows here", 2.0},
        {"and one", "extra", 3.0},
    };
    auto codec = htp::default_codec_config(16);
    htp::TokenizerConfig tokenizer;
    htp::EvalOptions four;
    four.threads = 4;
    CHECK_THROWS_AS(
        htp::run_eval(records, htp::WeightingScheme::uniform(), codec, tokenizer, four),
        htp::Error);
}

TEST_CASE("fingerprint tracks every score-relevant setting") {
    auto codec = htp::default_codec_config(64);
    htp::TokenizerConfig tokenizer;
    auto scheme = htp::WeightingScheme::uniform();
    std::string base = htp::config_fingerprint(codec, scheme, tokenizer);

    auto codec_wider = htp::default_codec_config(128);
    CHECK(htp::config_fingerprint(codec_wider, scheme, tokenizer) != base);

    auto codec_raw = codec;
    codec_raw.normalization = htp::Normalization::None;
    CHECK(htp::config_fingerprint(codec_raw, scheme, tokenizer) != base);

    htp::TokenizerConfig cased = tokenizer;
    cased.lowercase = false;
    CHECK(htp::config_fingerprint(codec, scheme, cased) != base);

    auto stop = htp::WeightingScheme::deferred(htp::SchemeKind::StopwordRemoval);
    std::string with_builtin = htp::config_fingerprint(codec, stop, tokenizer);
    CHECK(with_builtin != base);
    auto custom = htp::WeightingScheme::stopword_removal(
        std::make_shared<htp::StopwordSet>(htp::StopwordSet{"the"}));
    CHECK(htp::config_fingerprint(codec, custom, tokenizer) != with_builtin);

    CHECK(htp::config_fingerprint(codec, scheme, tokenizer) == base);  // stable
}

TEST_CASE("dimension sweep produces one report per dimension") {
    auto data = htp::load_sts_tsv(kDataDir + "/sts_mini.tsv", htp::ColumnMap::simple());
    auto codec = htp::default_codec_config(32);
    htp::TokenizerConfig tokenizer;
    std::vector<std::size_t> dims = {8, 16, 32};
    auto reports = htp::dimension_sweep(data.records, htp::WeightingScheme::uniform(), codec,
                                        dims, tokenizer);
    REQUIRE(reports.size() == 3);
    for (std::size_t i = 0; i < dims.size(); ++i) CHECK(reports[i].dim == dims[i]);
    std::vector<std::size_t> bad = {7};
    CHECK_THROWS_AS(htp::dimension_sweep(data.records, htp::WeightingScheme::uniform(), codec,
                                         bad, tokenizer),
                    std::invalid_argument);
}

TEST_CASE("report serializes the documented fields") {
    std::vector<htp::StsRecord> records = {
        {"a b", "a b", 5.0},
        {"c d", "e f", 0.0},
        {"g h", "g i", 3.0},
    };
    auto codec = htp::default_codec_config(16);
    htp::TokenizerConfig tokenizer;
    auto report = htp::run_eval(records, htp::WeightingScheme::uniform(), codec, tokenizer);
    std::string json = report.to_json();
    for (const char* key : {"config_fingerprint", "scheme", "D", "rho", "r", "n_pairs",
                            "latency_ms", "flagged_pairs"}) {
        CHECK(json.find(key) != std::string::npos);
    }
}

TEST_CASE("eval needs at least two records") {
    std::vector<htp::StsRecord> one = {{"a", "b", 1.0}};
    auto codec = htp::default_codec_config(16);
    htp::TokenizerConfig tokenizer;
    CHECK_THROWS_AS(htp::run_eval(one, htp::WeightingScheme::uniform(), codec, tokenizer),
                    htp::Error);
}
