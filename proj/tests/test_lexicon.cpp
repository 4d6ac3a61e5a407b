#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "htp/errors.hpp"
#include "htp/lexicon.hpp"

using htp::FrequencyTable;
using htp::TokenizerConfig;

TEST_CASE("unicode word tokenization") {
    TokenizerConfig config;
    CHECK(htp::tokenize("A man is playing a guitar.", config) ==
          std::vector<std::string>{"a", "man", "is", "playing", "a", "guitar"});
    CHECK(htp::tokenize("", config).empty());
    CHECK(htp::tokenize("...!?", config).empty());
    CHECK(htp::tokenize("woman's ankle", config) ==
          std::vector<std::string>{"woman", "s", "ankle"});
    CHECK(htp::tokenize("snake_case split", config) ==
          std::vector<std::string>{"snake", "case", "split"});
    CHECK(htp::tokenize("Ж中3x", config) == std::vector<std::string>{"ж中3x"});

    TokenizerConfig cased = config;
    cased.lowercase = false;
    CHECK(htp::tokenize("A Man", cased) == std::vector<std::string>{"A", "Man"});
}

TEST_CASE("whitespace tokenization keeps punctuation attached") {
    TokenizerConfig config;
    config.splitter = htp::Splitter::Whitespace;
    CHECK(htp::tokenize("A man, a plan.", config) ==
          std::vector<std::string>{"a", "man,", "a", "plan."});
    CHECK(htp::tokenize("  spaced\tout \n", config) ==
          std::vector<std::string>{"spaced", "out"});
}

TEST_CASE("whitespace tokenization is idempotent over its own join") {
    TokenizerConfig config;
    config.splitter = htp::Splitter::Whitespace;
    auto once = htp::tokenize("Ab und zu; fällt der Baum!", config);
    std::string joined;
    for (const auto& tok : once) {
        if (!joined.empty()) joined += ' ';
        joined += tok;
    }
    CHECK(htp::tokenize(joined, config) == once);
}

TEST_CASE("pretokenized passthrough") {
    TokenizerConfig config;
    config.splitter = htp::Splitter::Pretokenized;
    CHECK(htp::tokenize("hello", config) == std::vector<std::string>{"hello"});
    CHECK(htp::tokenize("two words", config) == std::vector<std::string>{"two words"});
    CHECK(htp::tokenize("", config).empty());
}

TEST_CASE("frequency table counts") {
    std::vector<std::vector<std::string>> corpus = {{"a", "b"}, {"a"}};
    FrequencyTable table = htp::build_frequency_table(corpus);
    CHECK(table.num_docs == 2);
    CHECK(table.count("a") == 2);
    CHECK(table.count("b") == 1);
    CHECK(table.document_frequency("a") == 2);
    CHECK(table.document_frequency("b") == 1);
    CHECK(table.count("missing") == 0);

    FrequencyTable empty = htp::build_frequency_table(std::vector<std::vector<std::string>>{});
    CHECK(empty.num_docs == 0);
    CHECK(empty.counts.empty());

    std::vector<std::vector<std::string>> repeated = {{"x", "x", "x"}};
    FrequencyTable three = htp::build_frequency_table(repeated);
    CHECK(three.count("x") == 3);
    CHECK(three.document_frequency("x") == 1);
}

TEST_CASE("frequency table is corpus-order invariant") {
    std::vector<std::vector<std::string>> corpus = {{"a", "b"}, {"c"}, {"a", "c", "c"}};
    std::vector<std::vector<std::string>> shuffled = {{"a", "c", "c"}, {"a", "b"}, {"c"}};
    FrequencyTable t1 = htp::build_frequency_table(corpus);
    FrequencyTable t2 = htp::build_frequency_table(shuffled);
    CHECK(t1.counts == t2.counts);
    CHECK(t1.doc_freq == t2.doc_freq);
    CHECK(t1.num_docs == t2.num_docs);
}

TEST_CASE("frequency table TSV export") {
    std::vector<std::vector<std::string>> corpus = {{"b", "a"}, {"a"}};
    std::ostringstream out;
    htp::frequency_table_to_tsv(htp::build_frequency_table(corpus), out);
    CHECK(out.str() == "a\t2\t2\nb\t1\t1\n");
}

TEST_CASE("itf weight curve") {
    // ln(1 + f) == 1 exactly at f = e - 1
    CHECK(htp::detail::itf_from_frequency(std::exp(1.0) - 1.0) == doctest::Approx(1.0).epsilon(1e-12));

    std::vector<std::vector<std::string>> corpus = {{"common", "common", "rare"}};
    FrequencyTable table = htp::build_frequency_table(corpus);
    CHECK(htp::itf_weight("rare", table) == doctest::Approx(1.0 / std::log(2.0)).epsilon(1e-12));
    CHECK(htp::itf_weight("unseen", table) ==
          doctest::Approx(1.4426950408889634).epsilon(1e-12));  // falls back to f = 1
    CHECK(htp::itf_weight("common", table) < htp::itf_weight("rare", table));
}

TEST_CASE("itf weight is strictly decreasing in frequency") {
    double prev = htp::detail::itf_from_frequency(1.0);
    for (double f : {2.0, 3.0, 10.0, 100.0, 1e4, 1e6}) {
        double w = htp::detail::itf_from_frequency(f);
        CHECK(w < prev);
        CHECK(w > 0.0);
        prev = w;
    }
}

TEST_CASE("tfidf weights are smoothed idf per position") {
    // three documents, "every" in all, "once" in one
    std::vector<std::vector<std::string>> corpus = {
        {"every", "once"}, {"every"}, {"every"}};
    FrequencyTable table = htp::build_frequency_table(corpus);

    std::vector<std::string> sentence = {"every"};
    auto w = htp::tfidf_weights(sentence, table);
    REQUIRE(w.size() == 1);
    CHECK(w[0] == doctest::Approx(1.0).epsilon(1e-12));  // df == N collapses idf to 1

    std::vector<std::string> rare = {"once"};
    auto w2 = htp::tfidf_weights(rare, table);
    CHECK(w2[0] == doctest::Approx(std::log(2.0) + 1.0).epsilon(1e-12));  // ln(4/2) + 1

    // duplicated positions share the token's weight; the pooled sum over
    // positions is what realizes the tf factor
    std::vector<std::string> dup = {"every", "every"};
    auto w3 = htp::tfidf_weights(dup, table);
    CHECK(w3[0] == w3[1]);
    CHECK(w3[0] == doctest::Approx(1.0).epsilon(1e-12));

    std::vector<std::string> unseen = {"never"};
    auto w4 = htp::tfidf_weights(unseen, table);
    CHECK(w4[0] == doctest::Approx(std::log(4.0) + 1.0).epsilon(1e-12));  // df = 0
}

TEST_CASE("tfidf requires a corpus") {
    FrequencyTable empty;
    std::vector<std::string> tokens = {"x"};
    CHECK_THROWS_AS(htp::tfidf_weights(tokens, empty), htp::Error);
}

TEST_CASE("stopword filtering") {
    htp::StopwordSet stopwords = {"a", "is"};
    std::vector<std::string> tokens = {"a", "man", "is", "playing"};
    CHECK(htp::filter_stopwords(tokens, stopwords) ==
          std::vector<std::string>{"man", "playing"});
    CHECK(htp::filter_stopwords(std::vector<std::string>{}, stopwords).empty());
    std::vector<std::string> all_stop = {"the", "the"};
    CHECK(htp::filter_stopwords(all_stop, htp::StopwordSet{"the"}).empty());
}

TEST_CASE("stopword filtering output is a subsequence of its input") {
    std::vector<std::string> tokens = {"x", "the", "y", "a", "x", "z"};
    htp::StopwordSet stopwords = {"the", "a"};
    auto kept = htp::filter_stopwords(tokens, stopwords);
    std::size_t pos = 0;
    for (const auto& tok : kept) {
        while (pos < tokens.size() && tokens[pos] != tok) ++pos;
        REQUIRE(pos < tokens.size());
        ++pos;
    }
}

TEST_CASE("stopword file parsing") {
    std::string path = "test_stopwords_tmp.txt";
    {
        std::ofstream out(path);
        out << "# header comment\n"
            << "the\n"
            << "  a  # trailing comment\n"
            << "\n"
            << "of\n";
    }
    auto words = htp::load_stopwords(path);
    CHECK(words == htp::StopwordSet{"the", "a", "of"});
    std::remove(path.c_str());
    CHECK_THROWS_AS(htp::load_stopwords("does_not_exist.txt"), htp::Error);
}

TEST_CASE("builtin stopword list matches the shipped data file") {
    const auto& builtin = htp::builtin_english_stopwords();
    CHECK(builtin.size() == 179);
    CHECK(builtin.contains("the"));
    CHECK(builtin.contains("wouldn't"));
    CHECK_FALSE(builtin.contains("guitar"));

    auto from_file = htp::load_stopwords(std::string(HTP_SOURCE_DIR) + "/data/stopwords_en.txt");
    CHECK(from_file == builtin);
}

TEST_CASE("scheme construction rules") {
    CHECK_THROWS_AS(htp::WeightingScheme::itf(nullptr), std::invalid_argument);
    CHECK_THROWS_AS(htp::WeightingScheme::tfidf(nullptr), std::invalid_argument);
    CHECK_THROWS_AS(htp::WeightingScheme::stopword_removal(nullptr), std::invalid_argument);
    auto table = std::make_shared<htp::FrequencyTable>();
    CHECK(htp::WeightingScheme::tfidf(table).kind == htp::SchemeKind::TfIdf);
    CHECK(htp::WeightingScheme::uniform().kind == htp::SchemeKind::Uniform);
    CHECK(htp::WeightingScheme::deferred(htp::SchemeKind::StopwordRemoval).stopwords != nullptr);

    CHECK(htp::scheme_kind_from_name("tfidf") == htp::SchemeKind::TfIdf);
    CHECK_THROWS_AS(htp::scheme_kind_from_name("bogus"), std::invalid_argument);
}
