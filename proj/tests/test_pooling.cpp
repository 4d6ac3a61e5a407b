#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "htp/errors.hpp"
#include "htp/pooling.hpp"

using htp::ErrorCode;
using htp::HarmonicEmbedding;
using htp::SentenceVector;

namespace {

double norm_of(const SentenceVector& v) {
    double s = 0.0;
    for (double c : v.components) s += c * c;
    return std::sqrt(s);
}

std::mt19937_64 rng(0xF00D);

HarmonicEmbedding random_unit_pairs(std::size_t k) {
    HarmonicEmbedding e;
    std::uniform_real_distribution<double> angle(0.0, 6.28318);
    for (std::size_t i = 0; i < k; ++i) {
        double a = angle(rng);
        e.components.push_back(std::sin(a));
        e.components.push_back(std::cos(a));
    }
    return e;
}

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const htp::Error& e) {
        return e.code();
    }
    FAIL("expected an htp::Error");
    return ErrorCode::EmptyToken;
}

}  // namespace

TEST_CASE("pooling a single embedding rescales it to unit norm") {
    auto e = random_unit_pairs(8);
    std::vector<HarmonicEmbedding> embeddings = {e};
    std::vector<double> weights = {3.7};
    SentenceVector v = htp::pool(embeddings, weights);
    CHECK(v.normalized);
    CHECK(norm_of(v) == doctest::Approx(1.0).epsilon(1e-12));
    // the single pair-vector has norm sqrt(k), so pooling divides by it
    double scale = std::sqrt(8.0);
    for (std::size_t d = 0; d < v.dim(); ++d)
        CHECK(v.components[d] == doctest::Approx(e.components[d] / scale).epsilon(1e-12));
}

TEST_CASE("identical embeddings pool to the same unit vector") {
    auto e = random_unit_pairs(4);
    std::vector<HarmonicEmbedding> embeddings = {e, e};
    std::vector<double> weights = {1.0, 3.0};
    SentenceVector two = htp::pool(embeddings, weights);
    std::vector<HarmonicEmbedding> one = {e};
    std::vector<double> w1 = {1.0};
    SentenceVector single = htp::pool(one, w1);
    for (std::size_t d = 0; d < two.dim(); ++d)
        CHECK(two.components[d] == doctest::Approx(single.components[d]).epsilon(1e-12));
}

TEST_CASE("zero weight removes a contribution") {
    auto a = random_unit_pairs(4);
    auto b = random_unit_pairs(4);
    std::vector<HarmonicEmbedding> embeddings = {a, b};
    std::vector<double> weights = {1.0, 0.0};
    std::vector<HarmonicEmbedding> only_a = {a};
    std::vector<double> w1 = {1.0};
    SentenceVector got = htp::pool(embeddings, weights);
    SentenceVector expected = htp::pool(only_a, w1);
    for (std::size_t d = 0; d < got.dim(); ++d)
        CHECK(got.components[d] == doctest::Approx(expected.components[d]).epsilon(1e-12));
}

TEST_CASE("pool error paths") {
    CHECK(code_of([] {
        htp::pool(std::vector<HarmonicEmbedding>{}, std::vector<double>{});
    }) == ErrorCode::EmptySentence);

    auto e = random_unit_pairs(2);
    CHECK(code_of([&] {
        std::vector<HarmonicEmbedding> es = {e};
        std::vector<double> w = {0.0};
        htp::pool(es, w);
    }) == ErrorCode::ZeroWeightSum);

    CHECK(code_of([&] {
        std::vector<HarmonicEmbedding> es = {e, random_unit_pairs(3)};
        std::vector<double> w = {1.0, 1.0};
        htp::pool(es, w);
    }) == ErrorCode::DimensionMismatch);

    // antipodal pair with equal weights: the mean vanishes
    HarmonicEmbedding neg = e;
    for (double& c : neg.components) c = -c;
    CHECK(code_of([&] {
        std::vector<HarmonicEmbedding> es = {e, neg};
        std::vector<double> w = {1.0, 1.0};
        htp::pool(es, w);
    }) == ErrorCode::ZeroVector);

    std::vector<HarmonicEmbedding> es = {e};
    std::vector<double> negative = {-1.0};
    CHECK_THROWS_AS(htp::pool(es, negative), std::invalid_argument);
}

TEST_CASE("weight scale invariance") {
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t n = 1 + rng() % 6;
        std::vector<HarmonicEmbedding> embeddings;
        std::vector<double> weights;
        std::uniform_real_distribution<double> wdist(0.01, 5.0);
        for (std::size_t i = 0; i < n; ++i) {
            embeddings.push_back(random_unit_pairs(8));
            weights.push_back(wdist(rng));
        }
        SentenceVector base = htp::pool(embeddings, weights);
        double c = std::uniform_real_distribution<double>(1e-6, 1e6)(rng);
        std::vector<double> scaled = weights;
        for (double& w : scaled) w *= c;
        SentenceVector rescaled = htp::pool(embeddings, scaled);
        for (std::size_t d = 0; d < base.dim(); ++d)
            CHECK(base.components[d] == doctest::Approx(rescaled.components[d]).epsilon(1e-12));
    }
}

TEST_CASE("permutation invariance") {
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t n = 2 + rng() % 5;
        std::vector<HarmonicEmbedding> embeddings;
        std::vector<double> weights;
        std::uniform_real_distribution<double> wdist(0.01, 5.0);
        for (std::size_t i = 0; i < n; ++i) {
            embeddings.push_back(random_unit_pairs(4));
            weights.push_back(wdist(rng));
        }
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<HarmonicEmbedding> pe;
        std::vector<double> pw;
        for (std::size_t i : perm) {
            pe.push_back(embeddings[i]);
            pw.push_back(weights[i]);
        }
        SentenceVector a = htp::pool(embeddings, weights);
        SentenceVector b = htp::pool(pe, pw);
        for (std::size_t d = 0; d < a.dim(); ++d)
            CHECK(a.components[d] == doctest::Approx(b.components[d]).epsilon(1e-12));
    }
}

TEST_CASE("cosine similarity") {
    SentenceVector v{{1.0, 2.0, -3.0}, false};
    SentenceVector w{{-1.0, -2.0, 3.0}, false};
    CHECK(htp::cosine_similarity(v, v) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(htp::cosine_similarity(v, w) == doctest::Approx(-1.0).epsilon(1e-15));
    SentenceVector x{{1.0, 0.0}, false};
    SentenceVector y{{0.0, 1.0}, false};
    CHECK(htp::cosine_similarity(x, y) == 0.0);

    CHECK(code_of([&] { htp::cosine_similarity(x, v); }) == ErrorCode::DimensionMismatch);
    SentenceVector zero{{0.0, 0.0}, false};
    CHECK(code_of([&] { htp::cosine_similarity(x, zero); }) == ErrorCode::ZeroVector);
}

TEST_CASE("cosine symmetry, range, and Cauchy-Schwarz on random vectors") {
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t dim = 2 + rng() % 16;
        SentenceVector x, y;
        for (std::size_t d = 0; d < dim; ++d) {
            x.components.push_back(dist(rng));
            y.components.push_back(dist(rng));
        }
        double nx = norm_of(x), ny = norm_of(y);
        if (nx == 0.0 || ny == 0.0) continue;
        double xy = htp::cosine_similarity(x, y);
        double yx = htp::cosine_similarity(y, x);
        CHECK(xy == yx);
        CHECK(xy >= -1.0);
        CHECK(xy <= 1.0);
        double dot = 0.0;
        for (std::size_t d = 0; d < dim; ++d) dot += x.components[d] * y.components[d];
        CHECK(std::abs(dot) <= nx * ny * (1.0 + 1e-12));
    }
}

TEST_CASE("embed_sentence composes the pipeline") {
    auto codec = htp::default_codec_config(32);
    htp::TokenizerConfig tokenizer;
    auto uniform = htp::WeightingScheme::uniform();

    SentenceVector word = htp::embed_sentence("guitar", uniform, codec, tokenizer);
    SentenceVector sentence = htp::embed_sentence("Guitar guitar GUITAR", uniform, codec, tokenizer);
    REQUIRE(word.dim() == sentence.dim());
    for (std::size_t d = 0; d < word.dim(); ++d)
        CHECK(word.components[d] == doctest::Approx(sentence.components[d]).epsilon(1e-12));

    SentenceVector again = htp::embed_sentence("guitar", uniform, codec, tokenizer);
    CHECK(word.components == again.components);  // bitwise deterministic

    CHECK(code_of([&] { htp::embed_sentence("... ---", uniform, codec, tokenizer); }) ==
          ErrorCode::EmptySentence);
}

TEST_CASE("stopword scheme falls back to uniform pooling when everything is removed") {
    auto codec = htp::default_codec_config(32);
    htp::TokenizerConfig tokenizer;
    auto scheme = htp::WeightingScheme::deferred(htp::SchemeKind::StopwordRemoval);

    auto traced = htp::embed_sentence_traced("it is the", scheme, codec, tokenizer);
    CHECK(traced.used_fallback);
    auto uniform = htp::embed_sentence("it is the", htp::WeightingScheme::uniform(), codec,
                                       tokenizer);
    CHECK(traced.vector.components == uniform.components);

    auto kept = htp::embed_sentence_traced("the quick fox", scheme, codec, tokenizer);
    CHECK_FALSE(kept.used_fallback);
    auto filtered = htp::embed_sentence("quick fox", htp::WeightingScheme::uniform(), codec,
                                        tokenizer);
    CHECK(kept.vector.components == filtered.components);
}

TEST_CASE("overlong tokens error strictly and chunk when asked") {
    auto codec = htp::default_codec_config(32, 4);
    htp::TokenizerConfig tokenizer;
    auto uniform = htp::WeightingScheme::uniform();
    CHECK(code_of([&] {
        htp::embed_sentence("extraordinarily long", uniform, codec, tokenizer);
    }) == ErrorCode::TokenTooLong);

    htp::TokenizerConfig chunky = tokenizer;
    chunky.chunk_overlong = true;
    auto chunked = htp::embed_sentence("extraordinarily long", uniform, codec, chunky);
    // "extraordinarily" -> extr|aord|inar|ily, plus "long"
    auto manual = htp::embed_sentence("extr aord inar ily long", uniform, codec, tokenizer);
    CHECK(chunked.components == manual.components);
}
