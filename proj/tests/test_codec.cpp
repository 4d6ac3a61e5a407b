#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "htp/bigint.hpp"
#include "htp/codec.hpp"
#include "htp/errors.hpp"
#include "htp/modular.hpp"
#include "htp/unicode.hpp"

using htp::BigUint;
using htp::CodecConfig;
using htp::ErrorCode;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

CodecConfig tiny_config(int l_max = 2) {
    CodecConfig config;
    config.l_max = l_max;
    config.basis = htp::generate_basis(3, 3);  // [3, 5, 7]
    return config;
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

// random token generator over NFC-inert ranges, mixed scripts, astral included
std::string random_token(std::mt19937_64& rng, int max_units = 24) {
    static const std::pair<char32_t, char32_t> ranges[] = {
        {U'a', U'z'},       {U'A', U'Z'},       {U'0', U'9'},
        {0x0430, 0x044F},   {0x03B1, 0x03C9},   {0x4E00, 0x4FFF},
        {0x3041, 0x3096},   {0xAC00, 0xD7A3},   {0x05D0, 0x05EA},
        {0x1F300, 0x1F5FF},
    };
    int budget = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_units));
    std::vector<char32_t> cps;
    int used = 0;
    while (used < budget) {
        const auto& range = ranges[rng() % std::size(ranges)];
        char32_t cp = range.first + static_cast<char32_t>(rng() % (range.second - range.first + 1));
        int width = cp >= 0x10000 ? 2 : 1;
        if (used + width > budget) continue;
        cps.push_back(cp);
        used += width;
    }
    return htp::unicode::codepoints_to_utf8(cps);
}

}  // namespace

TEST_CASE("token_to_integer evaluates the base-2^16 polynomial") {
    auto config = tiny_config(2);
    CHECK(htp::token_to_integer("A", config).value == BigUint(4259840));  // 65 * 65536
    CHECK(htp::token_to_integer("A", config).source_length == 1);
    CHECK(htp::token_to_integer("AB", config).value == BigUint(4259906));
    CHECK(htp::token_to_integer("AB", config).source_length == 2);
}

TEST_CASE("token_to_integer on a full-width token") {
    CodecConfig config;
    config.l_max = 24;
    config.basis = htp::generate_basis(3, 3);
    CHECK(htp::token_to_integer("hello", config).value ==
          BigUint::from_decimal(
              "62528524312329903548138055954082692405368278725955272035734611558189428894622300314889834299371549989970055790592"));
}

TEST_CASE("token_to_integer error paths") {
    auto config = tiny_config(24);
    CHECK(code_of([&] { htp::token_to_integer("abcdefghijklmnopqrstuvwxyz", config); }) ==
          ErrorCode::TokenTooLong);
    CHECK(code_of([&] { htp::token_to_integer("", config); }) == ErrorCode::EmptyToken);
    CHECK(code_of([&] { htp::token_to_integer(std::string("a\0b", 3), config); }) ==
          ErrorCode::ContainsNull);
    // astral code points count as two units
    auto two_unit = tiny_config(2);
    CHECK_NOTHROW(htp::token_to_integer("🙂", two_unit));
    auto one_unit = tiny_config(1);
    CHECK(code_of([&] { htp::token_to_integer("🙂", one_unit); }) == ErrorCode::TokenTooLong);
}

TEST_CASE("integer_to_token inverts token_to_integer") {
    auto config = tiny_config(2);
    CHECK(htp::integer_to_token(BigUint(4259840), config) == "A");
    CHECK(htp::integer_to_token(BigUint(4259906), config) == "AB");
    CHECK(code_of([&] { htp::integer_to_token(BigUint(0), config); }) == ErrorCode::EmptyToken);
    // interior zero digit is not on the image of any token
    CHECK(code_of([&] { htp::integer_to_token(BigUint(65), config); }) ==
          ErrorCode::InvalidCodePoint);
    // value outside the digit space
    CHECK(code_of([&] { htp::integer_to_token(BigUint(1) << 33, config); }) ==
          ErrorCode::IntegerOutOfRange);
    // a lone surrogate digit signals corruption
    CHECK(code_of([&] {
        htp::integer_to_token((BigUint(0xD800) << 16) + BigUint(0x41), config);
    }) == ErrorCode::InvalidCodePoint);
}

TEST_CASE("encode matches hand-computed residues and phases") {
    auto config = tiny_config(2);
    auto embedding = htp::encode("A", config);
    REQUIRE(embedding.dim() == 6);
    // 4259840 mod [3, 5, 7] = [2, 0, 4]
    CHECK(embedding.components[0] == doctest::Approx(std::sin(kTwoPi * 2 / 3)).epsilon(1e-15));
    CHECK(embedding.components[1] == doctest::Approx(std::cos(kTwoPi * 2 / 3)).epsilon(1e-15));
    CHECK(embedding.components[2] == 0.0);
    CHECK(embedding.components[3] == 1.0);
    CHECK(embedding.components[4] == doctest::Approx(std::sin(kTwoPi * 4 / 7)).epsilon(1e-15));
    CHECK(embedding.components[5] == doctest::Approx(std::cos(kTwoPi * 4 / 7)).epsilon(1e-15));
}

TEST_CASE("zero residues give the (0, 1) pair everywhere") {
    auto basis = htp::generate_basis(5, 3);
    auto embedding = htp::embedding_from_integer(BigUint(0), basis);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        CHECK(embedding.components[2 * i] == 0.0);
        CHECK(embedding.components[2 * i + 1] == 1.0);
    }
}

TEST_CASE("encode is bitwise deterministic") {
    auto config = htp::default_codec_config(64);
    auto a = htp::encode("déterministe", config);
    auto b = htp::encode("déterministe", config);
    CHECK(a.components == b.components);
}

TEST_CASE("recover_residue") {
    CHECK(htp::recover_residue(0.0, 1.0, 7) == 0);
    CHECK(htp::recover_residue(std::sin(kTwoPi * 3 / 7), std::cos(kTwoPi * 3 / 7), 7) == 3);
    // perturbation below half the angular step keeps the rounding exact
    CHECK(htp::recover_residue(std::sin(kTwoPi * 6 / 7) + 0.001,
                               std::cos(kTwoPi * 6 / 7) - 0.001, 7) == 6);
    CHECK(code_of([&] { htp::recover_residue(0.0, 0.0, 7); }) == ErrorCode::DegeneratePhase);
    // every residue of every small modulus recovers exactly
    for (std::uint64_t m : {2ull, 3ull, 5ull, 97ull, 65521ull}) {
        for (std::uint64_t r = 0; r < std::min<std::uint64_t>(m, 200); ++r) {
            double angle = kTwoPi * static_cast<double>(r) / static_cast<double>(m);
            CHECK(htp::recover_residue(std::sin(angle), std::cos(angle), m) == r);
        }
    }
}

TEST_CASE("decode inverts encode") {
    auto config = htp::default_codec_config(512);
    REQUIRE(config.capacity_covers_tokens());
    auto result = htp::decode(htp::encode("hello", config), config);
    CHECK(result.token == "hello");
    CHECK_FALSE(result.capacity_limited);
}

TEST_CASE("decode of an all-zero vector reports a degenerate phase") {
    auto config = tiny_config(2);
    htp::HarmonicEmbedding zeros;
    zeros.components.assign(6, 0.0);
    CHECK(code_of([&] { htp::decode(zeros, config); }) == ErrorCode::DegeneratePhase);
}

TEST_CASE("decode flags capacity-limited bases") {
    // integer recovery works modulo the capacity even when tokens don't fit
    auto small = tiny_config(2);  // capacity 105 << 2^32
    CHECK_FALSE(small.capacity_covers_tokens());
    auto embedding = htp::embedding_from_integer(BigUint(42), small.basis);
    CHECK(htp::integer_from_embedding(embedding, small.basis) == BigUint(42));

    // capacity 4,849,845 holds N("A") = 4,259,840 but not the full 2^32
    // token space, so the round trip succeeds with the warning flag set
    CodecConfig config;
    config.l_max = 2;
    config.basis = htp::generate_basis(7, 3);
    CHECK_FALSE(config.capacity_covers_tokens());
    auto result = htp::decode(htp::encode("A", config), config);
    CHECK(result.token == "A");
    CHECK(result.capacity_limited);
}

TEST_CASE("round trip over random mixed-script tokens") {
    auto config = htp::default_codec_config(512);
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 300; ++i) {
        std::string token = random_token(rng);
        auto decoded = htp::decode(htp::encode(token, config), config);
        CHECK(decoded.token == token);
    }
}

TEST_CASE("round trip with component noise below the analytic threshold") {
    auto config = htp::default_codec_config(512);
    std::mt19937_64 rng(4321);
    std::uniform_real_distribution<double> noise(-1e-3, 1e-3);
    for (int i = 0; i < 200; ++i) {
        std::string token = random_token(rng);
        auto embedding = htp::encode(token, config);
        for (double& c : embedding.components) c += noise(rng);
        CHECK(htp::decode(embedding, config).token == token);
    }
}

TEST_CASE("continuity: adjacent integers move each phase by one step") {
    auto basis = htp::generate_basis(16, 3);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        BigUint n = BigUint(rng());
        auto a = htp::embedding_from_integer(n, basis);
        auto b = htp::embedding_from_integer(n + BigUint(1), basis);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            double phase_a = std::atan2(a.components[2 * i], a.components[2 * i + 1]);
            double phase_b = std::atan2(b.components[2 * i], b.components[2 * i + 1]);
            double diff = std::remainder(phase_b - phase_a, kTwoPi);
            double step = kTwoPi / static_cast<double>(basis.moduli()[i]);
            CHECK(std::abs(diff - step) < 1e-9);
        }
        // component delta is bounded by the coarsest angular step
        double max_delta = 0.0;
        for (std::size_t d = 0; d < a.dim(); ++d)
            max_delta = std::max(max_delta, std::abs(a.components[d] - b.components[d]));
        CHECK(max_delta <= kTwoPi / static_cast<double>(basis.moduli().front()));
    }
}

TEST_CASE("periodicity: n and n + capacity embed identically") {
    auto basis = htp::generate_basis(12, 3);
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        BigUint n = BigUint(rng());
        auto a = htp::embedding_from_integer(n, basis);
        auto b = htp::embedding_from_integer(n + basis.capacity(), basis);
        for (std::size_t d = 0; d < a.dim(); ++d)
            CHECK(a.components[d] == doctest::Approx(b.components[d]).epsilon(1e-9));
    }
}

TEST_CASE("norms: unit pairs, sqrt(k) full vector") {
    auto config = htp::default_codec_config(128);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto embedding = htp::encode(random_token(rng), config);
        double total = 0.0;
        for (std::size_t i = 0; i < embedding.dim() / 2; ++i) {
            double s = embedding.components[2 * i];
            double c = embedding.components[2 * i + 1];
            CHECK(std::abs(s * s + c * c - 1.0) <= 1e-12);
            CHECK(std::abs(s) <= 1.0);
            CHECK(std::abs(c) <= 1.0);
            total += s * s + c * c;
        }
        CHECK(std::abs(std::sqrt(total) - std::sqrt(embedding.dim() / 2.0)) <= 1e-9);
    }
}

TEST_CASE("noise sweep: failures start only past the analytic threshold") {
    auto config = htp::default_codec_config(512);
    std::uint64_t m_max = config.basis.largest_modulus();
    // displacement d on a unit-circle point shifts the phase by at most
    // asin(d / (1 - d)); exact recovery is guaranteed while that stays
    // below half the angular step pi/m of the largest modulus
    double s = std::sin(std::numbers::pi / static_cast<double>(m_max));
    double guaranteed_amplitude = s / ((1.0 + s) * std::numbers::sqrt2);

    std::mt19937_64 rng(888);
    auto failures_at = [&](double amplitude, int tokens) {
        std::uniform_real_distribution<double> noise(-amplitude, amplitude);
        int failures = 0;
        for (int i = 0; i < tokens; ++i) {
            std::string token = random_token(rng);
            auto embedding = htp::encode(token, config);
            for (double& c : embedding.components) c += noise(rng);
            try {
                if (htp::decode(embedding, config).token != token) ++failures;
            } catch (const htp::Error&) {
                ++failures;
            }
        }
        return failures;
    };

    CHECK(failures_at(0.25 * guaranteed_amplitude, 100) == 0);
    CHECK(failures_at(0.60 * guaranteed_amplitude, 100) == 0);
    CHECK(failures_at(0.99 * guaranteed_amplitude, 100) == 0);
    // far past the threshold the phase error spans several steps
    CHECK(failures_at(5.0 * guaranteed_amplitude, 100) > 0);
}

TEST_CASE("nfc-normalizing config folds equivalent spellings") {
    auto config = htp::default_codec_config(64);
    auto composed = htp::token_to_integer("é", config);        // é
    auto decomposed = htp::token_to_integer("é", config);     // e + combining acute
    CHECK(composed.value == decomposed.value);

    CodecConfig raw = config;
    raw.normalization = htp::Normalization::None;
    CHECK(htp::token_to_integer("é", raw).value !=
          htp::token_to_integer("é", raw).value);
}
