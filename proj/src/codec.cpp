#include "htp/codec.hpp"

#include <cmath>
#include <numbers>

#include "htp/errors.hpp"
#include "htp/unicode.hpp"

namespace htp {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

bool CodecConfig::capacity_covers_tokens() const {
    return basis.capacity() > (BigUint(1) << (16 * static_cast<std::size_t>(l_max)));
}

CodecConfig default_codec_config(std::size_t dim, int l_max, std::uint64_t min_modulus,
                                 Normalization normalization) {
    if (dim < 2 || dim % 2 != 0) throw std::invalid_argument("dim must be even and >= 2");
    CodecConfig config;
    config.l_max = l_max;
    config.normalization = normalization;
    config.basis = generate_basis(dim / 2, min_modulus);
    return config;
}

TokenInteger token_to_integer(std::string_view token, const CodecConfig& config) {
    std::vector<char32_t> cps = unicode::utf8_to_codepoints(token);
    if (config.normalization == Normalization::NFC) cps = unicode::nfc(cps);
    if (cps.empty()) throw Error(ErrorCode::EmptyToken, "token is empty");
    for (char32_t cp : cps) {
        if (cp == 0)
            throw Error(ErrorCode::ContainsNull, "U+0000 collides with padding");
    }
    std::vector<std::uint16_t> units = unicode::codepoints_to_utf16(cps);
    if (units.size() > static_cast<std::size_t>(config.l_max))
        throw Error(ErrorCode::TokenTooLong,
                    std::to_string(units.size()) + " code units exceed l_max " +
                        std::to_string(config.l_max));

    BigUint value;
    for (int j = 0; j < config.l_max; ++j) {
        std::uint64_t digit =
            j < static_cast<int>(units.size()) ? units[static_cast<std::size_t>(j)] : 0;
        value = (value << 16) + BigUint(digit);
    }
    return TokenInteger{std::move(value), static_cast<int>(units.size())};
}

std::string integer_to_token(const BigUint& value, const CodecConfig& config) {
    std::size_t l_max = static_cast<std::size_t>(config.l_max);
    if (value.bit_length() > 16 * l_max)
        throw Error(ErrorCode::IntegerOutOfRange,
                    "value has " + std::to_string(value.bit_length()) +
                        " bits, token space has " + std::to_string(16 * l_max));

    // digit16(0) is the least significant digit == last code unit
    std::vector<std::uint16_t> units(l_max);
    for (std::size_t j = 0; j < l_max; ++j)
        units[l_max - 1 - j] = value.digit16(j);

    std::size_t length = l_max;
    while (length > 0 && units[length - 1] == 0) --length;
    if (length == 0) throw Error(ErrorCode::EmptyToken, "integer decodes to all padding");
    units.resize(length);
    for (std::uint16_t u : units) {
        if (u == 0)
            throw Error(ErrorCode::InvalidCodePoint,
                        "interior zero digit: not a valid token integer");
    }
    std::vector<char32_t> cps = unicode::utf16_to_codepoints(units);
    return unicode::codepoints_to_utf8(cps);
}

HarmonicEmbedding embedding_from_integer(const BigUint& value, const ModulusBasis& basis) {
    HarmonicEmbedding out;
    out.components.resize(2 * basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::uint64_t m = basis.moduli()[i];
        double angle = kTwoPi * static_cast<double>(value.mod_small(m)) / static_cast<double>(m);
        out.components[2 * i] = std::sin(angle);
        out.components[2 * i + 1] = std::cos(angle);
    }
    return out;
}

HarmonicEmbedding encode(std::string_view token, const CodecConfig& config) {
    return embedding_from_integer(token_to_integer(token, config).value, config.basis);
}

std::uint64_t recover_residue(double sin_value, double cos_value, std::uint64_t modulus) {
    if (sin_value == 0.0 && cos_value == 0.0)
        throw Error(ErrorCode::DegeneratePhase, "zero pair has no phase");
    double angle = std::atan2(sin_value, cos_value);
    if (angle < 0.0) angle += kTwoPi;
    auto rounded = static_cast<std::uint64_t>(
        std::llround(angle / kTwoPi * static_cast<double>(modulus)));
    return rounded % modulus;
}

BigUint integer_from_embedding(const HarmonicEmbedding& embedding, const ModulusBasis& basis) {
    if (embedding.dim() != 2 * basis.size())
        throw Error(ErrorCode::DimensionMismatch,
                    "embedding dim " + std::to_string(embedding.dim()) +
                        " does not match basis dim " + std::to_string(2 * basis.size()));
    std::vector<std::uint64_t> recovered(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        recovered[i] = recover_residue(embedding.components[2 * i],
                                       embedding.components[2 * i + 1], basis.moduli()[i]);
    }
    return crt_reconstruct(recovered, basis);
}

DecodeResult decode(const HarmonicEmbedding& embedding, const CodecConfig& config) {
    DecodeResult result;
    result.capacity_limited = !config.capacity_covers_tokens();
    result.token = integer_to_token(integer_from_embedding(embedding, config.basis), config);
    return result;
}

}  // namespace htp
