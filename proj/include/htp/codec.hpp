#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "htp/bigint.hpp"
#include "htp/modular.hpp"

namespace htp {

enum class Normalization { NFC, None };

/// Token codec parameters. The digit base is fixed at 2^16: tokens are
/// serialized as UTF-16 code units so every digit fits the base by
/// construction (astral code points occupy two digits).
struct CodecConfig {
    static constexpr std::uint32_t kBase = 65536;

    int l_max = 24;
    Normalization normalization = Normalization::NFC;
    ModulusBasis basis;

    /// True when the basis capacity exceeds base^l_max, i.e. every legal
    /// token integer is reconstructible exactly.
    bool capacity_covers_tokens() const;
};

CodecConfig default_codec_config(std::size_t dim = 512, int l_max = 24,
                                 std::uint64_t min_modulus = 3,
                                 Normalization normalization = Normalization::NFC);

struct TokenInteger {
    BigUint value;
    int source_length = 0;  // code-unit count before padding
};

/// Interleaved (sin, cos) pairs, one per modulus: [s1, c1, s2, c2, ...].
struct HarmonicEmbedding {
    std::vector<double> components;
    std::size_t dim() const noexcept { return components.size(); }
};

struct DecodeResult {
    std::string token;
    /// Set when the basis capacity does not cover the token integer
    /// space; reconstruction is then only exact modulo the capacity.
    bool capacity_limited = false;
};

/// Normalizes, converts to UTF-16 units, zero-pads to l_max, and
/// evaluates the base-2^16 polynomial (first unit most significant).
TokenInteger token_to_integer(std::string_view token, const CodecConfig& config);

/// Inverse digit extraction: splits the value into l_max base-2^16
/// digits, drops the zero padding, and decodes the units back to text.
std::string integer_to_token(const BigUint& value, const CodecConfig& config);

/// Phase projection of an integer: residue r_i per modulus becomes the
/// pair (sin(2*pi*r_i/m_i), cos(2*pi*r_i/m_i)).
HarmonicEmbedding embedding_from_integer(const BigUint& value, const ModulusBasis& basis);

HarmonicEmbedding encode(std::string_view token, const CodecConfig& config);

/// Phase recovery for one pair. Maps atan2 output into [0, 2*pi) before
/// scaling so rounding is well defined for every residue; exact on
/// noiseless encodings. Throws DegeneratePhase on (0, 0).
std::uint64_t recover_residue(double sin_value, double cos_value, std::uint64_t modulus);

/// Recovers every residue and reconstructs the integer.
BigUint integer_from_embedding(const HarmonicEmbedding& embedding, const ModulusBasis& basis);

DecodeResult decode(const HarmonicEmbedding& embedding, const CodecConfig& config);

}  // namespace htp
