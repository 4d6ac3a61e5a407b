#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace htp {

/// Arbitrary-precision unsigned integer.
///
/// Stores base-2^32 limbs, least significant first, with no trailing zero
/// limbs (zero is the empty limb vector). The surface is intentionally
/// small: construction, comparison, add/sub/mul, shifts, division, and
/// remainders by machine words — what the residue/reconstruction arithmetic
/// needs, nothing more.
class BigUint {
  public:
    BigUint() = default;
    explicit BigUint(std::uint64_t value);

    static BigUint from_decimal(std::string_view text);
    std::string to_decimal() const;

    bool is_zero() const noexcept { return limbs_.empty(); }
    std::size_t bit_length() const noexcept;

    /// Value of the i-th base-2^16 digit (little-endian digit order).
    std::uint16_t digit16(std::size_t index) const noexcept;

    /// Low 64 bits; only meaningful when bit_length() <= 64.
    std::uint64_t low_u64() const noexcept;

    bool operator==(const BigUint& other) const noexcept = default;
    std::strong_ordering operator<=>(const BigUint& other) const noexcept;

    BigUint& operator+=(const BigUint& other);
    BigUint& operator-=(const BigUint& other);  // requires *this >= other
    BigUint operator+(const BigUint& other) const;
    BigUint operator-(const BigUint& other) const;
    BigUint operator*(const BigUint& other) const;
    BigUint operator<<(std::size_t bits) const;
    BigUint operator>>(std::size_t bits) const;

    BigUint mul_small(std::uint64_t factor) const;

    struct DivMod;
    /// Shift-and-subtract long division; cost scales with quotient bits.
    static DivMod divmod(const BigUint& numerator, const BigUint& denominator);

    std::uint64_t mod_small(std::uint64_t modulus) const;

    const std::vector<std::uint32_t>& limbs() const noexcept { return limbs_; }

  private:
    void trim();
    std::vector<std::uint32_t> limbs_;
};

struct BigUint::DivMod {
    BigUint quotient;
    BigUint remainder;
};

}  // namespace htp
