#include "htp/bigint.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

namespace htp {

namespace {
using u32 = std::uint32_t;
using u64 = std::uint64_t;
constexpr u64 kLimbBase = u64{1} << 32;
}  // namespace

BigUint::BigUint(u64 value) {
    if (value != 0) {
        limbs_.push_back(static_cast<u32>(value & 0xFFFFFFFFu));
        if (value >> 32) limbs_.push_back(static_cast<u32>(value >> 32));
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::size_t BigUint::bit_length() const noexcept {
    if (limbs_.empty()) return 0;
    u32 top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

std::uint16_t BigUint::digit16(std::size_t index) const noexcept {
    std::size_t limb = index / 2;
    if (limb >= limbs_.size()) return 0;
    u32 v = limbs_[limb];
    return static_cast<std::uint16_t>((index % 2) ? (v >> 16) : (v & 0xFFFFu));
}

std::uint64_t BigUint::low_u64() const noexcept {
    u64 v = 0;
    if (!limbs_.empty()) v = limbs_[0];
    if (limbs_.size() > 1) v |= static_cast<u64>(limbs_[1]) << 32;
    return v;
}

std::strong_ordering BigUint::operator<=>(const BigUint& other) const noexcept {
    if (limbs_.size() != other.limbs_.size())
        return limbs_.size() <=> other.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != other.limbs_[i]) return limbs_[i] <=> other.limbs_[i];
    }
    return std::strong_ordering::equal;
}

BigUint& BigUint::operator+=(const BigUint& other) {
    if (other.limbs_.size() > limbs_.size()) limbs_.resize(other.limbs_.size(), 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u64 sum = carry + limbs_[i];
        if (i < other.limbs_.size()) sum += other.limbs_[i];
        limbs_[i] = static_cast<u32>(sum & 0xFFFFFFFFu);
        carry = sum >> 32;
    }
    if (carry) limbs_.push_back(static_cast<u32>(carry));
    return *this;
}

BigUint& BigUint::operator-=(const BigUint& other) {
    if (*this < other) throw std::invalid_argument("BigUint subtraction underflow");
    u64 borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u64 sub = borrow + (i < other.limbs_.size() ? other.limbs_[i] : 0);
        u64 cur = limbs_[i];
        if (cur < sub) {
            limbs_[i] = static_cast<u32>(cur + kLimbBase - sub);
            borrow = 1;
        } else {
            limbs_[i] = static_cast<u32>(cur - sub);
            borrow = 0;
        }
    }
    trim();
    return *this;
}

BigUint BigUint::operator+(const BigUint& other) const {
    BigUint result = *this;
    result += other;
    return result;
}

BigUint BigUint::operator-(const BigUint& other) const {
    BigUint result = *this;
    result -= other;
    return result;
}

BigUint BigUint::operator*(const BigUint& other) const {
    if (is_zero() || other.is_zero()) return BigUint{};
    BigUint result;
    result.limbs_.assign(limbs_.size() + other.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u64 carry = 0;
        for (std::size_t j = 0; j < other.limbs_.size(); ++j) {
            u64 cur = static_cast<u64>(limbs_[i]) * other.limbs_[j] +
                      result.limbs_[i + j] + carry;
            result.limbs_[i + j] = static_cast<u32>(cur & 0xFFFFFFFFu);
            carry = cur >> 32;
        }
        result.limbs_[i + other.limbs_.size()] += static_cast<u32>(carry);
    }
    result.trim();
    return result;
}

BigUint BigUint::mul_small(u64 factor) const {
    return *this * BigUint(factor);
}

BigUint BigUint::operator<<(std::size_t bits) const {
    if (is_zero() || bits == 0) {
        BigUint copy = *this;
        return copy;
    }
    std::size_t limb_shift = bits / 32;
    std::size_t bit_shift = bits % 32;
    BigUint result;
    result.limbs_.assign(limbs_.size() + limb_shift + 1, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u64 v = static_cast<u64>(limbs_[i]) << bit_shift;
        result.limbs_[i + limb_shift] |= static_cast<u32>(v & 0xFFFFFFFFu);
        result.limbs_[i + limb_shift + 1] |= static_cast<u32>(v >> 32);
    }
    result.trim();
    return result;
}

BigUint BigUint::operator>>(std::size_t bits) const {
    std::size_t limb_shift = bits / 32;
    if (limb_shift >= limbs_.size()) return BigUint{};
    std::size_t bit_shift = bits % 32;
    BigUint result;
    result.limbs_.assign(limbs_.size() - limb_shift, 0);
    for (std::size_t i = 0; i < result.limbs_.size(); ++i) {
        u64 v = limbs_[i + limb_shift] >> bit_shift;
        if (bit_shift && i + limb_shift + 1 < limbs_.size())
            v |= static_cast<u64>(limbs_[i + limb_shift + 1]) << (32 - bit_shift);
        result.limbs_[i] = static_cast<u32>(v);
    }
    result.trim();
    return result;
}

BigUint::DivMod BigUint::divmod(const BigUint& numerator, const BigUint& denominator) {
    if (denominator.is_zero()) throw std::invalid_argument("BigUint division by zero");
    if (numerator < denominator) return {BigUint{}, numerator};

    std::size_t shift = numerator.bit_length() - denominator.bit_length();
    BigUint aligned = denominator << shift;
    BigUint remainder = numerator;
    BigUint quotient;
    quotient.limbs_.assign(shift / 32 + 1, 0);
    for (std::size_t i = shift + 1; i-- > 0;) {
        if (remainder >= aligned) {
            remainder -= aligned;
            quotient.limbs_[i / 32] |= u32{1} << (i % 32);
        }
        aligned = aligned >> 1;
    }
    quotient.trim();
    return {quotient, remainder};
}

std::uint64_t BigUint::mod_small(u64 modulus) const {
    if (modulus == 0) throw std::invalid_argument("BigUint modulo zero");
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        rem = ((rem << 32) | limbs_[i]) % modulus;
    }
    return static_cast<u64>(rem);
}

BigUint BigUint::from_decimal(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty decimal string");
    BigUint result;
    for (char c : text) {
        if (c < '0' || c > '9') throw std::invalid_argument("invalid decimal digit");
        // result = result * 10 + digit, done limb-wise to avoid allocation churn
        u64 carry = static_cast<u64>(c - '0');
        for (std::size_t i = 0; i < result.limbs_.size(); ++i) {
            u64 cur = static_cast<u64>(result.limbs_[i]) * 10 + carry;
            result.limbs_[i] = static_cast<u32>(cur & 0xFFFFFFFFu);
            carry = cur >> 32;
        }
        if (carry) result.limbs_.push_back(static_cast<u32>(carry));
    }
    return result;
}

std::string BigUint::to_decimal() const {
    if (is_zero()) return "0";
    std::vector<u32> work(limbs_);
    std::string out;
    while (!work.empty()) {
        // divide by 10^9, emitting nine decimal digits per pass
        u64 rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            u64 cur = (rem << 32) | work[i];
            work[i] = static_cast<u32>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        for (int d = 0; d < 9; ++d) {
            out.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace htp
