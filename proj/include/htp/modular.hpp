#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "htp/bigint.hpp"

namespace htp {

/// Ordered set of pairwise-coprime moduli with the reconstruction
/// constants derived from them.
///
/// `capacity` is the product of all moduli: the number of distinct
/// integers the residue tuple can represent. `crt_weights[i]` is
/// M_i * y_i where M_i = capacity / m_i and y_i is the multiplicative
/// inverse of M_i modulo m_i, so each weight is congruent to 1 modulo
/// its own modulus and to 0 modulo every other. Immutable after
/// construction and safe to share across threads.
class ModulusBasis {
  public:
    /// Default-constructed bases are empty placeholders; build real ones
    /// with from_moduli or generate_basis.
    ModulusBasis() = default;

    /// Validates pairwise coprimality and strict ascending order, then
    /// precomputes capacity and reconstruction weights.
    static ModulusBasis from_moduli(std::vector<std::uint64_t> moduli,
                                    std::uint64_t min_modulus = 0);

    const std::vector<std::uint64_t>& moduli() const noexcept { return moduli_; }
    std::size_t size() const noexcept { return moduli_.size(); }
    const BigUint& capacity() const noexcept { return capacity_; }
    const std::vector<BigUint>& crt_weights() const noexcept { return crt_weights_; }
    std::uint64_t largest_modulus() const noexcept { return moduli_.back(); }
    /// min_modulus used at generation time; 0 for hand-built bases.
    std::uint64_t min_modulus() const noexcept { return min_modulus_; }

    std::string to_json() const;
    static ModulusBasis from_json(const std::string& text);

  private:
    std::vector<std::uint64_t> moduli_;
    BigUint capacity_;
    std::vector<BigUint> crt_weights_;
    std::uint64_t min_modulus_ = 0;
};

/// First k primes >= min_modulus, ascending. Deterministic.
ModulusBasis generate_basis(std::size_t k, std::uint64_t min_modulus = 3);

/// [n mod m_1, ..., n mod m_k].
std::vector<std::uint64_t> residues(const BigUint& n, const ModulusBasis& basis);

/// y in [1, m) with (a * y) mod m == 1. Throws NotInvertible when
/// gcd(a mod m, m) != 1.
std::uint64_t modular_inverse(std::uint64_t a, std::uint64_t m);

/// The unique n in [0, capacity) matching every residue. Throws
/// ResidueOutOfRange when residues[i] >= m_i, LengthMismatch when the
/// tuple size differs from the basis size.
BigUint crt_reconstruct(std::span<const std::uint64_t> residue_values,
                        const ModulusBasis& basis);

}  // namespace htp
