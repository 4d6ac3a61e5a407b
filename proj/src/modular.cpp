#include "htp/modular.hpp"

#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "htp/errors.hpp"

namespace htp {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace

ModulusBasis ModulusBasis::from_moduli(std::vector<std::uint64_t> moduli,
                                       std::uint64_t min_modulus) {
    if (moduli.empty()) throw std::invalid_argument("basis needs at least one modulus");
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (moduli[i] < 2) throw std::invalid_argument("modulus must be >= 2");
        if (i > 0 && moduli[i] <= moduli[i - 1])
            throw std::invalid_argument("moduli must be strictly increasing");
    }
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        for (std::size_t j = i + 1; j < moduli.size(); ++j) {
            if (std::gcd(moduli[i], moduli[j]) != 1)
                throw std::invalid_argument("moduli must be pairwise coprime");
        }
    }

    ModulusBasis basis;
    basis.moduli_ = std::move(moduli);
    basis.min_modulus_ = min_modulus;
    basis.capacity_ = BigUint(1);
    for (std::uint64_t m : basis.moduli_) basis.capacity_ = basis.capacity_.mul_small(m);

    basis.crt_weights_.reserve(basis.moduli_.size());
    for (std::uint64_t m : basis.moduli_) {
        BigUint partial = BigUint::divmod(basis.capacity_, BigUint(m)).quotient;
        std::uint64_t inverse = modular_inverse(partial.mod_small(m), m);
        basis.crt_weights_.push_back(partial.mul_small(inverse));
    }
    return basis;
}

ModulusBasis generate_basis(std::size_t k, std::uint64_t min_modulus) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (min_modulus < 2) throw std::invalid_argument("min_modulus must be >= 2");
    std::vector<std::uint64_t> moduli;
    moduli.reserve(k);
    for (std::uint64_t c = min_modulus; moduli.size() < k; ++c) {
        if (is_prime(c)) moduli.push_back(c);
    }
    return ModulusBasis::from_moduli(std::move(moduli), min_modulus);
}

std::vector<std::uint64_t> residues(const BigUint& n, const ModulusBasis& basis) {
    std::vector<std::uint64_t> out;
    out.reserve(basis.size());
    for (std::uint64_t m : basis.moduli()) out.push_back(n.mod_small(m));
    return out;
}

std::uint64_t modular_inverse(std::uint64_t a, std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("modulus must be >= 2");
    a %= m;
    // extended Euclid tracking only the coefficient of a
    std::int64_t t = 0, new_t = 1;
    std::uint64_t r = m, new_r = a;
    while (new_r != 0) {
        std::uint64_t q = r / new_r;
        std::int64_t next_t = t - static_cast<std::int64_t>(q) * new_t;
        t = new_t;
        new_t = next_t;
        std::uint64_t next_r = r - q * new_r;
        r = new_r;
        new_r = next_r;
    }
    if (r != 1)
        throw Error(ErrorCode::NotInvertible,
                    std::to_string(a) + " has no inverse modulo " + std::to_string(m));
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

BigUint crt_reconstruct(std::span<const std::uint64_t> residue_values,
                        const ModulusBasis& basis) {
    if (residue_values.size() != basis.size())
        throw Error(ErrorCode::LengthMismatch,
                    "expected " + std::to_string(basis.size()) + " residues, got " +
                        std::to_string(residue_values.size()));
    for (std::size_t i = 0; i < residue_values.size(); ++i) {
        if (residue_values[i] >= basis.moduli()[i])
            throw Error(ErrorCode::ResidueOutOfRange,
                        "residue " + std::to_string(residue_values[i]) +
                            " >= modulus " + std::to_string(basis.moduli()[i]));
    }
    BigUint sum;
    for (std::size_t i = 0; i < residue_values.size(); ++i) {
        if (residue_values[i] != 0)
            sum += basis.crt_weights()[i].mul_small(residue_values[i]);
    }
    return BigUint::divmod(sum, basis.capacity()).remainder;
}

std::string ModulusBasis::to_json() const {
    nlohmann::json j;
    j["version"] = 1;
    j["k"] = moduli_.size();
    j["min_modulus"] = min_modulus_;
    j["moduli"] = moduli_;
    return j.dump();
}

ModulusBasis ModulusBasis::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("version") || j["version"].get<int>() != 1)
        throw std::invalid_argument("unsupported basis config version");
    auto moduli = j.at("moduli").get<std::vector<std::uint64_t>>();
    if (j.contains("k") && j["k"].get<std::size_t>() != moduli.size())
        throw std::invalid_argument("basis config k does not match moduli length");
    std::uint64_t min_modulus = j.value("min_modulus", std::uint64_t{0});
    return from_moduli(std::move(moduli), min_modulus);
}

}  // namespace htp
