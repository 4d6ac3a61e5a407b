#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "htp/bigint.hpp"
#include "htp/errors.hpp"
#include "htp/modular.hpp"

using htp::BigUint;
using htp::ModulusBasis;

namespace {

// independent oracle: exhaustive search over [0, M)
std::uint64_t crt_brute_force(const std::vector<std::uint64_t>& residue_values,
                              const std::vector<std::uint64_t>& moduli,
                              std::uint64_t capacity) {
    for (std::uint64_t n = 0; n < capacity; ++n) {
        bool ok = true;
        for (std::size_t i = 0; i < moduli.size(); ++i) {
            if (n % moduli[i] != residue_values[i]) {
                ok = false;
                break;
            }
        }
        if (ok) return n;
    }
    FAIL("no CRT solution found");
    return 0;
}

}  // namespace

TEST_CASE("generate_basis picks the first primes") {
    auto b1 = htp::generate_basis(1, 2);
    CHECK(b1.moduli() == std::vector<std::uint64_t>{2});
    CHECK(b1.capacity() == BigUint(2));

    auto b3 = htp::generate_basis(3, 3);
    CHECK(b3.moduli() == std::vector<std::uint64_t>{3, 5, 7});
    CHECK(b3.capacity() == BigUint(105));

    auto b5 = htp::generate_basis(5, 3);
    CHECK(b5.moduli() == std::vector<std::uint64_t>{3, 5, 7, 11, 13});
    CHECK(b5.capacity() == BigUint(15015));

    CHECK(htp::generate_basis(4, 10).moduli() == std::vector<std::uint64_t>{11, 13, 17, 19});
}

TEST_CASE("generate_basis rejects bad parameters") {
    CHECK_THROWS_AS(htp::generate_basis(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(htp::generate_basis(3, 1), std::invalid_argument);
}

TEST_CASE("generate_basis is deterministic") {
    auto a = htp::generate_basis(32, 3);
    auto b = htp::generate_basis(32, 3);
    CHECK(a.moduli() == b.moduli());
    CHECK(a.capacity() == b.capacity());
    CHECK(a.crt_weights() == b.crt_weights());
}

TEST_CASE("basis validation") {
    CHECK_THROWS_AS(ModulusBasis::from_moduli({6, 9}), std::invalid_argument);   // gcd 3
    CHECK_THROWS_AS(ModulusBasis::from_moduli({5, 3}), std::invalid_argument);   // not ascending
    CHECK_THROWS_AS(ModulusBasis::from_moduli({3, 3}), std::invalid_argument);   // duplicate
    CHECK_THROWS_AS(ModulusBasis::from_moduli({1, 3}), std::invalid_argument);   // below 2
    CHECK_THROWS_AS(ModulusBasis::from_moduli({}), std::invalid_argument);
    CHECK_NOTHROW(ModulusBasis::from_moduli({4, 9, 25}));  // coprime composites are legal
}

TEST_CASE("crt weights satisfy the defining congruences") {
    auto basis = htp::generate_basis(8, 3);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            std::uint64_t expected = i == j ? 1 : 0;
            CHECK(basis.crt_weights()[i].mod_small(basis.moduli()[j]) == expected);
        }
    }
}

TEST_CASE("residues") {
    auto basis = htp::generate_basis(3, 3);
    CHECK(htp::residues(BigUint(0), basis) == std::vector<std::uint64_t>{0, 0, 0});
    CHECK(htp::residues(BigUint(10), basis) == std::vector<std::uint64_t>{1, 0, 3});
    CHECK(htp::residues(BigUint(105), basis) == std::vector<std::uint64_t>{0, 0, 0});
}

TEST_CASE("modular_inverse") {
    CHECK(htp::modular_inverse(1, 7) == 1);
    CHECK(htp::modular_inverse(35, 3) == 2);
    CHECK_THROWS_AS(htp::modular_inverse(6, 9), htp::Error);
    try {
        htp::modular_inverse(6, 9);
    } catch (const htp::Error& e) {
        CHECK(e.code() == htp::ErrorCode::NotInvertible);
    }

    std::mt19937_64 rng(99);
    for (int i = 0; i < 500; ++i) {
        std::uint64_t m = 2 + rng() % 100000;
        std::uint64_t a = rng() % (m * 3 + 1);
        if (std::gcd(a % m, m) != 1) continue;
        std::uint64_t y = htp::modular_inverse(a, m);
        CHECK(y >= 1);
        CHECK(y < m);
        CHECK((static_cast<unsigned __int128>(a % m) * y) % m == 1);
    }
}

TEST_CASE("crt_reconstruct recovers known values") {
    auto basis = htp::generate_basis(3, 3);
    CHECK(htp::crt_reconstruct(std::vector<std::uint64_t>{0, 0, 0}, basis) == BigUint(0));
    CHECK(htp::crt_reconstruct(std::vector<std::uint64_t>{1, 0, 3}, basis) == BigUint(10));
    CHECK(htp::crt_reconstruct(std::vector<std::uint64_t>{2, 4, 6}, basis) == BigUint(104));
}

TEST_CASE("crt_reconstruct input validation") {
    auto basis = htp::generate_basis(3, 3);
    CHECK_THROWS_AS(htp::crt_reconstruct(std::vector<std::uint64_t>{0, 0}, basis), htp::Error);
    try {
        htp::crt_reconstruct(std::vector<std::uint64_t>{3, 0, 0}, basis);
        FAIL("expected ResidueOutOfRange");
    } catch (const htp::Error& e) {
        CHECK(e.code() == htp::ErrorCode::ResidueOutOfRange);
    }
}

TEST_CASE("crt_reconstruct agrees with brute force") {
    auto basis = htp::generate_basis(4, 3);  // capacity 1155
    std::uint64_t capacity = basis.capacity().low_u64();
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<std::uint64_t> rs;
        for (std::uint64_t m : basis.moduli()) rs.push_back(rng() % m);
        BigUint got = htp::crt_reconstruct(rs, basis);
        CHECK(got == BigUint(crt_brute_force(rs, basis.moduli(), capacity)));
    }
}

TEST_CASE("round trip is exhaustive on small bases") {
    for (std::size_t k : {3u, 5u}) {  // capacities 105 and 15015
        auto basis = htp::generate_basis(k, 3);
        std::uint64_t capacity = basis.capacity().low_u64();
        for (std::uint64_t n = 0; n < capacity; ++n) {
            if (htp::crt_reconstruct(htp::residues(BigUint(n), basis), basis) != BigUint(n)) {
                CAPTURE(n);
                FAIL("round trip broke");
            }
        }
        CHECK(true);
    }
}

TEST_CASE("round trip holds for random 256-bit integers") {
    auto basis = htp::generate_basis(64, 3);  // capacity far above 2^256
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        BigUint n;
        for (int limb = 0; limb < 4; ++limb) n = (n << 64) + BigUint(rng());
        CHECK(htp::crt_reconstruct(htp::residues(n, basis), basis) == n);
    }
}

TEST_CASE("json round trip recomputes and verifies derived constants") {
    auto basis = htp::generate_basis(16, 3);
    auto loaded = ModulusBasis::from_json(basis.to_json());
    CHECK(loaded.moduli() == basis.moduli());
    CHECK(loaded.capacity() == basis.capacity());
    CHECK(loaded.crt_weights() == basis.crt_weights());
    CHECK(loaded.min_modulus() == 3);

    CHECK_THROWS(ModulusBasis::from_json("{\"version\":2,\"moduli\":[3,5]}"));
    CHECK_THROWS(ModulusBasis::from_json("{\"version\":1,\"k\":3,\"moduli\":[3,5]}"));
    CHECK_THROWS(ModulusBasis::from_json("{\"version\":1,\"moduli\":[6,9]}"));
}
