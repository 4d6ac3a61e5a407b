#include <doctest.h>

#include <cstdint>
#include <random>
#include <stdexcept>

#include "htp/bigint.hpp"

using htp::BigUint;

namespace {

BigUint dec(const char* s) { return BigUint::from_decimal(s); }

std::mt19937_64 rng(0x5eed1234abcdefULL);

BigUint random_big(std::size_t bits) {
    BigUint out;
    while (bits >= 32) {
        out = (out << 32) + BigUint(static_cast<std::uint32_t>(rng()));
        bits -= 32;
    }
    if (bits > 0)
        out = (out << bits) + BigUint(static_cast<std::uint64_t>(rng()) >> (64 - bits));
    return out;
}

}  // namespace

TEST_CASE("u64 round trip and decimal strings") {
    CHECK(BigUint(0).to_decimal() == "0");
    CHECK(BigUint(1).to_decimal() == "1");
    CHECK(BigUint(0xFFFFFFFFFFFFFFFFull).to_decimal() == "18446744073709551615");
    CHECK(dec("18446744073709551615").low_u64() == 0xFFFFFFFFFFFFFFFFull);
    CHECK(dec("0") == BigUint(0));
    CHECK(dec("000123") == BigUint(123));
    CHECK_THROWS_AS(BigUint::from_decimal(""), std::invalid_argument);
    CHECK_THROWS_AS(BigUint::from_decimal("12a3"), std::invalid_argument);
}

TEST_CASE("decimal round trip on random widths") {
    for (std::size_t bits : {7u, 31u, 64u, 100u, 384u, 1000u}) {
        for (int i = 0; i < 20; ++i) {
            BigUint n = random_big(bits);
            CHECK(BigUint::from_decimal(n.to_decimal()) == n);
        }
    }
}

TEST_CASE("small arithmetic agrees with native u64") {
    std::uniform_int_distribution<std::uint64_t> dist(0, 0xFFFFFFFFu);
    for (int i = 0; i < 2000; ++i) {
        std::uint64_t a = dist(rng), b = dist(rng);
        CHECK((BigUint(a) + BigUint(b)).low_u64() == a + b);
        CHECK((BigUint(a) * BigUint(b)).low_u64() == a * b);
        if (a >= b) CHECK((BigUint(a) - BigUint(b)).low_u64() == a - b);
        if (b != 0) {
            auto [q, r] = BigUint::divmod(BigUint(a), BigUint(b));
            CHECK(q.low_u64() == a / b);
            CHECK(r.low_u64() == a % b);
            CHECK(BigUint(a).mod_small(b) == a % b);
        }
    }
}

TEST_CASE("comparison ordering") {
    CHECK(BigUint(2) < BigUint(10));
    CHECK(dec("18446744073709551616") > dec("18446744073709551615"));
    CHECK(BigUint(0) < BigUint(1));
    CHECK(BigUint(7) == BigUint(7));
}

TEST_CASE("subtraction underflow throws") {
    CHECK_THROWS_AS(BigUint(1) - BigUint(2), std::invalid_argument);
}

TEST_CASE("shifts") {
    CHECK((BigUint(1) << 384).to_decimal() ==
          "39402006196394479212279040100143613805079739270465446667948293404245721771497210611414266254884915640806627990306816");
    CHECK(((BigUint(1) << 384) >> 384) == BigUint(1));
    CHECK((BigUint(0xABCD) << 16).low_u64() == 0xABCD0000ull);
    CHECK((BigUint(0xABCD0000ull) >> 16).low_u64() == 0xABCDull);
    BigUint n = random_big(300);
    CHECK(((n << 13) >> 13) == n);
}

TEST_CASE("frozen wide divmod cases") {
    // quadruples (n, d, q, r) computed with an independent bignum
    static const char* cases[][4] = {
        {"29183794983464006718353324316917172470194651506129630286644073271711494887020424099660590060873927540128304937925021",
         "719941466287131323558231662929",
         "40536344064150282732849264733165677867010911600545230116213979726155890493326583483579",
         "258500571419619990854003382130"},
        {"69709006495262083753438964270882567809667203355268795714903518762464260067737",
         "48577076477968534331538798282877345169449379072358607271499506168024290496435", "1",
         "21131930017293549421900165988005222640217824282910188443404012594439969571302"},
        {"11733788304563772660684269123109057392429456119717621058528", "777",
         "15101400649374224788525442886884243748300458326534904837", "179"},
        {"4027290043892922040779082291783654779460959055619396097759209211465628754516122661030104687155766376435472432507837",
         "18102261859926936620372785301784428515137974262263659723142072544011894743720871892494478468706137192968918669340945",
         "0",
         "4027290043892922040779082291783654779460959055619396097759209211465628754516122661030104687155766376435472432507837"},
    };
    for (const auto& c : cases) {
        auto [q, r] = BigUint::divmod(dec(c[0]), dec(c[1]));
        CHECK(q == dec(c[2]));
        CHECK(r == dec(c[3]));
    }
}

TEST_CASE("frozen wide product") {
    CHECK(dec("1280522492730499365658902360345934174020694454026808721787290444107882675610466370590228101") *
              dec("1131085327398628044307251941168057336735046737337644651859834") ==
          dec("1448380202931384174848198349589607327189932458299740527734346308992832807738447264277953077802268411466277361035973456111478187871780409462615939995234"));
}

TEST_CASE("divmod reconstructs its inputs") {
    for (int i = 0; i < 200; ++i) {
        BigUint n = random_big(50 + static_cast<std::size_t>(rng() % 400));
        BigUint d = random_big(1 + static_cast<std::size_t>(rng() % 200));
        if (d.is_zero()) continue;
        auto [q, r] = BigUint::divmod(n, d);
        CHECK(q * d + r == n);
        CHECK(r < d);
    }
    CHECK_THROWS_AS(BigUint::divmod(BigUint(1), BigUint(0)), std::invalid_argument);
}

TEST_CASE("mod_small on a frozen 384-bit value") {
    BigUint n = dec(
        "3979658990587046326695486716823253460835685391393406049307418542018845124748956871806402014444110798140208243957202");
    CHECK(n.mod_small(3) == 1);
    CHECK(n.mod_small(65521) == 52636);
    CHECK(n.mod_small(2305843009213693951ull) == 2207588522376227900ull);
    CHECK(n.mod_small(1000000007ull) == 628230532ull);
}

TEST_CASE("digit16 extracts base-2^16 digits") {
    BigUint n = (BigUint(0xABCD) << 32) + (BigUint(0x1234) << 16) + BigUint(0x5678);
    CHECK(n.digit16(0) == 0x5678);
    CHECK(n.digit16(1) == 0x1234);
    CHECK(n.digit16(2) == 0xABCD);
    CHECK(n.digit16(3) == 0);
}

TEST_CASE("bit length") {
    CHECK(BigUint(0).bit_length() == 0);
    CHECK(BigUint(1).bit_length() == 1);
    CHECK(BigUint(0xFF).bit_length() == 8);
    CHECK((BigUint(1) << 384).bit_length() == 385);
}
