#include <doctest.h>

#include <string_view>
#include <utility>

#include "htp/errors.hpp"
#include "htp/unicode.hpp"

using namespace htp::unicode;

#include "nfc_cases.inc"

namespace {

std::string nfc_utf8(std::string_view text) {
    return codepoints_to_utf8(nfc(utf8_to_codepoints(text)));
}

}  // namespace

TEST_CASE("utf8 round trip") {
    for (std::string_view s : {"hello", "héllo", "中文", "🙂🚀", "mixed 中 🙂 ascii"}) {
        CHECK(codepoints_to_utf8(utf8_to_codepoints(s)) == s);
    }
}

TEST_CASE("utf8 decoding rejects malformed input") {
    CHECK_THROWS_AS(utf8_to_codepoints("\xC0\xAF"), htp::Error);        // overlong '/'
    CHECK_THROWS_AS(utf8_to_codepoints("\x80"), htp::Error);            // stray continuation
    CHECK_THROWS_AS(utf8_to_codepoints("\xE2\x82"), htp::Error);        // truncated
    CHECK_THROWS_AS(utf8_to_codepoints("\xED\xA0\x80"), htp::Error);    // surrogate
    CHECK_THROWS_AS(utf8_to_codepoints("\xF4\x90\x80\x80"), htp::Error);  // above U+10FFFF
}

TEST_CASE("utf16 conversion pairs astral code points") {
    std::vector<char32_t> cps = {0x41, 0x1F600};
    auto units = codepoints_to_utf16(cps);
    REQUIRE(units.size() == 3);
    CHECK(units[0] == 0x41);
    CHECK(units[1] == 0xD83D);
    CHECK(units[2] == 0xDE00);
    CHECK(utf16_to_codepoints(units) == cps);
}

TEST_CASE("utf16 decoding rejects unpaired surrogates") {
    std::vector<std::uint16_t> high_only = {0xD83D};
    std::vector<std::uint16_t> low_first = {0xDE00, 0x41};
    std::vector<std::uint16_t> high_then_normal = {0xD83D, 0x41};
    CHECK_THROWS_AS(utf16_to_codepoints(high_only), htp::Error);
    CHECK_THROWS_AS(utf16_to_codepoints(low_first), htp::Error);
    CHECK_THROWS_AS(utf16_to_codepoints(high_then_normal), htp::Error);
}

TEST_CASE("nfc matches the reference normalizer") {
    for (const auto& [input, expected] : kNfcCases) {
        CHECK(nfc_utf8(input) == expected);
    }
}

TEST_CASE("nfc is idempotent on the fixture set") {
    for (const auto& [input, expected] : kNfcCases) {
        CHECK(nfc_utf8(std::string(expected)) == expected);
    }
}

TEST_CASE("combining class lookups") {
    CHECK(canonical_combining_class(U'a') == 0);
    CHECK(canonical_combining_class(0x0301) == 230);  // combining acute
    CHECK(canonical_combining_class(0x0323) == 220);  // combining dot below
    CHECK(canonical_combining_class(0x3099) == 8);    // kana voicing mark
}

TEST_CASE("alphanumeric classification") {
    CHECK(is_alphanumeric(U'a'));
    CHECK(is_alphanumeric(U'Z'));
    CHECK(is_alphanumeric(U'7'));
    CHECK(is_alphanumeric(U'é'));
    CHECK(is_alphanumeric(0x4E2D));   // CJK
    CHECK(is_alphanumeric(0x0431));   // Cyrillic
    CHECK(is_alphanumeric(0x00B2));   // superscript two (No)
    CHECK(is_alphanumeric(0x10400));  // Deseret (astral letter)
    CHECK_FALSE(is_alphanumeric(U'_'));
    CHECK_FALSE(is_alphanumeric(U' '));
    CHECK_FALSE(is_alphanumeric(U'-'));
    CHECK_FALSE(is_alphanumeric(U'.'));
    CHECK_FALSE(is_alphanumeric(0x1F600));  // emoji
}

TEST_CASE("simple lowercase mapping") {
    CHECK(to_lowercase(U'A') == U'a');
    CHECK(to_lowercase(U'a') == U'a');
    CHECK(to_lowercase(0x0416) == 0x0436);  // Ж -> ж
    CHECK(to_lowercase(0x00C9) == 0x00E9);  // É -> é
    CHECK(to_lowercase(0x0130) == 0x0130);  // İ has no single-point lowering
    CHECK(to_lowercase(0x4E2D) == 0x4E2D);  // caseless
    CHECK(lowercase_utf8("HeLLo Ж") == "hello ж");
}
