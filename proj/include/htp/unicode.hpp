#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace htp::unicode {

/// Decodes UTF-8, rejecting overlong forms, surrogates, and values past
/// U+10FFFF (throws Error with InvalidUtf8).
std::vector<char32_t> utf8_to_codepoints(std::string_view text);

std::string codepoints_to_utf8(std::span<const char32_t> codepoints);

/// Astral code points become surrogate pairs.
std::vector<std::uint16_t> codepoints_to_utf16(std::span<const char32_t> codepoints);

/// Throws Error(InvalidCodePoint) on unpaired surrogates.
std::vector<char32_t> utf16_to_codepoints(std::span<const std::uint16_t> units);

/// Canonical composition (NFC): full canonical decomposition, canonical
/// reordering, then recomposition. Hangul is handled algorithmically.
std::vector<char32_t> nfc(std::span<const char32_t> codepoints);

std::uint8_t canonical_combining_class(char32_t cp);
bool is_alphanumeric(char32_t cp);
char32_t to_lowercase(char32_t cp);  // simple one-to-one mapping

/// Lowercases a UTF-8 string one code point at a time.
std::string lowercase_utf8(std::string_view text);

}  // namespace htp::unicode
