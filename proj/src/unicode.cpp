#include "htp/unicode.hpp"

#include <algorithm>
#include <optional>

#include "htp/errors.hpp"
#include "unicode_tables.hpp"

namespace htp::unicode {

namespace {

using namespace htp::unicode_data;

constexpr char32_t kHangulSBase = 0xAC00;
constexpr char32_t kHangulLBase = 0x1100;
constexpr char32_t kHangulVBase = 0x1161;
constexpr char32_t kHangulTBase = 0x11A7;
constexpr int kHangulLCount = 19;
constexpr int kHangulVCount = 21;
constexpr int kHangulTCount = 28;
constexpr int kHangulNCount = kHangulVCount * kHangulTCount;  // 588
constexpr int kHangulSCount = kHangulLCount * kHangulNCount;  // 11172

bool is_hangul_syllable(char32_t cp) {
    return cp >= kHangulSBase && cp < kHangulSBase + kHangulSCount;
}

const Decomposition* find_decomposition(char32_t cp) {
    const Decomposition* begin = kDecompositions;
    const Decomposition* end = kDecompositions + kDecompositionCount;
    auto it = std::lower_bound(begin, end, cp, [](const Decomposition& d, char32_t v) {
        return d.cp < v;
    });
    return (it != end && it->cp == cp) ? &*it : nullptr;
}

std::optional<char32_t> compose_pair(char32_t first, char32_t second) {
    // Hangul LV and LVT composition
    if (first >= kHangulLBase && first < kHangulLBase + kHangulLCount &&
        second >= kHangulVBase && second < kHangulVBase + kHangulVCount) {
        char32_t l = first - kHangulLBase;
        char32_t v = second - kHangulVBase;
        return kHangulSBase + (l * kHangulVCount + v) * kHangulTCount;
    }
    if (is_hangul_syllable(first) && (first - kHangulSBase) % kHangulTCount == 0 &&
        second > kHangulTBase && second < kHangulTBase + kHangulTCount) {
        return first + (second - kHangulTBase);
    }

    const Composition* begin = kCompositions;
    const Composition* end = kCompositions + kCompositionCount;
    auto it = std::lower_bound(begin, end, std::pair{first, second},
                               [](const Composition& c, const std::pair<char32_t, char32_t>& v) {
                                   return c.first != v.first ? c.first < v.first
                                                             : c.second < v.second;
                               });
    if (it != end && it->first == first && it->second == second) return it->composed;
    return std::nullopt;
}

void decompose_into(char32_t cp, std::vector<char32_t>& out) {
    if (is_hangul_syllable(cp)) {
        char32_t index = cp - kHangulSBase;
        out.push_back(kHangulLBase + index / kHangulNCount);
        out.push_back(kHangulVBase + (index % kHangulNCount) / kHangulTCount);
        char32_t t = index % kHangulTCount;
        if (t != 0) out.push_back(kHangulTBase + t);
        return;
    }
    if (const Decomposition* d = find_decomposition(cp)) {
        for (std::uint32_t i = 0; i < d->length; ++i)
            out.push_back(kDecompositionPool[d->offset + i]);
        return;
    }
    out.push_back(cp);
}

}  // namespace

std::uint8_t canonical_combining_class(char32_t cp) {
    const CccRange* begin = kCccRanges;
    const CccRange* end = kCccRanges + kCccRangeCount;
    auto it = std::upper_bound(begin, end, cp, [](char32_t v, const CccRange& r) {
        return v < r.lo;
    });
    if (it != begin) {
        --it;
        if (cp >= it->lo && cp <= it->hi) return it->ccc;
    }
    return 0;
}

bool is_alphanumeric(char32_t cp) {
    const CpRange* begin = kAlnumRanges;
    const CpRange* end = kAlnumRanges + kAlnumRangeCount;
    auto it = std::upper_bound(begin, end, cp, [](char32_t v, const CpRange& r) {
        return v < r.lo;
    });
    if (it != begin) {
        --it;
        return cp >= it->lo && cp <= it->hi;
    }
    return false;
}

char32_t to_lowercase(char32_t cp) {
    const CaseMapping* begin = kLowercaseMappings;
    const CaseMapping* end = kLowercaseMappings + kLowercaseMappingCount;
    auto it = std::lower_bound(begin, end, cp, [](const CaseMapping& m, char32_t v) {
        return m.cp < v;
    });
    return (it != end && it->cp == cp) ? it->lower : cp;
}

std::vector<char32_t> utf8_to_codepoints(std::string_view text) {
    std::vector<char32_t> out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char b0 = static_cast<unsigned char>(text[i]);
        char32_t cp = 0;
        std::size_t len = 0;
        if (b0 < 0x80) {
            cp = b0;
            len = 1;
        } else if ((b0 & 0xE0) == 0xC0) {
            cp = b0 & 0x1F;
            len = 2;
        } else if ((b0 & 0xF0) == 0xE0) {
            cp = b0 & 0x0F;
            len = 3;
        } else if ((b0 & 0xF8) == 0xF0) {
            cp = b0 & 0x07;
            len = 4;
        } else {
            throw Error(ErrorCode::InvalidUtf8, "bad lead byte at offset " + std::to_string(i));
        }
        if (i + len > text.size())
            throw Error(ErrorCode::InvalidUtf8, "truncated sequence at offset " + std::to_string(i));
        for (std::size_t k = 1; k < len; ++k) {
            unsigned char b = static_cast<unsigned char>(text[i + k]);
            if ((b & 0xC0) != 0x80)
                throw Error(ErrorCode::InvalidUtf8,
                            "bad continuation byte at offset " + std::to_string(i + k));
            cp = (cp << 6) | (b & 0x3F);
        }
        static constexpr char32_t kMinByLen[5] = {0, 0, 0x80, 0x800, 0x10000};
        if (len > 1 && cp < kMinByLen[len])
            throw Error(ErrorCode::InvalidUtf8, "overlong encoding at offset " + std::to_string(i));
        if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
            throw Error(ErrorCode::InvalidUtf8, "invalid scalar at offset " + std::to_string(i));
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string codepoints_to_utf8(std::span<const char32_t> codepoints) {
    std::string out;
    out.reserve(codepoints.size() * 2);
    for (char32_t cp : codepoints) {
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else if (cp < 0x10000) {
            out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
    }
    return out;
}

std::vector<std::uint16_t> codepoints_to_utf16(std::span<const char32_t> codepoints) {
    std::vector<std::uint16_t> out;
    out.reserve(codepoints.size());
    for (char32_t cp : codepoints) {
        if (cp < 0x10000) {
            out.push_back(static_cast<std::uint16_t>(cp));
        } else {
            char32_t v = cp - 0x10000;
            out.push_back(static_cast<std::uint16_t>(0xD800 + (v >> 10)));
            out.push_back(static_cast<std::uint16_t>(0xDC00 + (v & 0x3FF)));
        }
    }
    return out;
}

std::vector<char32_t> utf16_to_codepoints(std::span<const std::uint16_t> units) {
    std::vector<char32_t> out;
    out.reserve(units.size());
    std::size_t i = 0;
    while (i < units.size()) {
        std::uint16_t u = units[i];
        if (u >= 0xD800 && u <= 0xDBFF) {
            if (i + 1 >= units.size() || units[i + 1] < 0xDC00 || units[i + 1] > 0xDFFF)
                throw Error(ErrorCode::InvalidCodePoint,
                            "unpaired high surrogate at unit " + std::to_string(i));
            out.push_back(0x10000 + ((char32_t{u} - 0xD800) << 10) +
                          (char32_t{units[i + 1]} - 0xDC00));
            i += 2;
        } else if (u >= 0xDC00 && u <= 0xDFFF) {
            throw Error(ErrorCode::InvalidCodePoint,
                        "stray low surrogate at unit " + std::to_string(i));
        } else {
            out.push_back(u);
            ++i;
        }
    }
    return out;
}

std::vector<char32_t> nfc(std::span<const char32_t> codepoints) {
    // 1. full canonical decomposition
    std::vector<char32_t> buf;
    buf.reserve(codepoints.size() + 4);
    for (char32_t cp : codepoints) decompose_into(cp, buf);

    // 2. canonical ordering: stable exchange sort of combining sequences
    for (std::size_t i = 1; i < buf.size(); ++i) {
        std::uint8_t ccc = canonical_combining_class(buf[i]);
        if (ccc == 0) continue;
        std::size_t j = i;
        while (j > 0) {
            std::uint8_t prev = canonical_combining_class(buf[j - 1]);
            if (prev == 0 || prev <= ccc) break;
            std::swap(buf[j - 1], buf[j]);
            --j;
        }
    }

    // 3. canonical composition
    std::vector<char32_t> out;
    out.reserve(buf.size());
    std::ptrdiff_t last_starter = -1;
    for (char32_t cp : buf) {
        std::uint8_t ccc = canonical_combining_class(cp);
        if (last_starter >= 0) {
            bool blocked = static_cast<std::size_t>(last_starter) != out.size() - 1 &&
                           canonical_combining_class(out.back()) >= ccc;
            if (!blocked) {
                if (auto composed = compose_pair(out[last_starter], cp)) {
                    out[last_starter] = *composed;
                    continue;
                }
            }
        }
        if (ccc == 0) last_starter = static_cast<std::ptrdiff_t>(out.size());
        out.push_back(cp);
    }
    return out;
}

std::string lowercase_utf8(std::string_view text) {
    std::vector<char32_t> cps = utf8_to_codepoints(text);
    for (char32_t& cp : cps) cp = to_lowercase(cp);
    return codepoints_to_utf8(cps);
}

}  // namespace htp::unicode
