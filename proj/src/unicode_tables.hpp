// Declarations for the generated Unicode data tables (unicode_tables.cpp).
#pragma once

#include <cstddef>
#include <cstdint>

namespace htp::unicode_data {

struct CccRange {
    char32_t lo;
    char32_t hi;
    std::uint8_t ccc;
};

struct Decomposition {
    char32_t cp;
    std::uint32_t offset;  // into kDecompositionPool
    std::uint32_t length;
};

struct Composition {
    char32_t first;
    char32_t second;
    char32_t composed;
};

struct CpRange {
    char32_t lo;
    char32_t hi;
};

struct CaseMapping {
    char32_t cp;
    char32_t lower;
};

extern const CccRange kCccRanges[];
extern const std::size_t kCccRangeCount;

extern const Decomposition kDecompositions[];
extern const std::size_t kDecompositionCount;
extern const char32_t kDecompositionPool[];

extern const Composition kCompositions[];
extern const std::size_t kCompositionCount;

extern const CpRange kAlnumRanges[];
extern const std::size_t kAlnumRangeCount;

extern const CaseMapping kLowercaseMappings[];
extern const std::size_t kLowercaseMappingCount;

}  // namespace htp::unicode_data
