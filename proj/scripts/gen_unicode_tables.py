#!/usr/bin/env python3
"""Regenerates src/unicode_tables.cpp from Python's unicodedata module.

The tables cover exactly what the library needs: canonical (NFC)
normalization data, alphanumeric ranges for word splitting, and simple
lowercase mappings. Hangul syllables are omitted from the decomposition
and composition tables because they are handled algorithmically.

Usage: python3 scripts/gen_unicode_tables.py > src/unicode_tables.cpp
"""

import sys
import unicodedata

MAX_CP = 0x110000
HANGUL_S_BASE = 0xAC00
HANGUL_S_COUNT = 11172


def is_surrogate(cp: int) -> bool:
    return 0xD800 <= cp <= 0xDFFF


def is_hangul_syllable(cp: int) -> bool:
    return HANGUL_S_BASE <= cp < HANGUL_S_BASE + HANGUL_S_COUNT


def gen_ccc_ranges():
    ranges = []
    for cp in range(MAX_CP):
        if is_surrogate(cp):
            continue
        ccc = unicodedata.combining(chr(cp))
        if ccc == 0:
            continue
        if ranges and ranges[-1][1] == cp - 1 and ranges[-1][2] == ccc:
            ranges[-1][1] = cp
        else:
            ranges.append([cp, cp, ccc])
    return ranges


def gen_decompositions():
    """Full canonical decompositions, Hangul excluded."""
    entries = []
    pool = []
    for cp in range(MAX_CP):
        if is_surrogate(cp) or is_hangul_syllable(cp):
            continue
        s = chr(cp)
        nfd = unicodedata.normalize("NFD", s)
        if nfd == s:
            continue
        cps = [ord(c) for c in nfd]
        entries.append((cp, len(pool), len(cps)))
        pool.extend(cps)
    return entries, pool


def gen_compositions():
    """Primary composite pairs: canonical two-point decompositions that
    NFC recombines. This check implicitly applies the composition
    exclusions. Hangul excluded (algorithmic)."""
    pairs = []
    for cp in range(MAX_CP):
        if is_surrogate(cp) or is_hangul_syllable(cp):
            continue
        decomp = unicodedata.decomposition(chr(cp))
        if not decomp or decomp.startswith("<"):
            continue
        parts = decomp.split()
        if len(parts) != 2:
            continue
        a, b = int(parts[0], 16), int(parts[1], 16)
        if unicodedata.normalize("NFC", chr(a) + chr(b)) == chr(cp):
            pairs.append((a, b, cp))
    pairs.sort()
    return pairs


def gen_alnum_ranges():
    ranges = []
    for cp in range(MAX_CP):
        if is_surrogate(cp):
            continue
        if chr(cp).isalnum():
            if ranges and ranges[-1][1] == cp - 1:
                ranges[-1][1] = cp
            else:
                ranges.append([cp, cp])
    return ranges


def gen_lowercase():
    """Simple (single code point) lowercase mappings."""
    out = []
    for cp in range(MAX_CP):
        if is_surrogate(cp):
            continue
        lo = chr(cp).lower()
        if len(lo) == 1 and ord(lo) != cp:
            out.append((cp, ord(lo)))
    return out


def main():
    ccc = gen_ccc_ranges()
    dec, pool = gen_decompositions()
    comp = gen_compositions()
    alnum = gen_alnum_ranges()
    lower = gen_lowercase()

    w = sys.stdout.write
    w("// Generated by scripts/gen_unicode_tables.py — do not edit.\n")
    w("// Source: Python unicodedata, Unicode %s.\n\n" % unicodedata.unidata_version)
    w('#include "unicode_tables.hpp"\n\n')
    w("namespace htp::unicode_data {\n\n")

    w("const CccRange kCccRanges[] = {\n")
    for lo, hi, c in ccc:
        w("    {0x%X, 0x%X, %d},\n" % (lo, hi, c))
    w("};\n")
    w("const std::size_t kCccRangeCount = %d;\n\n" % len(ccc))

    w("const Decomposition kDecompositions[] = {\n")
    for cp, off, n in dec:
        w("    {0x%X, %d, %d},\n" % (cp, off, n))
    w("};\n")
    w("const std::size_t kDecompositionCount = %d;\n\n" % len(dec))

    w("const char32_t kDecompositionPool[] = {\n")
    for i in range(0, len(pool), 12):
        w("    " + ", ".join("0x%X" % c for c in pool[i : i + 12]) + ",\n")
    w("};\n\n")

    w("const Composition kCompositions[] = {\n")
    for a, b, c in comp:
        w("    {0x%X, 0x%X, 0x%X},\n" % (a, b, c))
    w("};\n")
    w("const std::size_t kCompositionCount = %d;\n\n" % len(comp))

    w("const CpRange kAlnumRanges[] = {\n")
    for lo, hi in alnum:
        w("    {0x%X, 0x%X},\n" % (lo, hi))
    w("};\n")
    w("const std::size_t kAlnumRangeCount = %d;\n\n" % len(alnum))

    w("const CaseMapping kLowercaseMappings[] = {\n")
    for cp, lo in lower:
        w("    {0x%X, 0x%X},\n" % (cp, lo))
    w("};\n")
    w("const std::size_t kLowercaseMappingCount = %d;\n\n" % len(lower))

    w("}  // namespace htp::unicode_data\n")


if __name__ == "__main__":
    main()
