#!/usr/bin/env python3
"""Regenerates include/ttseval/unicode_tables.hpp.

Emits three tables derived from the Python unicodedata database:
  * codepoint ranges whose general category starts with 'P' (punctuation)
  * codepoint ranges considered whitespace (str.isspace)
  * simple one-to-one lowercase mappings (multi-codepoint expansions are
    intentionally skipped; those codepoints are left unchanged)
"""

import sys
import unicodedata

MAX_CP = 0x110000


def ranges(pred):
    out = []
    start = None
    for cp in range(MAX_CP):
        if pred(cp):
            if start is None:
                start = cp
        elif start is not None:
            out.append((start, cp - 1))
            start = None
    if start is not None:
        out.append((start, MAX_CP - 1))
    return out


def is_punct(cp):
    return unicodedata.category(chr(cp)).startswith("P")


def is_space(cp):
    return chr(cp).isspace()


def lower_pairs():
    pairs = []
    for cp in range(MAX_CP):
        lo = chr(cp).lower()
        if len(lo) == 1 and ord(lo) != cp:
            pairs.append((cp, ord(lo)))
    return pairs


def main(path):
    punct = ranges(is_punct)
    space = ranges(is_space)
    lower = lower_pairs()
    with open(path, "w", encoding="utf-8") as f:
        w = f.write
        w("// Generated by scripts/gen_unicode_tables.py -- do not edit by hand.\n")
        w("// Unicode data version: %s\n" % unicodedata.unidata_version)
        w("\n#pragma once\n\n#include <cstdint>\n\n")
        w("namespace ttseval::unicode {\n\n")
        w("struct CpRange { uint32_t first; uint32_t last; };\n")
        w("struct CpPair { uint32_t from; uint32_t to; };\n\n")

        w("inline constexpr CpRange kPunctRanges[] = {\n")
        for a, b in punct:
            w("    {0x%X, 0x%X},\n" % (a, b))
        w("};\n\n")

        w("inline constexpr CpRange kSpaceRanges[] = {\n")
        for a, b in space:
            w("    {0x%X, 0x%X},\n" % (a, b))
        w("};\n\n")

        w("inline constexpr CpPair kLowerPairs[] = {\n")
        for a, b in lower:
            w("    {0x%X, 0x%X},\n" % (a, b))
        w("};\n\n")
        w("}  // namespace ttseval::unicode\n")
    print("wrote %s: %d punct ranges, %d space ranges, %d lower pairs"
          % (path, len(punct), len(space), len(lower)))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "include/ttseval/unicode_tables.hpp")
