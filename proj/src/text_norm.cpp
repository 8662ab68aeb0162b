// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#include "ttseval/text_norm.hpp"

#include <algorithm>
#include <iterator>

#include "ttseval/unicode_tables.hpp"

namespace ttseval {

namespace {

bool in_ranges(uint32_t cp, const unicode::CpRange* ranges, std::size_t n) {
  const auto* end = ranges + n;
  const auto* it = std::upper_bound(
      ranges, end, cp,
      [](uint32_t v, const unicode::CpRange& r) { return v < r.first; });
  return it != ranges && cp <= (it - 1)->last;
}

void collapse_and_trim(std::vector<uint32_t>& cps) {
  std::vector<uint32_t> out;
  out.reserve(cps.size());
  bool pending_space = false;
  for (uint32_t cp : cps) {
    if (is_whitespace(cp)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(U' ');
      out.push_back(cp);
      pending_space = false;
    }
  }
  cps = std::move(out);
}

}  // namespace

std::vector<uint32_t> utf8_decode(const std::string& s) {
  std::vector<uint32_t> cps;
  cps.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    std::size_t len = 1;
    uint32_t cp = 0xFFFD;
    if (b0 < 0x80) {
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      cps.push_back(0xFFFD);
      ++i;
      continue;
    }
    if (i + len > s.size()) {
      cps.push_back(0xFFFD);
      ++i;
      continue;
    }
    bool ok = true;
    for (std::size_t k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    if (!ok) {
      cps.push_back(0xFFFD);
      ++i;
      continue;
    }
    cps.push_back(cp);
    i += len;
  }
  return cps;
}

std::string utf8_encode(const std::vector<uint32_t>& cps) {
  std::string s;
  s.reserve(cps.size());
  for (uint32_t cp : cps) {
    if (cp < 0x80) {
      s.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      s.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      s.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      s.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      s.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      s.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      s.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      s.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      s.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      s.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return s;
}

bool is_punctuation(uint32_t cp) {
  return in_ranges(cp, unicode::kPunctRanges, std::size(unicode::kPunctRanges));
}

bool is_whitespace(uint32_t cp) {
  return in_ranges(cp, unicode::kSpaceRanges, std::size(unicode::kSpaceRanges));
}

uint32_t to_lower(uint32_t cp) {
  const auto* begin = unicode::kLowerPairs;
  const auto* end = begin + std::size(unicode::kLowerPairs);
  const auto* it = std::lower_bound(
      begin, end, cp,
      [](const unicode::CpPair& p, uint32_t v) { return p.from < v; });
  return (it != end && it->from == cp) ? it->to : cp;
}

std::string normalize_text(const std::string& s) {
  auto cps = utf8_decode(s);
  for (auto& cp : cps) cp = to_lower(cp);
  collapse_and_trim(cps);

  std::vector<uint32_t> kept;
  kept.reserve(cps.size());
  for (uint32_t cp : cps) {
    if (cp == 0xAB || cp == 0xBB || cp == U',') continue;  // « » ,
    if (is_punctuation(cp)) continue;
    kept.push_back(cp);
  }
  collapse_and_trim(kept);
  return utf8_encode(kept);
}

}  // namespace ttseval
