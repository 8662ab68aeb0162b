// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ttseval {

// UTF-8 helpers. Decoding is lenient: invalid byte sequences decode to
// U+FFFD one byte at a time.
std::vector<uint32_t> utf8_decode(const std::string& s);
std::string utf8_encode(const std::vector<uint32_t>& cps);

bool is_punctuation(uint32_t cp);
bool is_whitespace(uint32_t cp);
uint32_t to_lower(uint32_t cp);

// Transcript preprocessing applied before every text metric, in order:
// lowercase, collapse whitespace runs to one space, trim, remove the
// three characters « » and , , remove remaining Unicode punctuation.
// Whitespace is re-collapsed at the end so the function is idempotent
// even when punctuation removal leaves adjacent spaces behind.
std::string normalize_text(const std::string& s);

}  // namespace ttseval
