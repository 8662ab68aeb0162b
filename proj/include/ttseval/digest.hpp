// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace ttseval {

// FNV-1a, 64-bit. Used for provenance digests (reproducibility checks),
// not for anything security-sensitive.
inline uint64_t fnv1a64(std::string_view bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Hex digest of a file's contents, prefixed with the algorithm name.
// Throws FormatError if the file cannot be read.
std::string file_digest(const std::string& path);

}  // namespace ttseval
