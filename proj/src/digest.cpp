// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#include "ttseval/digest.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ttseval/errors.hpp"

namespace ttseval {

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open file for digest: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string bytes = buf.str();
  char hex[32];
  std::snprintf(hex, sizeof(hex), "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return hex;
}

}  // namespace ttseval
