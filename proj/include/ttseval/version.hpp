// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#pragma once

namespace ttseval {

inline constexpr const char* kVersion = "0.1.0";

// Rate every metric operation works at; inputs are resampled here first.
inline constexpr int kCanonicalRate = 22050;

}  // namespace ttseval
