// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstdint>
#include <vector>

#include "ttseval/manifest.hpp"

namespace ttseval {

struct SplitSpec {
  double train_fraction = 0.9;
  double valid_fraction = 0.05;
  double test_fraction = 0.05;
  uint64_t seed = 0;

  void validate() const;  // positive fractions summing to 1 within 1e-9
};

struct SplitResult {
  std::vector<ManifestEntry> train;
  std::vector<ManifestEntry> valid;
  std::vector<ManifestEntry> test;
};

// Count rule: n_train = floor(train_fraction * N), n_valid =
// round-half-up(valid_fraction * N), n_test = remainder. This
// reproduces the reference corpus tables for 0.9/0.05/0.05.
struct SplitCounts {
  std::size_t train = 0;
  std::size_t valid = 0;
  std::size_t test = 0;
};
SplitCounts split_counts(std::size_t n, const SplitSpec& spec);

// Deterministic partition: entries are sorted by utterance_id, shuffled
// by a seeded Fisher-Yates pass (so the result is independent of input
// row order), then cut at the counts above, in shuffled order.
// Throws ValidationError when any part would be empty.
SplitResult split(const std::vector<ManifestEntry>& entries,
                  const SplitSpec& spec);

}  // namespace ttseval
