// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#include "ttseval/corpus_split.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "ttseval/errors.hpp"

namespace ttseval {

void SplitSpec::validate() const {
  if (train_fraction <= 0 || valid_fraction <= 0 || test_fraction <= 0)
    throw ValidationError("split: fractions must be positive");
  if (std::abs(train_fraction + valid_fraction + test_fraction - 1.0) > 1e-9)
    throw ValidationError("split: fractions must sum to 1");
}

SplitCounts split_counts(std::size_t n, const SplitSpec& spec) {
  spec.validate();
  SplitCounts counts;
  counts.train = static_cast<std::size_t>(
      std::floor(spec.train_fraction * static_cast<double>(n)));
  counts.valid = static_cast<std::size_t>(
      std::floor(spec.valid_fraction * static_cast<double>(n) + 0.5));
  if (counts.train + counts.valid > n)
    throw ValidationError("split: fractions leave no room for a test part");
  counts.test = n - counts.train - counts.valid;
  if (counts.train == 0 || counts.valid == 0 || counts.test == 0)
    throw ValidationError("split: corpus of " + std::to_string(n) +
                          " entries is too small for these fractions");
  return counts;
}

SplitResult split(const std::vector<ManifestEntry>& entries,
                  const SplitSpec& spec) {
  if (entries.empty()) throw EmptyInputError("split: empty manifest");
  const SplitCounts counts = split_counts(entries.size(), spec);

  std::vector<ManifestEntry> shuffled = entries;
  std::sort(shuffled.begin(), shuffled.end(),
            [](const ManifestEntry& a, const ManifestEntry& b) {
              return a.utterance_id < b.utterance_id;
            });
  // mt19937_64 is fully specified; indexing with a plain modulo keeps the
  // shuffle reproducible across standard libraries (std::shuffle and
  // uniform_int_distribution are not pinned down). The modulo bias is
  // irrelevant at corpus sizes.
  std::mt19937_64 rng(spec.seed);
  for (std::size_t i = shuffled.size() - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
    std::swap(shuffled[i], shuffled[j]);
  }

  SplitResult result;
  result.train.assign(shuffled.begin(),
                      shuffled.begin() + static_cast<std::ptrdiff_t>(counts.train));
  result.valid.assign(
      shuffled.begin() + static_cast<std::ptrdiff_t>(counts.train),
      shuffled.begin() + static_cast<std::ptrdiff_t>(counts.train + counts.valid));
  result.test.assign(
      shuffled.begin() + static_cast<std::ptrdiff_t>(counts.train + counts.valid),
      shuffled.end());
  return result;
}

}  // namespace ttseval
