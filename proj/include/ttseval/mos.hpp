// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <map>
#include <string>
#include <vector>

namespace ttseval {

// One listening-test vote on the 5-point scale.
struct Rating {
  std::string sample_id;
  std::string system;
  std::string rater_id;
  int score = 0;  // integer in {1..5}
};

struct MosAggregate {
  double mean = 0.0;
  double std_dev = 0.0;  // population
  std::size_t n_ratings = 0;
  std::size_t n_samples = 0;
  std::size_t n_raters = 0;
};

struct MissingCell {
  std::string system;
  std::string sample_id;
  std::string rater_id;
};

// CSV with header sample_id,system,rater_id,score. Out-of-range scores
// and duplicate (sample, system, rater) keys raise ValidationError
// naming the row.
std::vector<Rating> load_ratings(const std::string& path);

// Per-system mean/std over all of that system's ratings, pooling
// samples and raters.
std::map<std::string, MosAggregate> aggregate_mos(const std::vector<Rating>& ratings);

// Lists every (sample, rater) cell missing from a complete
// expected_samples x expected_raters grid per system. Observed ids form
// the grid axes; when fewer distinct ids were seen than expected, the
// remaining axis positions are reported as "<unseen sample k>" /
// "<unseen rater k>" placeholders (an empty rating set therefore yields
// the full expected grid under one "<no system>" entry).
std::vector<MissingCell> coverage_check(const std::vector<Rating>& ratings,
                                        std::size_t expected_raters,
                                        std::size_t expected_samples);

}  // namespace ttseval
