// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace ttseval {

// Monotone alignment of two sequences: starts at (0,0), ends at
// (len_ref-1, len_hyp-1), steps limited to (+1,0), (0,+1), (+1,+1).
struct AlignmentPath {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  double total_cost = 0.0;
};

using DistanceFn =
    std::function<double(std::span<const double>, std::span<const double>)>;

// Euclidean distance over full vectors.
double euclidean(std::span<const double> a, std::span<const double> b);

// Classic O(n*m) dynamic time warping minimizing the sum of per-pair
// distances. Ties in the backtrace prefer the diagonal step, then
// (+1,0), then (0,+1), so the path is deterministic.
// Throws EmptyInputError for empty sequences and ShapeError when vector
// dimensions disagree.
AlignmentPath dtw(const std::vector<std::vector<double>>& ref,
                  const std::vector<std::vector<double>>& hyp,
                  const DistanceFn& distance = euclidean);

}  // namespace ttseval
