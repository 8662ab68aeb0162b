// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#include "ttseval/dtw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ttseval/errors.hpp"

namespace ttseval {

double euclidean(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

AlignmentPath dtw(const std::vector<std::vector<double>>& ref,
                  const std::vector<std::vector<double>>& hyp,
                  const DistanceFn& distance) {
  if (ref.empty() || hyp.empty()) throw EmptyInputError("dtw: empty sequence");
  const std::size_t dim = ref.front().size();
  for (const auto& v : ref)
    if (v.size() != dim) throw ShapeError("dtw: ragged ref sequence");
  for (const auto& v : hyp)
    if (v.size() != dim) throw ShapeError("dtw: hyp dimension mismatch");

  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> cost(n * m, inf);
  // parent step: 0 = diagonal, 1 = (+1,0) i.e. from (i-1,j), 2 = (0,+1)
  std::vector<unsigned char> parent(n * m, 0);
  auto at = [m](std::size_t i, std::size_t j) { return i * m + j; };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double d = distance(ref[i], hyp[j]);
      if (i == 0 && j == 0) {
        cost[at(i, j)] = d;
        continue;
      }
      const double diag = (i > 0 && j > 0) ? cost[at(i - 1, j - 1)] : inf;
      const double up = i > 0 ? cost[at(i - 1, j)] : inf;
      const double left = j > 0 ? cost[at(i, j - 1)] : inf;
      if (diag <= up && diag <= left) {
        cost[at(i, j)] = diag + d;
        parent[at(i, j)] = 0;
      } else if (up <= left) {
        cost[at(i, j)] = up + d;
        parent[at(i, j)] = 1;
      } else {
        cost[at(i, j)] = left + d;
        parent[at(i, j)] = 2;
      }
    }
  }

  AlignmentPath path;
  path.total_cost = cost[at(n - 1, m - 1)];
  std::size_t i = n - 1, j = m - 1;
  for (;;) {
    path.pairs.emplace_back(i, j);
    if (i == 0 && j == 0) break;
    switch (parent[at(i, j)]) {
      case 0: --i; --j; break;
      case 1: --i; break;
      default: --j; break;
    }
  }
  std::reverse(path.pairs.begin(), path.pairs.end());
  return path;
}

}  // namespace ttseval
