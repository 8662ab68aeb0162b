// DTW tests, including the brute-force path-enumeration oracle

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "ttseval/dtw.hpp"
#include "ttseval/errors.hpp"

using namespace ttseval;

namespace {

using Seq = std::vector<std::vector<double>>;

// Exhaustive minimum over all monotone paths with steps (+1,0), (0,+1),
// (+1,+1). Exponential, fine for the tiny sizes used here.
double brute_force_cost(const Seq& ref, const Seq& hyp, std::size_t i,
                        std::size_t j) {
  const double d = euclidean(ref[i], hyp[j]);
  if (i + 1 == ref.size() && j + 1 == hyp.size()) return d;
  double best = std::numeric_limits<double>::infinity();
  if (i + 1 < ref.size() && j + 1 < hyp.size())
    best = std::min(best, brute_force_cost(ref, hyp, i + 1, j + 1));
  if (i + 1 < ref.size()) best = std::min(best, brute_force_cost(ref, hyp, i + 1, j));
  if (j + 1 < hyp.size()) best = std::min(best, brute_force_cost(ref, hyp, i, j + 1));
  return d + best;
}

Seq random_seq(std::mt19937& rng, std::size_t max_len, std::size_t dim) {
  std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
  std::uniform_real_distribution<double> val(-2.0, 2.0);
  Seq seq(len_dist(rng));
  for (auto& v : seq) {
    v.resize(dim);
    for (auto& x : v) x = val(rng);
  }
  return seq;
}

void check_path_shape(const AlignmentPath& path, std::size_t n, std::size_t m) {
  REQUIRE(!path.pairs.empty());
  CHECK(path.pairs.front() == std::pair<std::size_t, std::size_t>{0, 0});
  CHECK(path.pairs.back() == std::pair<std::size_t, std::size_t>{n - 1, m - 1});
  CHECK(path.pairs.size() >= std::max(n, m));
  CHECK(path.pairs.size() <= n + m - 1);
  for (std::size_t k = 1; k < path.pairs.size(); ++k) {
    const auto di = path.pairs[k].first - path.pairs[k - 1].first;
    const auto dj = path.pairs[k].second - path.pairs[k - 1].second;
    CHECK(di <= 1);
    CHECK(dj <= 1);
    CHECK(di + dj >= 1);
  }
}

}  // namespace

TEST_CASE("dtw of identical sequences is the zero-cost diagonal") {
  Seq a = {{0.0, 1.0}, {2.0, 0.5}, {-1.0, 3.0}};
  const auto path = dtw(a, a);
  CHECK(path.total_cost == 0.0);
  REQUIRE(path.pairs.size() == 3);
  for (std::size_t k = 0; k < 3; ++k)
    CHECK(path.pairs[k] == std::pair<std::size_t, std::size_t>{k, k});
}

TEST_CASE("dtw warps [0,1] onto [0,0,1] for free") {
  Seq ref = {{0.0}, {1.0}};
  Seq hyp = {{0.0}, {0.0}, {1.0}};
  const auto abs_diff = [](std::span<const double> a, std::span<const double> b) {
    return std::abs(a[0] - b[0]);
  };
  const auto path = dtw(ref, hyp, abs_diff);
  CHECK(path.total_cost == 0.0);
  const std::vector<std::pair<std::size_t, std::size_t>> expected = {
      {0, 0}, {0, 1}, {1, 2}};
  CHECK(path.pairs == expected);
}

TEST_CASE("dtw rejects bad input") {
  Seq empty;
  Seq ok = {{1.0}};
  CHECK_THROWS_AS(dtw(empty, ok), EmptyInputError);
  CHECK_THROWS_AS(dtw(ok, empty), EmptyInputError);
  Seq two_dim = {{1.0, 2.0}};
  CHECK_THROWS_AS(dtw(ok, two_dim), ShapeError);
}

TEST_CASE("dtw matches the brute-force oracle on random pairs") {
  std::mt19937 rng(20260810);
  std::uniform_int_distribution<std::size_t> dim_dist(1, 3);
  for (int round = 0; round < 200; ++round) {
    const std::size_t dim = dim_dist(rng);
    const Seq ref = random_seq(rng, 6, dim);
    const Seq hyp = random_seq(rng, 6, dim);
    const auto path = dtw(ref, hyp);
    const double expected = brute_force_cost(ref, hyp, 0, 0);
    CHECK(path.total_cost == doctest::Approx(expected).epsilon(1e-12));
    check_path_shape(path, ref.size(), hyp.size());

    // symmetric step set + symmetric distance => symmetric cost
    const auto reverse = dtw(hyp, ref);
    CHECK(reverse.total_cost == doctest::Approx(path.total_cost).epsilon(1e-12));

    // self-alignment is free
    CHECK(dtw(ref, ref).total_cost == 0.0);
  }
}

TEST_CASE("dtw path covers every index of both sequences") {
  std::mt19937 rng(7);
  for (int round = 0; round < 50; ++round) {
    const Seq ref = random_seq(rng, 8, 2);
    const Seq hyp = random_seq(rng, 8, 2);
    const auto path = dtw(ref, hyp);
    std::vector<bool> seen_i(ref.size()), seen_j(hyp.size());
    for (const auto& [i, j] : path.pairs) {
      seen_i[i] = true;
      seen_j[j] = true;
    }
    for (bool s : seen_i) CHECK(s);
    for (bool s : seen_j) CHECK(s);
  }
}
