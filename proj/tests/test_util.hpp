// Shared fixtures for the test suites.

#pragma once

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "ttseval/waveform.hpp"

namespace testutil {

inline ttseval::Waveform sine(double freq_hz, double seconds, int rate,
                              double amplitude = 0.8) {
  ttseval::Waveform w;
  w.sample_rate = rate;
  const auto n = static_cast<std::size_t>(seconds * rate);
  w.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    w.samples[i] = amplitude * std::sin(2.0 * M_PI * freq_hz *
                                        static_cast<double>(i) / rate);
  return w;
}

inline ttseval::Waveform zeros(double seconds, int rate) {
  ttseval::Waveform w;
  w.sample_rate = rate;
  w.samples.assign(static_cast<std::size_t>(seconds * rate), 0.0);
  return w;
}

// Unique scratch directory, removed on destruction.
class TempDir {
 public:
  TempDir() {
    const auto base = std::filesystem::temp_directory_path();
    static std::mt19937_64 rng(std::random_device{}());
    dir_ = base / ("ttseval_test_" + std::to_string(rng()));
    std::filesystem::create_directories(dir_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(dir_, ec);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

}  // namespace testutil
