// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#include "ttseval/trim.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ttseval/errors.hpp"

namespace ttseval {

Waveform trim_silence(const Waveform& w, double threshold_db, double frame_ms,
                      double hop_ms) {
  if (threshold_db <= 0) throw ValidationError("trim_silence: threshold_db must be > 0");
  if (frame_ms <= 0 || hop_ms <= 0)
    throw ValidationError("trim_silence: frame_ms and hop_ms must be > 0");
  if (w.sample_rate <= 0) throw ValidationError("trim_silence: sample rate must be > 0");

  const std::size_t n = w.samples.size();
  const auto frame = static_cast<std::size_t>(
      std::max(1.0, std::round(frame_ms * 1e-3 * w.sample_rate)));
  const auto hop = static_cast<std::size_t>(
      std::max(1.0, std::round(hop_ms * 1e-3 * w.sample_rate)));
  if (n == 0) return w;

  // Frame starts cover the whole signal; the last frame may be partial.
  std::vector<std::size_t> starts;
  for (std::size_t s = 0;; s += hop) {
    starts.push_back(s);
    if (s + frame >= n) break;
  }

  std::vector<double> rms(starts.size());
  double peak = 0.0;
  for (std::size_t f = 0; f < starts.size(); ++f) {
    const std::size_t begin = starts[f];
    const std::size_t end = std::min(begin + frame, n);
    double acc = 0.0;
    for (std::size_t i = begin; i < end; ++i) acc += w.samples[i] * w.samples[i];
    rms[f] = std::sqrt(acc / static_cast<double>(end - begin));
    peak = std::max(peak, rms[f]);
  }
  if (peak == 0.0) return w;  // all-silence guard

  const double gate = peak * std::pow(10.0, -threshold_db / 20.0);
  std::size_t first = 0;
  while (first < rms.size() && rms[first] < gate) ++first;
  std::size_t last = rms.size();
  while (last > first && rms[last - 1] < gate) --last;
  if (first >= last) return w;

  const std::size_t begin = starts[first];
  const std::size_t end = std::min(starts[last - 1] + frame, n);
  Waveform out;
  out.sample_rate = w.sample_rate;
  out.samples.assign(w.samples.begin() + static_cast<std::ptrdiff_t>(begin),
                     w.samples.begin() + static_cast<std::ptrdiff_t>(end));
  return out;
}

}  // namespace ttseval
