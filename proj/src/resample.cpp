// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#include "ttseval/resample.hpp"

#include <cmath>
#include <vector>

#include "ttseval/errors.hpp"

namespace ttseval {

namespace {

constexpr int kTaps = 64;
constexpr int kHalf = kTaps / 2;
constexpr int kPhases = 1024;
constexpr double kBeta = 8.6;
// Fraction of the (lower) Nyquist kept; the rest is transition band for
// the 64-tap window.
constexpr double kCutoffFactor = 0.9;

double bessel_i0(double x) {
  double sum = 1.0, term = 1.0;
  const double x2 = 0.25 * x * x;
  for (int k = 1; k < 64; ++k) {
    term *= x2 / (static_cast<double>(k) * k);
    sum += term;
    if (term < 1e-14 * sum) break;
  }
  return sum;
}

double sinc(double x) {
  if (std::abs(x) < 1e-12) return 1.0;
  const double px = M_PI * x;
  return std::sin(px) / px;
}

// Lowpass kernel at offset x (input samples), cutoff fc in cycles/sample.
double kernel(double x, double fc, double i0_beta) {
  const double u = x / kHalf;
  const double t = 1.0 - u * u;
  if (t <= 0.0) return 0.0;
  const double window = bessel_i0(kBeta * std::sqrt(t)) / i0_beta;
  return 2.0 * fc * sinc(2.0 * fc * x) * window;
}

}  // namespace

Waveform resample(const Waveform& w, int target_rate) {
  if (target_rate <= 0) throw ValidationError("resample: target_rate must be > 0");
  if (w.sample_rate <= 0) throw ValidationError("resample: input rate must be > 0");
  if (target_rate == w.sample_rate) return w;

  Waveform out;
  out.sample_rate = target_rate;
  if (w.samples.empty()) return out;

  const double ratio = static_cast<double>(target_rate) / w.sample_rate;
  const double fc = 0.5 * kCutoffFactor * std::min(1.0, ratio);
  const double i0_beta = bessel_i0(kBeta);

  // table[p][k] = kernel(frac_p + (kHalf - 1) - k), frac_p = p / kPhases.
  std::vector<double> table(static_cast<std::size_t>(kPhases + 1) * kTaps);
  for (int p = 0; p <= kPhases; ++p) {
    const double frac = static_cast<double>(p) / kPhases;
    for (int k = 0; k < kTaps; ++k)
      table[static_cast<std::size_t>(p) * kTaps + k] =
          kernel(frac + (kHalf - 1) - k, fc, i0_beta);
  }

  const std::size_t in_len = w.samples.size();
  const auto out_len = static_cast<std::size_t>(
      std::llround(static_cast<double>(in_len) * ratio));
  out.samples.resize(out_len);

  for (std::size_t n = 0; n < out_len; ++n) {
    const double t = static_cast<double>(n) / ratio;
    const auto base = static_cast<long long>(std::floor(t));
    const double frac = t - static_cast<double>(base);
    const double fp = frac * kPhases;
    const int p = static_cast<int>(fp);
    const double a = fp - p;

    double acc = 0.0, norm = 0.0;
    const double* row0 = &table[static_cast<std::size_t>(p) * kTaps];
    const double* row1 = row0 + kTaps;
    for (int k = 0; k < kTaps; ++k) {
      const double h = row0[k] + a * (row1[k] - row0[k]);
      norm += h;
      const long long i = base - (kHalf - 1) + k;
      if (i >= 0 && i < static_cast<long long>(in_len))
        acc += w.samples[static_cast<std::size_t>(i)] * h;
    }
    out.samples[n] = norm != 0.0 ? acc / norm : 0.0;
  }
  return out;
}

}  // namespace ttseval
