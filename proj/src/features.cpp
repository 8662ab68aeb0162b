// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#include "ttseval/features.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ttseval/errors.hpp"
#include "ttseval/fft.hpp"

namespace ttseval {

namespace {

double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double mel_to_hz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

// Triangular filters on FFT bin center frequencies, HTK mel scale,
// spanning 0..Nyquist. Returns mel_bands rows of fft/2+1 weights.
std::vector<std::vector<double>> mel_filterbank(const FrameConfig& cfg,
                                                int sample_rate) {
  const std::size_t bins = static_cast<std::size_t>(cfg.fft_size) / 2 + 1;
  const int bands = cfg.mel_bands;
  const double mel_max = hz_to_mel(sample_rate / 2.0);
  std::vector<double> edges(static_cast<std::size_t>(bands) + 2);
  for (std::size_t m = 0; m < edges.size(); ++m)
    edges[m] = mel_to_hz(mel_max * static_cast<double>(m) / (bands + 1));

  std::vector<std::vector<double>> fb(static_cast<std::size_t>(bands),
                                      std::vector<double>(bins, 0.0));
  for (int m = 0; m < bands; ++m) {
    const double lo = edges[static_cast<std::size_t>(m)];
    const double mid = edges[static_cast<std::size_t>(m) + 1];
    const double hi = edges[static_cast<std::size_t>(m) + 2];
    for (std::size_t k = 0; k < bins; ++k) {
      const double f = static_cast<double>(k) * sample_rate / cfg.fft_size;
      if (f > lo && f < mid)
        fb[static_cast<std::size_t>(m)][k] = (f - lo) / (mid - lo);
      else if (f >= mid && f < hi)
        fb[static_cast<std::size_t>(m)][k] = (hi - f) / (hi - mid);
    }
  }
  return fb;
}

}  // namespace

void FrameConfig::validate(int sample_rate) const {
  if (sample_rate <= 0) throw ValidationError("FrameConfig: sample rate must be > 0");
  if (hop_length <= 0) throw ValidationError("FrameConfig: hop_length must be > 0");
  if (frame_length <= 0 || frame_length > fft_size)
    throw ValidationError("FrameConfig: need 0 < frame_length <= fft_size");
  if (!is_power_of_two(static_cast<std::size_t>(fft_size)))
    throw ValidationError("FrameConfig: fft_size must be a power of two");
  if (mel_bands < cepstral_order + 1)
    throw ValidationError("FrameConfig: mel_bands must be >= cepstral_order + 1");
  if (!(f0_floor > 0 && f0_floor < f0_ceil))
    throw ValidationError("FrameConfig: need 0 < f0_floor < f0_ceil");
  if (!(voicing_threshold > 0 && voicing_threshold < 1))
    throw ValidationError("FrameConfig: voicing_threshold must be in (0,1)");
  if (log_floor <= 0) throw ValidationError("FrameConfig: log_floor must be > 0");
  // estimate_f0 needs at least two overlap samples at the longest lag.
  if (static_cast<double>(frame_length) <= sample_rate / f0_floor + 2)
    throw ValidationError("FrameConfig: frame_length too short for f0_floor");
}

std::size_t frame_count(std::size_t num_samples, const FrameConfig& cfg) {
  if (num_samples < static_cast<std::size_t>(cfg.frame_length)) return 0;
  return (num_samples - static_cast<std::size_t>(cfg.frame_length)) /
             static_cast<std::size_t>(cfg.hop_length) +
         1;
}

MelCepstraSequence mel_cepstra(const Waveform& w, const FrameConfig& cfg) {
  cfg.validate(w.sample_rate);
  const std::size_t n_frames = frame_count(w.samples.size(), cfg);
  if (n_frames == 0)
    throw EmptyInputError("mel_cepstra: waveform shorter than one frame");

  const std::size_t flen = static_cast<std::size_t>(cfg.frame_length);
  std::vector<double> window(flen);
  for (std::size_t i = 0; i < flen; ++i)
    window[i] = 0.5 - 0.5 * std::cos(2.0 * M_PI * static_cast<double>(i) / flen);

  const auto fb = mel_filterbank(cfg, w.sample_rate);
  const std::size_t bands = fb.size();
  const int order = cfg.cepstral_order;

  // Orthonormal DCT-II basis: row k, column n over mel bands.
  std::vector<std::vector<double>> dct(static_cast<std::size_t>(order) + 1,
                                       std::vector<double>(bands));
  for (int k = 0; k <= order; ++k) {
    const double scale = std::sqrt((k == 0 ? 1.0 : 2.0) / static_cast<double>(bands));
    for (std::size_t n = 0; n < bands; ++n)
      dct[static_cast<std::size_t>(k)][n] =
          scale * std::cos(M_PI * (static_cast<double>(n) + 0.5) * k / static_cast<double>(bands));
  }

  MelCepstraSequence seq;
  seq.hop_seconds = static_cast<double>(cfg.hop_length) / w.sample_rate;
  seq.frames.resize(n_frames);

  std::vector<double> frame(flen);
  std::vector<double> log_mel(bands);
  for (std::size_t f = 0; f < n_frames; ++f) {
    const std::size_t off = f * static_cast<std::size_t>(cfg.hop_length);
    for (std::size_t i = 0; i < flen; ++i) frame[i] = w.samples[off + i] * window[i];
    const auto mag = magnitude_spectrum(frame, static_cast<std::size_t>(cfg.fft_size));
    for (std::size_t m = 0; m < bands; ++m) {
      double e = 0.0;
      for (std::size_t k = 0; k < mag.size(); ++k) e += fb[m][k] * mag[k];
      log_mel[m] = std::log(std::max(e, cfg.log_floor));
    }
    auto& ceps = seq.frames[f];
    ceps.resize(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
      double acc = 0.0;
      for (std::size_t n = 0; n < bands; ++n)
        acc += dct[static_cast<std::size_t>(k)][n] * log_mel[n];
      ceps[static_cast<std::size_t>(k)] = acc;
    }
  }
  return seq;
}

PitchTrack estimate_f0(const Waveform& w, const FrameConfig& cfg) {
  cfg.validate(w.sample_rate);
  const std::size_t n_frames = frame_count(w.samples.size(), cfg);
  if (n_frames == 0)
    throw EmptyInputError("estimate_f0: waveform shorter than one frame");

  const double sr = w.sample_rate;
  const std::size_t flen = static_cast<std::size_t>(cfg.frame_length);
  const auto lag_min = static_cast<std::size_t>(std::ceil(sr / cfg.f0_ceil));
  const auto lag_max = static_cast<std::size_t>(std::floor(sr / cfg.f0_floor));

  PitchTrack track;
  track.hop_seconds = static_cast<double>(cfg.hop_length) / sr;
  track.frames.assign(n_frames, std::nullopt);

  std::vector<double> x(flen);
  std::vector<double> r(lag_max + 1, 0.0);
  for (std::size_t f = 0; f < n_frames; ++f) {
    const std::size_t off = f * static_cast<std::size_t>(cfg.hop_length);
    double mean = 0.0;
    for (std::size_t i = 0; i < flen; ++i) mean += w.samples[off + i];
    mean /= static_cast<double>(flen);
    for (std::size_t i = 0; i < flen; ++i) x[i] = w.samples[off + i] - mean;

    // Normalized cross-correlation over the overlap region per lag.
    double r_max = 0.0;
    for (std::size_t lag = lag_min; lag <= lag_max; ++lag) {
      const std::size_t overlap = flen - lag;
      double num = 0.0, e0 = 0.0, e1 = 0.0;
      for (std::size_t t = 0; t < overlap; ++t) {
        num += x[t] * x[t + lag];
        e0 += x[t] * x[t];
        e1 += x[t + lag] * x[t + lag];
      }
      const double denom = std::sqrt(e0 * e1);
      r[lag] = denom > 0.0 ? num / denom : 0.0;
      r_max = std::max(r_max, r[lag]);
    }
    if (r_max < cfg.voicing_threshold) continue;

    // Smallest local maximum within 90% of the global peak; this keeps
    // the fundamental rather than an integer multiple of the period.
    const double accept = 0.9 * r_max;
    std::size_t best = 0;
    for (std::size_t lag = lag_min; lag <= lag_max; ++lag) {
      const bool left_ok = lag == lag_min || r[lag] >= r[lag - 1];
      const bool right_ok = lag == lag_max || r[lag] >= r[lag + 1];
      if (left_ok && right_ok && r[lag] >= accept) {
        best = lag;
        break;
      }
    }
    if (best == 0) continue;

    double refined = static_cast<double>(best);
    if (best > lag_min && best < lag_max) {
      const double rl = r[best - 1], rc = r[best], rr = r[best + 1];
      const double denom = rl - 2.0 * rc + rr;
      if (denom < 0.0) {
        const double delta = 0.5 * (rl - rr) / denom;
        refined += std::clamp(delta, -0.5, 0.5);
      }
    }
    const double f0 = sr / refined;
    if (f0 >= cfg.f0_floor && f0 <= cfg.f0_ceil) track.frames[f] = f0;
  }
  return track;
}

}  // namespace ttseval
