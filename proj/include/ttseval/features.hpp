// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ttseval/waveform.hpp"

namespace ttseval {

// Analysis parameters shared by the mel-cepstrum and F0 extractors.
// Defaults follow common TTS-evaluation practice at 22050 Hz.
struct FrameConfig {
  int frame_length = 1024;
  int hop_length = 256;
  int fft_size = 1024;
  int mel_bands = 80;
  int cepstral_order = 24;  // keeps coefficients c0..c24
  double f0_floor = 70.0;
  double f0_ceil = 400.0;
  double voicing_threshold = 0.45;
  double log_floor = 1e-10;

  // Throws ValidationError when an invariant is violated.
  void validate(int sample_rate) const;
};

// Per-frame cepstral vectors c0..cM (c0 carries loudness).
struct MelCepstraSequence {
  std::vector<std::vector<double>> frames;
  double hop_seconds = 0.0;

  std::size_t size() const { return frames.size(); }
  int order() const {
    return frames.empty() ? -1 : static_cast<int>(frames.front().size()) - 1;
  }
};

// Per-frame F0 in Hz; nullopt marks an unvoiced frame.
struct PitchTrack {
  std::vector<std::optional<double>> frames;
  double hop_seconds = 0.0;

  std::size_t size() const { return frames.size(); }
};

// Frame count shared by both extractors: floor((len - frame) / hop) + 1.
std::size_t frame_count(std::size_t num_samples, const FrameConfig& cfg);

// Hann window -> magnitude spectrum -> HTK-mel filterbank -> ln with
// floor -> orthonormal DCT-II, keeping coefficients 0..cepstral_order.
// Throws EmptyInputError when w is shorter than one frame.
MelCepstraSequence mel_cepstra(const Waveform& w, const FrameConfig& cfg);

// Normalized-autocorrelation pitch with parabolic peak interpolation.
// A frame is unvoiced when the peak correlation falls below
// voicing_threshold or the refined F0 leaves [f0_floor, f0_ceil].
// Framing is identical to mel_cepstra so tracks align index-for-index.
PitchTrack estimate_f0(const Waveform& w, const FrameConfig& cfg);

}  // namespace ttseval
