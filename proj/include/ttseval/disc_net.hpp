// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstdint>
#include <vector>

#include "ttseval/bundle.hpp"
#include "ttseval/waveform.hpp"

namespace ttseval {

// Per-step discriminator outputs (the single-channel final feature map).
struct DiscriminatorOutput {
  std::vector<double> y_hat;
};

// floor((length + 2*padding - dilation*(kernel-1) - 1) / stride) + 1,
// negative results meaning no valid output position.
long conv1d_output_length(long length, int kernel, int stride, int dilation,
                          int padding);

// Executes one layer stack on a waveform. Convolutions zero-pad as
// declared; weights are float32 but accumulation is in double.
// Throws EmptyInputError when any layer's output length reaches zero
// (waveform too short for the receptive field).
DiscriminatorOutput run_discriminator(const std::vector<LayerSpec>& layers,
                                      const std::map<std::string, Tensor>& tensors,
                                      const Waveform& w);

// 1 - (1/n) * sum((y_i - 1)^2). No clamping: the score can go negative
// when outputs stray far from 1. Throws EmptyInputError on empty input.
double disc_score(const DiscriminatorOutput& y_hat);

// Left-to-right arithmetic mean of per-discriminator scores.
double mean_score(const std::vector<double>& scores);

// Single-discriminator bundles score the waveform directly; multi-scale
// bundles feed discriminator k the waveform pooled k times by
// inter_scale_pool and average the per-discriminator scores.
double score_waveform(const DiscriminatorBundle& bundle, const Waveform& w);

enum class PresetStyle { kParallelWaveGan, kMelGan };

// Reference topologies following the cited vocoder architectures:
// a 10-layer dilated conv stack (Parallel WaveGAN style) and three
// strided grouped-conv blocks with average-pool downsampling between
// scales (MelGAN style). Weights are seeded uniform noise; the layout
// and tensor naming are what a converted trained checkpoint would use.
DiscriminatorBundle make_preset_bundle(PresetStyle style, uint64_t seed);

}  // namespace ttseval
