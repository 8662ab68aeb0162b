// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include "ttseval/waveform.hpp"

namespace ttseval {

// Band-limited sample-rate conversion: 64-tap Kaiser-windowed sinc,
// evaluated through a 1024-phase polyphase table with per-output tap-sum
// normalization (exact DC gain). Duration is preserved within one output
// sample. target_rate == w.sample_rate returns the input verbatim.
Waveform resample(const Waveform& w, int target_rate);

}  // namespace ttseval
