// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include "ttseval/waveform.hpp"

namespace ttseval {

// Removes leading and trailing frames whose RMS sits more than
// threshold_db below the loudest frame's RMS. The kept region is a
// contiguous sub-range of the input; interior samples are untouched.
// An all-silent waveform (peak RMS 0) is returned unchanged.
Waveform trim_silence(const Waveform& w, double threshold_db = 40.0,
                      double frame_ms = 25.0, double hop_ms = 10.0);

}  // namespace ttseval
