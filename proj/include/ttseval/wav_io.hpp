// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <string>

#include "ttseval/waveform.hpp"

namespace ttseval {

// Decodes a RIFF/WAVE file. Accepts PCM16, PCM24 and IEEE float32 with
// 1 or 2 channels; stereo is averaged to mono. Integer PCM is scaled to
// [-1, 1] by the type's max magnitude (e.g. 16384/32768 -> 0.5).
//
// Throws FormatError on malformed or truncated containers and
// UnsupportedEncodingError for codecs outside the set above.
Waveform read_wav(const std::string& path);

// Writes mono PCM16 little-endian. Samples are clamped to [-1, 1] and
// scaled by 32768 so that read_wav(write_wav(w)) is sample-exact for
// 16-bit-representable inputs.
void write_wav(const std::string& path, const Waveform& w);

}  // namespace ttseval
