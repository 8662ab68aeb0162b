// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <complex>
#include <vector>

namespace ttseval {

// In-place iterative radix-2 FFT. data.size() must be a power of two.
void fft_inplace(std::vector<std::complex<double>>& data);

// Magnitude spectrum of a real frame zero-padded to fft_size
// (power of two). Returns fft_size/2 + 1 bins.
std::vector<double> magnitude_spectrum(const std::vector<double>& frame,
                                       std::size_t fft_size);

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace ttseval
