// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <optional>
#include <vector>

#include "ttseval/dtw.hpp"
#include "ttseval/features.hpp"

namespace ttseval {

struct UtteranceAudioScores {
  double mcd = 0.0;                    // dB
  std::optional<double> log_f0_rmse;   // natural-log domain; absent when
                                       // no frame pair is voiced in both
  std::size_t voiced_overlap = 0;
};

struct CorpusAggregate {
  double mean = 0.0;
  double std_dev = 0.0;  // population by default
  std::size_t n = 0;
};

// 10*sqrt(2)/ln(10), the usual dB scaling for mel-cepstral distortion.
double mcd_constant();

// Strips c0 from every frame (alignment and distortion use c1..cM only,
// so loudness does not drive the warp).
std::vector<std::vector<double>> drop_c0(const MelCepstraSequence& seq);

// DTW-aligns the sequences on coefficients 1..M, then averages the
// aligned Euclidean distances, scaled by mcd_constant().
// Throws ShapeError on cepstral-order mismatch.
double mcd(const MelCepstraSequence& ref, const MelCepstraSequence& hyp);

// RMSE of ln(f0_ref) - ln(f0_hyp) over path pairs voiced in both tracks;
// nullopt when no such pair exists. Throws ShapeError when a path index
// falls outside either track.
std::optional<double> log_f0_rmse(const PitchTrack& ref, const PitchTrack& hyp,
                                  const AlignmentPath& path);

// Arithmetic mean and standard deviation (population unless
// sample_std). Throws EmptyInputError on an empty sequence.
CorpusAggregate aggregate(const std::vector<double>& values,
                          bool sample_std = false);

// Scores one utterance pair: one DTW warp on the mel-cepstra is shared
// between MCD and the log-F0 alignment. Both waveforms must already be
// at the same (canonical) sample rate.
UtteranceAudioScores score_utterance(const Waveform& ref, const Waveform& hyp,
                                     const FrameConfig& cfg,
                                     AlignmentPath* path_out = nullptr);

}  // namespace ttseval
