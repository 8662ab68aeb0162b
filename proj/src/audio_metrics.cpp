// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#include "ttseval/audio_metrics.hpp"

#include <cmath>

#include "ttseval/errors.hpp"

namespace ttseval {

double mcd_constant() { return 10.0 * std::sqrt(2.0) / std::log(10.0); }

std::vector<std::vector<double>> drop_c0(const MelCepstraSequence& seq) {
  std::vector<std::vector<double>> out;
  out.reserve(seq.frames.size());
  for (const auto& frame : seq.frames)
    out.emplace_back(frame.begin() + 1, frame.end());
  return out;
}

double mcd(const MelCepstraSequence& ref, const MelCepstraSequence& hyp) {
  if (ref.frames.empty() || hyp.frames.empty())
    throw EmptyInputError("mcd: empty cepstra sequence");
  if (ref.order() != hyp.order())
    throw ShapeError("mcd: cepstral order mismatch (" +
                     std::to_string(ref.order()) + " vs " +
                     std::to_string(hyp.order()) + ")");
  const auto path = dtw(drop_c0(ref), drop_c0(hyp));
  return mcd_constant() * path.total_cost / static_cast<double>(path.pairs.size());
}

std::optional<double> log_f0_rmse(const PitchTrack& ref, const PitchTrack& hyp,
                                  const AlignmentPath& path) {
  double acc = 0.0;
  std::size_t count = 0;
  for (const auto& [i, j] : path.pairs) {
    if (i >= ref.frames.size() || j >= hyp.frames.size())
      throw ShapeError("log_f0_rmse: path index out of range");
    const auto& a = ref.frames[i];
    const auto& b = hyp.frames[j];
    if (a && b) {
      const double d = std::log(*a) - std::log(*b);
      acc += d * d;
      ++count;
    }
  }
  if (count == 0) return std::nullopt;
  return std::sqrt(acc / static_cast<double>(count));
}

CorpusAggregate aggregate(const std::vector<double>& values, bool sample_std) {
  if (values.empty()) throw EmptyInputError("aggregate: empty value sequence");
  CorpusAggregate agg;
  agg.n = values.size();
  double sum = 0.0;
  for (double v : values) sum += v;
  agg.mean = sum / static_cast<double>(agg.n);
  double sq = 0.0;
  for (double v : values) sq += (v - agg.mean) * (v - agg.mean);
  const std::size_t denom = sample_std ? agg.n - 1 : agg.n;
  agg.std_dev = denom > 0 ? std::sqrt(sq / static_cast<double>(denom)) : 0.0;
  return agg;
}

UtteranceAudioScores score_utterance(const Waveform& ref, const Waveform& hyp,
                                     const FrameConfig& cfg,
                                     AlignmentPath* path_out) {
  const auto ref_ceps = mel_cepstra(ref, cfg);
  const auto hyp_ceps = mel_cepstra(hyp, cfg);
  const auto path = dtw(drop_c0(ref_ceps), drop_c0(hyp_ceps));

  UtteranceAudioScores scores;
  scores.mcd =
      mcd_constant() * path.total_cost / static_cast<double>(path.pairs.size());

  const auto ref_f0 = estimate_f0(ref, cfg);
  const auto hyp_f0 = estimate_f0(hyp, cfg);
  scores.log_f0_rmse = log_f0_rmse(ref_f0, hyp_f0, path);
  for (const auto& [i, j] : path.pairs)
    if (ref_f0.frames[i] && hyp_f0.frames[j]) ++scores.voiced_overlap;

  if (path_out) *path_out = path;
  return scores;
}

}  // namespace ttseval
