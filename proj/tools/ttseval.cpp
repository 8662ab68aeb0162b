// tools/ttseval.cpp
//
// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0
//
// Command-line front end: corpus splitting, audio preprocessing, the
// metric evaluations, MOS aggregation, and report emission.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ttseval/asr_adapter.hpp"
#include "ttseval/audio_metrics.hpp"
#include "ttseval/bundle.hpp"
#include "ttseval/corpus_split.hpp"
#include "ttseval/digest.hpp"
#include "ttseval/disc_net.hpp"
#include "ttseval/errors.hpp"
#include "ttseval/features.hpp"
#include "ttseval/manifest.hpp"
#include "ttseval/mos.hpp"
#include "ttseval/parallel.hpp"
#include "ttseval/report.hpp"
#include "ttseval/resample.hpp"
#include "ttseval/text_metrics.hpp"
#include "ttseval/trim.hpp"
#include "ttseval/version.hpp"
#include "ttseval/wav_io.hpp"

namespace fs = std::filesystem;
using namespace ttseval;

namespace {

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_flag(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

Provenance make_provenance(std::map<std::string, std::string> config,
                           const std::vector<std::string>& input_paths) {
  Provenance prov;
  prov.tool_version = kVersion;
  prov.config = std::move(config);
  for (const auto& path : input_paths) prov.inputs[path] = file_digest(path);
  return prov;
}

MetricEntry spread_metric(MetricEntry::Direction dir, const CorpusAggregate& agg) {
  MetricEntry entry;
  entry.direction = dir;
  entry.value = agg.mean;
  entry.has_spread = true;
  entry.std_dev = agg.std_dev;
  entry.n = agg.n;
  return entry;
}

MetricEntry scalar_metric(MetricEntry::Direction dir, double value, std::size_t n) {
  MetricEntry entry;
  entry.direction = dir;
  entry.value = value;
  entry.n = n;
  return entry;
}

std::vector<ManifestEntry> sorted_manifest(const std::string& path) {
  auto entries = load_manifest(path);
  std::sort(entries.begin(), entries.end(),
            [](const ManifestEntry& a, const ManifestEntry& b) {
              return a.utterance_id < b.utterance_id;
            });
  return entries;
}

std::string hyp_wav_path(const std::string& hyp_dir, const std::string& id) {
  return (fs::path(hyp_dir) / (id + ".wav")).string();
}

Waveform load_canonical(const std::string& path, int rate, bool trim) {
  Waveform w = resample(read_wav(path), rate);
  if (trim) w = trim_silence(w);
  return w;
}

// ---------------------------------------------------------------- split

struct SplitArgs {
  std::string manifest;
  std::string out_dir = ".";
  std::vector<double> fractions = {0.9, 0.05, 0.05};
  uint64_t seed = 0;
};

int run_split(const SplitArgs& args) {
  if (args.fractions.size() != 3)
    throw ValidationError("--fractions needs exactly three values");
  SplitSpec spec;
  spec.train_fraction = args.fractions[0];
  spec.valid_fraction = args.fractions[1];
  spec.test_fraction = args.fractions[2];
  spec.seed = args.seed;

  const auto entries = load_manifest(args.manifest);
  const auto result = split(entries, spec);

  fs::create_directories(args.out_dir);
  const auto out = [&](const char* name) {
    return (fs::path(args.out_dir) / name).string();
  };
  save_manifest(out("train.tsv"), result.train);
  save_manifest(out("valid.tsv"), result.valid);
  save_manifest(out("test.tsv"), result.test);

  nlohmann::ordered_json meta;
  meta["seed"] = spec.seed;
  meta["fractions"] = {spec.train_fraction, spec.valid_fraction, spec.test_fraction};
  meta["counts"] = {{"train", result.train.size()},
                    {"valid", result.valid.size()},
                    {"test", result.test.size()}};
  meta["input"] = args.manifest;
  meta["input_digest"] = file_digest(args.manifest);
  std::ofstream meta_out(out("split.json"), std::ios::trunc);
  meta_out << meta.dump(2) << "\n";

  std::cout << "split " << entries.size() << " entries -> train "
            << result.train.size() << ", valid " << result.valid.size()
            << ", test " << result.test.size() << " (seed " << spec.seed
            << ")\n";
  return 0;
}

// ----------------------------------------------------------------- trim

struct TrimArgs {
  std::string in;
  std::string out;
  double threshold_db = 40.0;
  double frame_ms = 25.0;
  double hop_ms = 10.0;
  int rate = kCanonicalRate;
};

int run_trim(const TrimArgs& args) {
  const Waveform w = resample(read_wav(args.in), args.rate);
  const Waveform trimmed = trim_silence(w, args.threshold_db, args.frame_ms,
                                        args.hop_ms);
  write_wav(args.out, trimmed);
  std::cout << "trimmed " << w.duration_seconds() << " s -> "
            << trimmed.duration_seconds() << " s at " << args.rate << " Hz\n";
  return 0;
}

// ------------------------------------------------------------- features

struct FrameFlags {
  FrameConfig cfg;
  int rate = kCanonicalRate;

  void attach(CLI::App* cmd) {
    cmd->add_option("--rate", rate, "analysis sample rate")
        ->capture_default_str();
    cmd->add_option("--frame-length", cfg.frame_length, "frame length, samples")
        ->capture_default_str();
    cmd->add_option("--hop-length", cfg.hop_length, "hop length, samples")
        ->capture_default_str();
    cmd->add_option("--fft-size", cfg.fft_size, "FFT size (power of two)")
        ->capture_default_str();
    cmd->add_option("--mel-bands", cfg.mel_bands, "mel filterbank size")
        ->capture_default_str();
    cmd->add_option("--cepstral-order", cfg.cepstral_order,
                    "highest kept cepstral coefficient")
        ->capture_default_str();
    cmd->add_option("--f0-floor", cfg.f0_floor, "lowest F0, Hz")
        ->capture_default_str();
    cmd->add_option("--f0-ceil", cfg.f0_ceil, "highest F0, Hz")
        ->capture_default_str();
    cmd->add_option("--voicing-threshold", cfg.voicing_threshold,
                    "peak-correlation voicing threshold")
        ->capture_default_str();
  }

  std::map<std::string, std::string> snapshot() const {
    return {
        {"rate", std::to_string(rate)},
        {"frame_length", std::to_string(cfg.frame_length)},
        {"hop_length", std::to_string(cfg.hop_length)},
        {"fft_size", std::to_string(cfg.fft_size)},
        {"mel_bands", std::to_string(cfg.mel_bands)},
        {"cepstral_order", std::to_string(cfg.cepstral_order)},
        {"f0_floor", format_flag(cfg.f0_floor)},
        {"f0_ceil", format_flag(cfg.f0_ceil)},
        {"voicing_threshold", format_flag(cfg.voicing_threshold)},
    };
  }
};

struct FeaturesArgs {
  std::string in;
  std::string out;
  FrameFlags frames;
};

int run_features(const FeaturesArgs& args) {
  const Waveform w = resample(read_wav(args.in), args.frames.rate);
  const auto ceps = mel_cepstra(w, args.frames.cfg);
  const auto f0 = estimate_f0(w, args.frames.cfg);

  std::ofstream out(args.out, std::ios::trunc);
  if (!out) throw FormatError("cannot write features CSV: " + args.out);
  out << "frame,time_s,f0";
  for (int k = 0; k <= args.frames.cfg.cepstral_order; ++k) out << ",c" << k;
  out << "\n";
  for (std::size_t f = 0; f < ceps.frames.size(); ++f) {
    out << f << ',' << format_full(static_cast<double>(f) * ceps.hop_seconds) << ',';
    if (f0.frames[f]) out << format_full(*f0.frames[f]);
    for (double c : ceps.frames[f]) out << ',' << format_full(c);
    out << "\n";
  }
  std::cout << "wrote " << ceps.frames.size() << " frames to " << args.out << "\n";
  return 0;
}

// ------------------------------------------------------------ eval-audio

struct EvalAudioArgs {
  std::string ref_manifest;
  std::string hyp_dir;
  std::string out;
  std::string csv;
  std::string dump_align_dir;
  std::string corpus;
  bool trim = false;
  unsigned jobs = 4;
  FrameFlags frames;
};

int run_eval_audio(const EvalAudioArgs& args) {
  const auto entries = sorted_manifest(args.ref_manifest);
  if (entries.empty()) throw EmptyInputError("eval-audio: empty manifest");
  if (!args.dump_align_dir.empty()) fs::create_directories(args.dump_align_dir);

  std::vector<UtteranceAudioScores> scores(entries.size());
  parallel_for(entries.size(), args.jobs, [&](std::size_t i) {
    const auto ref = load_canonical(entries[i].audio_path, args.frames.rate, args.trim);
    const auto hyp = load_canonical(hyp_wav_path(args.hyp_dir, entries[i].utterance_id),
                                    args.frames.rate, args.trim);
    AlignmentPath path;
    scores[i] = score_utterance(ref, hyp, args.frames.cfg, &path);
    if (!args.dump_align_dir.empty()) {
      const auto path_csv = (fs::path(args.dump_align_dir) /
                             (entries[i].utterance_id + ".path.csv"))
                                .string();
      std::ofstream out(path_csv, std::ios::trunc);
      if (!out) throw FormatError("cannot write " + path_csv);
      out << "ref_frame,hyp_frame\n";
      for (const auto& [r, h] : path.pairs) out << r << ',' << h << "\n";
    }
  });

  std::vector<double> mcd_values, rmse_values;
  for (const auto& s : scores) {
    mcd_values.push_back(s.mcd);
    if (s.log_f0_rmse) rmse_values.push_back(*s.log_f0_rmse);
  }

  if (!args.csv.empty()) {
    std::ofstream csv(args.csv, std::ios::trunc);
    if (!csv) throw FormatError("cannot write CSV: " + args.csv);
    csv << "utterance_id,mcd,log_f0_rmse,voiced_overlap\n";
    for (std::size_t i = 0; i < entries.size(); ++i) {
      csv << entries[i].utterance_id << ',' << format_full(scores[i].mcd) << ',';
      if (scores[i].log_f0_rmse) csv << format_full(*scores[i].log_f0_rmse);
      csv << ',' << scores[i].voiced_overlap << "\n";
    }
  }

  EvalReport report;
  report.corpus_name = args.corpus;
  report.metrics["MCD"] = spread_metric(MetricEntry::Direction::kLowerBetter,
                                        aggregate(mcd_values));
  if (!rmse_values.empty())
    report.metrics["log-F0 RMSE"] = spread_metric(
        MetricEntry::Direction::kLowerBetter, aggregate(rmse_values));

  auto config = args.frames.snapshot();
  config["trim"] = args.trim ? "true" : "false";
  std::vector<std::string> inputs = {args.ref_manifest};
  for (const auto& e : entries) {
    inputs.push_back(e.audio_path);
    inputs.push_back(hyp_wav_path(args.hyp_dir, e.utterance_id));
  }
  report.provenance = make_provenance(std::move(config), inputs);

  emit_report(report, args.out);
  std::cout << render_report_table(report);
  return 0;
}

// ------------------------------------------------------------- eval-text

struct EvalTextArgs {
  std::string pairs;
  std::string ref_manifest;
  std::string hyp_dir;
  std::string asr_command;
  std::string asr_endpoint;
  double asr_timeout = 60.0;
  std::string text_field = "standard";
  std::string out;
  std::string save_pairs;
  std::string corpus;
  int bleu_max_n = 4;
  bool bleu_smooth = false;
  unsigned jobs = 4;
};

std::vector<TranscriptPair> load_pairs_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open pairs TSV: " + path);
  std::vector<TranscriptPair> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab1 = line.find('\t');
    const auto tab2 = tab1 == std::string::npos ? std::string::npos
                                                : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos)
      throw FormatError(path + " line " + std::to_string(line_no) +
                        ": expected utterance_id<TAB>reference<TAB>hypothesis");
    pairs.push_back({line.substr(0, tab1), line.substr(tab1 + 1, tab2 - tab1 - 1),
                     line.substr(tab2 + 1)});
  }
  return pairs;
}

int run_eval_text(const EvalTextArgs& args) {
  std::vector<TranscriptPair> pairs;
  std::vector<std::string> inputs;

  if (!args.pairs.empty()) {
    pairs = load_pairs_tsv(args.pairs);
    std::sort(pairs.begin(), pairs.end(),
              [](const TranscriptPair& a, const TranscriptPair& b) {
                return a.utterance_id < b.utterance_id;
              });
    inputs.push_back(args.pairs);
  } else {
    if (args.ref_manifest.empty() || args.hyp_dir.empty())
      throw ValidationError(
          "eval-text needs either --pairs or --ref-manifest with --hyp-dir");
    if (args.asr_command.empty() && args.asr_endpoint.empty())
      throw ValidationError(
          "eval-text manifest mode needs --asr-command or --asr-endpoint");
    const auto entries = sorted_manifest(args.ref_manifest);
    if (entries.empty()) throw EmptyInputError("eval-text: empty manifest");

    AsrAdapter adapter;
    adapter.command = args.asr_command;
    adapter.endpoint = args.asr_endpoint;
    adapter.timeout_seconds = args.asr_timeout;

    pairs.resize(entries.size());
    inputs.push_back(args.ref_manifest);
    for (const auto& e : entries)
      inputs.push_back(hyp_wav_path(args.hyp_dir, e.utterance_id));
    parallel_for(entries.size(), args.jobs, [&](std::size_t i) {
      const auto& entry = entries[i];
      std::string reference;
      if (args.text_field == "standard") {
        reference = entry.text_standard;
      } else if (args.text_field == "dialect") {
        if (!entry.text_dialect)
          throw ValidationError("utterance '" + entry.utterance_id +
                                "' has no dialect text");
        reference = *entry.text_dialect;
      } else {
        throw ValidationError("--text-field must be standard or dialect");
      }
      const auto wav = hyp_wav_path(args.hyp_dir, entry.utterance_id);
      pairs[i] = {entry.utterance_id, reference, transcribe_external(adapter, wav)};
    });
  }

  if (!args.save_pairs.empty()) {
    std::ofstream out(args.save_pairs, std::ios::trunc);
    if (!out) throw FormatError("cannot write pairs TSV: " + args.save_pairs);
    for (const auto& p : pairs)
      out << p.utterance_id << '\t' << p.reference << '\t' << p.hypothesis << "\n";
  }

  const auto scores = score_transcripts(pairs, args.bleu_max_n, args.bleu_smooth);

  EvalReport report;
  report.corpus_name = args.corpus;
  report.metrics["CER"] = scalar_metric(MetricEntry::Direction::kLowerBetter,
                                        scores.cer_pooled, pairs.size());
  report.metrics["WER"] = scalar_metric(MetricEntry::Direction::kLowerBetter,
                                        scores.wer_pooled, pairs.size());
  report.metrics["BLEU"] = scalar_metric(MetricEntry::Direction::kHigherBetter,
                                         scores.bleu_score, pairs.size());
  std::map<std::string, std::string> config = {
      {"bleu_max_n", std::to_string(args.bleu_max_n)},
      {"bleu_smooth", args.bleu_smooth ? "true" : "false"},
      {"text_field", args.text_field},
  };
  if (!args.asr_command.empty()) config["asr_command"] = args.asr_command;
  if (!args.asr_endpoint.empty()) config["asr_endpoint"] = args.asr_endpoint;
  report.provenance = make_provenance(std::move(config), inputs);

  emit_report(report, args.out);
  std::cout << render_report_table(report);
  return 0;
}

// ------------------------------------------------------------ disc-score

struct DiscScoreArgs {
  std::string bundle;
  std::string wav_dir;
  std::string out;
  std::string corpus;
  std::string metric_name;
  int rate = kCanonicalRate;
  unsigned jobs = 4;
};

int run_disc_score(const DiscScoreArgs& args) {
  const auto bundle = load_bundle(args.bundle);

  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(args.wav_dir))
    if (entry.is_regular_file() && entry.path().extension() == ".wav")
      files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  if (files.empty())
    throw EmptyInputError("disc-score: no .wav files in " + args.wav_dir);

  std::vector<double> scores(files.size());
  parallel_for(files.size(), args.jobs, [&](std::size_t i) {
    const Waveform w = resample(read_wav(files[i]), args.rate);
    scores[i] = score_waveform(bundle, w);
  });

  const std::string metric_name =
      args.metric_name.empty() ? bundle.name + " Score" : args.metric_name;

  EvalReport report;
  report.corpus_name = args.corpus;
  report.metrics[metric_name] = spread_metric(
      MetricEntry::Direction::kHigherBetter, aggregate(scores));
  std::vector<std::string> inputs = {args.bundle};
  inputs.insert(inputs.end(), files.begin(), files.end());
  report.provenance = make_provenance(
      {{"rate", std::to_string(args.rate)}, {"bundle_name", bundle.name}}, inputs);

  // fragment schema plus a per-file score map
  auto json = nlohmann::ordered_json::parse(report_to_json(report));
  nlohmann::ordered_json per_file = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < files.size(); ++i)
    per_file[fs::path(files[i]).filename().string()] = scores[i];
  json["files"] = per_file;
  std::ofstream out(args.out, std::ios::trunc);
  if (!out) throw FormatError("cannot write " + args.out);
  out << json.dump(2) << "\n";

  std::cout << render_report_table(report);
  return 0;
}

// ------------------------------------------------------------------ mos

struct MosArgs {
  std::string ratings;
  std::string out;
  std::string chart;
  std::string corpus;
  std::size_t expected_raters = 0;
  std::size_t expected_samples = 0;
};

int run_mos(const MosArgs& args) {
  const auto ratings = load_ratings(args.ratings);
  const auto aggregates = aggregate_mos(ratings);

  if (args.expected_raters > 0 && args.expected_samples > 0) {
    const auto missing =
        coverage_check(ratings, args.expected_raters, args.expected_samples);
    for (const auto& cell : missing)
      std::cout << "missing rating: system " << cell.system << ", sample "
                << cell.sample_id << ", rater " << cell.rater_id << "\n";
    std::cout << missing.size() << " missing cell(s) of a "
              << args.expected_samples << "x" << args.expected_raters
              << " grid per system\n";
  }

  EvalReport report;
  report.corpus_name = args.corpus;
  for (const auto& [system, agg] : aggregates) {
    MetricEntry entry;
    entry.direction = MetricEntry::Direction::kHigherBetter;
    entry.value = agg.mean;
    entry.has_spread = true;
    entry.std_dev = agg.std_dev;
    entry.n = agg.n_ratings;
    report.metrics["MOS " + system] = entry;
  }
  report.provenance = make_provenance(
      {{"expected_raters", std::to_string(args.expected_raters)},
       {"expected_samples", std::to_string(args.expected_samples)}},
      {args.ratings});

  emit_report(report, args.out);
  if (!args.chart.empty()) {
    std::ofstream svg(args.chart, std::ios::trunc);
    if (!svg) throw FormatError("cannot write chart: " + args.chart);
    svg << render_mos_chart(aggregates);
  }
  std::cout << render_report_table(report);
  return 0;
}

// --------------------------------------------------------------- report

struct ReportArgs {
  std::vector<std::string> inputs;
  std::string out;
  std::string csv;
  std::string corpus;
};

int run_report(const ReportArgs& args) {
  EvalReport merged;
  merged.corpus_name = args.corpus;
  for (const auto& path : args.inputs) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open report fragment: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const EvalReport fragment = report_from_json(buf.str());
    if (merged.corpus_name.empty()) merged.corpus_name = fragment.corpus_name;
    for (const auto& [name, entry] : fragment.metrics)
      if (!merged.metrics.emplace(name, entry).second)
        throw ValidationError("metric '" + name + "' appears in more than one fragment");
  }
  merged.provenance = make_provenance({{"corpus", merged.corpus_name}}, args.inputs);

  emit_report(merged, args.out, args.csv);
  std::cout << render_report_table(merged);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ttseval - batch evaluation toolkit for TTS systems"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  // every subcommand accepts --config with flat key=value lines; command
  // line flags win over the file, the file wins over defaults
  const auto with_config = [](CLI::App* cmd) {
    cmd->set_config("--config", "", "flat key=value config file (flags win)");
    return cmd;
  };

  SplitArgs split_args;
  auto* split_cmd = with_config(app.add_subcommand(
      "split", "deterministic train/valid/test manifest split"));
  split_cmd->add_option("--manifest", split_args.manifest, "input manifest TSV")
      ->required();
  split_cmd->add_option("--out-dir", split_args.out_dir,
                        "directory for train/valid/test.tsv + split.json")
      ->capture_default_str();
  split_cmd->add_option("--fractions", split_args.fractions,
                        "train,valid,test fractions")
      ->delimiter(',')
      ->expected(3);
  split_cmd->add_option("--seed", split_args.seed, "shuffle seed")
      ->capture_default_str();

  TrimArgs trim_args;
  auto* trim_cmd = with_config(app.add_subcommand("trim", "trim leading/trailing silence"));
  trim_cmd->add_option("--in", trim_args.in, "input WAV")->required();
  trim_cmd->add_option("--out", trim_args.out, "output WAV (PCM16)")->required();
  trim_cmd->add_option("--threshold-db", trim_args.threshold_db,
                       "dB below peak frame RMS")
      ->capture_default_str();
  trim_cmd->add_option("--frame-ms", trim_args.frame_ms, "analysis frame, ms")
      ->capture_default_str();
  trim_cmd->add_option("--hop-ms", trim_args.hop_ms, "analysis hop, ms")
      ->capture_default_str();
  trim_cmd->add_option("--rate", trim_args.rate, "output sample rate")
      ->capture_default_str();

  FeaturesArgs features_args;
  auto* features_cmd = with_config(
      app.add_subcommand("features", "dump mel-cepstra and F0 as CSV"));
  features_cmd->add_option("--in", features_args.in, "input WAV")->required();
  features_cmd->add_option("--out", features_args.out, "output CSV")->required();
  features_args.frames.attach(features_cmd);

  EvalAudioArgs eval_audio_args;
  auto* eval_audio_cmd = with_config(app.add_subcommand(
      "eval-audio", "MCD and log-F0 RMSE of synthesized vs reference audio"));
  eval_audio_cmd
      ->add_option("--ref-manifest", eval_audio_args.ref_manifest,
                   "manifest with reference audio paths")
      ->required();
  eval_audio_cmd
      ->add_option("--hyp-dir", eval_audio_args.hyp_dir,
                   "directory of synthesized <utterance_id>.wav files")
      ->required();
  eval_audio_cmd->add_option("--out", eval_audio_args.out, "metrics JSON")
      ->required();
  eval_audio_cmd->add_option("--csv", eval_audio_args.csv,
                             "per-utterance scores CSV");
  eval_audio_cmd->add_option("--dump-align-dir", eval_audio_args.dump_align_dir,
                             "debug dump of DTW paths, one CSV per utterance");
  eval_audio_cmd->add_option("--corpus", eval_audio_args.corpus, "corpus label");
  eval_audio_cmd->add_flag("--trim", eval_audio_args.trim,
                           "trim silence before scoring");
  eval_audio_cmd->add_option("--jobs", eval_audio_args.jobs, "worker threads")
      ->capture_default_str();
  eval_audio_args.frames.attach(eval_audio_cmd);

  EvalTextArgs eval_text_args;
  auto* eval_text_cmd = with_config(app.add_subcommand(
      "eval-text", "CER/WER/BLEU over ASR transcripts of synthesized audio"));
  eval_text_cmd->add_option("--pairs", eval_text_args.pairs,
                            "TSV of utterance_id<TAB>reference<TAB>hypothesis");
  eval_text_cmd->add_option("--ref-manifest", eval_text_args.ref_manifest,
                            "manifest with reference texts");
  eval_text_cmd->add_option("--hyp-dir", eval_text_args.hyp_dir,
                            "directory of synthesized <utterance_id>.wav files");
  eval_text_cmd->add_option("--asr-command", eval_text_args.asr_command,
                            "ASR shell command template ({audio} placeholder)");
  eval_text_cmd->add_option("--asr-endpoint", eval_text_args.asr_endpoint,
                            "ASR http endpoint (POST audio bytes)");
  eval_text_cmd->add_option("--asr-timeout", eval_text_args.asr_timeout,
                            "ASR timeout, seconds")
      ->capture_default_str();
  eval_text_cmd->add_option("--text-field", eval_text_args.text_field,
                            "reference text column: standard | dialect")
      ->capture_default_str();
  eval_text_cmd->add_option("--out", eval_text_args.out, "metrics JSON")
      ->required();
  eval_text_cmd->add_option("--save-pairs", eval_text_args.save_pairs,
                            "also write the transcript pairs TSV");
  eval_text_cmd->add_option("--corpus", eval_text_args.corpus, "corpus label");
  eval_text_cmd->add_option("--bleu-max-n", eval_text_args.bleu_max_n,
                            "highest BLEU n-gram order")
      ->capture_default_str();
  eval_text_cmd->add_flag("--bleu-smooth", eval_text_args.bleu_smooth,
                          "add-one smoothing for tiny corpora");
  eval_text_cmd->add_option("--jobs", eval_text_args.jobs, "worker threads")
      ->capture_default_str();

  DiscScoreArgs disc_args;
  auto* disc_cmd = with_config(app.add_subcommand(
      "disc-score", "GAN vocoder discriminator score of waveforms"));
  disc_cmd->add_option("--bundle", disc_args.bundle, "NTB discriminator bundle")
      ->required();
  disc_cmd->add_option("--wav-dir", disc_args.wav_dir, "directory of .wav files")
      ->required();
  disc_cmd->add_option("--out", disc_args.out, "scores JSON")->required();
  disc_cmd->add_option("--corpus", disc_args.corpus, "corpus label");
  disc_cmd->add_option("--metric-name", disc_args.metric_name,
                       "metric label (default: '<bundle name> Score')");
  disc_cmd->add_option("--rate", disc_args.rate, "scoring sample rate")
      ->capture_default_str();
  disc_cmd->add_option("--jobs", disc_args.jobs, "worker threads")
      ->capture_default_str();

  MosArgs mos_args;
  auto* mos_cmd = with_config(app.add_subcommand("mos", "aggregate human MOS ratings"));
  mos_cmd->add_option("--ratings", mos_args.ratings,
                      "CSV: sample_id,system,rater_id,score")
      ->required();
  mos_cmd->add_option("--out", mos_args.out, "aggregates JSON")->required();
  mos_cmd->add_option("--chart", mos_args.chart, "also write an SVG bar chart");
  mos_cmd->add_option("--corpus", mos_args.corpus, "corpus label");
  mos_cmd->add_option("--expected-raters", mos_args.expected_raters,
                      "raters per sample for the coverage check");
  mos_cmd->add_option("--expected-samples", mos_args.expected_samples,
                      "samples per system for the coverage check");

  ReportArgs report_args;
  auto* report_cmd = with_config(app.add_subcommand(
      "report", "merge metric fragments into one Table-style report"));
  report_cmd->add_option("--inputs", report_args.inputs,
                         "metric JSON fragments to merge")
      ->required()
      ->delimiter(',');
  report_cmd->add_option("--out", report_args.out, "merged report JSON")
      ->required();
  report_cmd->add_option("--csv", report_args.csv, "merged report CSV");
  report_cmd->add_option("--corpus", report_args.corpus, "corpus label");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (split_cmd->parsed()) return run_split(split_args);
    if (trim_cmd->parsed()) return run_trim(trim_args);
    if (features_cmd->parsed()) return run_features(features_args);
    if (eval_audio_cmd->parsed()) return run_eval_audio(eval_audio_args);
    if (eval_text_cmd->parsed()) return run_eval_text(eval_text_args);
    if (disc_cmd->parsed()) return run_disc_score(disc_args);
    if (mos_cmd->parsed()) return run_mos(mos_args);
    if (report_cmd->parsed()) return run_report(report_args);
  } catch (const Error& e) {
    std::cerr << "ttseval: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "ttseval: unexpected error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
