// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ttseval/mos.hpp"

namespace ttseval {

// One metric row. Scalar metrics (BLEU, discriminator scores) carry only
// `value`; distributional ones carry mean/std.
struct MetricEntry {
  enum class Direction { kLowerBetter, kHigherBetter };
  Direction direction = Direction::kLowerBetter;
  double value = 0.0;  // scalar, or the mean when has_spread
  bool has_spread = false;
  double std_dev = 0.0;
  std::size_t n = 0;

  bool operator==(const MetricEntry&) const = default;
};

struct Provenance {
  std::string tool_version;
  std::map<std::string, std::string> config;  // resolved flag snapshot
  std::map<std::string, std::string> inputs;  // path -> digest
};

// Table-shaped evaluation report; keys are display names ("MCD", "CER").
struct EvalReport {
  std::string corpus_name;
  std::map<std::string, MetricEntry> metrics;
  Provenance provenance;
};

// JSON schema (schema_version 1) with deterministic key order; doubles
// round-trip exactly. emit_report refuses an empty metric map.
std::string report_to_json(const EvalReport& report);
EvalReport report_from_json(const std::string& json_text);

void emit_report(const EvalReport& report, const std::string& json_path,
                 const std::string& csv_path = "");

// Human-readable Table-2-style rows: "<arrow> <name> | m.mm ± s.ss".
std::string render_report_table(const EvalReport& report);

// Deterministic SVG 1.1 grouped bar chart of per-system MOS means:
// y axis fixed to [1, 5], one bar per system (sorted by name), the mean
// printed on each bar with one decimal.
std::string render_mos_chart(const std::map<std::string, MosAggregate>& mos);

}  // namespace ttseval
