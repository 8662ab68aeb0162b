// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#include "ttseval/mos.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "ttseval/errors.hpp"

namespace ttseval {

namespace {

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

void validate_ratings(const std::vector<Rating>& ratings) {
  std::set<std::tuple<std::string, std::string, std::string>> keys;
  for (std::size_t i = 0; i < ratings.size(); ++i) {
    const Rating& r = ratings[i];
    if (r.score < 1 || r.score > 5)
      throw ValidationError("rating " + std::to_string(i + 1) + " (" +
                            r.sample_id + ", " + r.system + ", " + r.rater_id +
                            "): score " + std::to_string(r.score) +
                            " outside 1..5");
    if (!keys.emplace(r.sample_id, r.system, r.rater_id).second)
      throw ValidationError("duplicate rating for (" + r.sample_id + ", " +
                            r.system + ", " + r.rater_id + ")");
  }
}

}  // namespace

std::vector<Rating> load_ratings(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open ratings CSV: " + path);
  std::string line;
  if (!std::getline(in, line)) throw FormatError("ratings CSV has no header: " + path);

  std::vector<Rating> ratings;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_commas(line);
    if (fields.size() != 4)
      throw FormatError("ratings CSV line " + std::to_string(line_no) +
                        ": expected 4 fields, got " + std::to_string(fields.size()));
    Rating r;
    r.sample_id = fields[0];
    r.system = fields[1];
    r.rater_id = fields[2];
    try {
      std::size_t used = 0;
      r.score = std::stoi(fields[3], &used);
      if (used != fields[3].size()) throw std::invalid_argument("trailing chars");
    } catch (const std::exception&) {
      throw ValidationError("ratings CSV line " + std::to_string(line_no) +
                            ": non-integer score '" + fields[3] + "'");
    }
    ratings.push_back(std::move(r));
  }
  validate_ratings(ratings);
  return ratings;
}

std::map<std::string, MosAggregate> aggregate_mos(const std::vector<Rating>& ratings) {
  if (ratings.empty()) throw EmptyInputError("aggregate_mos: no ratings");
  validate_ratings(ratings);

  std::map<std::string, std::vector<int>> scores;
  std::map<std::string, std::set<std::string>> samples, raters;
  for (const auto& r : ratings) {
    scores[r.system].push_back(r.score);
    samples[r.system].insert(r.sample_id);
    raters[r.system].insert(r.rater_id);
  }

  std::map<std::string, MosAggregate> out;
  for (const auto& [system, values] : scores) {
    MosAggregate agg;
    agg.n_ratings = values.size();
    agg.n_samples = samples[system].size();
    agg.n_raters = raters[system].size();
    long sum = 0;
    for (int v : values) sum += v;
    agg.mean = static_cast<double>(sum) / static_cast<double>(values.size());
    double sq = 0.0;
    for (int v : values) sq += (v - agg.mean) * (v - agg.mean);
    agg.std_dev = std::sqrt(sq / static_cast<double>(values.size()));
    out[system] = agg;
  }
  return out;
}

std::vector<MissingCell> coverage_check(const std::vector<Rating>& ratings,
                                        std::size_t expected_raters,
                                        std::size_t expected_samples) {
  std::map<std::string, std::set<std::string>> samples, raters;
  std::set<std::tuple<std::string, std::string, std::string>> present;
  for (const auto& r : ratings) {
    samples[r.system].insert(r.sample_id);
    raters[r.system].insert(r.rater_id);
    present.emplace(r.system, r.sample_id, r.rater_id);
  }
  if (samples.empty()) samples["<no system>"];  // still report the full grid

  std::vector<MissingCell> missing;
  for (const auto& [system, sample_ids] : samples) {
    std::vector<std::string> rows(sample_ids.begin(), sample_ids.end());
    for (std::size_t k = rows.size(); k < expected_samples; ++k)
      rows.push_back("<unseen sample " + std::to_string(k + 1) + ">");
    std::vector<std::string> cols(raters[system].begin(), raters[system].end());
    for (std::size_t k = cols.size(); k < expected_raters; ++k)
      cols.push_back("<unseen rater " + std::to_string(k + 1) + ">");
    for (const auto& sample : rows)
      for (const auto& rater : cols)
        if (!present.count({system, sample, rater}))
          missing.push_back({system, sample, rater});
  }
  return missing;
}

}  // namespace ttseval
