// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#include "ttseval/manifest.hpp"

#include <array>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ttseval/errors.hpp"

namespace ttseval {

namespace {

const std::array<const char*, 6> kColumns = {
    "utterance_id", "audio_path", "text_standard",
    "text_dialect", "dialect",    "speaker"};

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

}  // namespace

bool is_known_dialect(const std::string& tag) {
  static const std::set<std::string> kTags = {"AG", "BE", "BS", "GR",
                                              "LU", "SG", "VS", "ZH"};
  return kTags.count(tag) > 0;
}

std::vector<ManifestEntry> load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open manifest: " + path);

  std::string line;
  if (!std::getline(in, line)) throw FormatError("manifest has no header row: " + path);
  const auto header = split_tabs(strip_cr(line));
  std::map<std::string, std::size_t> column;
  for (std::size_t i = 0; i < header.size(); ++i) column[header[i]] = i;
  for (const char* required : {"utterance_id", "audio_path", "text_standard"})
    if (!column.count(required))
      throw FormatError("manifest is missing column '" + std::string(required) +
                        "': " + path);

  auto field = [&](const std::vector<std::string>& fields, const char* name)
      -> std::optional<std::string> {
    const auto it = column.find(name);
    if (it == column.end() || it->second >= fields.size()) return std::nullopt;
    const std::string& v = fields[it->second];
    if (v.empty()) return std::nullopt;
    return v;
  };

  std::vector<ManifestEntry> entries;
  std::set<std::string> seen;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    ManifestEntry entry;
    entry.utterance_id = field(fields, "utterance_id").value_or("");
    entry.audio_path = field(fields, "audio_path").value_or("");
    entry.text_standard = field(fields, "text_standard").value_or("");
    if (entry.utterance_id.empty())
      throw ValidationError("manifest line " + std::to_string(line_no) +
                            ": empty utterance_id");
    if (!seen.insert(entry.utterance_id).second)
      throw ValidationError("duplicate utterance_id '" + entry.utterance_id +
                            "' in " + path);
    entry.text_dialect = field(fields, "text_dialect");
    entry.dialect = field(fields, "dialect");
    entry.speaker = field(fields, "speaker");
    if (entry.dialect && !is_known_dialect(*entry.dialect))
      throw ValidationError("utterance '" + entry.utterance_id +
                            "': unknown dialect tag '" + *entry.dialect + "'");
    entries.push_back(std::move(entry));
  }
  return entries;
}

void save_manifest(const std::string& path,
                   const std::vector<ManifestEntry>& entries) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw FormatError("cannot open manifest for writing: " + path);
  for (std::size_t i = 0; i < kColumns.size(); ++i)
    out << kColumns[i] << (i + 1 < kColumns.size() ? '\t' : '\n');
  for (const auto& e : entries) {
    out << e.utterance_id << '\t' << e.audio_path << '\t' << e.text_standard
        << '\t' << e.text_dialect.value_or("") << '\t'
        << e.dialect.value_or("") << '\t' << e.speaker.value_or("") << '\n';
  }
  if (!out) throw FormatError("short write: " + path);
}

}  // namespace ttseval
