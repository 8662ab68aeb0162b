// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ttseval {

// One corpus row: id, audio location, standard-German text, optional
// dialect text/tag and speaker.
struct ManifestEntry {
  std::string utterance_id;
  std::string audio_path;
  std::string text_standard;
  std::optional<std::string> text_dialect;
  std::optional<std::string> dialect;  // one of AG BE BS GR LU SG VS ZH
  std::optional<std::string> speaker;
};

bool is_known_dialect(const std::string& tag);

// Reads a UTF-8 TSV with a header row. Columns utterance_id, audio_path
// and text_standard are required; order is taken from the header.
// Throws FormatError for a missing column and ValidationError (naming
// the id) for duplicates or unknown dialect tags.
std::vector<ManifestEntry> load_manifest(const std::string& path);

// Writes the same TSV schema (always all six columns).
void save_manifest(const std::string& path,
                   const std::vector<ManifestEntry>& entries);

}  // namespace ttseval
