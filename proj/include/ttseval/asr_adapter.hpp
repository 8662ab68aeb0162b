// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <string>

namespace ttseval {

// External ASR hook. The recognizer itself lives outside this toolkit;
// we only ship the transport.
//
// Command mode: `command` is a shell command template; every "{audio}"
// placeholder is replaced with the (quoted) audio path, or the path is
// appended when no placeholder is present. The transcript is the
// command's stdout.
//
// Endpoint mode: `endpoint` is an http://host:port/path URL; the audio
// file bytes are POSTed (application/octet-stream) and the transcript is
// the response body.
//
// Either way a single trailing newline is stripped. Nonzero exit or a
// non-2xx status raises AdapterError carrying stderr / the body;
// exceeding timeout_seconds raises AdapterTimeout.
struct AsrAdapter {
  std::string command;   // command mode when non-empty
  std::string endpoint;  // endpoint mode when non-empty
  double timeout_seconds = 60.0;
};

std::string transcribe_external(const AsrAdapter& adapter,
                                const std::string& audio_path);

// Exposed for tests: run a shell command with a deadline.
struct CommandResult {
  int exit_code = -1;
  std::string out;
  std::string err;
  bool timed_out = false;
};
CommandResult run_command(const std::string& command, double timeout_seconds);

}  // namespace ttseval
