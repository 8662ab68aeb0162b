// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <stdexcept>
#include <string>

namespace ttseval {

// Base class for all errors raised by the toolkit. The CLI maps any
// Error to exit code 1; usage errors are handled by the parser itself.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed container or file contents (bad magic, truncated chunk, ...).
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& msg) : Error(msg) {}
};

// Structurally valid file using a codec or dtype we do not handle.
class UnsupportedEncodingError : public Error {
 public:
  explicit UnsupportedEncodingError(const std::string& msg) : Error(msg) {}
};

// Input violates a documented invariant (duplicate id, bad shape decl, ...).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Operation received an empty sequence where at least one element is needed.
class EmptyInputError : public Error {
 public:
  explicit EmptyInputError(const std::string& msg) : Error(msg) {}
};

// Dimension or index mismatch between paired sequences.
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& msg) : Error(msg) {}
};

// External ASR adapter failed (nonzero exit, bad HTTP status, timeout).
class AdapterError : public Error {
 public:
  explicit AdapterError(const std::string& msg) : Error(msg) {}
};

class AdapterTimeout : public AdapterError {
 public:
  explicit AdapterTimeout(const std::string& msg) : AdapterError(msg) {}
};

}  // namespace ttseval
