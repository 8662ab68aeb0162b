// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#include "ttseval/wav_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include "ttseval/errors.hpp"

namespace ttseval {

namespace {

uint32_t read_u32(const std::string& b, std::size_t pos) {
  return static_cast<uint32_t>(static_cast<unsigned char>(b[pos])) |
         static_cast<uint32_t>(static_cast<unsigned char>(b[pos + 1])) << 8 |
         static_cast<uint32_t>(static_cast<unsigned char>(b[pos + 2])) << 16 |
         static_cast<uint32_t>(static_cast<unsigned char>(b[pos + 3])) << 24;
}

uint16_t read_u16(const std::string& b, std::size_t pos) {
  return static_cast<uint16_t>(static_cast<unsigned char>(b[pos]) |
                               static_cast<unsigned char>(b[pos + 1]) << 8);
}

struct FmtChunk {
  uint16_t format = 0;
  uint16_t channels = 0;
  uint32_t sample_rate = 0;
  uint16_t bits = 0;
};

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatFloat = 3;
constexpr uint16_t kFormatExtensible = 0xFFFE;

double decode_sample(const char* p, uint16_t format, uint16_t bits) {
  if (format == kFormatPcm && bits == 16) {
    int16_t v;
    std::memcpy(&v, p, 2);
    return static_cast<double>(v) / 32768.0;
  }
  if (format == kFormatPcm && bits == 24) {
    int32_t v = static_cast<unsigned char>(p[0]) |
                static_cast<unsigned char>(p[1]) << 8 |
                static_cast<unsigned char>(p[2]) << 16;
    if (v & 0x800000) v |= ~0xFFFFFF;  // sign-extend from bit 23
    return static_cast<double>(v) / 8388608.0;
  }
  // float32
  float v;
  std::memcpy(&v, p, 4);
  if (!std::isfinite(v)) throw FormatError("non-finite float sample in WAV data");
  return std::clamp(static_cast<double>(v), -1.0, 1.0);
}

}  // namespace

Waveform read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open WAV file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string bytes = buf.str();

  if (bytes.size() < 12 || bytes.compare(0, 4, "RIFF") != 0 ||
      bytes.compare(8, 4, "WAVE") != 0) {
    throw FormatError("not a RIFF/WAVE file: " + path);
  }

  FmtChunk fmt;
  bool have_fmt = false;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::string id = bytes.substr(pos, 4);
    const uint32_t size = read_u32(bytes, pos + 4);
    const std::size_t body = pos + 8;

    if (id == "fmt ") {
      if (size < 16 || body + size > bytes.size())
        throw FormatError("truncated fmt chunk: " + path);
      fmt.format = read_u16(bytes, body);
      fmt.channels = read_u16(bytes, body + 2);
      fmt.sample_rate = read_u32(bytes, body + 4);
      fmt.bits = read_u16(bytes, body + 14);
      if (fmt.format == kFormatExtensible) {
        // Subformat GUID starts at byte 24 of the chunk; its first two
        // bytes repeat the classic format code.
        if (size < 40) throw FormatError("short extensible fmt chunk: " + path);
        fmt.format = read_u16(bytes, body + 24);
      }
      have_fmt = true;
    } else if (id == "data") {
      if (!have_fmt) throw FormatError("data chunk before fmt chunk: " + path);
      if (body + size > bytes.size())
        throw FormatError("truncated data chunk: " + path);
      if (fmt.sample_rate == 0) throw FormatError("zero sample rate: " + path);
      if (fmt.channels != 1 && fmt.channels != 2)
        throw UnsupportedEncodingError("unsupported channel count " +
                                       std::to_string(fmt.channels) + ": " + path);
      const bool ok = (fmt.format == kFormatPcm && (fmt.bits == 16 || fmt.bits == 24)) ||
                      (fmt.format == kFormatFloat && fmt.bits == 32);
      if (!ok)
        throw UnsupportedEncodingError(
            "unsupported encoding (format " + std::to_string(fmt.format) +
            ", " + std::to_string(fmt.bits) + " bit): " + path);

      const std::size_t bytes_per_sample = fmt.bits / 8;
      const std::size_t frame_bytes = bytes_per_sample * fmt.channels;
      const std::size_t frames = size / frame_bytes;

      Waveform w;
      w.sample_rate = static_cast<int>(fmt.sample_rate);
      w.samples.resize(frames);
      for (std::size_t f = 0; f < frames; ++f) {
        const char* p = bytes.data() + body + f * frame_bytes;
        double v = decode_sample(p, fmt.format, fmt.bits);
        if (fmt.channels == 2)
          v = 0.5 * (v + decode_sample(p + bytes_per_sample, fmt.format, fmt.bits));
        w.samples[f] = v;
      }
      return w;
    }

    pos = body + size + (size & 1);  // chunks are word-aligned
  }
  throw FormatError(have_fmt ? "missing data chunk: " + path
                             : "missing fmt chunk: " + path);
}

void write_wav(const std::string& path, const Waveform& w) {
  if (w.sample_rate <= 0) throw ValidationError("write_wav: sample_rate must be > 0");
  const uint32_t data_size = static_cast<uint32_t>(w.samples.size() * 2);
  std::string out;
  out.reserve(44 + data_size);

  auto put_u32 = [&out](uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  };
  auto put_u16 = [&out](uint16_t v) {
    out.push_back(static_cast<char>(v & 0xFF));
    out.push_back(static_cast<char>((v >> 8) & 0xFF));
  };

  const uint32_t rate = static_cast<uint32_t>(w.sample_rate);
  out += "RIFF";
  put_u32(36 + data_size);
  out += "WAVEfmt ";
  put_u32(16);
  put_u16(1);  // PCM
  put_u16(1);  // mono
  put_u32(rate);
  put_u32(rate * 2);  // byte rate
  put_u16(2);         // block align
  put_u16(16);        // bits
  out += "data";
  put_u32(data_size);
  for (double s : w.samples) {
    const long v = std::lround(std::clamp(s, -1.0, 1.0) * 32768.0);
    put_u16(static_cast<uint16_t>(std::clamp<long>(v, -32768, 32767)));
  }

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw FormatError("cannot open WAV file for writing: " + path);
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) throw FormatError("short write: " + path);
}

}  // namespace ttseval
