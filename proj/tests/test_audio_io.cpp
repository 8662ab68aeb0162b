// audio decode/resample/trim tests

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <fstream>

#include "test_util.hpp"
#include "ttseval/errors.hpp"
#include "ttseval/resample.hpp"
#include "ttseval/trim.hpp"
#include "ttseval/wav_io.hpp"

using namespace ttseval;

namespace {

void append_u32(std::string& s, uint32_t v) {
  for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}
void append_u16(std::string& s, uint16_t v) {
  s.push_back(static_cast<char>(v & 0xFF));
  s.push_back(static_cast<char>((v >> 8) & 0xFF));
}

// Hand-built PCM16 WAV so the reader is tested against raw bytes, not
// against our own writer.
std::string pcm16_wav(const std::vector<int16_t>& samples, uint32_t rate,
                      uint16_t channels = 1) {
  std::string data;
  for (int16_t v : samples) append_u16(data, static_cast<uint16_t>(v));
  std::string f;
  f += "RIFF";
  append_u32(f, 36 + static_cast<uint32_t>(data.size()));
  f += "WAVEfmt ";
  append_u32(f, 16);
  append_u16(f, 1);
  append_u16(f, channels);
  append_u32(f, rate);
  append_u32(f, rate * 2 * channels);
  append_u16(f, static_cast<uint16_t>(2 * channels));
  append_u16(f, 16);
  f += "data";
  append_u32(f, static_cast<uint32_t>(data.size()));
  f += data;
  return f;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

// Goertzel magnitude at one frequency; independent of the FFT module.
double tone_magnitude(const Waveform& w, double freq) {
  const double k = 2.0 * M_PI * freq / w.sample_rate;
  const double coeff = 2.0 * std::cos(k);
  double s0 = 0.0, s1 = 0.0, s2 = 0.0;
  for (double x : w.samples) {
    s0 = x + coeff * s1 - s2;
    s2 = s1;
    s1 = s0;
  }
  return std::sqrt(s1 * s1 + s2 * s2 - coeff * s1 * s2);
}

double correlation(const std::vector<double>& a, const std::vector<double>& b,
                   std::size_t skip) {
  const std::size_t end = std::min(a.size(), b.size()) - skip;
  double sa = 0, sb = 0, dot = 0;
  for (std::size_t i = skip; i < end; ++i) {
    sa += a[i] * a[i];
    sb += b[i] * b[i];
    dot += a[i] * b[i];
  }
  return dot / std::sqrt(sa * sb);
}

}  // namespace

TEST_CASE("read_wav scales PCM16 by 32768") {
  testutil::TempDir tmp;
  const auto path = tmp.path("a.wav");
  write_file(path, pcm16_wav({0, 16384, -16384}, 22050));
  const Waveform w = read_wav(path);
  CHECK(w.sample_rate == 22050);
  REQUIRE(w.samples.size() == 3);
  CHECK(w.samples[0] == 0.0);
  CHECK(w.samples[1] == 0.5);
  CHECK(w.samples[2] == -0.5);
}

TEST_CASE("read_wav handles zero-length data chunk") {
  testutil::TempDir tmp;
  const auto path = tmp.path("empty.wav");
  write_file(path, pcm16_wav({}, 16000));
  const Waveform w = read_wav(path);
  CHECK(w.samples.empty());
  CHECK(w.sample_rate == 16000);
}

TEST_CASE("read_wav rejects truncated data chunk") {
  testutil::TempDir tmp;
  const auto path = tmp.path("trunc.wav");
  std::string bytes = pcm16_wav({100, 200, 300}, 22050);
  bytes.resize(bytes.size() - 3);  // cut into the payload
  write_file(path, bytes);
  CHECK_THROWS_AS(read_wav(path), FormatError);
}

TEST_CASE("read_wav rejects garbage and unsupported encodings") {
  testutil::TempDir tmp;
  const auto garbage = tmp.path("garbage.wav");
  write_file(garbage, "definitely not a RIFF file");
  CHECK_THROWS_AS(read_wav(garbage), FormatError);

  // PCM8 is not supported
  std::string f = pcm16_wav({0}, 8000);
  f[34] = 8;  // bits-per-sample field
  const auto pcm8 = tmp.path("pcm8.wav");
  write_file(pcm8, f);
  CHECK_THROWS_AS(read_wav(pcm8), UnsupportedEncodingError);
}

TEST_CASE("read_wav averages stereo to mono") {
  testutil::TempDir tmp;
  const auto path = tmp.path("stereo.wav");
  // interleaved L/R: (16384, 0), (-16384, -16384)
  write_file(path, pcm16_wav({16384, 0, -16384, -16384}, 44100, 2));
  const Waveform w = read_wav(path);
  REQUIRE(w.samples.size() == 2);
  CHECK(w.samples[0] == doctest::Approx(0.25));
  CHECK(w.samples[1] == doctest::Approx(-0.5));
}

TEST_CASE("wav round-trip is sample-exact for 16-bit payloads") {
  testutil::TempDir tmp;
  Waveform w;
  w.sample_rate = 22050;
  for (int i = -100; i <= 100; ++i) w.samples.push_back(i * 123 / 32768.0);
  const auto path = tmp.path("rt.wav");
  write_wav(path, w);
  const Waveform back = read_wav(path);
  REQUIRE(back.samples.size() == w.samples.size());
  for (std::size_t i = 0; i < w.samples.size(); ++i)
    CHECK(back.samples[i] == w.samples[i]);
}

TEST_CASE("resample identity returns identical samples") {
  const auto w = testutil::sine(440, 0.1, 22050);
  const auto out = resample(w, 22050);
  CHECK(out.samples == w.samples);
}

TEST_CASE("resample halves the length") {
  Waveform w;
  w.sample_rate = 16000;
  w.samples.assign(100, 0.1);
  const auto out = resample(w, 8000);
  CHECK(out.sample_rate == 8000);
  CHECK(std::abs(static_cast<long>(out.samples.size()) - 50) <= 1);
}

TEST_CASE("resample keeps a 440 Hz tone at 440 Hz") {
  const auto w = testutil::sine(440, 1.0, 44100);
  const auto out = resample(w, 22050);
  // scan integer frequencies around the tone; the peak must stay put
  double best_f = 0, best_mag = -1;
  for (int f = 300; f <= 600; ++f) {
    const double m = tone_magnitude(out, f);
    if (m > best_mag) {
      best_mag = m;
      best_f = f;
    }
  }
  CHECK(best_f == doctest::Approx(440).epsilon(0.0023));  // +/- 1 Hz
}

TEST_CASE("resample up-down round trip stays correlated") {
  Waveform w;
  w.sample_rate = 22050;
  w.samples.resize(22050);
  for (std::size_t i = 0; i < w.samples.size(); ++i) {
    const double t = static_cast<double>(i) / 22050;
    w.samples[i] = 0.4 * std::sin(2 * M_PI * 200 * t) +
                   0.3 * std::sin(2 * M_PI * 880 * t) +
                   0.2 * std::sin(2 * M_PI * 1500 * t);
  }
  const auto back = resample(resample(w, 44100), 22050);
  REQUIRE(back.samples.size() >= w.samples.size() - 1);
  CHECK(correlation(w.samples, back.samples, 200) > 0.99);
}

TEST_CASE("trim_silence removes leading and trailing silence") {
  const int rate = 22050;
  auto w = testutil::zeros(0.5, rate);
  const auto voice = testutil::sine(220, 1.0, rate, 0.9);
  w.samples.insert(w.samples.end(), voice.samples.begin(), voice.samples.end());
  const auto tail = testutil::zeros(0.5, rate);
  w.samples.insert(w.samples.end(), tail.samples.begin(), tail.samples.end());

  const auto trimmed = trim_silence(w, 40.0, 25.0, 10.0);
  const double slack = 2 * 0.025 * rate;
  CHECK(std::abs(static_cast<double>(trimmed.samples.size()) - rate) <= slack);
}

TEST_CASE("trim_silence leaves unsilent audio unchanged") {
  const auto w = testutil::sine(220, 0.5, 22050, 0.9);
  const auto trimmed = trim_silence(w);
  CHECK(trimmed.samples == w.samples);
}

TEST_CASE("trim_silence returns all-zero input unchanged") {
  const auto w = testutil::zeros(0.3, 22050);
  const auto trimmed = trim_silence(w);
  CHECK(trimmed.samples == w.samples);
}

TEST_CASE("trim_silence output is a contiguous sub-range") {
  // noise burst in the middle, sloped edges
  auto w = testutil::zeros(0.2, 22050);
  auto mid = testutil::sine(300, 0.4, 22050, 0.7);
  w.samples.insert(w.samples.end(), mid.samples.begin(), mid.samples.end());
  auto tail = testutil::zeros(0.1, 22050);
  w.samples.insert(w.samples.end(), tail.samples.begin(), tail.samples.end());

  const auto trimmed = trim_silence(w);
  REQUIRE(trimmed.samples.size() <= w.samples.size());
  // locate the sub-range
  bool found = false;
  for (std::size_t off = 0; off + trimmed.samples.size() <= w.samples.size(); ++off) {
    if (std::memcmp(w.samples.data() + off, trimmed.samples.data(),
                    trimmed.samples.size() * sizeof(double)) == 0) {
      found = true;
      break;
    }
  }
  CHECK(found);
}
