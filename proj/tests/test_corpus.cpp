// manifest, split, and ASR adapter tests

#include <doctest.h>

#include <fstream>
#include <set>
#include <thread>

#include <httplib.h>

#include "test_util.hpp"
#include "ttseval/asr_adapter.hpp"
#include "ttseval/corpus_split.hpp"
#include "ttseval/digest.hpp"
#include "ttseval/errors.hpp"
#include "ttseval/manifest.hpp"

using namespace ttseval;

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

std::vector<ManifestEntry> synthetic_entries(std::size_t n) {
  std::vector<ManifestEntry> entries(n);
  for (std::size_t i = 0; i < n; ++i) {
    char id[32];
    std::snprintf(id, sizeof(id), "utt_%05zu", i);
    entries[i].utterance_id = id;
    entries[i].audio_path = std::string("audio/") + id + ".wav";
    entries[i].text_standard = "text " + std::to_string(i);
  }
  return entries;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("load_manifest parses a well-formed file in order") {
  testutil::TempDir tmp;
  const auto path = tmp.path("m.tsv");
  write_file(path,
             "utterance_id\taudio_path\ttext_standard\ttext_dialect\tdialect\tspeaker\n"
             "u1\ta/u1.wav\tGuten Tag\tGrüezi\tZH\tspk1\n"
             "u2\ta/u2.wav\tHallo\t\t\t\n"
             "u3\ta/u3.wav\tDrei\tDrüü\tBE\tspk2\n");
  const auto entries = load_manifest(path);
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].utterance_id == "u1");
  CHECK(entries[0].dialect == "ZH");
  CHECK(!entries[1].dialect.has_value());
  CHECK(entries[2].text_dialect == "Drüü");
}

TEST_CASE("load_manifest rejects duplicates, bad dialects, missing columns") {
  testutil::TempDir tmp;
  const auto dup = tmp.path("dup.tsv");
  write_file(dup,
             "utterance_id\taudio_path\ttext_standard\n"
             "u1\ta.wav\tx\n"
             "u1\tb.wav\ty\n");
  CHECK_THROWS_WITH_AS(load_manifest(dup),
                       doctest::Contains("duplicate utterance_id 'u1'"),
                       ValidationError);

  const auto bad_tag = tmp.path("tag.tsv");
  write_file(bad_tag,
             "utterance_id\taudio_path\ttext_standard\tdialect\n"
             "u1\ta.wav\tx\tXX\n");
  CHECK_THROWS_AS(load_manifest(bad_tag), ValidationError);

  const auto missing = tmp.path("missing.tsv");
  write_file(missing, "utterance_id\ttext_standard\nu1\tx\n");
  CHECK_THROWS_AS(load_manifest(missing), FormatError);
}

TEST_CASE("load_manifest accepts a header-only file") {
  testutil::TempDir tmp;
  const auto path = tmp.path("empty.tsv");
  write_file(path, "utterance_id\taudio_path\ttext_standard\n");
  CHECK(load_manifest(path).empty());
}

TEST_CASE("manifest save/load round trip") {
  testutil::TempDir tmp;
  auto entries = synthetic_entries(5);
  entries[2].dialect = "GR";
  entries[2].text_dialect = "öppis";
  const auto path = tmp.path("rt.tsv");
  save_manifest(path, entries);
  const auto back = load_manifest(path);
  REQUIRE(back.size() == entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    CHECK(back[i].utterance_id == entries[i].utterance_id);
    CHECK(back[i].dialect == entries[i].dialect);
    CHECK(back[i].text_dialect == entries[i].text_dialect);
  }
}

TEST_CASE("split_counts reproduces the corpus tables") {
  SplitSpec spec;  // 0.9 / 0.05 / 0.05
  auto counts = split_counts(2291, spec);
  CHECK(counts.train == 2061);
  CHECK(counts.valid == 115);
  CHECK(counts.test == 115);

  counts = split_counts(30921, spec);
  CHECK(counts.train == 27828);
  CHECK(counts.valid == 1546);
  CHECK(counts.test == 1547);

  counts = split_counts(20, spec);
  CHECK(counts.train == 18);
  CHECK(counts.valid == 1);
  CHECK(counts.test == 1);
}

TEST_CASE("split_counts follows floor/round-half-up/remainder for all N") {
  SplitSpec spec;
  std::size_t checked = 0;
  for (std::size_t n = 3; n <= 100000; ++n) {
    // integer-arithmetic oracle for the 0.9/0.05/0.05 defaults
    const std::size_t train = 9 * n / 10;
    const std::size_t valid = (n + 10) / 20;
    const std::size_t test = n - train - valid;
    if (train == 0 || valid == 0 || test == 0) {
      CHECK_THROWS_AS(split_counts(n, spec), ValidationError);
      continue;
    }
    const auto counts = split_counts(n, spec);
    if (counts.train != train || counts.valid != valid || counts.test != test) {
      CHECK(counts.train == train);
      CHECK(counts.valid == valid);
      CHECK(counts.test == test);
    } else {
      ++checked;
    }
  }
  CHECK(checked > 99000);  // the rule held everywhere it applies
}

TEST_CASE("split rejects corpora too small for a part") {
  SplitSpec spec;
  CHECK_THROWS_AS(split_counts(5, spec), ValidationError);
  CHECK_THROWS_AS(split(synthetic_entries(2), spec), ValidationError);
  CHECK_THROWS_AS(split({}, spec), EmptyInputError);
}

TEST_CASE("split partitions the corpus deterministically") {
  SplitSpec spec;
  spec.seed = 7;
  const auto entries = synthetic_entries(200);
  const auto a = split(entries, spec);
  const auto b = split(entries, spec);

  CHECK(a.train.size() == 180);
  CHECK(a.valid.size() == 10);
  CHECK(a.test.size() == 10);

  auto ids = [](const std::vector<ManifestEntry>& v) {
    std::vector<std::string> out;
    for (const auto& e : v) out.push_back(e.utterance_id);
    return out;
  };
  CHECK(ids(a.train) == ids(b.train));
  CHECK(ids(a.valid) == ids(b.valid));
  CHECK(ids(a.test) == ids(b.test));

  // partition: union equals input, pairwise disjoint
  std::set<std::string> all;
  for (const auto* part : {&a.train, &a.valid, &a.test})
    for (const auto& e : *part) CHECK(all.insert(e.utterance_id).second);
  CHECK(all.size() == entries.size());

  // a different seed shuffles differently
  spec.seed = 8;
  const auto c = split(entries, spec);
  CHECK(ids(c.train) != ids(a.train));
}

TEST_CASE("split is independent of manifest row order") {
  SplitSpec spec;
  spec.seed = 3;
  auto entries = synthetic_entries(50);
  const auto a = split(entries, spec);
  std::reverse(entries.begin(), entries.end());
  const auto b = split(entries, spec);
  for (std::size_t i = 0; i < a.train.size(); ++i)
    CHECK(a.train[i].utterance_id == b.train[i].utterance_id);
}

TEST_CASE("ASR command adapter captures stdout") {
  testutil::TempDir tmp;
  const auto audio = tmp.path("x.wav");
  write_file(audio, "fake");
  AsrAdapter adapter;
  // the audio path is appended when no placeholder is present; this
  // echo-style stub swallows it as a positional argument
  adapter.command = "sh -c 'echo guten tag'";
  CHECK(transcribe_external(adapter, audio) == "guten tag");

  // {audio} placeholder is substituted
  write_file(audio + ".txt", "hallo welt\n");
  adapter.command = "cat {audio}.txt";
  CHECK(transcribe_external(adapter, audio) == "hallo welt");
}

TEST_CASE("ASR command adapter reports failures") {
  testutil::TempDir tmp;
  const auto audio = tmp.path("x.wav");
  write_file(audio, "fake");
  AsrAdapter adapter;
  adapter.command = "sh -c 'echo broken >&2; exit 3'";
  CHECK_THROWS_WITH_AS(transcribe_external(adapter, audio),
                       doctest::Contains("status 3"), AdapterError);

  adapter.command = "sleep 5 # {audio}";
  adapter.timeout_seconds = 0.2;
  CHECK_THROWS_AS(transcribe_external(adapter, audio), AdapterTimeout);
}

TEST_CASE("ASR endpoint adapter posts audio and reads the body") {
  testutil::TempDir tmp;
  const auto audio = tmp.path("x.wav");
  write_file(audio, "wav-bytes");

  httplib::Server server;
  std::string received;
  server.Post("/asr", [&](const httplib::Request& req, httplib::Response& res) {
    received = req.body;
    res.set_content("hallo\n", "text/plain");
  });
  server.Post("/fail", [](const httplib::Request&, httplib::Response& res) {
    res.status = 500;
    res.set_content("kaputt", "text/plain");
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread server_thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  AsrAdapter adapter;
  adapter.endpoint = "http://127.0.0.1:" + std::to_string(port) + "/asr";
  CHECK(transcribe_external(adapter, audio) == "hallo");
  CHECK(received == "wav-bytes");

  adapter.endpoint = "http://127.0.0.1:" + std::to_string(port) + "/fail";
  CHECK_THROWS_WITH_AS(transcribe_external(adapter, audio),
                       doctest::Contains("500"), AdapterError);

  server.stop();
  server_thread.join();
}

TEST_CASE("file digests depend on contents only") {
  testutil::TempDir tmp;
  const auto a = tmp.path("a.txt");
  const auto b = tmp.path("b.txt");
  write_file(a, "same");
  write_file(b, "same");
  CHECK(file_digest(a) == file_digest(b));
  write_file(b, "different");
  CHECK(file_digest(a) != file_digest(b));
  CHECK(file_digest(a).rfind("fnv1a64:", 0) == 0);
  CHECK(read_file(a) == "same");
}
