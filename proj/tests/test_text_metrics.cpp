// normalization, CER/WER, BLEU tests

#include <doctest.h>

#include <cmath>
#include <random>

#include "ttseval/errors.hpp"
#include "ttseval/text_metrics.hpp"
#include "ttseval/text_norm.hpp"

using namespace ttseval;

namespace {

// Distance-only Levenshtein, independent of the aligning implementation.
std::size_t levenshtein(const std::string& a, const std::string& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::vector<uint32_t> ascii_tokens(const std::string& s) {
  return std::vector<uint32_t>(s.begin(), s.end());
}

std::string random_string(std::mt19937& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> ch(0, 3);
  std::string s(len(rng), 'a');
  for (auto& c : s) c = static_cast<char>('a' + ch(rng));
  return s;
}

}  // namespace

TEST_CASE("normalize_text applies the preprocessing rules") {
  CHECK(normalize_text("Hallo,  Welt! ") == "hallo welt");
  CHECK(normalize_text("«Grüezi»") == "grüezi");
  CHECK(normalize_text("") == "");
  CHECK(normalize_text("  \t \n ") == "");
  CHECK(normalize_text("A  ,  B") == "a b");
  CHECK(normalize_text("Züri-West?!") == "züriwest");
}

TEST_CASE("normalize_text is idempotent") {
  const std::vector<std::string> samples = {
      "Hallo,  Welt! ",
      "«Grüezi» wohl, d'Frau  Stähli...",
      "MIXED case — with em–dashes",
      "tabs\tand\nnewlines",
      "  ",
  };
  for (const auto& s : samples) {
    const auto once = normalize_text(s);
    CHECK(normalize_text(once) == once);
  }
}

TEST_CASE("edit_alignment worked cases") {
  auto counts = edit_alignment(ascii_tokens("abc"), ascii_tokens("abc"));
  CHECK(counts.hits == 3);
  CHECK(counts.substitutions == 0);
  CHECK(counts.deletions == 0);
  CHECK(counts.insertions == 0);

  counts = edit_alignment(ascii_tokens("abc"), ascii_tokens("axc"));
  CHECK(counts.hits == 2);
  CHECK(counts.substitutions == 1);
  CHECK(counts.deletions == 0);
  CHECK(counts.insertions == 0);

  counts = edit_alignment(ascii_tokens("abc"), ascii_tokens(""));
  CHECK(counts.deletions == 3);
  CHECK(counts.hits + counts.substitutions + counts.insertions == 0);

  counts = edit_alignment(ascii_tokens(""), ascii_tokens("xy"));
  CHECK(counts.insertions == 2);
}

TEST_CASE("edit counts satisfy both length identities and match Levenshtein") {
  std::mt19937 rng(123);
  for (int round = 0; round < 500; ++round) {
    const std::string a = random_string(rng, 12);
    const std::string b = random_string(rng, 12);
    const auto counts = edit_alignment(ascii_tokens(a), ascii_tokens(b));
    CHECK(counts.hits + counts.substitutions + counts.deletions == a.size());
    CHECK(counts.hits + counts.substitutions + counts.insertions == b.size());
    CHECK(counts.errors() == levenshtein(a, b));
  }
}

TEST_CASE("cer worked cases") {
  CHECK(cer("abc", "abc") == 0.0);
  CHECK(cer("abc", "axc") == doctest::Approx(1.0 / 3.0));
  CHECK(cer("ab", "abc") == doctest::Approx(0.5));
  CHECK_THROWS_AS(cer("...", "abc"), ValidationError);  // ref normalizes to ""
}

TEST_CASE("cer counts spaces unless told otherwise") {
  // "a b" vs "ab": deleting the space is 1 error of 3 chars
  CHECK(cer("a b", "ab") == doctest::Approx(1.0 / 3.0));
  CHECK(cer("a b", "ab", /*count_spaces=*/false) == 0.0);
}

TEST_CASE("wer worked cases") {
  CHECK(wer("guten tag", "guten tag") == 0.0);
  CHECK(wer("guten tag", "gute tag") == doctest::Approx(0.5));
  CHECK(wer("a b c", "a c") == doctest::Approx(1.0 / 3.0));
  // case and punctuation are normalized away first
  CHECK(wer("Guten Tag!", "guten tag") == 0.0);
}

TEST_CASE("error rates can exceed 1.0 on heavy insertion") {
  CHECK(cer("a", "xyz") > 1.0);
  CHECK(wer("ein", "ganz viele neue worte") > 1.0);
}

TEST_CASE("bleu endpoints") {
  std::vector<TranscriptPair> pairs = {
      {"u1", "de aa bb cc dd", "de aa bb cc dd"},
      {"u2", "ee ff gg hh", "ee ff gg hh"},
  };
  CHECK(bleu(pairs) == doctest::Approx(1.0));

  std::vector<TranscriptPair> disjoint = {
      {"u1", "aa bb cc dd", "xx yy zz ww"},
      {"u2", "ee ff gg hh", "qq rr ss tt"},
  };
  CHECK(bleu(disjoint) == 0.0);

  CHECK_THROWS_AS(bleu({}), EmptyInputError);
}

TEST_CASE("bleu hand-computed small case") {
  // p1 = 1, p2 = 1, BP = exp(1 - 3/2)
  std::vector<TranscriptPair> pairs = {{"u1", "the cat sat", "the cat"}};
  CHECK(bleu(pairs, 2) == doctest::Approx(std::exp(-0.5)).epsilon(1e-9));
  CHECK(bleu(pairs, 2) == doctest::Approx(0.6065).epsilon(1e-3));
}

TEST_CASE("bleu drops orders with no candidate n-grams") {
  // single-token corpus: only unigrams exist; identical => 1.0
  std::vector<TranscriptPair> pairs = {{"u1", "hallo", "hallo"}};
  CHECK(bleu(pairs, 4) == doctest::Approx(1.0));
}

TEST_CASE("bleu add-one smoothing keeps tiny corpora off zero") {
  std::vector<TranscriptPair> pairs = {{"u1", "aa bb cc", "aa xx cc"}};
  CHECK(bleu(pairs, 2) == 0.0);  // no matching bigram, unsmoothed
  const double smoothed = bleu(pairs, 2, true);
  CHECK(smoothed > 0.0);
  CHECK(smoothed < 1.0);
}

TEST_CASE("bleu clips repeated n-grams against the reference") {
  // hyp repeats "the" three times; ref supports it twice
  std::vector<TranscriptPair> pairs = {{"u1", "the cat the dog", "the the the"}};
  // p1 = 2/3 after clipping; hyp shorter than ref => BP = exp(1 - 4/3)
  const double p1 = 2.0 / 3.0;
  const double bp = std::exp(1.0 - 4.0 / 3.0);
  CHECK(bleu(pairs, 1) == doctest::Approx(p1 * bp).epsilon(1e-12));
}

TEST_CASE("score_transcripts pools counts across the corpus") {
  std::vector<TranscriptPair> pairs = {
      {"u1", "abc", "abc"},
      {"u2", "abc", "axc"},
  };
  const auto scores = score_transcripts(pairs);
  CHECK(scores.cer_per_utt[0] == 0.0);
  CHECK(scores.cer_per_utt[1] == doctest::Approx(1.0 / 3.0));
  CHECK(scores.cer_pooled == doctest::Approx(1.0 / 6.0));
  CHECK(scores.wer_pooled == doctest::Approx(0.5));
  CHECK(scores.bleu_score > 0.0);
}
