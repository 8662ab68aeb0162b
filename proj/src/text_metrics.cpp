// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#include "ttseval/text_metrics.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "ttseval/errors.hpp"
#include "ttseval/text_norm.hpp"

namespace ttseval {

namespace {

template <typename Token>
EditCounts align_impl(const std::vector<Token>& ref,
                      const std::vector<Token>& hyp) {
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  std::vector<std::size_t> dp((n + 1) * (m + 1));
  auto at = [m](std::size_t i, std::size_t j) { return i * (m + 1) + j; };
  for (std::size_t i = 0; i <= n; ++i) dp[at(i, 0)] = i;
  for (std::size_t j = 0; j <= m; ++j) dp[at(0, j)] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t sub =
          dp[at(i - 1, j - 1)] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      const std::size_t del = dp[at(i - 1, j)] + 1;
      const std::size_t ins = dp[at(i, j - 1)] + 1;
      dp[at(i, j)] = std::min(sub, std::min(del, ins));
    }
  }

  EditCounts counts;
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      const bool match = ref[i - 1] == hyp[j - 1];
      if (dp[at(i, j)] == dp[at(i - 1, j - 1)] + (match ? 0 : 1)) {
        match ? ++counts.hits : ++counts.substitutions;
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && dp[at(i, j)] == dp[at(i - 1, j)] + 1) {
      ++counts.deletions;
      --i;
    } else {
      ++counts.insertions;
      --j;
    }
  }
  return counts;
}

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> words;
  std::istringstream in(s);
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

std::vector<uint32_t> char_tokens(const std::string& normalized,
                                  bool count_spaces) {
  auto cps = utf8_decode(normalized);
  if (!count_spaces) std::erase(cps, static_cast<uint32_t>(U' '));
  return cps;
}

double rate(const EditCounts& counts, const char* what) {
  if (counts.ref_length() == 0)
    throw ValidationError(std::string(what) +
                          ": normalized reference is empty, rate undefined");
  return static_cast<double>(counts.errors()) /
         static_cast<double>(counts.ref_length());
}

void count_ngrams(const std::vector<std::string>& tokens, int n,
                  std::map<std::string, std::size_t>& out) {
  if (tokens.size() < static_cast<std::size_t>(n)) return;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (int k = 1; k < n; ++k) {
      key.push_back('\x1f');
      key += tokens[i + static_cast<std::size_t>(k)];
    }
    ++out[key];
  }
}

}  // namespace

EditCounts edit_alignment(const std::vector<uint32_t>& ref_tokens,
                          const std::vector<uint32_t>& hyp_tokens) {
  return align_impl(ref_tokens, hyp_tokens);
}

EditCounts edit_alignment(const std::vector<std::string>& ref_tokens,
                          const std::vector<std::string>& hyp_tokens) {
  return align_impl(ref_tokens, hyp_tokens);
}

double cer(const std::string& ref, const std::string& hyp, bool count_spaces) {
  const auto r = char_tokens(normalize_text(ref), count_spaces);
  const auto h = char_tokens(normalize_text(hyp), count_spaces);
  return rate(edit_alignment(r, h), "cer");
}

double wer(const std::string& ref, const std::string& hyp) {
  const auto r = split_words(normalize_text(ref));
  const auto h = split_words(normalize_text(hyp));
  return rate(edit_alignment(r, h), "wer");
}

double bleu(const std::vector<TranscriptPair>& pairs, int max_n, bool add_one) {
  if (pairs.empty()) throw EmptyInputError("bleu: empty corpus");
  if (max_n < 1) throw ValidationError("bleu: max_n must be >= 1");

  std::vector<std::size_t> matches(static_cast<std::size_t>(max_n), 0);
  std::vector<std::size_t> totals(static_cast<std::size_t>(max_n), 0);
  std::size_t ref_len = 0, hyp_len = 0;

  for (const auto& pair : pairs) {
    const auto ref = split_words(normalize_text(pair.reference));
    const auto hyp = split_words(normalize_text(pair.hypothesis));
    ref_len += ref.size();
    hyp_len += hyp.size();
    for (int n = 1; n <= max_n; ++n) {
      std::map<std::string, std::size_t> ref_counts, hyp_counts;
      count_ngrams(ref, n, ref_counts);
      count_ngrams(hyp, n, hyp_counts);
      for (const auto& [gram, count] : hyp_counts) {
        const auto it = ref_counts.find(gram);
        const std::size_t clip = it == ref_counts.end() ? 0 : it->second;
        matches[static_cast<std::size_t>(n - 1)] += std::min(count, clip);
      }
      if (hyp.size() >= static_cast<std::size_t>(n))
        totals[static_cast<std::size_t>(n - 1)] += hyp.size() - static_cast<std::size_t>(n) + 1;
    }
  }

  if (hyp_len == 0) return 0.0;

  double log_precision = 0.0;
  int orders = 0;
  for (int n = 1; n <= max_n; ++n) {
    const std::size_t total = totals[static_cast<std::size_t>(n - 1)];
    const std::size_t match = matches[static_cast<std::size_t>(n - 1)];
    if (total == 0) continue;  // order absent from the corpus
    const double p = add_one
                         ? (static_cast<double>(match) + 1.0) /
                               (static_cast<double>(total) + 1.0)
                         : static_cast<double>(match) / static_cast<double>(total);
    if (p == 0.0) return 0.0;
    log_precision += std::log(p);
    ++orders;
  }
  if (orders == 0) return 0.0;

  const double bp = hyp_len >= ref_len
                        ? 1.0
                        : std::exp(1.0 - static_cast<double>(ref_len) /
                                             static_cast<double>(hyp_len));
  return bp * std::exp(log_precision / orders);
}

TextCorpusScores score_transcripts(const std::vector<TranscriptPair>& pairs,
                                   int bleu_max_n, bool bleu_add_one) {
  if (pairs.empty()) throw EmptyInputError("score_transcripts: empty corpus");
  TextCorpusScores scores;
  std::size_t cer_errors = 0, cer_ref = 0, wer_errors = 0, wer_ref = 0;
  for (const auto& pair : pairs) {
    const auto ref_norm = normalize_text(pair.reference);
    const auto hyp_norm = normalize_text(pair.hypothesis);
    const auto cc = edit_alignment(char_tokens(ref_norm, true),
                                   char_tokens(hyp_norm, true));
    const auto wc = edit_alignment(split_words(ref_norm), split_words(hyp_norm));
    if (cc.ref_length() == 0)
      throw ValidationError("score_transcripts: empty normalized reference for " +
                            pair.utterance_id);
    scores.cer_per_utt.push_back(rate(cc, "cer"));
    scores.wer_per_utt.push_back(rate(wc, "wer"));
    cer_errors += cc.errors();
    cer_ref += cc.ref_length();
    wer_errors += wc.errors();
    wer_ref += wc.ref_length();
  }
  scores.cer_pooled = static_cast<double>(cer_errors) / static_cast<double>(cer_ref);
  scores.wer_pooled = static_cast<double>(wer_errors) / static_cast<double>(wer_ref);
  scores.bleu_score = bleu(pairs, bleu_max_n, bleu_add_one);
  return scores;
}

}  // namespace ttseval
