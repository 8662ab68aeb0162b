// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ttseval {

// Counts from a minimum-edit alignment. H + S + D always equals the
// reference length and H + S + I the hypothesis length.
struct EditCounts {
  std::size_t hits = 0;
  std::size_t substitutions = 0;
  std::size_t deletions = 0;
  std::size_t insertions = 0;

  std::size_t errors() const { return substitutions + deletions + insertions; }
  std::size_t ref_length() const { return hits + substitutions + deletions; }
};

struct TranscriptPair {
  std::string utterance_id;
  std::string reference;
  std::string hypothesis;
};

// Unit-cost Levenshtein alignment; the backtrace prefers hit or
// substitution over deletion over insertion, so counts are
// deterministic. Empty sequences are valid.
EditCounts edit_alignment(const std::vector<uint32_t>& ref_tokens,
                          const std::vector<uint32_t>& hyp_tokens);
EditCounts edit_alignment(const std::vector<std::string>& ref_tokens,
                          const std::vector<std::string>& hyp_tokens);

// (S+D+I)/(H+S+D) over characters of the normalized texts (spaces count
// as characters unless count_spaces is false). May exceed 1.0 when the
// hypothesis inserts heavily. Throws ValidationError when the normalized
// reference is empty.
double cer(const std::string& ref, const std::string& hyp,
           bool count_spaces = true);

// Same rate over whitespace-delimited words of the normalized texts.
double wer(const std::string& ref, const std::string& hyp);

// Corpus-level BLEU: geometric mean of clipped n-gram precisions with a
// brevity penalty. One reference per hypothesis; texts are normalized
// and whitespace-tokenized. Orders with zero candidate n-grams anywhere
// in the corpus are dropped from the mean. Unsmoothed by default (a
// zero precision yields 0.0); add_one smooths every precision as
// (match+1)/(total+1).
// Throws EmptyInputError when pairs is empty.
double bleu(const std::vector<TranscriptPair>& pairs, int max_n = 4,
            bool add_one = false);

// Corpus-pooled rates plus per-utterance values, as used by eval-text.
struct TextCorpusScores {
  double cer_pooled = 0.0;  // sum of errors / sum of ref chars
  double wer_pooled = 0.0;
  double bleu_score = 0.0;
  std::vector<double> cer_per_utt;
  std::vector<double> wer_per_utt;
};

TextCorpusScores score_transcripts(const std::vector<TranscriptPair>& pairs,
                                   int bleu_max_n = 4, bool bleu_add_one = false);

}  // namespace ttseval
