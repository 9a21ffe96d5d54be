// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace docsum::metrics {

struct RougeScore {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

// f1 = 2PR/(P+R), 0 when P+R = 0.
double f_measure(double precision, double recall);
RougeScore make_score(std::size_t overlap, std::size_t candidate_total, std::size_t reference_total);

// Lowercased runs of ASCII letters/digits (bytes >= 0x80 kept inside words).
// No stemming, no stopword removal.
std::vector<std::string> rouge_tokens(std::string_view text);

// Newline, or '.', '!', '?' followed by whitespace.
std::vector<std::string> split_sentences(std::string_view text);

using Tokens = std::vector<std::string>;
using TokenView = std::span<const std::string>;

RougeScore rouge_n(TokenView candidate, TokenView reference, std::size_t n);
RougeScore rouge_n(std::string_view candidate, std::string_view reference, std::size_t n);

std::size_t lcs_length(TokenView a, TokenView b);

// Positions in b covered by one longest common subsequence of a and b.
std::vector<std::size_t> lcs_positions_in_second(TokenView a, TokenView b);

RougeScore rouge_l(TokenView candidate, TokenView reference);
RougeScore rouge_l(std::string_view candidate, std::string_view reference);

/// Summary-level LCS: for every reference sentence, the union of its tokens
/// matched by an LCS against each candidate sentence.
RougeScore rouge_lsum(std::string_view candidate, std::string_view reference);
RougeScore rouge_lsum(std::span<const Tokens> candidate_sentences, std::span<const Tokens> reference_sentences);

using Embedding = std::vector<double>;
using IdfWeights = std::unordered_map<std::string, double>;

struct BertScore {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

/// Greedy cosine matching over unit vectors. Recall averages each reference
/// token's best match, precision each candidate token's. Weights (when
/// given) turn both into weighted means. Per-token maxima are clamped to
/// [0, 1].
BertScore bertscore(std::span<const Embedding> candidate, std::span<const Embedding> reference,
                    std::span<const double> candidate_weights = {}, std::span<const double> reference_weights = {});

double dot(const Embedding& a, const Embedding& b);

// log((M + 1) / (df + 1)) over M reference texts, BERTScore-style.
IdfWeights compute_idf(std::span<const Tokens> references);

}  // namespace docsum::metrics
