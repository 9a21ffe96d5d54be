// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "docsum/hash.hpp"
#include "docsum/masking.hpp"
#include "docsum/metrics.hpp"
#include "docsum/record.hpp"
#include "docsum/tokenizer.hpp"

// Per-record data-parallel loops. Each kernel has a serial reference that
// the tests hold the OpenMP version to, element for element.
namespace docsum::kernels {

std::vector<Digest256> fingerprints_serial(std::span<const DocumentRecord> records);
std::vector<Digest256> fingerprints_omp(std::span<const DocumentRecord> records);

std::vector<masking::MaskedPair> mask_serial(std::span<const masking::MaskSource> sources,
                                             const tok::Vocabulary& vocab, const masking::MaskOptions& options);
std::vector<masking::MaskedPair> mask_omp(std::span<const masking::MaskSource> sources,
                                          const tok::Vocabulary& vocab, const masking::MaskOptions& options);

struct MetricSelection {
    bool rouge = true;
    bool bertscore = true;
};

// Everything one document needs for scoring, prepared up front so the
// parallel loop is pure.
struct ScoringItem {
    metrics::Tokens candidate;
    metrics::Tokens reference;
    std::vector<metrics::Tokens> candidate_sentences;
    std::vector<metrics::Tokens> reference_sentences;
    std::vector<metrics::Embedding> candidate_embeddings;
    std::vector<metrics::Embedding> reference_embeddings;
    std::vector<double> candidate_weights;
    std::vector<double> reference_weights;
};

DocScores score_item(const ScoringItem& item, const MetricSelection& selection);

std::vector<DocScores> score_serial(std::span<const ScoringItem> items, const MetricSelection& selection);
std::vector<DocScores> score_omp(std::span<const ScoringItem> items, const MetricSelection& selection);

}  // namespace docsum::kernels
