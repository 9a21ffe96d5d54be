// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>

#include "docsum/embedding.hpp"
#include "docsum/kernels.hpp"
#include "docsum/record.hpp"

namespace docsum::metrics {

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// doc_id -> summary, from any JSONL carrying those two fields.
std::map<std::string, std::string> read_summaries(const std::filesystem::path& path);

struct EvalOptions {
    kernels::MetricSelection metrics;
    bool idf = false;  // weight BERTScore by reference-corpus idf
};

kernels::MetricSelection parse_metric_selection(const std::string& csv);

/// Joins on doc_id; a doc_id present on only one side is an error that lists
/// every such id. provider may be null when BERTScore is not selected.
MetricReport evaluate_pairs(const std::map<std::string, std::string>& predictions,
                            const std::map<std::string, std::string>& references, EmbeddingProvider* provider,
                            const EvalOptions& options);

MetricReport evaluate_corpus(const std::filesystem::path& predictions, const std::filesystem::path& references,
                             EmbeddingProvider* provider, const EvalOptions& options);

ojson to_json(const MetricReport& report, const kernels::MetricSelection& selection);

}  // namespace docsum::metrics
