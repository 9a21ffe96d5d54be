// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "docsum/llm_client.hpp"
#include "docsum/parse.hpp"
#include "docsum/prompts.hpp"
#include "docsum/record.hpp"

namespace docsum::annotate {

enum class Task { qa, summary, qa_score };

Task parse_task(std::string_view s);
std::string_view to_string(Task task);
TemplateId template_for(Task task);

/// Raw completions on disk, one JSON file per request named by the hex
/// digest of (template_id, rendered prompt, model_name). Writes go through
/// a temporary file and a rename.
class ResponseCache {
public:
    explicit ResponseCache(std::filesystem::path dir);

    static std::string key(TemplateId id, std::string_view rendered_prompt, std::string_view model_name);

    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, TemplateId id, std::string_view model_name, std::string_view completion) const;
    std::filesystem::path path_for(const std::string& key) const;

private:
    std::filesystem::path dir_;
};

struct AnnotationFailure {
    std::string doc_id;
    std::string reason;
};

struct AnnotateOptions {
    std::map<std::string, std::string> keys;  // doc_id -> key line value (prompt1)
    std::vector<QaAnnotation> qa_inputs;      // pairs to score (qa_score)
    Sleeper sleep;                            // backoff sleeper, real sleep when empty
};

struct AnnotationRun {
    std::vector<QaAnnotation> qa;              // qa and qa_score tasks
    std::vector<SummaryAnnotation> summaries;  // summary task
    std::vector<AnnotationFailure> failures;
    std::size_t cache_hits = 0;
    std::size_t endpoint_calls = 0;

    ojson failure_report() const;
};

/// Annotates every record at most once per (template, model). Cached
/// completions are re-parsed instead of re-requested; failures carry a
/// reason and never abort the run. Outputs are sorted by doc_id.
AnnotationRun annotate_corpus(std::span<const DocumentRecord> records, Task task, const LlmConfig& config,
                              const std::filesystem::path& cache_dir, const AnnotateOptions& options = {});

std::map<std::string, std::string> read_keys_tsv(const std::filesystem::path& path);

}  // namespace docsum::annotate
