// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "docsum/jsonl.hpp"

namespace docsum {

enum class Source { pretrain_corpus, downstream_corpus };

std::string_view to_string(Source source);
Source parse_source(std::string_view s);

/// One OCR'd page as it moves between pipeline stages.
struct DocumentRecord {
    std::string doc_id;
    std::string ocr_text;
    std::vector<std::string> raw_labels;
    std::optional<std::string> canonical_label;
    Source source = Source::downstream_corpus;
    std::size_t word_count = 0;  // whitespace-token count of ocr_text

    bool operator==(const DocumentRecord&) const = default;
};

DocumentRecord make_record(std::string doc_id, std::string ocr_text, std::vector<std::string> raw_labels,
                           Source source, std::optional<std::string> canonical_label = std::nullopt);

enum class QaTemplate { prompt1, prompt3 };

std::string_view to_string(QaTemplate t);
QaTemplate parse_qa_template(std::string_view s);

struct QaAnnotation {
    std::string doc_id;
    std::string question;
    std::string answer;
    std::optional<double> score;
    std::string model_name;
    QaTemplate template_id = QaTemplate::prompt1;

    bool operator==(const QaAnnotation&) const = default;
};

struct SummaryAnnotation {
    std::string doc_id;
    std::string summary;
    double score = 0.0;
    std::string model_name;

    bool operator==(const SummaryAnnotation&) const = default;
};

struct DocScores {
    double r1 = 0, r2 = 0, rl = 0, rlsum = 0;
    double bs_p = 0, bs_r = 0, bs_f1 = 0;

    bool operator==(const DocScores&) const = default;
};

struct MetricReport {
    std::map<std::string, DocScores> per_doc;
    DocScores corpus_mean;
};

/// Raised for schema and invariant violations in record files.
class RecordError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ojson to_json(const DocumentRecord& r);
ojson to_json(const QaAnnotation& a);
ojson to_json(const SummaryAnnotation& a);

DocumentRecord record_from_json(const ojson& j);
QaAnnotation qa_from_json(const ojson& j);
SummaryAnnotation summary_from_json(const ojson& j);

std::size_t write_records(std::span<const DocumentRecord> records, const std::filesystem::path& path);
std::vector<DocumentRecord> read_records(const std::filesystem::path& path);

std::size_t write_qa_annotations(std::span<const QaAnnotation> items, const std::filesystem::path& path);
std::vector<QaAnnotation> read_qa_annotations(const std::filesystem::path& path);

std::size_t write_summary_annotations(std::span<const SummaryAnnotation> items, const std::filesystem::path& path);
std::vector<SummaryAnnotation> read_summary_annotations(const std::filesystem::path& path);

}  // namespace docsum
