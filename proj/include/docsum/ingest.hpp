// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "docsum/record.hpp"
#include "docsum/tokenizer.hpp"

namespace docsum::ingest {

class IngestError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Case-insensitive alias -> canonical mapping. Canonical labels always map
/// to themselves, so normalizing twice is the same as normalizing once.
class LabelAliasTable {
public:
    LabelAliasTable() = default;

    // alias<TAB>canonical per line; blank lines and '#' comments ignored.
    static LabelAliasTable load_tsv(const std::filesystem::path& path);
    static LabelAliasTable parse_tsv(std::string_view content);

    void add(std::string_view alias, std::string_view canonical);

    // Lowercased, trimmed and alias-mapped; nullptr when the key is unknown.
    const std::string* lookup(std::string_view key) const;
    const std::set<std::string>& canonical_set() const { return canonical_; }
    std::size_t size() const { return alias_.size(); }

private:
    std::map<std::string, std::string, std::less<>> alias_;
    std::set<std::string> canonical_;
};

struct NormalizedLabel {
    std::string label;
    bool known = false;
};

NormalizedLabel lookup_label(std::string_view raw, const LabelAliasTable& aliases);

// Unknown labels pass through lowercased and trimmed, with a debug log line.
std::string normalize_label(std::string_view raw, const LabelAliasTable& aliases);

// label -> number of documents listing it among their canonical candidates
using LabelFrequency = std::map<std::string, std::size_t>;

// Most frequent candidate corpus-wide, ties broken lexicographically.
std::string resolve_primary_label(const std::set<std::string>& candidates, const LabelFrequency& frequency);

enum class Layout { pretrain, downstream };

Layout parse_layout(std::string_view s);

struct SkippedEntry {
    std::string path;
    std::string reason;
};

struct IngestReport {
    std::size_t documents = 0;
    std::vector<SkippedEntry> skipped;
    std::set<std::string> unknown_labels;

    ojson to_json() const;
};

struct IngestResult {
    std::vector<DocumentRecord> records;  // sorted by doc_id
    IngestReport report;
};

/// pretrain: <id>.txt with an <id>.labels sidecar (one label per line).
/// downstream: <category>/<id>.txt, the directory name being the label.
/// doc_id is the path relative to src without the .txt extension.
IngestResult ingest_directory(const std::filesystem::path& src, Layout layout, const LabelAliasTable& aliases);

// Mean token count per canonical label, rounded to one decimal.
std::map<std::string, double> category_token_stats(std::span<const DocumentRecord> records,
                                                   const tok::Vocabulary& vocab);

}  // namespace docsum::ingest
