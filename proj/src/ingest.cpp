// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#include "docsum/ingest.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>

#include "docsum/text.hpp"

namespace docsum::ingest {

namespace fs = std::filesystem;

namespace {

std::string clean_key(std::string_view raw) { return text::lower(text::trim(raw)); }

}  // namespace

void LabelAliasTable::add(std::string_view alias, std::string_view canonical) {
    std::string a = clean_key(alias);
    std::string c = clean_key(canonical);
    if (a.empty() || c.empty()) throw IngestError("alias table entries must be non-empty");
    // A canonical label cannot itself be an alias of something else.
    if (auto it = alias_.find(c); it != alias_.end() && it->second != c) {
        throw IngestError("canonical label '" + c + "' is already an alias of '" + it->second + "'");
    }
    if (canonical_.count(a) && a != c) {
        throw IngestError("'" + a + "' is canonical and cannot be aliased to '" + c + "'");
    }
    if (auto it = alias_.find(a); it != alias_.end() && it->second != c) {
        throw IngestError("alias '" + a + "' maps to both '" + it->second + "' and '" + c + "'");
    }
    alias_[a] = c;
    alias_[c] = c;
    canonical_.insert(c);
}

LabelAliasTable LabelAliasTable::parse_tsv(std::string_view content) {
    LabelAliasTable table;
    std::size_t line_no = 0;
    for (const std::string& raw : text::split(content, '\n')) {
        ++line_no;
        std::string_view line = text::trim(raw);
        if (line.empty() || line.front() == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string_view::npos) {
            throw IngestError("alias table line " + std::to_string(line_no) + ": expected alias<TAB>canonical");
        }
        try {
            table.add(line.substr(0, tab), line.substr(tab + 1));
        } catch (const IngestError& e) {
            throw IngestError("alias table line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return table;
}

LabelAliasTable LabelAliasTable::load_tsv(const fs::path& path) { return parse_tsv(read_text_file(path)); }

const std::string* LabelAliasTable::lookup(std::string_view key) const {
    auto it = alias_.find(key);
    return it == alias_.end() ? nullptr : &it->second;
}

NormalizedLabel lookup_label(std::string_view raw, const LabelAliasTable& aliases) {
    std::string key = clean_key(raw);
    if (const std::string* canonical = aliases.lookup(key)) return {*canonical, true};
    return {std::move(key), false};
}

std::string normalize_label(std::string_view raw, const LabelAliasTable& aliases) {
    NormalizedLabel n = lookup_label(raw, aliases);
    if (!n.known) spdlog::debug("unknown label '{}' passed through", n.label);
    return n.label;
}

std::string resolve_primary_label(const std::set<std::string>& candidates, const LabelFrequency& frequency) {
    if (candidates.empty()) throw IngestError("resolve_primary_label: empty candidate set");
    const std::string* best = nullptr;
    std::size_t best_n = 0;
    // std::set iterates lexicographically, so strict > keeps the smallest on ties.
    for (const std::string& c : candidates) {
        auto it = frequency.find(c);
        std::size_t n = it == frequency.end() ? 0 : it->second;
        if (best == nullptr || n > best_n) {
            best = &c;
            best_n = n;
        }
    }
    return *best;
}

Layout parse_layout(std::string_view s) {
    if (s == "pretrain") return Layout::pretrain;
    if (s == "downstream") return Layout::downstream;
    throw IngestError("unknown layout '" + std::string(s) + "' (expected pretrain|downstream)");
}

ojson IngestReport::to_json() const {
    ojson j;
    j["documents"] = documents;
    j["skipped_count"] = skipped.size();
    ojson sk = ojson::array();
    for (const SkippedEntry& s : skipped) sk.push_back({{"path", s.path}, {"reason", s.reason}});
    j["skipped"] = std::move(sk);
    j["unknown_labels"] = unknown_labels;
    return j;
}

namespace {

struct RawDoc {
    std::string doc_id;
    std::string text;
    std::vector<std::string> labels;
};

std::vector<fs::path> list_text_files(const fs::path& root) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(root, fs::directory_options::skip_permission_denied)) {
        if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    return files;
}

std::string doc_id_for(const fs::path& file, const fs::path& root) {
    fs::path rel = fs::relative(file, root);
    rel.replace_extension();
    return rel.generic_string();
}

std::vector<std::string> read_sidecar(const fs::path& path) {
    std::vector<std::string> labels;
    for (const std::string& line : text::split(read_text_file(path), '\n')) {
        std::string_view l = text::trim(line);
        if (!l.empty()) labels.emplace_back(l);
    }
    return labels;
}

}  // namespace

IngestResult ingest_directory(const fs::path& src, Layout layout, const LabelAliasTable& aliases) {
    if (!fs::is_directory(src)) throw IngestError("not a directory: " + src.string());

    IngestResult result;
    std::vector<RawDoc> docs;
    for (const fs::path& file : list_text_files(src)) {
        RawDoc d;
        d.doc_id = doc_id_for(file, src);
        try {
            d.text = read_text_file(file);
            if (!text::is_valid_utf8(d.text)) throw IngestError("invalid UTF-8");
            if (layout == Layout::pretrain) {
                fs::path sidecar = file;
                sidecar.replace_extension(".labels");
                if (!fs::exists(sidecar)) throw IngestError("missing label sidecar");
                d.labels = read_sidecar(sidecar);
                if (d.labels.empty()) throw IngestError("label sidecar is empty");
            } else {
                fs::path rel = fs::relative(file, src);
                if (rel.begin() == rel.end() || std::next(rel.begin()) == rel.end()) {
                    throw IngestError("not inside a category directory");
                }
                d.labels = {rel.begin()->string()};
            }
        } catch (const std::exception& e) {
            spdlog::warn("skipping {}: {}", file.string(), e.what());
            result.report.skipped.push_back({file.string(), e.what()});
            continue;
        }
        docs.push_back(std::move(d));
    }
    if (docs.empty()) throw IngestError("no documents found in " + src.string());

    // First pass: canonical candidates and corpus-wide frequencies.
    std::vector<std::set<std::string>> candidates(docs.size());
    LabelFrequency frequency;
    for (std::size_t i = 0; i < docs.size(); ++i) {
        for (const std::string& raw : docs[i].labels) {
            NormalizedLabel n = lookup_label(raw, aliases);
            if (!n.known) result.report.unknown_labels.insert(n.label);
            if (!n.label.empty()) candidates[i].insert(n.label);
        }
        for (const std::string& c : candidates[i]) ++frequency[c];
    }
    for (const std::string& u : result.report.unknown_labels) spdlog::warn("unknown label '{}' passed through", u);

    const Source source = layout == Layout::pretrain ? Source::pretrain_corpus : Source::downstream_corpus;
    for (std::size_t i = 0; i < docs.size(); ++i) {
        std::optional<std::string> canonical;
        if (!candidates[i].empty()) canonical = resolve_primary_label(candidates[i], frequency);
        result.records.push_back(make_record(std::move(docs[i].doc_id), std::move(docs[i].text),
                                             std::move(docs[i].labels), source, std::move(canonical)));
    }
    std::sort(result.records.begin(), result.records.end(),
              [](const DocumentRecord& a, const DocumentRecord& b) { return a.doc_id < b.doc_id; });
    result.report.documents = result.records.size();
    return result;
}

std::map<std::string, double> category_token_stats(std::span<const DocumentRecord> records,
                                                   const tok::Vocabulary& vocab) {
    std::map<std::string, std::pair<std::size_t, std::size_t>> acc;  // label -> (tokens, docs)
    for (const DocumentRecord& r : records) {
        if (!r.canonical_label) continue;
        auto& [tokens, n] = acc[*r.canonical_label];
        tokens += tok::token_count(r.ocr_text, vocab);
        ++n;
    }
    std::map<std::string, double> out;
    for (const auto& [label, totals] : acc) {
        double mean = static_cast<double>(totals.first) / static_cast<double>(totals.second);
        out[label] = std::round(mean * 10.0) / 10.0;
    }
    return out;
}

}  // namespace docsum::ingest
