// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#include "docsum/filter.hpp"

#include <algorithm>
#include <unordered_set>

#include "docsum/kernels.hpp"
#include "docsum/rng.hpp"
#include "docsum/text.hpp"

namespace docsum::filter {

ojson FilterReport::to_json() const {
    ojson j;
    j["input_count"] = input_count;
    j["removed_duplicates"] = removed_duplicates;
    j["removed_empty"] = removed_empty;
    j["removed_short"] = removed_short;
    j["output_count"] = output_count;
    return j;
}

std::string fingerprint_normal_form(std::string_view text) { return text::collapse_whitespace_lower(text); }

Digest256 content_fingerprint(std::string_view text) { return sha256(fingerprint_normal_form(text)); }

namespace {

struct DigestHash {
    std::size_t operator()(const Digest256& d) const { return static_cast<std::size_t>(digest_prefix64(d)); }
};

void sort_by_id(std::vector<DocumentRecord>& records) {
    std::stable_sort(records.begin(), records.end(),
                     [](const DocumentRecord& a, const DocumentRecord& b) { return a.doc_id < b.doc_id; });
}

}  // namespace

Filtered dedup(std::vector<DocumentRecord> records) {
    sort_by_id(records);
    Filtered out;
    out.report.input_count = records.size();
    const std::vector<Digest256> digests = kernels::fingerprints_omp(records);
    const Digest256 empty_digest = content_fingerprint("");
    std::unordered_set<Digest256, DigestHash> seen;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (digests[i] != empty_digest && !seen.insert(digests[i]).second) {
            ++out.report.removed_duplicates;
            continue;
        }
        out.records.push_back(std::move(records[i]));
    }
    out.report.output_count = out.records.size();
    return out;
}

Filtered min_word_filter(std::vector<DocumentRecord> records, std::size_t min_words) {
    Filtered out;
    out.report.input_count = records.size();
    for (DocumentRecord& r : records) {
        if (r.word_count == 0) {
            ++out.report.removed_empty;
        } else if (r.word_count < min_words) {
            ++out.report.removed_short;
        } else {
            out.records.push_back(std::move(r));
        }
    }
    out.report.output_count = out.records.size();
    return out;
}

std::vector<DocumentRecord> sample_subset(const std::vector<DocumentRecord>& records, std::size_t k,
                                          std::uint64_t seed) {
    if (k > records.size()) {
        throw FilterError("subset size " + std::to_string(k) + " exceeds corpus size " +
                          std::to_string(records.size()));
    }
    std::vector<DocumentRecord> out;
    out.reserve(k);
    for (std::size_t i : sample_indices(records.size(), k, seed)) out.push_back(records[i]);
    sort_by_id(out);
    return out;
}

Filtered run_filters(std::vector<DocumentRecord> records, const FilterOptions& options) {
    Filtered d = dedup(std::move(records));
    Filtered w = min_word_filter(std::move(d.records), options.min_words);
    w.report.input_count = d.report.input_count;
    w.report.removed_duplicates = d.report.removed_duplicates;
    return w;
}

}  // namespace docsum::filter
