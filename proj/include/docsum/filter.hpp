// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "docsum/hash.hpp"
#include "docsum/record.hpp"

namespace docsum::filter {

class FilterError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FilterReport {
    std::size_t input_count = 0;
    std::size_t removed_duplicates = 0;
    std::size_t removed_empty = 0;
    std::size_t removed_short = 0;
    std::size_t output_count = 0;

    bool reconciles() const {
        return output_count + removed_duplicates + removed_empty + removed_short == input_count;
    }
    ojson to_json() const;
};

// Lowercase, whitespace runs collapsed to one space, trimmed.
std::string fingerprint_normal_form(std::string_view text);
Digest256 content_fingerprint(std::string_view text);

struct Filtered {
    std::vector<DocumentRecord> records;
    FilterReport report;
};

/// Records are stably sorted by doc_id and the first of each fingerprint
/// class is kept. Empty texts are left for min_word_filter to count.
Filtered dedup(std::vector<DocumentRecord> records);

/// Keeps word_count >= min_words. Zero-word records always go, and are
/// counted as empty rather than short.
Filtered min_word_filter(std::vector<DocumentRecord> records, std::size_t min_words = 100);

/// Uniform sample of k records without replacement, sorted by doc_id.
std::vector<DocumentRecord> sample_subset(const std::vector<DocumentRecord>& records, std::size_t k,
                                          std::uint64_t seed);

struct FilterOptions {
    std::size_t min_words = 100;
};

// dedup, then empty/short removal; one reconciled report.
Filtered run_filters(std::vector<DocumentRecord> records, const FilterOptions& options);

}  // namespace docsum::filter
