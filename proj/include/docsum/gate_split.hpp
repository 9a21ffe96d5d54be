// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "docsum/record.hpp"

namespace docsum::split {

inline constexpr double kDefaultThreshold = 0.9;

class SplitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <class A>
struct GateResult {
    std::vector<A> kept;
    std::vector<A> dropped;
};

// kept iff score > threshold ("exceeding": 0.9 itself is dropped).
GateResult<SummaryAnnotation> confidence_gate(std::span<const SummaryAnnotation> items,
                                              double threshold = kDefaultThreshold);
// Throws SplitError when an annotation has no score.
GateResult<QaAnnotation> confidence_gate(std::span<const QaAnnotation> items, double threshold = kDefaultThreshold);

/// Documents whose summary passes the gate and, when scored QA pairs are
/// given, whose QA pair passes too. Sorted doc ids.
std::vector<std::string> gate_documents(std::span<const SummaryAnnotation> summaries,
                                        std::optional<std::span<const QaAnnotation>> scored_qa,
                                        double threshold = kDefaultThreshold);

struct SplitRatios {
    double train = 0.7;
    double val = 0.15;
    double test = 0.15;
};

SplitRatios parse_ratios(const std::string& csv);

struct SplitManifest {
    std::uint64_t seed = 0;
    SplitRatios ratios;
    std::vector<std::string> train_ids;
    std::vector<std::string> val_ids;
    std::vector<std::string> test_ids;

    ojson to_json() const;
    static SplitManifest from_json(const ojson& j);
};

struct SplitSizes {
    std::size_t train = 0;
    std::size_t val = 0;
    std::size_t test = 0;
};

// train = floor(r_train * n), val = floor(r_val * n), test = remainder.
SplitSizes split_sizes(std::size_t n, const SplitRatios& ratios);

/// Sort, seeded shuffle, then cut by split_sizes. Id lists come back sorted.
SplitManifest split_dataset(std::vector<std::string> ids, std::uint64_t seed, const SplitRatios& ratios = {});

/// Same rule applied within each label group (seed mixed with the label).
SplitManifest split_dataset_stratified(const std::map<std::string, std::string>& id_to_label, std::uint64_t seed,
                                       const SplitRatios& ratios = {});

void write_manifest(const SplitManifest& m, const std::filesystem::path& path);
SplitManifest read_manifest(const std::filesystem::path& path);

}  // namespace docsum::split
