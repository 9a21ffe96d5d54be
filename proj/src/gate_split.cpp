// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#include "docsum/gate_split.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "docsum/hash.hpp"
#include "docsum/rng.hpp"
#include "docsum/text.hpp"

namespace docsum::split {

GateResult<SummaryAnnotation> confidence_gate(std::span<const SummaryAnnotation> items, double threshold) {
    GateResult<SummaryAnnotation> out;
    for (const SummaryAnnotation& a : items) (a.score > threshold ? out.kept : out.dropped).push_back(a);
    return out;
}

GateResult<QaAnnotation> confidence_gate(std::span<const QaAnnotation> items, double threshold) {
    GateResult<QaAnnotation> out;
    for (const QaAnnotation& a : items) {
        if (!a.score) throw SplitError("annotation for '" + a.doc_id + "' has no score");
        (*a.score > threshold ? out.kept : out.dropped).push_back(a);
    }
    return out;
}

std::vector<std::string> gate_documents(std::span<const SummaryAnnotation> summaries,
                                        std::optional<std::span<const QaAnnotation>> scored_qa, double threshold) {
    std::set<std::string> kept;
    for (const SummaryAnnotation& a : confidence_gate(summaries, threshold).kept) kept.insert(a.doc_id);
    if (scored_qa) {
        std::set<std::string> qa_kept;
        for (const QaAnnotation& a : confidence_gate(*scored_qa, threshold).kept) qa_kept.insert(a.doc_id);
        std::erase_if(kept, [&](const std::string& id) { return qa_kept.count(id) == 0; });
    }
    return {kept.begin(), kept.end()};
}

namespace {

void check_ratios(const SplitRatios& r) {
    if (r.train < 0 || r.val < 0 || r.test < 0) throw SplitError("ratios must be non-negative");
    if (std::abs(r.train + r.val + r.test - 1.0) > 1e-9) throw SplitError("ratios must sum to 1");
}

}  // namespace

SplitRatios parse_ratios(const std::string& csv) {
    std::vector<std::string> parts = text::split(csv, ',');
    if (parts.size() != 3) throw SplitError("ratios must be three comma-separated numbers");
    SplitRatios r;
    try {
        r.train = std::stod(parts[0]);
        r.val = std::stod(parts[1]);
        r.test = std::stod(parts[2]);
    } catch (const std::exception&) {
        throw SplitError("ratios must be numbers: '" + csv + "'");
    }
    check_ratios(r);
    return r;
}

namespace {

std::size_t floor_share(double ratio, std::size_t n) {
    return static_cast<std::size_t>(std::floor(ratio * static_cast<double>(n) + 1e-9));
}

}  // namespace

SplitSizes split_sizes(std::size_t n, const SplitRatios& ratios) {
    check_ratios(ratios);
    SplitSizes s;
    s.train = std::min(floor_share(ratios.train, n), n);
    s.val = std::min(floor_share(ratios.val, n), n - s.train);
    s.test = n - s.train - s.val;
    return s;
}

SplitManifest split_dataset(std::vector<std::string> ids, std::uint64_t seed, const SplitRatios& ratios) {
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) throw SplitError("duplicate ids in split input");
    const SplitSizes sizes = split_sizes(ids.size(), ratios);
    seeded_shuffle(ids, seed);

    SplitManifest m;
    m.seed = seed;
    m.ratios = ratios;
    auto first = ids.begin();
    m.train_ids.assign(first, first + static_cast<std::ptrdiff_t>(sizes.train));
    m.val_ids.assign(first + static_cast<std::ptrdiff_t>(sizes.train),
                     first + static_cast<std::ptrdiff_t>(sizes.train + sizes.val));
    m.test_ids.assign(first + static_cast<std::ptrdiff_t>(sizes.train + sizes.val), ids.end());
    std::sort(m.train_ids.begin(), m.train_ids.end());
    std::sort(m.val_ids.begin(), m.val_ids.end());
    std::sort(m.test_ids.begin(), m.test_ids.end());
    return m;
}

SplitManifest split_dataset_stratified(const std::map<std::string, std::string>& id_to_label, std::uint64_t seed,
                                       const SplitRatios& ratios) {
    std::map<std::string, std::vector<std::string>> groups;
    for (const auto& [id, label] : id_to_label) groups[label].push_back(id);
    SplitManifest m;
    m.seed = seed;
    m.ratios = ratios;
    for (auto& [label, ids] : groups) {
        SplitManifest part = split_dataset(std::move(ids), seed ^ hash64(label), ratios);
        m.train_ids.insert(m.train_ids.end(), part.train_ids.begin(), part.train_ids.end());
        m.val_ids.insert(m.val_ids.end(), part.val_ids.begin(), part.val_ids.end());
        m.test_ids.insert(m.test_ids.end(), part.test_ids.begin(), part.test_ids.end());
    }
    std::sort(m.train_ids.begin(), m.train_ids.end());
    std::sort(m.val_ids.begin(), m.val_ids.end());
    std::sort(m.test_ids.begin(), m.test_ids.end());
    return m;
}

ojson SplitManifest::to_json() const {
    ojson j;
    j["seed"] = seed;
    j["ratios"] = {ratios.train, ratios.val, ratios.test};
    j["train_ids"] = train_ids;
    j["val_ids"] = val_ids;
    j["test_ids"] = test_ids;
    return j;
}

SplitManifest SplitManifest::from_json(const ojson& j) {
    SplitManifest m;
    m.seed = j.at("seed").get<std::uint64_t>();
    auto r = j.at("ratios").get<std::vector<double>>();
    if (r.size() != 3) throw SplitError("manifest ratios must have three entries");
    m.ratios = {r[0], r[1], r[2]};
    m.train_ids = j.at("train_ids").get<std::vector<std::string>>();
    m.val_ids = j.at("val_ids").get<std::vector<std::string>>();
    m.test_ids = j.at("test_ids").get<std::vector<std::string>>();
    return m;
}

void write_manifest(const SplitManifest& m, const std::filesystem::path& path) {
    write_text_file(path, m.to_json().dump(2) + "\n");
}

SplitManifest read_manifest(const std::filesystem::path& path) {
    return SplitManifest::from_json(ojson::parse(read_text_file(path)));
}

}  // namespace docsum::split
