// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "docsum/record.hpp"
#include "docsum/tokenizer.hpp"

namespace docsum::masking {

inline constexpr double kDefaultRate = 0.15;
inline constexpr std::size_t kMaxInputTokens = 512;

class MaskingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MaskedPair {
    std::string doc_id;
    std::vector<tok::TokenId> corrupted;
    std::vector<tok::TokenId> original;
    std::vector<std::size_t> masked_positions;  // sorted
    std::uint64_t seed = 0;
    double rate = 0.0;

    bool operator==(const MaskedPair&) const = default;
};

// floor(rate * n), robust to the last-ulp error in rate * n.
std::size_t masked_count(double rate, std::size_t n_maskable);

/// Replaces floor(rate * n_maskable) positions with <mask>, chosen uniformly
/// without replacement. <pad>, <s>, </s> and the first protected_prefix
/// tokens after <s> are never chosen.
MaskedPair mask_tokens(std::span<const tok::TokenId> ids, double rate, std::uint64_t seed,
                       std::size_t protected_prefix = 0);

std::uint64_t derive_record_seed(std::uint64_t seed, std::string_view doc_id);

// <s> + leading tokens + </s>, at most max_len ids in total.
std::vector<tok::TokenId> encode_for_pretraining(std::string_view text, const tok::Vocabulary& vocab,
                                                 std::size_t max_len = kMaxInputTokens);

struct MaskSource {
    std::string doc_id;
    std::string text;
    std::size_t protected_prefix = 0;
};

struct MaskOptions {
    double rate = kDefaultRate;
    std::uint64_t seed = 0;
    std::size_t max_len = kMaxInputTokens;
};

ojson to_json(const MaskedPair& p);
MaskedPair masked_pair_from_json(const ojson& j);

std::size_t write_masked_pairs(std::span<const MaskedPair> pairs, const std::filesystem::path& path);
std::vector<MaskedPair> read_masked_pairs(const std::filesystem::path& path);

std::vector<MaskedPair> mask_corpus(std::span<const MaskSource> sources, const tok::Vocabulary& vocab,
                                    const MaskOptions& options);

/// One MaskedPair line per record, each seeded by seed ^ hash(doc_id).
std::size_t emit_pretrain_set(std::span<const DocumentRecord> records, const tok::Vocabulary& vocab, double rate,
                              std::uint64_t seed, const std::filesystem::path& path);

}  // namespace docsum::masking
