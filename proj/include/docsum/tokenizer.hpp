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
#include <unordered_map>
#include <vector>

#include "docsum/record.hpp"

namespace docsum::tok {

using TokenId = std::int32_t;

inline constexpr TokenId kPad = 0;
inline constexpr TokenId kBos = 1;
inline constexpr TokenId kEos = 2;
inline constexpr TokenId kUnk = 3;
inline constexpr TokenId kMask = 4;
inline constexpr std::size_t kNumSpecials = 5;

inline constexpr std::string_view kSpecialTokens[kNumSpecials] = {"<pad>", "<s>", "</s>", "<unk>", "<mask>"};

class TokenizerError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Byte range of one token in the source text.
struct TokenSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
};

// Tokens are maximal runs of ASCII letters/digits (bytes >= 0x80 count as
// letters so UTF-8 sequences stay inside words) or single punctuation bytes.
std::vector<TokenSpan> token_spans(std::string_view text);
std::vector<std::string> split_tokens(std::string_view text);

// Lowercased tokens joined by single spaces.
std::string normalize(std::string_view text);

class Vocabulary {
public:
    Vocabulary();
    // Specials are prepended; regular tokens get ids 5, 6, ... in order.
    static Vocabulary from_tokens(std::span<const std::string> regular_tokens);
    static Vocabulary load(const std::filesystem::path& path);

    void save(const std::filesystem::path& path) const;
    std::string serialize() const;

    TokenId id_of(std::string_view token) const;  // kUnk when absent
    const std::string& token_of(TokenId id) const;
    bool contains(std::string_view token) const;
    std::size_t size() const { return tokens_.size(); }

    bool operator==(const Vocabulary& other) const { return tokens_ == other.tokens_; }

private:
    void add(std::string token);

    std::vector<std::string> tokens_;
    std::unordered_map<std::string, TokenId> index_;
};

Vocabulary build_vocab(std::span<const DocumentRecord> records, std::size_t max_size, std::size_t min_freq);
Vocabulary build_vocab_from_texts(std::span<const std::string> texts, std::size_t max_size, std::size_t min_freq);

std::vector<TokenId> encode(std::string_view text, const Vocabulary& vocab, bool add_bos_eos);

// <pad>, <s> and </s> are dropped; <unk> and <mask> render literally.
std::string decode(std::span<const TokenId> ids, const Vocabulary& vocab);

std::size_t token_count(std::string_view text, const Vocabulary& vocab);

}  // namespace docsum::tok
