// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#include "docsum/tokenizer.hpp"

#include <algorithm>
#include <map>

#include "docsum/text.hpp"

namespace docsum::tok {

namespace {

bool is_word_byte(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c >= 0x80;
}

}  // namespace

std::vector<TokenSpan> token_spans(std::string_view text) {
    std::vector<TokenSpan> spans;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        auto c = static_cast<unsigned char>(text[i]);
        if (text::is_space(static_cast<char>(c))) {
            ++i;
        } else if (is_word_byte(c)) {
            std::size_t start = i;
            while (i < n && is_word_byte(static_cast<unsigned char>(text[i]))) ++i;
            spans.push_back({start, i});
        } else {
            spans.push_back({i, i + 1});
            ++i;
        }
    }
    return spans;
}

std::vector<std::string> split_tokens(std::string_view text) {
    std::vector<std::string> out;
    for (const TokenSpan& s : token_spans(text)) out.push_back(text::lower(text.substr(s.begin, s.end - s.begin)));
    return out;
}

std::string normalize(std::string_view text) {
    std::string out;
    for (const std::string& t : split_tokens(text)) {
        if (!out.empty()) out.push_back(' ');
        out += t;
    }
    return out;
}

Vocabulary::Vocabulary() {
    for (std::string_view s : kSpecialTokens) add(std::string(s));
}

void Vocabulary::add(std::string token) {
    auto id = static_cast<TokenId>(tokens_.size());
    if (!index_.emplace(token, id).second) throw TokenizerError("duplicate vocabulary token '" + token + "'");
    tokens_.push_back(std::move(token));
}

Vocabulary Vocabulary::from_tokens(std::span<const std::string> regular_tokens) {
    Vocabulary v;
    for (const std::string& t : regular_tokens) {
        if (t.empty() || t.find_first_of(" \t\r\n") != std::string::npos) {
            throw TokenizerError("invalid vocabulary token '" + t + "'");
        }
        v.add(t);
    }
    return v;
}

std::string Vocabulary::serialize() const {
    std::string out;
    for (const std::string& t : tokens_) {
        out += t;
        out.push_back('\n');
    }
    return out;
}

void Vocabulary::save(const std::filesystem::path& path) const { write_text_file(path, serialize()); }

Vocabulary Vocabulary::load(const std::filesystem::path& path) {
    std::vector<std::string> lines = text::split(read_text_file(path), '\n');
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.size() < kNumSpecials) throw TokenizerError(path.string() + ": vocabulary shorter than the special block");
    for (std::size_t i = 0; i < kNumSpecials; ++i) {
        if (lines[i] != kSpecialTokens[i]) {
            throw TokenizerError(path.string() + ": line " + std::to_string(i) + " must be " +
                                 std::string(kSpecialTokens[i]));
        }
    }
    std::vector<std::string> regular(lines.begin() + kNumSpecials, lines.end());
    return from_tokens(regular);
}

TokenId Vocabulary::id_of(std::string_view token) const {
    auto it = index_.find(std::string(token));
    return it == index_.end() ? kUnk : it->second;
}

const std::string& Vocabulary::token_of(TokenId id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= tokens_.size()) {
        throw TokenizerError("token id " + std::to_string(id) + " out of range");
    }
    return tokens_[static_cast<std::size_t>(id)];
}

bool Vocabulary::contains(std::string_view token) const { return index_.count(std::string(token)) != 0; }

Vocabulary build_vocab_from_texts(std::span<const std::string> texts, std::size_t max_size, std::size_t min_freq) {
    if (texts.empty()) throw TokenizerError("cannot build a vocabulary from an empty corpus");
    if (max_size < kNumSpecials) throw TokenizerError("max_size must leave room for the 5 special tokens");
    std::map<std::string, std::size_t> freq;
    for (const std::string& t : texts) {
        for (std::string& tok : split_tokens(t)) ++freq[std::move(tok)];
    }
    std::vector<std::pair<std::string, std::size_t>> ranked;
    for (auto& [tok, n] : freq) {
        if (n >= min_freq && !std::count(std::begin(kSpecialTokens), std::end(kSpecialTokens), tok)) {
            ranked.emplace_back(tok, n);
        }
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    std::size_t keep = std::min(ranked.size(), max_size - kNumSpecials);
    std::vector<std::string> tokens;
    tokens.reserve(keep);
    for (std::size_t i = 0; i < keep; ++i) tokens.push_back(ranked[i].first);
    return Vocabulary::from_tokens(tokens);
}

Vocabulary build_vocab(std::span<const DocumentRecord> records, std::size_t max_size, std::size_t min_freq) {
    std::vector<std::string> texts;
    texts.reserve(records.size());
    for (const DocumentRecord& r : records) texts.push_back(r.ocr_text);
    return build_vocab_from_texts(texts, max_size, min_freq);
}

std::vector<TokenId> encode(std::string_view text, const Vocabulary& vocab, bool add_bos_eos) {
    std::vector<TokenId> ids;
    if (add_bos_eos) ids.push_back(kBos);
    for (const std::string& t : split_tokens(text)) ids.push_back(vocab.id_of(t));
    if (add_bos_eos) ids.push_back(kEos);
    return ids;
}

std::string decode(std::span<const TokenId> ids, const Vocabulary& vocab) {
    std::string out;
    for (TokenId id : ids) {
        if (id == kPad || id == kBos || id == kEos) continue;
        if (!out.empty()) out.push_back(' ');
        out += vocab.token_of(id);
    }
    return out;
}

std::size_t token_count(std::string_view text, const Vocabulary& /*vocab*/) { return token_spans(text).size(); }

}  // namespace docsum::tok
