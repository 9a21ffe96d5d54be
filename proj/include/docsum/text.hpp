// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace docsum::text {

inline bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

inline char to_lower_ascii(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string lower(std::string_view s);
std::string_view trim(std::string_view s);

// Whitespace-delimited words; the cached DocumentRecord::word_count is the size of this.
std::vector<std::string_view> split_whitespace(std::string_view s);
std::size_t count_words(std::string_view s);

// Lowercase, collapse whitespace runs to one space, trim.
std::string collapse_whitespace_lower(std::string_view s);

bool is_valid_utf8(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);

}  // namespace docsum::text
