// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "docsum/record.hpp"
#include "docsum/tokenizer.hpp"

namespace docsum::compose {

inline constexpr std::size_t kInputBudget = 512;

class ComposeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// a: document only, b: question, c: answer, d: question and answer.
enum class InputFormat { a, b, c, d };

std::string_view to_string(InputFormat f);
InputFormat parse_format(std::string_view s);

struct ComposedExample {
    std::string doc_id;
    std::string input_text;
    std::optional<std::string> target_summary;
    InputFormat format = InputFormat::a;
    std::size_t input_token_count = 0;
    std::size_t document_offset = 0;  // byte offset of the document text in input_text

    bool operator==(const ComposedExample&) const = default;
};

/// "Document: {doc}", "Question: {q} Document: {doc}", "Answer: {a} Document: {doc}"
/// or "Question: {q} Answer: {a} Document: {doc}".
ComposedExample compose_input(const DocumentRecord& record, const QaAnnotation* qa, InputFormat format,
                              const tok::Vocabulary& vocab);

/// Cuts document tokens from the end until the input fits the budget. The
/// question/answer prefix is never cut; a prefix that alone exceeds the
/// budget throws ComposeError.
ComposedExample truncate_to_budget(const ComposedExample& example, const tok::Vocabulary& vocab,
                                   std::size_t budget = kInputBudget);

// Byte offset of the document within an input of the given format: just
// after the first "Document: " marker.
std::size_t find_document_offset(std::string_view input_text);

// Tokens in input_text before the document text.
std::size_t prefix_token_count(const ComposedExample& example, const tok::Vocabulary& vocab);

ojson to_json(const ComposedExample& e);
ComposedExample composed_from_json(const ojson& j, const tok::Vocabulary& vocab);

std::size_t write_composed(std::span<const ComposedExample> items, const std::filesystem::path& path);
std::vector<ComposedExample> read_composed(const std::filesystem::path& path, const tok::Vocabulary& vocab);

}  // namespace docsum::compose
