// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace docsum::annotate {

enum class TemplateId { prompt1_qa, prompt2_summary, prompt3_qa_score };

std::string_view to_string(TemplateId id);
TemplateId parse_template_id(std::string_view s);

class PromptError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PromptFields {
    std::optional<std::string> category;
    std::optional<std::string> key;
    std::optional<std::string> document;
    std::optional<std::string> question;
    std::optional<std::string> answer;
};

/// Expands a template. Lines are joined with '\n' (no trailing newline).
/// prompt1 carries its "Key:" line only when fields.key is set. A required
/// placeholder without a value throws PromptError naming it. Values are
/// inserted verbatim and never re-expanded.
std::string render_prompt(TemplateId id, const PromptFields& fields);

}  // namespace docsum::annotate
