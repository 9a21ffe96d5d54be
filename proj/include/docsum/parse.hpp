// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <variant>

namespace docsum::annotate {

struct ParseFailure {
    std::string reason;
};

template <class T>
using Parsed = std::variant<T, ParseFailure>;

template <class T>
bool ok(const Parsed<T>& p) {
    return std::holds_alternative<T>(p);
}

struct QaPair {
    std::string question;
    std::string answer;
};

struct ScoredSummary {
    std::string summary;
    double score = 0.0;
};

// "Question: ... Answer: ..."; both spans trimmed and non-empty.
Parsed<QaPair> parse_qa_response(std::string_view text);

// "Gold Summary: ... Score: x". The last "Score:" wins; the "Gold Summary:"
// marker is optional, the score is not.
Parsed<ScoredSummary> parse_summary_response(std::string_view text);

// "Score: x" (last occurrence) or a bare number.
Parsed<double> parse_score_response(std::string_view text);

}  // namespace docsum::annotate
