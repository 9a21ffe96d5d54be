// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#include "docsum/parse.hpp"

#include <cctype>
#include <charconv>

#include "docsum/text.hpp"

namespace docsum::annotate {

namespace {

constexpr std::string_view kQuestion = "Question:";
constexpr std::string_view kAnswer = "Answer:";
constexpr std::string_view kGoldSummary = "Gold Summary:";
constexpr std::string_view kScore = "Score:";

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Leading decimal number of s (after whitespace), checked against [0,1].
Parsed<double> leading_score(std::string_view s) {
    s = text::trim(s);
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t digits = 0;
    while (i < s.size() && is_digit(s[i])) ++i, ++digits;
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && is_digit(s[i])) ++i, ++digits;
    }
    if (digits == 0) return ParseFailure{"score is not a number: '" + std::string(s.substr(0, 32)) + "'"};
    std::string_view number = s.substr(0, i);
    if (number.front() == '+') number.remove_prefix(1);
    if (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
        return ParseFailure{"score is not a number: '" + std::string(s.substr(0, 32)) + "'"};
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), value);
    if (ec != std::errc() || ptr != number.data() + number.size()) {
        return ParseFailure{"score is not a number: '" + std::string(number) + "'"};
    }
    if (!(value >= 0.0 && value <= 1.0)) return ParseFailure{"score " + std::string(number) + " outside [0,1]"};
    return value;
}

}  // namespace

Parsed<QaPair> parse_qa_response(std::string_view text) {
    // Last "Question:" that still has an "Answer:" after it; earlier ones are
    // usually the echoed output indicator.
    std::size_t q = text.rfind(kQuestion);
    while (q != std::string_view::npos && text.find(kAnswer, q + kQuestion.size()) == std::string_view::npos) {
        q = q == 0 ? std::string_view::npos : text.rfind(kQuestion, q - 1);
    }
    if (q == std::string_view::npos) {
        if (text.find(kQuestion) == std::string_view::npos) return ParseFailure{"missing 'Question:' marker"};
        return ParseFailure{"missing 'Answer:' marker after 'Question:'"};
    }
    std::size_t a = text.find(kAnswer, q + kQuestion.size());
    std::string_view question = text::trim(text.substr(q + kQuestion.size(), a - q - kQuestion.size()));
    std::string_view answer = text::trim(text.substr(a + kAnswer.size()));
    if (question.empty()) return ParseFailure{"empty question"};
    if (answer.empty()) return ParseFailure{"empty answer"};
    return QaPair{std::string(question), std::string(answer)};
}

Parsed<ScoredSummary> parse_summary_response(std::string_view text) {
    std::size_t s = text.rfind(kScore);
    if (s == std::string_view::npos) return ParseFailure{"missing 'Score:' marker"};
    Parsed<double> score = leading_score(text.substr(s + kScore.size()));
    if (!ok(score)) return std::get<ParseFailure>(score);

    std::string_view head = text.substr(0, s);
    std::size_t g = head.rfind(kGoldSummary);
    std::string_view summary = g == std::string_view::npos ? head : head.substr(g + kGoldSummary.size());
    summary = text::trim(summary);
    if (summary.empty()) return ParseFailure{"empty summary"};
    return ScoredSummary{std::string(summary), std::get<double>(score)};
}

Parsed<double> parse_score_response(std::string_view text) {
    std::size_t s = text.rfind(kScore);
    if (s == std::string_view::npos) {
        std::string_view bare = text::trim(text);
        if (bare.empty()) return ParseFailure{"empty response"};
        Parsed<double> v = leading_score(bare);
        if (!ok(v)) return v;
        // A bare response must be nothing but the number (and maybe a period).
        std::string_view rest = bare;
        std::size_t i = 0;
        while (i < rest.size() && (is_digit(rest[i]) || rest[i] == '.' || rest[i] == '+' || rest[i] == '-')) ++i;
        if (!text::trim(rest.substr(i)).empty()) return ParseFailure{"missing 'Score:' marker"};
        return v;
    }
    return leading_score(text.substr(s + kScore.size()));
}

}  // namespace docsum::annotate
