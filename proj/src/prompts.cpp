// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#include "docsum/prompts.hpp"

#include <array>
#include <vector>

namespace docsum::annotate {

namespace {

// Line-level template bodies. "{}" in the output indicators is literal text.
constexpr std::string_view kKeyLine = "Key: {key}";

constexpr std::array<std::string_view, 13> kPrompt1 = {
    "Based on the following elements from the administrative document, generate a clear and concise "
    "question-answer pair:",
    "Category: {category}",
    "Document: {document}",
    "",
    "Instructions:",
    "Formulate a question that directly asks for the key information related to the category, key points, and "
    "document.",
    "Ensure that the question is specific, relevant, and integrates all elements comprehensively.",
    "Provide a direct and informative answer to the question.",
    "The answer should elaborate on the main points, utilizing the information provided in the document.",
    "If sufficient information is unavailable, respond with \"I don't know\".",
    "The answer must be concise, limited to a single sentence.",
    "",
    "Question: {} Answer: {}",
};

constexpr std::array<std::string_view, 11> kPrompt2 = {
    "You are tasked with generating a concise summary from a document image.",
    "Ensure the summary is both comprehensive and relevant.",
    "The summary should consist of no more than three sentences.",
    "Document: {document}",
    "",
    "Instructions:",
    "Utilize as much information from the document as possible.",
    "Provide a confidence score (ranging from 0 to 1).",
    "Do not provide any commentary on the assigned score.",
    "",
    "Gold Summary: {} Score: {}",
};

constexpr std::array<std::string_view, 13> kPrompt3 = {
    "You are tasked with evaluating the answer to a question based on a document image.",
    "The answers are short text spans directly extracted from the document, consisting of contiguous tokens.",
    "Document: {document}",
    "Question: {question}",
    "Answer: {answer}",
    "",
    "Instructions:",
    "Provide a confidence score to evaluate whether the [Answer] references the [Document] and is appropriate in "
    "answering what the [Question] is asking.",
    "If the [Answer] does not reference the [Document], or is inappropriate as an answer to the [Question], it is "
    "considered unacceptable.",
    "Score the result on a scale from 0 to 1, where 0 represents \"Strongly Disagree\" and 1 represents "
    "\"Strongly Agree\".",
    "The output should only contain the confidence score, with no additional comments or explanations.",
    "",
    "Score: {}",
};

const std::optional<std::string>* lookup(const PromptFields& f, std::string_view name) {
    if (name == "category") return &f.category;
    if (name == "key") return &f.key;
    if (name == "document") return &f.document;
    if (name == "question") return &f.question;
    if (name == "answer") return &f.answer;
    return nullptr;
}

void expand_line(std::string_view line, const PromptFields& fields, std::string& out) {
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '{') {
            std::size_t close = line.find('}', i);
            if (close != std::string_view::npos) {
                std::string_view name = line.substr(i + 1, close - i - 1);
                if (const auto* value = lookup(fields, name)) {
                    if (!value->has_value()) throw PromptError("missing placeholder {" + std::string(name) + "}");
                    out += **value;
                    i = close + 1;
                    continue;
                }
            }
        }
        out.push_back(line[i]);
        ++i;
    }
}

}  // namespace

std::string_view to_string(TemplateId id) {
    switch (id) {
        case TemplateId::prompt1_qa:
            return "prompt1_qa";
        case TemplateId::prompt2_summary:
            return "prompt2_summary";
        case TemplateId::prompt3_qa_score:
            return "prompt3_qa_score";
    }
    return "unknown";
}

TemplateId parse_template_id(std::string_view s) {
    if (s == "prompt1_qa") return TemplateId::prompt1_qa;
    if (s == "prompt2_summary") return TemplateId::prompt2_summary;
    if (s == "prompt3_qa_score") return TemplateId::prompt3_qa_score;
    throw PromptError("unknown template '" + std::string(s) + "'");
}

std::string render_prompt(TemplateId id, const PromptFields& fields) {
    std::vector<std::string_view> lines;
    switch (id) {
        case TemplateId::prompt1_qa:
            lines.assign(kPrompt1.begin(), kPrompt1.end());
            if (fields.key) lines.insert(lines.begin() + 2, kKeyLine);
            break;
        case TemplateId::prompt2_summary:
            lines.assign(kPrompt2.begin(), kPrompt2.end());
            break;
        case TemplateId::prompt3_qa_score:
            lines.assign(kPrompt3.begin(), kPrompt3.end());
            break;
    }
    std::string out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i > 0) out.push_back('\n');
        expand_line(lines[i], fields, out);
    }
    return out;
}

}  // namespace docsum::annotate
