// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#include "docsum/compose.hpp"

namespace docsum::compose {

namespace {

constexpr std::string_view kDocumentMarker = "Document: ";

}  // namespace

std::string_view to_string(InputFormat f) {
    switch (f) {
        case InputFormat::a:
            return "a";
        case InputFormat::b:
            return "b";
        case InputFormat::c:
            return "c";
        case InputFormat::d:
            return "d";
    }
    return "a";
}

InputFormat parse_format(std::string_view s) {
    if (s == "a") return InputFormat::a;
    if (s == "b") return InputFormat::b;
    if (s == "c") return InputFormat::c;
    if (s == "d") return InputFormat::d;
    throw ComposeError("unknown input format '" + std::string(s) + "' (expected a|b|c|d)");
}

ComposedExample compose_input(const DocumentRecord& record, const QaAnnotation* qa, InputFormat format,
                              const tok::Vocabulary& vocab) {
    const bool wants_question = format == InputFormat::b || format == InputFormat::d;
    const bool wants_answer = format == InputFormat::c || format == InputFormat::d;
    if ((wants_question || wants_answer) && qa == nullptr) {
        throw ComposeError("format " + std::string(to_string(format)) + " needs a question-answer pair for '" +
                           record.doc_id + "'");
    }
    if (wants_question && qa->question.empty()) throw ComposeError("empty question for '" + record.doc_id + "'");
    if (wants_answer && qa->answer.empty()) throw ComposeError("empty answer for '" + record.doc_id + "'");

    ComposedExample e;
    e.doc_id = record.doc_id;
    e.format = format;
    if (wants_question) e.input_text += "Question: " + qa->question + " ";
    if (wants_answer) e.input_text += "Answer: " + qa->answer + " ";
    e.input_text += kDocumentMarker;
    e.document_offset = e.input_text.size();
    e.input_text += record.ocr_text;
    e.input_token_count = tok::token_count(e.input_text, vocab);
    return e;
}

std::size_t find_document_offset(std::string_view input_text) {
    std::size_t pos = input_text.find(kDocumentMarker);
    if (pos == std::string_view::npos) {
        // "Document:" followed directly by an empty document
        if (input_text.size() >= 9 && input_text.substr(input_text.size() - 9) == "Document:") {
            return input_text.size();
        }
        throw ComposeError("input has no 'Document: ' marker");
    }
    return pos + kDocumentMarker.size();
}

std::size_t prefix_token_count(const ComposedExample& example, const tok::Vocabulary& vocab) {
    return tok::token_count(std::string_view(example.input_text).substr(0, example.document_offset), vocab);
}

ComposedExample truncate_to_budget(const ComposedExample& example, const tok::Vocabulary& vocab, std::size_t budget) {
    const std::size_t prefix_tokens = prefix_token_count(example, vocab);
    if (prefix_tokens > budget) {
        throw ComposeError("prefix of '" + example.doc_id + "' has " + std::to_string(prefix_tokens) +
                           " tokens, over the budget of " + std::to_string(budget));
    }
    std::string_view doc = std::string_view(example.input_text).substr(example.document_offset);
    std::vector<tok::TokenSpan> spans = tok::token_spans(doc);
    if (prefix_tokens + spans.size() <= budget) {
        ComposedExample same = example;
        same.input_token_count = prefix_tokens + spans.size();
        return same;
    }
    const std::size_t keep = budget - prefix_tokens;
    const std::size_t cut = keep == 0 ? 0 : spans[keep - 1].end;

    ComposedExample out = example;
    out.input_text = example.input_text.substr(0, example.document_offset) + std::string(doc.substr(0, cut));
    out.input_token_count = prefix_tokens + keep;
    return out;
}

ojson to_json(const ComposedExample& e) {
    ojson j;
    j["doc_id"] = e.doc_id;
    j["input_text"] = e.input_text;
    j["target_summary"] = e.target_summary ? ojson(*e.target_summary) : ojson(nullptr);
    j["format"] = std::string(to_string(e.format));
    return j;
}

ComposedExample composed_from_json(const ojson& j, const tok::Vocabulary& vocab) {
    ComposedExample e;
    e.doc_id = j.at("doc_id").get<std::string>();
    e.input_text = j.at("input_text").get<std::string>();
    if (auto it = j.find("target_summary"); it != j.end() && !it->is_null()) e.target_summary = it->get<std::string>();
    e.format = parse_format(j.at("format").get<std::string>());
    e.document_offset = find_document_offset(e.input_text);
    e.input_token_count = tok::token_count(e.input_text, vocab);
    return e;
}

std::size_t write_composed(std::span<const ComposedExample> items, const std::filesystem::path& path) {
    AtomicFileWriter out(path);
    for (const ComposedExample& e : items) {
        std::string line = dump_line(to_json(e));
        line.push_back('\n');
        out.write(line);
    }
    out.commit();
    return items.size();
}

std::vector<ComposedExample> read_composed(const std::filesystem::path& path, const tok::Vocabulary& vocab) {
    std::vector<ComposedExample> out;
    for_each_jsonl(path, [&](const ojson& j, std::size_t line) {
        try {
            out.push_back(composed_from_json(j, vocab));
        } catch (const std::exception& e) {
            throw ComposeError(path.string() + ": line " + std::to_string(line) + ": " + e.what());
        }
    });
    return out;
}

}  // namespace docsum::compose
