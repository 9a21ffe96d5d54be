// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#include "docsum/record.hpp"

#include <unordered_set>

#include "docsum/text.hpp"

namespace docsum {

namespace fs = std::filesystem;

std::string_view to_string(Source source) {
    return source == Source::pretrain_corpus ? "pretrain_corpus" : "downstream_corpus";
}

Source parse_source(std::string_view s) {
    if (s == "pretrain_corpus") return Source::pretrain_corpus;
    if (s == "downstream_corpus") return Source::downstream_corpus;
    throw RecordError("unknown source '" + std::string(s) + "'");
}

std::string_view to_string(QaTemplate t) { return t == QaTemplate::prompt1 ? "prompt1" : "prompt3"; }

QaTemplate parse_qa_template(std::string_view s) {
    if (s == "prompt1") return QaTemplate::prompt1;
    if (s == "prompt3") return QaTemplate::prompt3;
    throw RecordError("unknown template_id '" + std::string(s) + "'");
}

DocumentRecord make_record(std::string doc_id, std::string ocr_text, std::vector<std::string> raw_labels,
                           Source source, std::optional<std::string> canonical_label) {
    if (doc_id.empty()) throw RecordError("empty doc_id");
    DocumentRecord r;
    r.word_count = text::count_words(ocr_text);
    r.doc_id = std::move(doc_id);
    r.ocr_text = std::move(ocr_text);
    r.raw_labels = std::move(raw_labels);
    r.canonical_label = std::move(canonical_label);
    r.source = source;
    return r;
}

namespace {

void check_score(double score) {
    if (!(score >= 0.0 && score <= 1.0)) throw RecordError("score " + std::to_string(score) + " outside [0,1]");
}

void check_doc_id(const std::string& id) {
    if (id.empty()) throw RecordError("empty doc_id");
}

const ojson& field(const ojson& j, const char* name) {
    if (!j.is_object()) throw RecordError("expected a JSON object");
    auto it = j.find(name);
    if (it == j.end()) throw RecordError(std::string("missing field '") + name + "'");
    return *it;
}

std::string string_field(const ojson& j, const char* name) {
    const ojson& v = field(j, name);
    if (!v.is_string()) throw RecordError(std::string("field '") + name + "' must be a string");
    return v.get<std::string>();
}

double number_field(const ojson& v, const char* name) {
    if (!v.is_number()) throw RecordError(std::string("field '") + name + "' must be a number");
    return v.get<double>();
}

template <class T, class Parse>
std::vector<T> read_jsonl_items(const fs::path& path, Parse parse) {
    std::vector<T> out;
    std::unordered_set<std::string> seen;
    for_each_jsonl(path, [&](const ojson& j, std::size_t line) {
        T item;
        try {
            item = parse(j);
        } catch (const RecordError& e) {
            throw RecordError(path.string() + ": line " + std::to_string(line) + ": " + e.what());
        } catch (const nlohmann::json::exception& e) {
            throw RecordError(path.string() + ": line " + std::to_string(line) + ": " + e.what());
        }
        if (!seen.insert(item.doc_id).second) {
            throw RecordError(path.string() + ": line " + std::to_string(line) + ": duplicate doc_id '" + item.doc_id +
                              "'");
        }
        out.push_back(std::move(item));
    });
    return out;
}

template <class T>
std::size_t write_jsonl_items(std::span<const T> items, const fs::path& path) {
    AtomicFileWriter out(path);
    for (const T& item : items) {
        std::string line = dump_line(to_json(item));
        line.push_back('\n');
        out.write(line);
    }
    out.commit();
    return items.size();
}

}  // namespace

ojson to_json(const DocumentRecord& r) {
    ojson j;
    j["doc_id"] = r.doc_id;
    j["ocr_text"] = r.ocr_text;
    j["raw_labels"] = r.raw_labels;
    j["canonical_label"] = r.canonical_label ? ojson(*r.canonical_label) : ojson(nullptr);
    j["source"] = std::string(to_string(r.source));
    j["word_count"] = r.word_count;
    return j;
}

ojson to_json(const QaAnnotation& a) {
    ojson j;
    j["doc_id"] = a.doc_id;
    j["question"] = a.question;
    j["answer"] = a.answer;
    j["score"] = a.score ? ojson(*a.score) : ojson(nullptr);
    j["model_name"] = a.model_name;
    j["template_id"] = std::string(to_string(a.template_id));
    return j;
}

ojson to_json(const SummaryAnnotation& a) {
    ojson j;
    j["doc_id"] = a.doc_id;
    j["summary"] = a.summary;
    j["score"] = a.score;
    j["model_name"] = a.model_name;
    return j;
}

DocumentRecord record_from_json(const ojson& j) {
    DocumentRecord r;
    r.doc_id = string_field(j, "doc_id");
    check_doc_id(r.doc_id);
    r.ocr_text = string_field(j, "ocr_text");
    const ojson& labels = field(j, "raw_labels");
    if (!labels.is_array()) throw RecordError("field 'raw_labels' must be an array");
    for (const ojson& l : labels) {
        if (!l.is_string()) throw RecordError("raw_labels entries must be strings");
        r.raw_labels.push_back(l.get<std::string>());
    }
    if (auto it = j.find("canonical_label"); it != j.end() && !it->is_null()) {
        if (!it->is_string()) throw RecordError("field 'canonical_label' must be a string or null");
        r.canonical_label = it->get<std::string>();
    }
    r.source = parse_source(string_field(j, "source"));
    const ojson& wc = field(j, "word_count");
    if (!wc.is_number_unsigned()) throw RecordError("field 'word_count' must be a non-negative integer");
    r.word_count = wc.get<std::size_t>();
    if (r.word_count != text::count_words(r.ocr_text)) {
        throw RecordError("word_count " + std::to_string(r.word_count) + " does not match ocr_text (" +
                          std::to_string(text::count_words(r.ocr_text)) + ")");
    }
    return r;
}

QaAnnotation qa_from_json(const ojson& j) {
    QaAnnotation a;
    a.doc_id = string_field(j, "doc_id");
    check_doc_id(a.doc_id);
    a.question = string_field(j, "question");
    a.answer = string_field(j, "answer");
    if (auto it = j.find("score"); it != j.end() && !it->is_null()) {
        a.score = number_field(*it, "score");
        check_score(*a.score);
    }
    a.model_name = string_field(j, "model_name");
    a.template_id = parse_qa_template(string_field(j, "template_id"));
    return a;
}

SummaryAnnotation summary_from_json(const ojson& j) {
    SummaryAnnotation a;
    a.doc_id = string_field(j, "doc_id");
    check_doc_id(a.doc_id);
    a.summary = string_field(j, "summary");
    a.score = number_field(field(j, "score"), "score");
    check_score(a.score);
    a.model_name = string_field(j, "model_name");
    return a;
}

std::size_t write_records(std::span<const DocumentRecord> records, const fs::path& path) {
    return write_jsonl_items(records, path);
}

std::vector<DocumentRecord> read_records(const fs::path& path) {
    return read_jsonl_items<DocumentRecord>(path, record_from_json);
}

std::size_t write_qa_annotations(std::span<const QaAnnotation> items, const fs::path& path) {
    return write_jsonl_items(items, path);
}

std::vector<QaAnnotation> read_qa_annotations(const fs::path& path) {
    return read_jsonl_items<QaAnnotation>(path, qa_from_json);
}

std::size_t write_summary_annotations(std::span<const SummaryAnnotation> items, const fs::path& path) {
    return write_jsonl_items(items, path);
}

std::vector<SummaryAnnotation> read_summary_annotations(const fs::path& path) {
    return read_jsonl_items<SummaryAnnotation>(path, summary_from_json);
}

}  // namespace docsum
