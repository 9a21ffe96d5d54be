// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#include "docsum/annotate.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <atomic>
#include <thread>
#include <variant>

#include "docsum/hash.hpp"
#include "docsum/text.hpp"

namespace docsum::annotate {

namespace fs = std::filesystem;

Task parse_task(std::string_view s) {
    if (s == "qa") return Task::qa;
    if (s == "summary") return Task::summary;
    if (s == "qa_score") return Task::qa_score;
    throw std::invalid_argument("unknown task '" + std::string(s) + "' (expected qa|summary|qa_score)");
}

std::string_view to_string(Task task) {
    switch (task) {
        case Task::qa:
            return "qa";
        case Task::summary:
            return "summary";
        case Task::qa_score:
            return "qa_score";
    }
    return "unknown";
}

TemplateId template_for(Task task) {
    switch (task) {
        case Task::qa:
            return TemplateId::prompt1_qa;
        case Task::summary:
            return TemplateId::prompt2_summary;
        case Task::qa_score:
            return TemplateId::prompt3_qa_score;
    }
    return TemplateId::prompt1_qa;
}

ResponseCache::ResponseCache(fs::path dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) fs::create_directories(dir_);
}

std::string ResponseCache::key(TemplateId id, std::string_view rendered_prompt, std::string_view model_name) {
    std::string material;
    material.reserve(rendered_prompt.size() + model_name.size() + 32);
    material += to_string(id);
    material.push_back('\x1f');
    material += rendered_prompt;
    material.push_back('\x1f');
    material += model_name;
    return to_hex(sha256(material));
}

fs::path ResponseCache::path_for(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<std::string> ResponseCache::get(const std::string& key) const {
    if (dir_.empty()) return std::nullopt;
    fs::path p = path_for(key);
    if (!fs::exists(p)) return std::nullopt;
    try {
        ojson j = ojson::parse(read_text_file(p));
        return j.at("completion").get<std::string>();
    } catch (const std::exception& e) {
        spdlog::warn("ignoring unreadable cache entry {}: {}", p.string(), e.what());
        return std::nullopt;
    }
}

void ResponseCache::put(const std::string& key, TemplateId id, std::string_view model_name,
                        std::string_view completion) const {
    if (dir_.empty()) return;
    ojson j;
    j["template_id"] = std::string(to_string(id));
    j["model_name"] = std::string(model_name);
    j["completion"] = std::string(completion);
    // Unique temp name per writer; the rename is atomic on POSIX.
    fs::path final_path = path_for(key);
    fs::path tmp = final_path;
    tmp += "." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
        AtomicFileWriter out(tmp);
        out.write(dump_line(j));
        out.commit();
    }
    fs::rename(tmp, final_path);
}

ojson AnnotationRun::failure_report() const {
    ojson j;
    j["failure_count"] = failures.size();
    ojson items = ojson::array();
    for (const AnnotationFailure& f : failures) items.push_back({{"doc_id", f.doc_id}, {"reason", f.reason}});
    j["failures"] = std::move(items);
    j["cache_hits"] = cache_hits;
    j["endpoint_calls"] = endpoint_calls;
    return j;
}

namespace {

using Outcome = std::variant<std::monostate, QaAnnotation, SummaryAnnotation, AnnotationFailure>;

struct Job {
    const DocumentRecord* record = nullptr;
    const QaAnnotation* qa = nullptr;
};

PromptFields fields_for(Task task, const Job& job, const AnnotateOptions& options) {
    PromptFields f;
    f.document = job.record->ocr_text;
    if (task == Task::qa) {
        f.category = job.record->canonical_label;
        if (auto it = options.keys.find(job.record->doc_id); it != options.keys.end()) f.key = it->second;
    } else if (task == Task::qa_score && job.qa != nullptr) {
        f.question = job.qa->question;
        f.answer = job.qa->answer;
    }
    return f;
}

Outcome to_outcome(Task task, const Job& job, const std::string& completion, const std::string& model) {
    const std::string& id = job.record->doc_id;
    switch (task) {
        case Task::qa: {
            Parsed<QaPair> p = parse_qa_response(completion);
            if (!ok(p)) return AnnotationFailure{id, "parse: " + std::get<ParseFailure>(p).reason};
            auto& pair = std::get<QaPair>(p);
            return QaAnnotation{id, std::move(pair.question), std::move(pair.answer), std::nullopt, model,
                                QaTemplate::prompt1};
        }
        case Task::summary: {
            Parsed<ScoredSummary> p = parse_summary_response(completion);
            if (!ok(p)) return AnnotationFailure{id, "parse: " + std::get<ParseFailure>(p).reason};
            auto& s = std::get<ScoredSummary>(p);
            return SummaryAnnotation{id, std::move(s.summary), s.score, model};
        }
        case Task::qa_score: {
            Parsed<double> p = parse_score_response(completion);
            if (!ok(p)) return AnnotationFailure{id, "parse: " + std::get<ParseFailure>(p).reason};
            return QaAnnotation{id, job.qa->question, job.qa->answer, std::get<double>(p), model,
                                QaTemplate::prompt3};
        }
    }
    return AnnotationFailure{id, "unknown task"};
}

}  // namespace

AnnotationRun annotate_corpus(std::span<const DocumentRecord> records, Task task, const LlmConfig& config,
                              const fs::path& cache_dir, const AnnotateOptions& options) {
    const ResponseCache cache(cache_dir);
    const TemplateId tid = template_for(task);

    std::map<std::string, const QaAnnotation*> qa_by_id;
    for (const QaAnnotation& a : options.qa_inputs) qa_by_id[a.doc_id] = &a;

    std::vector<Job> jobs;
    jobs.reserve(records.size());
    for (const DocumentRecord& r : records) {
        Job job{&r, nullptr};
        if (task == Task::qa_score) {
            auto it = qa_by_id.find(r.doc_id);
            if (it != qa_by_id.end()) job.qa = it->second;
        }
        jobs.push_back(job);
    }

    std::vector<Outcome> outcomes(jobs.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> hits{0};
    std::atomic<std::size_t> calls{0};

    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            const Job& job = jobs[i];
            const std::string& id = job.record->doc_id;
            try {
                if (task == Task::qa_score && job.qa == nullptr) {
                    outcomes[i] = AnnotationFailure{id, "no question-answer pair to score"};
                    continue;
                }
                std::string prompt = render_prompt(tid, fields_for(task, job, options));
                std::string key = ResponseCache::key(tid, prompt, config.model_name);
                std::string completion;
                if (auto cached = cache.get(key)) {
                    completion = std::move(*cached);
                    hits.fetch_add(1);
                } else {
                    calls.fetch_add(1);
                    completion = call_llm(config, prompt, options.sleep);
                    cache.put(key, tid, config.model_name, completion);
                }
                outcomes[i] = to_outcome(task, job, completion, config.model_name);
            } catch (const PromptError& e) {
                outcomes[i] = AnnotationFailure{id, std::string("prompt: ") + e.what()};
            } catch (const LlmError& e) {
                outcomes[i] = AnnotationFailure{id, std::string("endpoint: ") + e.what()};
            } catch (const std::exception& e) {
                outcomes[i] = AnnotationFailure{id, std::string("error: ") + e.what()};
            }
        }
    };

    std::size_t n_threads = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(config.parallelism, 1)), 1,
                                                    std::max<std::size_t>(jobs.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    AnnotationRun run;
    run.cache_hits = hits.load();
    run.endpoint_calls = calls.load();
    for (Outcome& o : outcomes) {
        if (auto* q = std::get_if<QaAnnotation>(&o)) {
            run.qa.push_back(std::move(*q));
        } else if (auto* s = std::get_if<SummaryAnnotation>(&o)) {
            run.summaries.push_back(std::move(*s));
        } else if (auto* f = std::get_if<AnnotationFailure>(&o)) {
            spdlog::warn("annotation failed for {}: {}", f->doc_id, f->reason);
            run.failures.push_back(std::move(*f));
        }
    }
    auto by_id = [](const auto& a, const auto& b) { return a.doc_id < b.doc_id; };
    std::sort(run.qa.begin(), run.qa.end(), by_id);
    std::sort(run.summaries.begin(), run.summaries.end(), by_id);
    std::sort(run.failures.begin(), run.failures.end(), by_id);
    return run;
}

std::map<std::string, std::string> read_keys_tsv(const fs::path& path) {
    std::map<std::string, std::string> keys;
    for (const std::string& line : text::split(read_text_file(path), '\n')) {
        std::string_view l = line;
        if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
        if (text::trim(l).empty() || l.front() == '#') continue;
        auto tab = l.find('\t');
        if (tab == std::string_view::npos) throw IoError(path.string() + ": expected doc_id<TAB>key");
        keys[std::string(l.substr(0, tab))] = std::string(l.substr(tab + 1));
    }
    return keys;
}

}  // namespace docsum::annotate
