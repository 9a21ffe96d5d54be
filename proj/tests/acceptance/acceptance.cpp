// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
// One PASS/FAIL line per primary acceptance criterion; exit status is the
// number of failures (capped at 1).
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "docsum/annotate.hpp"
#include "docsum/cli.hpp"
#include "docsum/compose.hpp"
#include "docsum/filter.hpp"
#include "docsum/gate_split.hpp"
#include "docsum/masking.hpp"
#include "docsum/metrics.hpp"
#include "docsum/prompts.hpp"

#include <spdlog/spdlog.h>
#include "support/fixtures.hpp"
#include "support/mock_llm_server.hpp"
#include "support/oracles.hpp"

using namespace docsum;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------

Outcome metric_oracle_equivalence() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    SeededRng rng(20240501);
    std::size_t mismatches = 0;
    for (int i = 0; i < 200; ++i) {
        testing::Toks c = testing::random_tokens(rng, 12), r = testing::random_tokens(rng, 12);
        for (std::size_t n : {1, 2}) {
            std::size_t ov = testing::naive_ngram_overlap(c, r, n);
            std::size_t ct = c.size() >= n ? c.size() - n + 1 : 0;
            std::size_t rt = r.size() >= n ? r.size() - n + 1 : 0;
            if (metrics::rouge_n(c, r, n).f1 != testing::naive_f1(ov, ct, rt)) ++mismatches;
        }
        if (metrics::lcs_length(c, r) != testing::exhaustive_lcs(c, r)) ++mismatches;
    }
    double secs = seconds_since(t0);
    o.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
    o.expect(secs < 10.0, "took " + std::to_string(secs) + " s");
    if (o.pass) o.detail = "200 pairs exact, " + std::to_string(secs).substr(0, 5) + " s";
    return o;
}

Outcome worked_metric_values() {
    Outcome o;
    double r1 = metrics::rouge_n("the cat", "the cat sat", 1).f1;
    testing::Toks a{"a", "c", "b", "d"}, b{"a", "b", "c", "d"};
    double rl = metrics::rouge_l(a, b).f1;
    o.expect(std::abs(r1 - 0.8) < 1e-9, "ROUGE-1 F1 = " + std::to_string(r1));
    o.expect(metrics::lcs_length(a, b) == 3, "LCS != 3");
    o.expect(std::abs(rl - 0.75) < 1e-9, "ROUGE-L F1 = " + std::to_string(rl));
    if (o.pass) o.detail = "ROUGE-1 F1 0.8, ROUGE-L F1 0.75";
    return o;
}

Outcome prompt_fidelity() {
    Outcome o;
    auto golden = [](const char* name) { return read_text_file(fs::path(DOCSUM_GOLDEN_DIR) / name); };
    const std::string doc = "ACME Corp Invoice No. 42 Total due: $310.00 by 2023-05-01";
    annotate::PromptFields f;
    f.category = "invoice";
    f.document = doc;
    o.expect(annotate::render_prompt(annotate::TemplateId::prompt1_qa, f) == golden("prompt1_no_key.txt"),
             "prompt #1 without key differs");
    f.key = "payment due date";
    o.expect(annotate::render_prompt(annotate::TemplateId::prompt1_qa, f) == golden("prompt1_with_key.txt"),
             "prompt #1 with key differs");
    annotate::PromptFields s;
    s.document = doc;
    o.expect(annotate::render_prompt(annotate::TemplateId::prompt2_summary, s) == golden("prompt2.txt"),
             "prompt #2 differs");
    annotate::PromptFields q;
    q.document = doc;
    q.question = "What is the total due?";
    q.answer = "$310.00";
    o.expect(annotate::render_prompt(annotate::TemplateId::prompt3_qa_score, q) == golden("prompt3.txt"),
             "prompt #3 differs");
    if (o.pass) o.detail = "4 golden files byte-equal (Key: line on/off)";
    return o;
}

Outcome filter_ledger() {
    Outcome o;
    testing::PlantedCorpus c = testing::planted_corpus(900, 50, 20, 30, 1000);
    filter::Filtered f = filter::run_filters(c.records, filter::FilterOptions{100});
    const filter::FilterReport& r = f.report;
    o.expect(r.input_count == 1000, "input " + std::to_string(r.input_count));
    o.expect(r.removed_duplicates == 50, "duplicates " + std::to_string(r.removed_duplicates));
    o.expect(r.removed_empty == 20, "empties " + std::to_string(r.removed_empty));
    o.expect(r.removed_short == 30, "short " + std::to_string(r.removed_short));
    o.expect(r.reconciles(), "ledger does not reconcile");
    if (o.pass) o.detail = "1000 in, 50/20/30 removed, 900 out, reconciled";
    return o;
}

Outcome gate_and_split() {
    Outcome o;
    std::vector<SummaryAnnotation> s{{"a", "x", 0.6, "m"}, {"b", "y", 0.9, "m"}, {"c", "z", 0.98, "m"}};
    auto g = split::confidence_gate(s);
    o.expect(g.kept.size() == 1 && g.kept[0].score == 0.98, "gate kept the wrong set");

    std::vector<std::string> ids;
    for (int i = 0; i < 29444; ++i) ids.push_back("doc" + std::to_string(i));
    split::SplitManifest first = split::split_dataset(ids, 42);
    o.expect(first.train_ids.size() == 20610, "train " + std::to_string(first.train_ids.size()));
    o.expect(first.val_ids.size() == 4416, "val " + std::to_string(first.val_ids.size()));
    o.expect(first.test_ids.size() == 4418, "test " + std::to_string(first.test_ids.size()));
    std::set<std::string> all;
    std::size_t total = 0;
    for (const auto* part : {&first.train_ids, &first.val_ids, &first.test_ids}) {
        all.insert(part->begin(), part->end());
        total += part->size();
    }
    o.expect(total == all.size() && all == std::set<std::string>(ids.begin(), ids.end()), "not a disjoint cover");
    for (int rerun = 0; rerun < 3; ++rerun) {
        split::SplitManifest again = split::split_dataset(ids, 42);
        o.expect(again.to_json() == first.to_json(), "rerun " + std::to_string(rerun) + " differs");
    }
    if (o.pass) o.detail = "kept {0.98}; 20610/4416/4418 partition, stable over 3 reruns";
    return o;
}

Outcome masking_law() {
    Outcome o;
    SeededRng rng(77);
    std::vector<std::vector<tok::TokenId>> seqs;
    for (int i = 0; i < 1000; ++i) {
        std::vector<tok::TokenId> ids{tok::kBos};
        std::size_t n = rng.below(511);
        for (std::size_t k = 0; k < n; ++k) ids.push_back(static_cast<tok::TokenId>(tok::kUnk + rng.below(5000)));
        ids.push_back(tok::kEos);
        seqs.push_back(std::move(ids));
    }
    auto run = [&] {
        std::vector<masking::MaskedPair> out;
        for (std::size_t i = 0; i < seqs.size(); ++i) {
            masking::MaskedPair p = masking::mask_tokens(seqs[i], masking::kDefaultRate, 1234 + i);
            p.doc_id = "s" + std::to_string(i);
            out.push_back(std::move(p));
        }
        return out;
    };
    std::vector<masking::MaskedPair> pairs = run();
    std::size_t bad_count = 0, bad_rebuild = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        std::size_t maskable = seqs[i].size() - 2;
        // floor(0.15 n) in exact integer arithmetic
        if (p.masked_positions.size() != (15 * maskable) / 100) ++bad_count;
        std::vector<tok::TokenId> rebuilt = p.corrupted;
        for (std::size_t pos : p.masked_positions) rebuilt[pos] = p.original[pos];
        if (rebuilt != seqs[i] || p.original != seqs[i]) ++bad_rebuild;
    }
    o.expect(bad_count == 0, std::to_string(bad_count) + " count violations");
    o.expect(bad_rebuild == 0, std::to_string(bad_rebuild) + " reconstruction failures");

    testing::TempDir dir;
    masking::write_masked_pairs(pairs, dir / "a.jsonl");
    masking::write_masked_pairs(run(), dir / "b.jsonl");
    o.expect(file_sha256_hex(dir / "a.jsonl") == file_sha256_hex(dir / "b.jsonl"), "reruns not byte-identical");
    if (o.pass) o.detail = "1000 sequences: floor(0.15 n) masked, exact reconstruction, byte-identical rerun";
    return o;
}

Outcome composition() {
    Outcome o;
    tok::Vocabulary v;
    QaAnnotation qa{"d", "Who sent it?", "Dr. Kuhn.", 0.95, "m", QaTemplate::prompt3};
    DocumentRecord r = make_record("d", "Memo text.", {}, Source::downstream_corpus);
    using compose::InputFormat;
    o.expect(compose::compose_input(r, nullptr, InputFormat::a, v).input_text == "Document: Memo text.", "format a");
    o.expect(compose::compose_input(r, &qa, InputFormat::b, v).input_text == "Question: Who sent it? Document: Memo text.",
             "format b");
    o.expect(compose::compose_input(r, &qa, InputFormat::c, v).input_text == "Answer: Dr. Kuhn. Document: Memo text.",
             "format c");
    o.expect(compose::compose_input(r, &qa, InputFormat::d, v).input_text ==
                 "Question: Who sent it? Answer: Dr. Kuhn. Document: Memo text.",
             "format d");

    std::string big = "w0";
    for (int i = 1; i < 600; ++i) big += " w" + std::to_string(i);
    DocumentRecord long_doc = make_record("d", big, {}, Source::downstream_corpus);
    compose::ComposedExample a = compose::truncate_to_budget(compose::compose_input(long_doc, nullptr, InputFormat::a, v), v);
    o.expect(a.input_token_count == 512 && tok::token_count(a.input_text, v) == 512,
             "format a input has " + std::to_string(tok::token_count(a.input_text, v)) + " tokens");
    compose::ComposedExample d = compose::truncate_to_budget(compose::compose_input(long_doc, &qa, InputFormat::d, v), v);
    const std::string prefix = "Question: Who sent it? Answer: Dr. Kuhn. Document: ";
    o.expect(tok::token_count(d.input_text, v) == 512, "format d input is not 512 tokens");
    o.expect(d.input_text.rfind(prefix + "w0 w1 ", 0) == 0, "question/answer prefix not intact");
    if (o.pass) o.detail = "a-d layouts literal; 600-token document cut to 512 with prefix intact";
    return o;
}

Outcome annotator_vs_mock() {
    Outcome o;
    testing::MockLlmServer server([](const std::string& prompt, std::size_t call) {
        if (call == 0) return testing::MockReply{429, "{\"error\":\"rate limited\"}"};
        if (testing::prompt_document(prompt).rfind("MALFORMED", 0) == 0) {
            return testing::MockReply{200, testing::chat_body("Sure! Here is what I found in the page.")};
        }
        return testing::MockReply{200, testing::chat_body(testing::default_completion(prompt))};
    });
    testing::TempDir dir;
    SeededRng rng(10);
    std::vector<DocumentRecord> rs;
    for (int i = 0; i < 10; ++i) {
        std::string t = testing::synthetic_text(rng, 60);
        if (i == 6) t = "MALFORMED " + t;
        rs.push_back(make_record("doc" + std::to_string(i), t, {"memo"}, Source::downstream_corpus, "memo"));
    }
    annotate::LlmConfig cfg;
    cfg.base_url = server.base_url();
    cfg.model_name = "mock";
    cfg.parallelism = 1;  // the rate-limited request is then the first one
    cfg.timeout = std::chrono::seconds(10);
    std::size_t sleeps = 0;
    annotate::AnnotateOptions opts;
    opts.sleep = [&](std::chrono::milliseconds) { ++sleeps; };

    annotate::AnnotationRun first = annotate::annotate_corpus(rs, annotate::Task::qa, cfg, dir / "cache", opts);
    o.expect(first.qa.size() == 9, std::to_string(first.qa.size()) + " parses");
    o.expect(first.failures.size() == 1 && first.failures[0].doc_id == "doc6" &&
                 first.failures[0].reason.rfind("parse:", 0) == 0,
             "expected one typed parse failure for doc6");
    o.expect(sleeps == 1 && server.chat_calls() == 11, "retry did not fire exactly once");
    std::size_t calls_before = server.chat_calls();

    annotate::AnnotationRun second = annotate::annotate_corpus(rs, annotate::Task::qa, cfg, dir / "cache", opts);
    o.expect(server.chat_calls() == calls_before && second.endpoint_calls == 0, "second run hit the network");
    o.expect(second.cache_hits == 10, "cache hits " + std::to_string(second.cache_hits));
    o.expect(second.qa == first.qa, "cached parses differ");
    if (o.pass) o.detail = "9 parses + 1 parse failure; 429 retried once; rerun 10/10 cache hits, 0 calls";
    return o;
}

int run_cli_quiet(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"docsum"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream sink;
    auto* old = std::cout.rdbuf(sink.rdbuf());
    int code = cli::run(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old);
    return code;
}

// ingest -> filter -> annotate (qa, summary, qa_score) -> gate -> split ->
// compose -> mask, all through the CLI. Returns output-name -> digest.
std::map<std::string, std::string> run_pipeline(const fs::path& corpus, const fs::path& out, const std::string& url,
                                                std::string& error) {
    const std::string o = out.string();
    auto p = [&](const char* name) { return (out / name).string(); };
    const std::vector<std::vector<std::string>> steps = {
        {"ingest", "--src", corpus.string(), "--layout", "downstream"},
        {"filter", "--input", p("records.jsonl"), "--min-words", "100"},
        {"vocab", "--input", p("filtered.jsonl"), "--max-size", "5000"},
        {"annotate", "--task", "qa", "--input", p("filtered.jsonl"), "--base-url", url, "--model", "mock"},
        {"annotate", "--task", "summary", "--input", p("filtered.jsonl"), "--base-url", url, "--model", "mock"},
        {"annotate", "--task", "qa_score", "--input", p("filtered.jsonl"), "--qa", p("qa.jsonl"), "--base-url", url,
         "--model", "mock"},
        {"gate", "--summaries", p("summary.jsonl"), "--qa-scores", p("qa_score.jsonl")},
        {"split", "--input", p("filtered.jsonl"), "--ids", p("gated_ids.txt")},
        {"compose", "--input", p("filtered.jsonl"), "--summaries", p("gated_summaries.jsonl"), "--qa", p("qa.jsonl"),
         "--format", "d", "--vocab", p("vocab.txt"), "--split", p("split.json")},
        {"mask", "--input", p("filtered.jsonl"), "--vocab", p("vocab.txt")},
    };
    for (const auto& step : steps) {
        std::vector<std::string> args{"--out-dir", o, "--seed", "1234", "--log-level", "off"};
        args.insert(args.end(), step.begin(), step.end());
        if (int code = run_cli_quiet(args); code != 0) {
            error = step[0] + " exited " + std::to_string(code);
            return {};
        }
    }
    std::map<std::string, std::string> digests;
    for (const char* name : {"records.jsonl", "filtered.jsonl", "vocab.txt", "qa.jsonl", "summary.jsonl",
                             "qa_score.jsonl", "gated_summaries.jsonl", "gated_ids.txt", "split.json",
                             "composed.jsonl", "composed.train.jsonl", "composed.val.jsonl", "composed.test.jsonl",
                             "masked.jsonl"}) {
        digests[name] = fs::exists(out / name) ? file_sha256_hex(out / name) : "missing";
    }
    return digests;
}

Outcome end_to_end_determinism() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    testing::MockLlmServer server;
    testing::TempDir dir;
    testing::write_corpus_dir(dir / "corpus", 50, 99);
    std::string err1, err2;
    auto a = run_pipeline(dir / "corpus", dir / "run1", server.base_url(), err1);
    auto b = run_pipeline(dir / "corpus", dir / "run2", server.base_url(), err2);
    o.expect(err1.empty() && err2.empty(), err1 + " " + err2);
    for (const auto& [name, digest] : a) o.expect(digest != "missing", name + " missing");
    o.expect(!a.empty() && a == b, "output digests differ between runs");
    if (o.pass) {
        std::size_t composed = compose::read_composed(dir / "run1/composed.jsonl", tok::Vocabulary{}).size();
        o.expect(composed > 0, "no composed examples survived the gate");
    }
    double secs = seconds_since(t0);
    o.expect(secs < 60.0, "took " + std::to_string(secs) + " s");
    if (o.pass) {
        o.detail = std::to_string(a.size()) + " outputs identical across 2 runs, digest(masked) " +
                   a["masked.jsonl"].substr(0, 12) + ", " + std::to_string(secs).substr(0, 5) + " s";
    }
    return o;
}

}  // namespace

int main() {
    spdlog::set_level(spdlog::level::err);
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"metric oracle equivalence", metric_oracle_equivalence},
        {"worked metric values", worked_metric_values},
        {"prompt fidelity", prompt_fidelity},
        {"filter ledger", filter_ledger},
        {"gate + split", gate_and_split},
        {"masking law", masking_law},
        {"composition", composition},
        {"annotator vs mock server", annotator_vs_mock},
        {"end-to-end determinism", end_to_end_determinism},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("threw: ") + e.what();
        }
        std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
