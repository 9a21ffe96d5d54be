// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#include "docsum/cli.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "docsum/annotate.hpp"
#include "docsum/compose.hpp"
#include "docsum/evaluate.hpp"
#include "docsum/filter.hpp"
#include "docsum/gate_split.hpp"
#include "docsum/ingest.hpp"
#include "docsum/jsonl.hpp"
#include "docsum/masking.hpp"
#include "docsum/record.hpp"
#include "docsum/text.hpp"
#include "docsum/tokenizer.hpp"

namespace docsum::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kApiKeyEnv = "DOCSUM_LLM_API_KEY";

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::uint64_t seed = 42;
    std::string out_dir = ".";
    std::string log_level = "warn";
};

// Output files written by the current subcommand, for the run manifest.
using Outputs = std::vector<fs::path>;

fs::path out_path(const Globals& g, const std::string& given, const std::string& fallback) {
    return given.empty() ? fs::path(g.out_dir) / fallback : fs::path(given);
}

void print_json(const ojson& j) {
    std::cout << j.dump(2) << '\n';
}

std::vector<std::string> read_id_list(const fs::path& path) {
    std::vector<std::string> ids;
    for (const std::string& line : text::split(read_text_file(path), '\n')) {
        std::string_view t = text::trim(line);
        if (!t.empty()) ids.emplace_back(t);
    }
    return ids;
}

void write_id_list(const std::vector<std::string>& ids, const fs::path& path) {
    std::string s;
    for (const std::string& id : ids) s += id + '\n';
    write_text_file(path, s);
}

void write_run_manifest(const Globals& g, const std::string& sub, const std::string& config, const Outputs& outputs) {
    ojson m;
    m["subcommand"] = sub;
    m["seed"] = g.seed;
    m["config"] = config;
    ojson files = ojson::object();
    for (const fs::path& p : outputs) files[p.filename().string()] = file_sha256_hex(p);
    m["outputs"] = std::move(files);
    write_text_file(fs::path(g.out_dir) / (sub + ".manifest.json"), m.dump(2) + "\n");
}

// ---- ingest ---------------------------------------------------------------

struct IngestArgs {
    std::string src, layout = "downstream", aliases, output;
};

void add_ingest(CLI::App& app, IngestArgs& a) {
    auto* c = app.add_subcommand("ingest", "Read an OCR text directory into DocumentRecord JSONL");
    c->add_option("--src", a.src, "Corpus directory")->required()->check(CLI::ExistingDirectory);
    c->add_option("--layout", a.layout, "pretrain | downstream")->capture_default_str();
    c->add_option("--aliases", a.aliases, "Label alias TSV (alias<TAB>canonical)")->check(CLI::ExistingFile);
    c->add_option("--output", a.output, "Records JSONL (default <out-dir>/records.jsonl)");
}

Outputs run_ingest(const Globals& g, const IngestArgs& a) {
    ingest::LabelAliasTable aliases = a.aliases.empty() ? ingest::LabelAliasTable{}
                                                        : ingest::LabelAliasTable::load_tsv(a.aliases);
    ingest::IngestResult r = ingest::ingest_directory(a.src, ingest::parse_layout(a.layout), aliases);
    fs::path out = out_path(g, a.output, "records.jsonl");
    write_records(r.records, out);
    print_json(r.report.to_json());
    return {out};
}

// ---- filter / sample --------------------------------------------------------

struct FilterArgs {
    std::string input, output, subset_output;
    std::size_t min_words = 100;
    std::size_t subset_size = 0;
};

void add_filter(CLI::App& app, FilterArgs& a) {
    auto* c = app.add_subcommand("filter", "Deduplicate and drop empty or short documents");
    c->add_option("--input", a.input, "Records JSONL")->required()->check(CLI::ExistingFile);
    c->add_option("--output", a.output, "Filtered records (default <out-dir>/filtered.jsonl)");
    c->add_option("--min-words", a.min_words, "Minimum word count")->capture_default_str();
    c->add_option("--subset-size", a.subset_size, "Also draw a seeded subset of this size (0: none)")
        ->capture_default_str();
    c->add_option("--subset-output", a.subset_output, "Subset records (default <out-dir>/subset.jsonl)");
}

Outputs run_filter(const Globals& g, const FilterArgs& a) {
    filter::Filtered f = filter::run_filters(read_records(a.input), filter::FilterOptions{a.min_words});
    fs::path out = out_path(g, a.output, "filtered.jsonl");
    write_records(f.records, out);
    Outputs outs{out};
    ojson summary = f.report.to_json();
    if (a.subset_size > 0) {
        std::vector<DocumentRecord> sub = filter::sample_subset(f.records, a.subset_size, g.seed);
        fs::path sp = out_path(g, a.subset_output, "subset.jsonl");
        write_records(sub, sp);
        outs.push_back(sp);
        summary["subset"] = {{"size", sub.size()}, {"seed", g.seed}};
    }
    print_json(summary);
    return outs;
}

struct SampleArgs {
    std::string input, output;
    std::size_t size = 0;
};

void add_sample(CLI::App& app, SampleArgs& a) {
    auto* c = app.add_subcommand("sample", "Seeded uniform subset without replacement");
    c->add_option("--input", a.input, "Records JSONL")->required()->check(CLI::ExistingFile);
    c->add_option("--size", a.size, "Subset size")->required();
    c->add_option("--output", a.output, "Subset records (default <out-dir>/sample.jsonl)");
}

Outputs run_sample(const Globals& g, const SampleArgs& a) {
    std::vector<DocumentRecord> sub = filter::sample_subset(read_records(a.input), a.size, g.seed);
    fs::path out = out_path(g, a.output, "sample.jsonl");
    write_records(sub, out);
    print_json({{"size", sub.size()}, {"seed", g.seed}});
    return {out};
}

// ---- vocab / stats ------------------------------------------------------------

struct VocabArgs {
    std::vector<std::string> inputs;
    std::string output;
    std::size_t max_size = 32000;
    std::size_t min_freq = 1;
};

void add_vocab(CLI::App& app, VocabArgs& a) {
    auto* c = app.add_subcommand("vocab", "Build the shared word-level vocabulary file");
    c->add_option("--input", a.inputs, "Records JSONL (repeatable)")->required()->check(CLI::ExistingFile);
    c->add_option("--output", a.output, "Vocabulary file (default <out-dir>/vocab.txt)");
    c->add_option("--max-size", a.max_size, "Size including the five special tokens")->capture_default_str();
    c->add_option("--min-freq", a.min_freq, "Minimum token frequency")->capture_default_str();
}

Outputs run_vocab(const Globals& g, const VocabArgs& a) {
    std::vector<DocumentRecord> all;
    for (const std::string& in : a.inputs) {
        std::vector<DocumentRecord> rs = read_records(in);
        all.insert(all.end(), std::make_move_iterator(rs.begin()), std::make_move_iterator(rs.end()));
    }
    tok::Vocabulary v = tok::build_vocab(all, a.max_size, a.min_freq);
    fs::path out = out_path(g, a.output, "vocab.txt");
    v.save(out);
    print_json({{"size", v.size()}});
    return {out};
}

struct StatsArgs {
    std::string input, vocab;
};

void add_stats(CLI::App& app, StatsArgs& a) {
    auto* c = app.add_subcommand("stats", "Corpus and per-category statistics");
    c->add_option("--input", a.input, "Records JSONL")->required()->check(CLI::ExistingFile);
    c->add_option("--vocab", a.vocab, "Vocabulary file, enables token statistics")->check(CLI::ExistingFile);
}

Outputs run_stats(const StatsArgs& a) {
    std::vector<DocumentRecord> rs = read_records(a.input);
    std::map<std::string, std::size_t> per_label;
    std::size_t words = 0;
    for (const DocumentRecord& r : rs) {
        words += r.word_count;
        if (r.canonical_label) ++per_label[*r.canonical_label];
    }
    ojson j;
    j["documents"] = rs.size();
    j["mean_words"] = rs.empty() ? 0.0 : static_cast<double>(words) / static_cast<double>(rs.size());
    j["documents_per_label"] = per_label;
    if (!a.vocab.empty()) {
        tok::Vocabulary v = tok::Vocabulary::load(a.vocab);
        j["mean_tokens_per_label"] = ingest::category_token_stats(rs, v);
    }
    print_json(j);
    return {};
}

// ---- annotate ---------------------------------------------------------------------

struct AnnotateArgs {
    std::string input, task = "summary", base_url, model, cache_dir, qa, keys, output;
    int parallelism = 4;
    int max_retries = 5;
    double temperature = 0.0;
};

void add_annotate(CLI::App& app, AnnotateArgs& a) {
    auto* c = app.add_subcommand("annotate", "Generate QA pairs, gold summaries or QA scores with an LLM endpoint");
    c->add_option("--input", a.input, "Records JSONL")->required()->check(CLI::ExistingFile);
    c->add_option("--task", a.task, "qa | summary | qa_score")->capture_default_str();
    c->add_option("--base-url", a.base_url, "Chat-completions endpoint base URL")->required();
    c->add_option("--model", a.model, "Model name")->required();
    c->add_option("--parallelism", a.parallelism, "Concurrent requests")->capture_default_str()->check(CLI::PositiveNumber);
    c->add_option("--max-retries", a.max_retries, "Retries on transient failures")->capture_default_str();
    c->add_option("--temperature", a.temperature, "Sampling temperature")->capture_default_str();
    c->add_option("--cache-dir", a.cache_dir, "Response cache (default <out-dir>/cache)");
    c->add_option("--qa", a.qa, "QA annotations to score (qa_score)")->check(CLI::ExistingFile);
    c->add_option("--keys", a.keys, "doc_id<TAB>key lines for the Key: prompt line")->check(CLI::ExistingFile);
    c->add_option("--output", a.output, "Annotations JSONL (default <out-dir>/<task>.jsonl)");
}

Outputs run_annotate(const Globals& g, const AnnotateArgs& a) {
    annotate::Task task = annotate::parse_task(a.task);
    annotate::LlmConfig cfg;
    cfg.base_url = a.base_url;
    cfg.model_name = a.model;
    cfg.parallelism = a.parallelism;
    cfg.max_retries = a.max_retries;
    cfg.temperature = a.temperature;
    if (const char* key = std::getenv(kApiKeyEnv)) cfg.api_key = key;

    annotate::AnnotateOptions opts;
    if (!a.keys.empty()) opts.keys = annotate::read_keys_tsv(a.keys);
    if (task == annotate::Task::qa_score) {
        if (a.qa.empty()) throw UsageError("--task qa_score needs --qa");
        opts.qa_inputs = read_qa_annotations(a.qa);
    }
    std::vector<DocumentRecord> records = read_records(a.input);
    fs::path cache = a.cache_dir.empty() ? fs::path(g.out_dir) / "cache" : fs::path(a.cache_dir);
    annotate::AnnotationRun run = annotate::annotate_corpus(records, task, cfg, cache, opts);

    fs::path out = out_path(g, a.output, std::string(annotate::to_string(task)) + ".jsonl");
    std::size_t written = task == annotate::Task::summary ? write_summary_annotations(run.summaries, out)
                                                          : write_qa_annotations(run.qa, out);
    fs::path failures = out;
    failures += ".failures.json";
    write_text_file(failures, run.failure_report().dump(2) + "\n");
    print_json({{"annotated", written},
                {"failures", run.failures.size()},
                {"cache_hits", run.cache_hits},
                {"endpoint_calls", run.endpoint_calls}});
    return {out, failures};
}

// ---- gate / split -----------------------------------------------------------------

struct GateArgs {
    std::string summaries, qa_scores, output, ids_output;
    double threshold = split::kDefaultThreshold;
};

void add_gate(CLI::App& app, GateArgs& a) {
    auto* c = app.add_subcommand("gate", "Keep documents whose LLM confidence exceeds the threshold");
    c->add_option("--summaries", a.summaries, "Summary annotations")->required()->check(CLI::ExistingFile);
    c->add_option("--qa-scores", a.qa_scores, "Scored QA annotations")->check(CLI::ExistingFile);
    c->add_option("--threshold", a.threshold, "Strict lower bound on confidence")->capture_default_str();
    c->add_option("--output", a.output, "Kept summaries (default <out-dir>/gated_summaries.jsonl)");
    c->add_option("--ids-output", a.ids_output, "Kept doc ids (default <out-dir>/gated_ids.txt)");
}

Outputs run_gate(const Globals& g, const GateArgs& a) {
    std::vector<SummaryAnnotation> sums = read_summary_annotations(a.summaries);
    std::vector<QaAnnotation> qa;
    std::optional<std::span<const QaAnnotation>> scored;
    if (!a.qa_scores.empty()) {
        qa = read_qa_annotations(a.qa_scores);
        scored = std::span<const QaAnnotation>(qa);
    }
    std::vector<std::string> ids = split::gate_documents(sums, scored, a.threshold);
    std::set<std::string> keep(ids.begin(), ids.end());
    std::vector<SummaryAnnotation> kept;
    for (const SummaryAnnotation& s : sums) {
        if (keep.count(s.doc_id)) kept.push_back(s);
    }
    fs::path out = out_path(g, a.output, "gated_summaries.jsonl");
    fs::path ids_out = out_path(g, a.ids_output, "gated_ids.txt");
    write_summary_annotations(kept, out);
    write_id_list(ids, ids_out);
    print_json({{"input", sums.size()}, {"kept", ids.size()}, {"dropped", sums.size() - ids.size()},
                {"threshold", a.threshold}});
    return {out, ids_out};
}

struct SplitArgs {
    std::string input, ids, ratios = "0.7,0.15,0.15", output;
    bool stratify = false;
};

void add_split(CLI::App& app, SplitArgs& a) {
    auto* c = app.add_subcommand("split", "Seeded train/validation/test split");
    c->add_option("--input", a.input, "Records JSONL")->required()->check(CLI::ExistingFile);
    c->add_option("--ids", a.ids, "Restrict to these doc ids (one per line)")->check(CLI::ExistingFile);
    c->add_option("--ratios", a.ratios, "train,val,test")->capture_default_str();
    c->add_flag("--stratify-by-label", a.stratify, "Split within each canonical label");
    c->add_option("--output", a.output, "Split manifest (default <out-dir>/split.json)");
}

Outputs run_split(const Globals& g, const SplitArgs& a) {
    std::vector<DocumentRecord> rs = read_records(a.input);
    std::optional<std::set<std::string>> only;
    if (!a.ids.empty()) {
        std::vector<std::string> v = read_id_list(a.ids);
        only.emplace(v.begin(), v.end());
    }
    split::SplitRatios ratios = split::parse_ratios(a.ratios);
    std::map<std::string, std::string> labelled;
    std::vector<std::string> ids;
    for (const DocumentRecord& r : rs) {
        if (only && !only->count(r.doc_id)) continue;
        ids.push_back(r.doc_id);
        labelled[r.doc_id] = r.canonical_label.value_or("");
    }
    split::SplitManifest m = a.stratify ? split::split_dataset_stratified(labelled, g.seed, ratios)
                                        : split::split_dataset(ids, g.seed, ratios);
    fs::path out = out_path(g, a.output, "split.json");
    split::write_manifest(m, out);
    print_json({{"train", m.train_ids.size()}, {"val", m.val_ids.size()}, {"test", m.test_ids.size()}});
    return {out};
}

// ---- compose ------------------------------------------------------------------------

struct ComposeArgs {
    std::string input, summaries, qa, format = "a", vocab, split_manifest, output;
    std::size_t budget = compose::kInputBudget;
};

void add_compose(CLI::App& app, ComposeArgs& a) {
    auto* c = app.add_subcommand("compose", "Build fine-tuning inputs in format a, b, c or d");
    c->add_option("--input", a.input, "Records JSONL")->required()->check(CLI::ExistingFile);
    c->add_option("--summaries", a.summaries, "Target summaries (typically gated)")->required()->check(CLI::ExistingFile);
    c->add_option("--qa", a.qa, "QA annotations, needed for formats b-d")->check(CLI::ExistingFile);
    c->add_option("--format", a.format, "a | b | c | d")->capture_default_str();
    c->add_option("--vocab", a.vocab, "Vocabulary file")->required()->check(CLI::ExistingFile);
    c->add_option("--budget", a.budget, "Input token budget")->capture_default_str();
    c->add_option("--split", a.split_manifest, "Split manifest; also writes one file per split")
        ->check(CLI::ExistingFile);
    c->add_option("--output", a.output, "Composed JSONL (default <out-dir>/composed.jsonl)");
}

Outputs run_compose(const Globals& g, const ComposeArgs& a) {
    compose::InputFormat fmt = compose::parse_format(a.format);
    tok::Vocabulary vocab = tok::Vocabulary::load(a.vocab);
    std::map<std::string, DocumentRecord> records;
    for (DocumentRecord& r : read_records(a.input)) records.emplace(r.doc_id, std::move(r));
    std::map<std::string, QaAnnotation> qa;
    if (!a.qa.empty()) {
        for (QaAnnotation& q : read_qa_annotations(a.qa)) qa.emplace(q.doc_id, std::move(q));
    }

    std::vector<compose::ComposedExample> out;
    std::size_t truncated = 0, skipped = 0;
    for (const SummaryAnnotation& s : read_summary_annotations(a.summaries)) {
        auto rec = records.find(s.doc_id);
        if (rec == records.end()) throw UsageError("summary for unknown doc_id '" + s.doc_id + "'");
        auto q = qa.find(s.doc_id);
        const QaAnnotation* qp = q == qa.end() ? nullptr : &q->second;
        if (fmt != compose::InputFormat::a && qp == nullptr) {
            spdlog::warn("no QA pair for {}, skipped", s.doc_id);
            ++skipped;
            continue;
        }
        compose::ComposedExample e = compose::compose_input(rec->second, qp, fmt, vocab);
        e.target_summary = s.summary;
        std::size_t before = e.input_token_count;
        e = compose::truncate_to_budget(e, vocab, a.budget);
        if (e.input_token_count < before) ++truncated;
        out.push_back(std::move(e));
    }
    fs::path path = out_path(g, a.output, "composed.jsonl");
    compose::write_composed(out, path);
    Outputs outs{path};
    if (!a.split_manifest.empty()) {
        split::SplitManifest m = split::read_manifest(a.split_manifest);
        const std::pair<const char*, const std::vector<std::string>*> parts[] = {
            {"train", &m.train_ids}, {"val", &m.val_ids}, {"test", &m.test_ids}};
        for (const auto& [name, ids] : parts) {
            std::set<std::string> want(ids->begin(), ids->end());
            std::vector<compose::ComposedExample> sel;
            for (const compose::ComposedExample& e : out) {
                if (want.count(e.doc_id)) sel.push_back(e);
            }
            fs::path p = path;
            p.replace_extension(std::string(name) + ".jsonl");
            compose::write_composed(sel, p);
            outs.push_back(p);
        }
    }
    print_json({{"examples", out.size()}, {"truncated", truncated}, {"skipped", skipped},
                {"format", std::string(compose::to_string(fmt))}});
    return outs;
}

// ---- mask -----------------------------------------------------------------------------

struct MaskArgs {
    std::string input, kind = "records", vocab, output;
    double rate = masking::kDefaultRate;
    bool document_only = false;
};

void add_mask(CLI::App& app, MaskArgs& a) {
    auto* c = app.add_subcommand("mask", "Emit masked/original pairs for denoising pre-training");
    c->add_option("--input", a.input, "Records or composed JSONL")->required()->check(CLI::ExistingFile);
    c->add_option("--input-kind", a.kind, "records | composed")->capture_default_str();
    c->add_option("--vocab", a.vocab, "Vocabulary file")->required()->check(CLI::ExistingFile);
    c->add_option("--rate", a.rate, "Masking rate")->capture_default_str();
    c->add_flag("--mask-document-only", a.document_only, "Never mask the question/answer prefix");
    c->add_option("--output", a.output, "MaskedPair JSONL (default <out-dir>/masked.jsonl)");
}

Outputs run_mask(const Globals& g, const MaskArgs& a) {
    tok::Vocabulary vocab = tok::Vocabulary::load(a.vocab);
    std::vector<masking::MaskSource> sources;
    if (a.kind == "records") {
        for (const DocumentRecord& r : read_records(a.input)) sources.push_back({r.doc_id, r.ocr_text, 0});
    } else if (a.kind == "composed") {
        for (const compose::ComposedExample& e : compose::read_composed(a.input, vocab)) {
            std::size_t prefix = a.document_only ? compose::prefix_token_count(e, vocab) : 0;
            sources.push_back({e.doc_id, e.input_text, prefix});
        }
    } else {
        throw UsageError("--input-kind must be records or composed, got '" + a.kind + "'");
    }
    masking::MaskOptions opts;
    opts.rate = a.rate;
    opts.seed = g.seed;
    std::vector<masking::MaskedPair> pairs = masking::mask_corpus(sources, vocab, opts);
    fs::path out = out_path(g, a.output, "masked.jsonl");
    masking::write_masked_pairs(pairs, out);
    std::size_t masked = 0;
    for (const masking::MaskedPair& p : pairs) masked += p.masked_positions.size();
    print_json({{"pairs", pairs.size()}, {"masked_tokens", masked}, {"rate", a.rate}, {"seed", g.seed}});
    return {out};
}

// ---- eval -------------------------------------------------------------------------------

struct EvalArgs {
    std::string predictions, references, metrics = "rouge,bertscore", provider = "hashed", base_url, model, output;
    std::size_t dimension = 256;
    bool idf = false;
};

void add_eval(CLI::App& app, EvalArgs& a) {
    auto* c = app.add_subcommand("eval", "Score predictions against reference summaries");
    c->add_option("--predictions", a.predictions, "{doc_id, summary} JSONL")->required()->check(CLI::ExistingFile);
    c->add_option("--references", a.references, "{doc_id, summary} JSONL")->required()->check(CLI::ExistingFile);
    c->add_option("--metrics", a.metrics, "rouge,bertscore")->capture_default_str();
    c->add_option("--provider", a.provider, "Embedding provider: hashed | remote")->capture_default_str();
    c->add_option("--dimension", a.dimension, "Hashed embedding dimension")->capture_default_str();
    c->add_option("--base-url", a.base_url, "Embeddings endpoint base URL (remote)");
    c->add_option("--model", a.model, "Embedding model name (remote)");
    c->add_flag("--idf", a.idf, "Weight BERTScore tokens by reference idf");
    c->add_option("--output", a.output, "Metric report (default <out-dir>/metrics.json)");
}

Outputs run_eval(const Globals& g, const EvalArgs& a) {
    metrics::EvalOptions opts;
    opts.metrics = metrics::parse_metric_selection(a.metrics);
    opts.idf = a.idf;
    std::unique_ptr<metrics::EmbeddingProvider> provider;
    if (opts.metrics.bertscore) {
        if (a.provider == "hashed") {
            provider = std::make_unique<metrics::HashedEmbedder>(a.dimension, g.seed);
        } else if (a.provider == "remote") {
            if (a.base_url.empty() || a.model.empty()) throw UsageError("--provider remote needs --base-url and --model");
            metrics::RemoteEmbedder::Config rc;
            rc.base_url = a.base_url;
            rc.model_name = a.model;
            if (const char* key = std::getenv(kApiKeyEnv)) rc.api_key = key;
            provider = std::make_unique<metrics::RemoteEmbedder>(rc);
        } else {
            throw UsageError("--provider must be hashed or remote, got '" + a.provider + "'");
        }
    }
    MetricReport report = metrics::evaluate_corpus(a.predictions, a.references, provider.get(), opts);
    ojson j = metrics::to_json(report, opts.metrics);
    fs::path out = out_path(g, a.output, "metrics.json");
    write_text_file(out, j.dump(2) + "\n");
    print_json({{"documents", report.per_doc.size()}, {"corpus_mean", j["corpus_mean"]}});
    return {out};
}

void setup_logging(const std::string& level) {
    auto logger = spdlog::get("docsum");
    if (!logger) logger = spdlog::stderr_logger_mt("docsum");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::from_str(level));
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"docsum: data pipeline for abstractive summarization of OCR'd administrative documents", "docsum"};
    app.set_config("--config", "", "Plain-text (TOML/INI) config file; [subcommand] sections set subcommand flags");
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--seed", g.seed, "Global seed for sampling, splitting and masking")->capture_default_str();
    app.add_option("--out-dir", g.out_dir, "Directory for default outputs and run manifests")->capture_default_str();
    app.add_option("--log-level", g.log_level, "trace | debug | info | warn | error | off")->capture_default_str();

    IngestArgs ingest_a;
    FilterArgs filter_a;
    SampleArgs sample_a;
    VocabArgs vocab_a;
    AnnotateArgs annotate_a;
    GateArgs gate_a;
    SplitArgs split_a;
    ComposeArgs compose_a;
    MaskArgs mask_a;
    EvalArgs eval_a;
    StatsArgs stats_a;
    add_ingest(app, ingest_a);
    add_filter(app, filter_a);
    add_sample(app, sample_a);
    add_vocab(app, vocab_a);
    add_annotate(app, annotate_a);
    add_gate(app, gate_a);
    add_split(app, split_a);
    add_compose(app, compose_a);
    add_mask(app, mask_a);
    add_eval(app, eval_a);
    add_stats(app, stats_a);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, std::cout, std::cerr);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, std::cout, std::cerr);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    const std::string sub = app.get_subcommands().front()->get_name();
    try {
        setup_logging(g.log_level);
        fs::create_directories(g.out_dir);
        Outputs outs;
        if (sub == "ingest") outs = run_ingest(g, ingest_a);
        else if (sub == "filter") outs = run_filter(g, filter_a);
        else if (sub == "sample") outs = run_sample(g, sample_a);
        else if (sub == "vocab") outs = run_vocab(g, vocab_a);
        else if (sub == "annotate") outs = run_annotate(g, annotate_a);
        else if (sub == "gate") outs = run_gate(g, gate_a);
        else if (sub == "split") outs = run_split(g, split_a);
        else if (sub == "compose") outs = run_compose(g, compose_a);
        else if (sub == "mask") outs = run_mask(g, mask_a);
        else if (sub == "eval") outs = run_eval(g, eval_a);
        else if (sub == "stats") outs = run_stats(stats_a);
        write_run_manifest(g, sub, app.config_to_str(true, false), outs);
    } catch (const UsageError& e) {
        std::cerr << ojson{{"error", e.what()}, {"subcommand", sub}, {"kind", "usage"}}.dump() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << ojson{{"error", e.what()}, {"subcommand", sub}}.dump() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace docsum::cli
