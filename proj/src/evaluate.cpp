// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#include "docsum/evaluate.hpp"

#include <cmath>

#include "docsum/text.hpp"
#include "docsum/tokenizer.hpp"

namespace docsum::metrics {

std::map<std::string, std::string> read_summaries(const std::filesystem::path& path) {
    std::map<std::string, std::string> out;
    for_each_jsonl(path, [&](const ojson& j, std::size_t line) {
        try {
            std::string id = j.at("doc_id").get<std::string>();
            if (id.empty()) throw EvalError("empty doc_id");
            if (!out.emplace(id, j.at("summary").get<std::string>()).second) {
                throw EvalError("duplicate doc_id '" + id + "'");
            }
        } catch (const EvalError& e) {
            throw EvalError(path.string() + ": line " + std::to_string(line) + ": " + e.what());
        } catch (const nlohmann::json::exception& e) {
            throw EvalError(path.string() + ": line " + std::to_string(line) + ": " + e.what());
        }
    });
    return out;
}

kernels::MetricSelection parse_metric_selection(const std::string& csv) {
    kernels::MetricSelection s{false, false};
    for (const std::string& part : text::split(csv, ',')) {
        std::string_view p = text::trim(part);
        if (p == "rouge") {
            s.rouge = true;
        } else if (p == "bertscore") {
            s.bertscore = true;
        } else if (!p.empty()) {
            throw EvalError("unknown metric '" + std::string(p) + "' (expected rouge,bertscore)");
        }
    }
    if (!s.rouge && !s.bertscore) throw EvalError("no metrics selected");
    return s;
}

MetricReport evaluate_pairs(const std::map<std::string, std::string>& predictions,
                            const std::map<std::string, std::string>& references, EmbeddingProvider* provider,
                            const EvalOptions& options) {
    std::vector<std::string> only_pred, only_ref;
    for (const auto& [id, _] : predictions) {
        if (!references.count(id)) only_pred.push_back(id);
    }
    for (const auto& [id, _] : references) {
        if (!predictions.count(id)) only_ref.push_back(id);
    }
    if (!only_pred.empty() || !only_ref.empty()) {
        std::string msg = "doc_id mismatch between predictions and references;";
        if (!only_pred.empty()) {
            msg += " missing from references:";
            for (const std::string& id : only_pred) msg += " " + id;
            msg += ";";
        }
        if (!only_ref.empty()) {
            msg += " missing from predictions:";
            for (const std::string& id : only_ref) msg += " " + id;
        }
        throw EvalError(msg);
    }
    if (options.metrics.bertscore && provider == nullptr) throw EvalError("BERTScore needs an embedding provider");

    std::vector<std::string> ids;
    std::vector<kernels::ScoringItem> items;
    for (const auto& [id, pred] : predictions) {
        const std::string& ref = references.at(id);
        kernels::ScoringItem item;
        if (options.metrics.rouge) {
            item.candidate = rouge_tokens(pred);
            item.reference = rouge_tokens(ref);
            for (const std::string& s : split_sentences(pred)) item.candidate_sentences.push_back(rouge_tokens(s));
            for (const std::string& s : split_sentences(ref)) item.reference_sentences.push_back(rouge_tokens(s));
        }
        if (options.metrics.bertscore) {
            Tokens c = tok::split_tokens(pred);
            Tokens r = tok::split_tokens(ref);
            item.candidate_embeddings = provider->embed(c);
            item.reference_embeddings = provider->embed(r);
            if (options.idf) {
                item.candidate_weights.assign(c.size(), 0.0);
                item.reference_weights.assign(r.size(), 0.0);
            }
        }
        ids.push_back(id);
        items.push_back(std::move(item));
    }

    if (options.metrics.bertscore && options.idf) {
        std::vector<Tokens> ref_tokens;
        for (const auto& [id, ref] : references) ref_tokens.push_back(tok::split_tokens(ref));
        IdfWeights idf = compute_idf(ref_tokens);
        const double unseen = std::log(static_cast<double>(references.size()) + 1.0);
        auto weight = [&](const std::string& t) {
            auto it = idf.find(t);
            return it == idf.end() ? unseen : it->second;
        };
        for (std::size_t k = 0; k < ids.size(); ++k) {
            Tokens c = tok::split_tokens(predictions.at(ids[k]));
            Tokens r = tok::split_tokens(references.at(ids[k]));
            for (std::size_t i = 0; i < c.size(); ++i) items[k].candidate_weights[i] = weight(c[i]);
            for (std::size_t i = 0; i < r.size(); ++i) items[k].reference_weights[i] = weight(r[i]);
        }
    }

    std::vector<DocScores> scores = kernels::score_omp(items, options.metrics);

    MetricReport report;
    DocScores sum;
    for (std::size_t k = 0; k < ids.size(); ++k) {
        const DocScores& s = scores[k];
        report.per_doc[ids[k]] = s;
        sum.r1 += s.r1;
        sum.r2 += s.r2;
        sum.rl += s.rl;
        sum.rlsum += s.rlsum;
        sum.bs_p += s.bs_p;
        sum.bs_r += s.bs_r;
        sum.bs_f1 += s.bs_f1;
    }
    if (!ids.empty()) {
        const double n = static_cast<double>(ids.size());
        report.corpus_mean = {sum.r1 / n, sum.r2 / n, sum.rl / n, sum.rlsum / n, sum.bs_p / n, sum.bs_r / n, sum.bs_f1 / n};
    }
    return report;
}

MetricReport evaluate_corpus(const std::filesystem::path& predictions, const std::filesystem::path& references,
                             EmbeddingProvider* provider, const EvalOptions& options) {
    return evaluate_pairs(read_summaries(predictions), read_summaries(references), provider, options);
}

namespace {

ojson scores_json(const DocScores& s, const kernels::MetricSelection& sel) {
    ojson j = ojson::object();
    if (sel.rouge) {
        j["r1"] = s.r1;
        j["r2"] = s.r2;
        j["rl"] = s.rl;
        j["rlsum"] = s.rlsum;
    }
    if (sel.bertscore) {
        j["bs_p"] = s.bs_p;
        j["bs_r"] = s.bs_r;
        j["bs_f1"] = s.bs_f1;
    }
    return j;
}

}  // namespace

ojson to_json(const MetricReport& report, const kernels::MetricSelection& selection) {
    ojson j;
    j["documents"] = report.per_doc.size();
    j["corpus_mean"] = scores_json(report.corpus_mean, selection);
    ojson per = ojson::object();
    for (const auto& [id, s] : report.per_doc) per[id] = scores_json(s, selection);
    j["per_doc"] = std::move(per);
    return j;
}

}  // namespace docsum::metrics
