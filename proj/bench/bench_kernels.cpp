// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
// Serial reference vs OpenMP kernels on synthetic inputs.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "docsum/embedding.hpp"
#include "docsum/kernels.hpp"
#include "docsum/metrics.hpp"
#include "docsum/rng.hpp"
#include "docsum/tokenizer.hpp"

using namespace docsum;

namespace {

std::string random_text(SeededRng& rng, std::size_t words) {
    static const char* kWords[] = {"invoice", "tax", "notice", "payment", "due", "office", "form", "record",
                                   "account", "date", "amount", "total", "county", "department", "memo", "letter"};
    std::string s;
    for (std::size_t i = 0; i < words; ++i) {
        if (i) s += (rng.below(12) == 0) ? ". " : " ";
        s += kWords[rng.below(16)];
    }
    return s;
}

template <class F>
double time_ms(F&& f, int reps) {
    auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void report(const char* name, double serial, double omp) {
    std::printf("%-14s serial %9.2f ms   omp %9.2f ms   speedup %5.2fx\n", name, serial, omp, serial / omp);
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    SeededRng rng(7);

    std::vector<DocumentRecord> records;
    for (int i = 0; i < 4000; ++i) {
        records.push_back(make_record("doc" + std::to_string(i), random_text(rng, 300), {"memo"},
                                      Source::pretrain_corpus));
    }
    report("fingerprints", time_ms([&] { kernels::fingerprints_serial(records); }, 3),
           time_ms([&] { kernels::fingerprints_omp(records); }, 3));

    tok::Vocabulary vocab = tok::build_vocab(records, 1000, 1);
    std::vector<masking::MaskSource> sources;
    for (const DocumentRecord& r : records) sources.push_back({r.doc_id, r.ocr_text, 0});
    masking::MaskOptions opts;
    report("mask", time_ms([&] { kernels::mask_serial(sources, vocab, opts); }, 3),
           time_ms([&] { kernels::mask_omp(sources, vocab, opts); }, 3));

    metrics::HashedEmbedder emb(128);
    std::vector<kernels::ScoringItem> items;
    for (int i = 0; i < 500; ++i) {
        std::string c = random_text(rng, 60), r = random_text(rng, 60);
        kernels::ScoringItem it;
        it.candidate = metrics::rouge_tokens(c);
        it.reference = metrics::rouge_tokens(r);
        for (const std::string& s : metrics::split_sentences(c)) it.candidate_sentences.push_back(metrics::rouge_tokens(s));
        for (const std::string& s : metrics::split_sentences(r)) it.reference_sentences.push_back(metrics::rouge_tokens(s));
        it.candidate_embeddings = emb.embed(tok::split_tokens(c));
        it.reference_embeddings = emb.embed(tok::split_tokens(r));
        items.push_back(std::move(it));
    }
    kernels::MetricSelection all;
    report("score", time_ms([&] { kernels::score_serial(items, all); }, 3),
           time_ms([&] { kernels::score_omp(items, all); }, 3));
    return 0;
}
