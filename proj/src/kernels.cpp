// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#include "docsum/kernels.hpp"

#include <omp.h>

#include "docsum/filter.hpp"

namespace docsum::kernels {

namespace {

masking::MaskedPair mask_one(const masking::MaskSource& src, const tok::Vocabulary& vocab,
                             const masking::MaskOptions& options) {
    std::vector<tok::TokenId> ids = masking::encode_for_pretraining(src.text, vocab, options.max_len);
    masking::MaskedPair p = masking::mask_tokens(ids, options.rate, masking::derive_record_seed(options.seed, src.doc_id),
                                                 src.protected_prefix);
    p.doc_id = src.doc_id;
    return p;
}

}  // namespace

std::vector<Digest256> fingerprints_serial(std::span<const DocumentRecord> records) {
    std::vector<Digest256> out(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) out[i] = filter::content_fingerprint(records[i].ocr_text);
    return out;
}

std::vector<Digest256> fingerprints_omp(std::span<const DocumentRecord> records) {
    std::vector<Digest256> out(records.size());
    const auto n = static_cast<std::ptrdiff_t>(records.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = filter::content_fingerprint(records[static_cast<std::size_t>(i)].ocr_text);
    }
    return out;
}

std::vector<masking::MaskedPair> mask_serial(std::span<const masking::MaskSource> sources,
                                             const tok::Vocabulary& vocab, const masking::MaskOptions& options) {
    std::vector<masking::MaskedPair> out;
    out.reserve(sources.size());
    for (const masking::MaskSource& s : sources) out.push_back(mask_one(s, vocab, options));
    return out;
}

std::vector<masking::MaskedPair> mask_omp(std::span<const masking::MaskSource> sources,
                                          const tok::Vocabulary& vocab, const masking::MaskOptions& options) {
    std::vector<masking::MaskedPair> out(sources.size());
    const auto n = static_cast<std::ptrdiff_t>(sources.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        auto k = static_cast<std::size_t>(i);
        out[k] = mask_one(sources[k], vocab, options);
    }
    return out;
}

DocScores score_item(const ScoringItem& item, const MetricSelection& selection) {
    DocScores s;
    if (selection.rouge) {
        s.r1 = metrics::rouge_n(item.candidate, item.reference, 1).f1;
        s.r2 = metrics::rouge_n(item.candidate, item.reference, 2).f1;
        s.rl = metrics::rouge_l(item.candidate, item.reference).f1;
        s.rlsum = metrics::rouge_lsum(item.candidate_sentences, item.reference_sentences).f1;
    }
    if (selection.bertscore) {
        metrics::BertScore b = metrics::bertscore(item.candidate_embeddings, item.reference_embeddings,
                                                  item.candidate_weights, item.reference_weights);
        s.bs_p = b.precision;
        s.bs_r = b.recall;
        s.bs_f1 = b.f1;
    }
    return s;
}

std::vector<DocScores> score_serial(std::span<const ScoringItem> items, const MetricSelection& selection) {
    std::vector<DocScores> out;
    out.reserve(items.size());
    for (const ScoringItem& item : items) out.push_back(score_item(item, selection));
    return out;
}

std::vector<DocScores> score_omp(std::span<const ScoringItem> items, const MetricSelection& selection) {
    std::vector<DocScores> out(items.size());
    const auto n = static_cast<std::ptrdiff_t>(items.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        auto k = static_cast<std::size_t>(i);
        out[k] = score_item(items[k], selection);
    }
    return out;
}

}  // namespace docsum::kernels
