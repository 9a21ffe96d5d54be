// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#include "docsum/masking.hpp"

#include <algorithm>
#include <cmath>

#include "docsum/hash.hpp"
#include "docsum/kernels.hpp"
#include "docsum/rng.hpp"

namespace docsum::masking {

std::size_t masked_count(double rate, std::size_t n_maskable) {
    auto m = static_cast<std::size_t>(std::floor(rate * static_cast<double>(n_maskable) + 1e-9));
    return std::min(m, n_maskable);
}

MaskedPair mask_tokens(std::span<const tok::TokenId> ids, double rate, std::uint64_t seed,
                       std::size_t protected_prefix) {
    if (!(rate >= 0.0 && rate <= 1.0)) throw MaskingError("masking rate " + std::to_string(rate) + " outside [0,1]");

    MaskedPair out;
    out.original.assign(ids.begin(), ids.end());
    out.corrupted = out.original;
    out.seed = seed;
    out.rate = rate;

    std::vector<std::size_t> maskable;
    std::size_t skipped_prefix = 0;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        tok::TokenId id = ids[i];
        if (id == tok::kPad || id == tok::kBos || id == tok::kEos) continue;
        if (skipped_prefix < protected_prefix) {
            ++skipped_prefix;
            continue;
        }
        maskable.push_back(i);
    }

    const std::size_t m = masked_count(rate, maskable.size());
    for (std::size_t k : sample_indices(maskable.size(), m, seed)) out.masked_positions.push_back(maskable[k]);
    std::sort(out.masked_positions.begin(), out.masked_positions.end());
    for (std::size_t p : out.masked_positions) out.corrupted[p] = tok::kMask;
    return out;
}

std::uint64_t derive_record_seed(std::uint64_t seed, std::string_view doc_id) { return seed ^ hash64(doc_id); }

std::vector<tok::TokenId> encode_for_pretraining(std::string_view text, const tok::Vocabulary& vocab,
                                                 std::size_t max_len) {
    if (max_len < 2) throw MaskingError("max_len must hold <s> and </s>");
    std::vector<tok::TokenId> ids = tok::encode(text, vocab, false);
    if (ids.size() > max_len - 2) ids.resize(max_len - 2);
    ids.insert(ids.begin(), tok::kBos);
    ids.push_back(tok::kEos);
    return ids;
}

ojson to_json(const MaskedPair& p) {
    ojson j;
    j["doc_id"] = p.doc_id;
    j["corrupted"] = p.corrupted;
    j["original"] = p.original;
    j["masked_positions"] = p.masked_positions;
    j["seed"] = p.seed;
    j["rate"] = p.rate;
    return j;
}

MaskedPair masked_pair_from_json(const ojson& j) {
    MaskedPair p;
    p.doc_id = j.at("doc_id").get<std::string>();
    p.corrupted = j.at("corrupted").get<std::vector<tok::TokenId>>();
    p.original = j.at("original").get<std::vector<tok::TokenId>>();
    p.masked_positions = j.at("masked_positions").get<std::vector<std::size_t>>();
    p.seed = j.at("seed").get<std::uint64_t>();
    p.rate = j.at("rate").get<double>();
    if (p.corrupted.size() != p.original.size()) throw MaskingError("corrupted/original length mismatch");
    return p;
}

std::size_t write_masked_pairs(std::span<const MaskedPair> pairs, const std::filesystem::path& path) {
    AtomicFileWriter out(path);
    for (const MaskedPair& p : pairs) {
        std::string line = dump_line(to_json(p));
        line.push_back('\n');
        out.write(line);
    }
    out.commit();
    return pairs.size();
}

std::vector<MaskedPair> read_masked_pairs(const std::filesystem::path& path) {
    std::vector<MaskedPair> out;
    for_each_jsonl(path, [&](const ojson& j, std::size_t line) {
        try {
            out.push_back(masked_pair_from_json(j));
        } catch (const std::exception& e) {
            throw MaskingError(path.string() + ": line " + std::to_string(line) + ": " + e.what());
        }
    });
    return out;
}

std::vector<MaskedPair> mask_corpus(std::span<const MaskSource> sources, const tok::Vocabulary& vocab,
                                    const MaskOptions& options) {
    if (!(options.rate >= 0.0 && options.rate <= 1.0)) {
        throw MaskingError("masking rate " + std::to_string(options.rate) + " outside [0,1]");
    }
    return kernels::mask_omp(sources, vocab, options);
}

std::size_t emit_pretrain_set(std::span<const DocumentRecord> records, const tok::Vocabulary& vocab, double rate,
                              std::uint64_t seed, const std::filesystem::path& path) {
    std::vector<MaskSource> sources;
    sources.reserve(records.size());
    for (const DocumentRecord& r : records) sources.push_back({r.doc_id, r.ocr_text, 0});
    MaskOptions options;
    options.rate = rate;
    options.seed = seed;
    return write_masked_pairs(mask_corpus(sources, vocab, options), path);
}

}  // namespace docsum::masking
