// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "docsum/metrics.hpp"

namespace docsum::metrics {

/// Maps a token sequence to one L2-normalized vector per token.
/// Implementations must be deterministic and safe to call concurrently.
class EmbeddingProvider {
public:
    virtual ~EmbeddingProvider() = default;
    virtual std::vector<Embedding> embed(std::span<const std::string> tokens) = 0;
    virtual std::size_t dimension() const = 0;
};

void l2_normalize(Embedding& v);

/// Offline provider: each token gets a fixed pseudo-random Gaussian
/// direction seeded by its hash. Identical tokens embed identically.
class HashedEmbedder final : public EmbeddingProvider {
public:
    explicit HashedEmbedder(std::size_t dimension = 256, std::uint64_t seed = 0);
    std::vector<Embedding> embed(std::span<const std::string> tokens) override;
    std::size_t dimension() const override { return dimension_; }
    Embedding embed_token(const std::string& token) const;

private:
    std::size_t dimension_;
    std::uint64_t seed_;
};

/// Per-token vectors from an embeddings endpoint
/// (POST {base_url}/v1/embeddings, {"model", "input": [tokens]}).
/// Unique tokens are fetched once in batches and cached in memory.
class RemoteEmbedder final : public EmbeddingProvider {
public:
    struct Config {
        std::string base_url;
        std::string model_name;
        std::string api_key;
        std::size_t batch_size = 64;
        std::chrono::seconds timeout{120};
    };

    explicit RemoteEmbedder(Config config);
    std::vector<Embedding> embed(std::span<const std::string> tokens) override;
    std::size_t dimension() const override;

private:
    void fetch(const std::vector<std::string>& missing);

    Config config_;
    mutable std::mutex mu_;
    std::unordered_map<std::string, Embedding> cache_;
    std::size_t dimension_ = 0;
};

}  // namespace docsum::metrics
