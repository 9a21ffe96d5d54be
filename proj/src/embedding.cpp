// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#include "docsum/embedding.hpp"

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "docsum/hash.hpp"
#include "docsum/llm_client.hpp"
#include "docsum/rng.hpp"
#include "json.hpp"

namespace docsum::metrics {

void l2_normalize(Embedding& v) {
    double n = 0.0;
    for (double x : v) n += x * x;
    n = std::sqrt(n);
    if (n > 0.0) {
        for (double& x : v) x /= n;
    }
}

HashedEmbedder::HashedEmbedder(std::size_t dimension, std::uint64_t seed) : dimension_(dimension), seed_(seed) {
    if (dimension == 0) throw std::invalid_argument("embedding dimension must be positive");
}

Embedding HashedEmbedder::embed_token(const std::string& token) const {
    SeededRng rng(seed_ ^ hash64(token));
    Embedding v(dimension_);
    // Box-Muller on our own uniform draws keeps vectors library-independent.
    for (std::size_t i = 0; i < dimension_; i += 2) {
        double u1 = 1.0 - rng.unit();
        double u2 = rng.unit();
        double r = std::sqrt(-2.0 * std::log(u1));
        v[i] = r * std::cos(2.0 * M_PI * u2);
        if (i + 1 < dimension_) v[i + 1] = r * std::sin(2.0 * M_PI * u2);
    }
    l2_normalize(v);
    return v;
}

std::vector<Embedding> HashedEmbedder::embed(std::span<const std::string> tokens) {
    std::vector<Embedding> out;
    out.reserve(tokens.size());
    for (const std::string& t : tokens) out.push_back(embed_token(t));
    return out;
}

RemoteEmbedder::RemoteEmbedder(Config config) : config_(std::move(config)) {
    if (config_.batch_size == 0) config_.batch_size = 1;
}

std::size_t RemoteEmbedder::dimension() const {
    std::lock_guard lock(mu_);
    return dimension_;
}

void RemoteEmbedder::fetch(const std::vector<std::string>& missing) {
    const annotate::Endpoint endpoint = annotate::split_base_url(config_.base_url);
    for (std::size_t start = 0; start < missing.size(); start += config_.batch_size) {
        std::size_t end = std::min(missing.size(), start + config_.batch_size);
        nlohmann::json body;
        body["model"] = config_.model_name;
        body["input"] = std::vector<std::string>(missing.begin() + static_cast<std::ptrdiff_t>(start),
                                                 missing.begin() + static_cast<std::ptrdiff_t>(end));
        annotate::HttpResult r =
            annotate::post_json(endpoint, "/v1/embeddings", body.dump(), config_.api_key, config_.timeout);
        if (r.status < 200 || r.status >= 300) {
            throw std::runtime_error("embedding request failed: " +
                                     (r.status == 0 ? r.error : "HTTP " + std::to_string(r.status)));
        }
        nlohmann::json j = nlohmann::json::parse(r.body);
        const auto& data = j.at("data");
        if (data.size() != end - start) throw std::runtime_error("embedding response has the wrong number of vectors");
        for (std::size_t k = 0; k < data.size(); ++k) {
            const auto& item = data[k];
            std::size_t idx = item.contains("index") ? item.at("index").get<std::size_t>() : k;
            if (idx >= end - start) throw std::runtime_error("embedding index out of range");
            Embedding v = item.at("embedding").get<Embedding>();
            if (dimension_ == 0) dimension_ = v.size();
            if (v.size() != dimension_) throw std::runtime_error("embedding dimension changed between responses");
            l2_normalize(v);
            cache_[missing[start + idx]] = std::move(v);
        }
    }
}

std::vector<Embedding> RemoteEmbedder::embed(std::span<const std::string> tokens) {
    std::lock_guard lock(mu_);
    std::set<std::string> missing;
    for (const std::string& t : tokens) {
        if (!cache_.count(t)) missing.insert(t);
    }
    if (!missing.empty()) fetch({missing.begin(), missing.end()});
    std::vector<Embedding> out;
    out.reserve(tokens.size());
    for (const std::string& t : tokens) out.push_back(cache_.at(t));
    return out;
}

}  // namespace docsum::metrics
