// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace docsum::annotate {

struct LlmConfig {
    std::string base_url;
    std::string model_name;
    // Fixed: annotation requests never ask for more than 128 tokens.
    static constexpr int max_output_tokens = 128;
    double temperature = 0.0;
    int max_retries = 5;
    int parallelism = 4;
    std::string api_key;
    std::chrono::milliseconds initial_backoff{500};
    std::chrono::milliseconds max_backoff{30'000};
    std::chrono::seconds timeout{120};
};

class LlmError : public std::runtime_error {
public:
    LlmError(const std::string& what, int status = 0) : std::runtime_error(what), status_(status) {}
    int status() const { return status_; }

private:
    int status_;
};

using Sleeper = std::function<void(std::chrono::milliseconds)>;

// Rate limiting, server errors, and connection failures (status 0).
bool is_transient_status(int status);

// initial_backoff * 2^attempt, capped at max_backoff.
std::chrono::milliseconds backoff_delay(int attempt, const LlmConfig& config);

std::string build_chat_request(const LlmConfig& config, std::string_view prompt);

// choices[0].message.content; throws LlmError on anything else.
std::string extract_completion(std::string_view response_body);

struct Endpoint {
    std::string scheme_host_port;  // "http://host:port"
    std::string path_prefix;       // "" or "/prefix"
};

Endpoint split_base_url(std::string_view base_url);

/// POST {base_url}/v1/chat/completions with exponential backoff on transient
/// failures. Throws LlmError once retries are exhausted or on a hard error.
std::string call_llm(const LlmConfig& config, std::string_view prompt, const Sleeper& sleep = {});

// POST helper shared with the remote embedding client.
struct HttpResult {
    int status = 0;  // 0 when the connection failed
    std::string body;
    std::string error;
};

HttpResult post_json(const Endpoint& endpoint, const std::string& path, const std::string& body,
                     const std::string& api_key, std::chrono::seconds timeout);

}  // namespace docsum::annotate
