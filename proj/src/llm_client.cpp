// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#include "docsum/llm_client.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <thread>

#include "httplib.h"
#include "json.hpp"

namespace docsum::annotate {

bool is_transient_status(int status) {
    return status == 0 || status == 408 || status == 429 || status == 500 || status == 502 || status == 503 ||
           status == 504;
}

std::chrono::milliseconds backoff_delay(int attempt, const LlmConfig& config) {
    auto delay = config.initial_backoff;
    for (int i = 0; i < attempt && delay < config.max_backoff; ++i) delay *= 2;
    return std::min(delay, config.max_backoff);
}

std::string build_chat_request(const LlmConfig& config, std::string_view prompt) {
    nlohmann::ordered_json body;
    body["model"] = config.model_name;
    body["messages"] = nlohmann::ordered_json::array({{{"role", "user"}, {"content", std::string(prompt)}}});
    body["max_tokens"] = LlmConfig::max_output_tokens;
    body["temperature"] = config.temperature;
    return body.dump();
}

std::string extract_completion(std::string_view response_body) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(response_body);
    } catch (const nlohmann::json::parse_error& e) {
        throw LlmError(std::string("unparsable completion payload: ") + e.what());
    }
    try {
        const auto& content = j.at("choices").at(0).at("message").at("content");
        if (!content.is_string()) throw LlmError("completion content is not a string");
        return content.get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw LlmError(std::string("unexpected completion payload: ") + e.what());
    }
}

Endpoint split_base_url(std::string_view base_url) {
    std::size_t scheme_end = base_url.find("://");
    if (scheme_end == std::string_view::npos) throw LlmError("base URL must include a scheme: " + std::string(base_url));
    std::size_t path_start = base_url.find('/', scheme_end + 3);
    Endpoint e;
    if (path_start == std::string_view::npos) {
        e.scheme_host_port = std::string(base_url);
    } else {
        e.scheme_host_port = std::string(base_url.substr(0, path_start));
        e.path_prefix = std::string(base_url.substr(path_start));
        while (!e.path_prefix.empty() && e.path_prefix.back() == '/') e.path_prefix.pop_back();
    }
    return e;
}

HttpResult post_json(const Endpoint& endpoint, const std::string& path, const std::string& body,
                     const std::string& api_key, std::chrono::seconds timeout) {
    httplib::Client client(endpoint.scheme_host_port);
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);
    httplib::Headers headers;
    if (!api_key.empty()) headers.emplace("Authorization", "Bearer " + api_key);
    auto res = client.Post(endpoint.path_prefix + path, headers, body, "application/json");
    HttpResult out;
    if (!res) {
        out.error = httplib::to_string(res.error());
        return out;
    }
    out.status = res->status;
    out.body = res->body;
    return out;
}

std::string call_llm(const LlmConfig& config, std::string_view prompt, const Sleeper& sleep) {
    const Endpoint endpoint = split_base_url(config.base_url);
    const std::string body = build_chat_request(config, prompt);
    for (int attempt = 0;; ++attempt) {
        HttpResult r = post_json(endpoint, "/v1/chat/completions", body, config.api_key, config.timeout);
        if (r.status >= 200 && r.status < 300) return extract_completion(r.body);

        std::string what = r.status == 0 ? "connection failed: " + r.error : "HTTP " + std::to_string(r.status);
        if (!is_transient_status(r.status)) throw LlmError("chat completion failed: " + what, r.status);
        if (attempt >= config.max_retries) {
            throw LlmError("chat completion failed after " + std::to_string(config.max_retries) +
                               " retries: " + what,
                           r.status);
        }
        auto delay = backoff_delay(attempt, config);
        spdlog::info("transient failure ({}), retry {}/{} in {} ms", what, attempt + 1, config.max_retries,
                     delay.count());
        if (sleep) {
            sleep(delay);
        } else {
            std::this_thread::sleep_for(delay);
        }
    }
}

}  // namespace docsum::annotate
