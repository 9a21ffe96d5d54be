// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <atomic>

#include "docsum/annotate.hpp"
#include "support/fixtures.hpp"
#include "support/mock_llm_server.hpp"

using namespace docsum;
using namespace docsum::annotate;
using docsum::testing::MockLlmServer;
using docsum::testing::MockReply;
using docsum::testing::TempDir;

namespace {

LlmConfig mock_config(const MockLlmServer& server) {
    LlmConfig c;
    c.base_url = server.base_url();
    c.model_name = "mock-7b";
    c.initial_backoff = std::chrono::milliseconds(1);
    c.max_backoff = std::chrono::milliseconds(4);
    c.timeout = std::chrono::seconds(5);
    return c;
}

std::vector<DocumentRecord> small_corpus(std::size_t n) {
    SeededRng rng(8);
    std::vector<DocumentRecord> rs;
    for (std::size_t i = 0; i < n; ++i) {
        rs.push_back(make_record("d" + testing::padded(i), testing::synthetic_text(rng, 40), {"memo"},
                                 Source::downstream_corpus, "memo"));
    }
    return rs;
}

const Sleeper kNoSleep = [](std::chrono::milliseconds) {};

}  // namespace

TEST_CASE("transient statuses and capped exponential backoff") {
    for (int s : {0, 408, 429, 500, 502, 503, 504}) CHECK(is_transient_status(s));
    for (int s : {200, 400, 401, 403, 404, 422}) CHECK_FALSE(is_transient_status(s));
    LlmConfig c;
    c.initial_backoff = std::chrono::milliseconds(100);
    c.max_backoff = std::chrono::milliseconds(1000);
    CHECK(backoff_delay(0, c).count() == 100);
    CHECK(backoff_delay(1, c).count() == 200);
    CHECK(backoff_delay(3, c).count() == 800);
    CHECK(backoff_delay(4, c).count() == 1000);
    CHECK(backoff_delay(60, c).count() == 1000);
}

TEST_CASE("chat request wire format") {
    LlmConfig c;
    c.model_name = "m";
    ojson j = ojson::parse(build_chat_request(c, "hello"));
    CHECK(j["model"] == "m");
    CHECK(j["messages"].size() == 1);
    CHECK(j["messages"][0]["role"] == "user");
    CHECK(j["messages"][0]["content"] == "hello");
    CHECK(j["max_tokens"] == 128);
    CHECK(j["temperature"] == 0.0);
    CHECK(extract_completion(testing::chat_body("hi")) == "hi");
    CHECK_THROWS_AS(extract_completion("{\"choices\":[]}"), LlmError);
    CHECK_THROWS_AS(extract_completion("not json"), LlmError);
}

TEST_CASE("base url splitting") {
    Endpoint e = split_base_url("http://127.0.0.1:8000/api/");
    CHECK(e.scheme_host_port == "http://127.0.0.1:8000");
    CHECK(e.path_prefix == "/api");
    CHECK(split_base_url("https://host").path_prefix.empty());
}

TEST_CASE("call_llm retries a rate limit, then succeeds") {
    MockLlmServer server([](const std::string&, std::size_t i) {
        return i == 0 ? MockReply{429, "{}"} : MockReply{200, testing::chat_body("ok")};
    });
    std::vector<std::chrono::milliseconds> slept;
    Sleeper sleep = [&](std::chrono::milliseconds d) { slept.push_back(d); };
    CHECK(call_llm(mock_config(server), "p", sleep) == "ok");
    CHECK(server.chat_calls() == 2);
    CHECK(slept.size() == 1);
}

TEST_CASE("call_llm gives up after max_retries and fails fast on client errors") {
    MockLlmServer busy([](const std::string&, std::size_t) { return MockReply{503, "{}"}; });
    LlmConfig c = mock_config(busy);
    c.max_retries = 2;
    CHECK_THROWS_AS(call_llm(c, "p", kNoSleep), LlmError);
    CHECK(busy.chat_calls() == 3);

    MockLlmServer denied([](const std::string&, std::size_t) { return MockReply{401, "{}"}; });
    try {
        call_llm(mock_config(denied), "p", kNoSleep);
        FAIL("expected LlmError");
    } catch (const LlmError& e) {
        CHECK(e.status() == 401);
    }
    CHECK(denied.chat_calls() == 1);

    MockLlmServer garbage([](const std::string&, std::size_t) { return MockReply{200, "<html>"}; });
    CHECK_THROWS_AS(call_llm(mock_config(garbage), "p", kNoSleep), LlmError);
}

TEST_CASE("bearer token is sent when configured") {
    MockLlmServer server;
    LlmConfig c = mock_config(server);
    c.api_key = "sekret";
    call_llm(c, "Document: x", kNoSleep);
    CHECK(server.auth_headers().at(0) == "Bearer sekret");
}

TEST_CASE("annotate summaries, then rerun from cache") {
    MockLlmServer server;
    TempDir dir;
    auto rs = small_corpus(12);
    AnnotateOptions opts;
    opts.sleep = kNoSleep;
    AnnotationRun first = annotate_corpus(rs, Task::summary, mock_config(server), dir / "cache", opts);
    CHECK(first.summaries.size() == 12);
    CHECK(first.failures.empty());
    CHECK(first.endpoint_calls == 12);
    CHECK(server.chat_calls() == 12);
    for (const SummaryAnnotation& s : first.summaries) CHECK(s.model_name == "mock-7b");

    AnnotationRun second = annotate_corpus(rs, Task::summary, mock_config(server), dir / "cache", opts);
    CHECK(second.endpoint_calls == 0);
    CHECK(second.cache_hits == 12);
    CHECK(server.chat_calls() == 12);
    CHECK(second.summaries == first.summaries);

    // another model is a different cache key
    LlmConfig other = mock_config(server);
    other.model_name = "mock-13b";
    AnnotationRun third = annotate_corpus(rs, Task::summary, other, dir / "cache", opts);
    CHECK(third.endpoint_calls == 12);
}

TEST_CASE("one malformed response among ten is a reported failure") {
    std::atomic<int> served{0};
    MockLlmServer server([&](const std::string& prompt, std::size_t) {
        if (testing::prompt_document(prompt).rfind("BROKEN", 0) == 0) return MockReply{200, testing::chat_body("no markers here")};
        ++served;
        return MockReply{200, testing::chat_body(testing::default_completion(prompt))};
    });
    TempDir dir;
    auto rs = small_corpus(10);
    rs[4].ocr_text = "BROKEN " + rs[4].ocr_text;
    AnnotateOptions opts;
    opts.sleep = kNoSleep;
    AnnotationRun run = annotate_corpus(rs, Task::qa, mock_config(server), dir / "cache", opts);
    CHECK(run.qa.size() == 9);
    REQUIRE(run.failures.size() == 1);
    CHECK(run.failures[0].doc_id == rs[4].doc_id);
    CHECK(run.failures[0].reason.rfind("parse:", 0) == 0);
    ojson report = run.failure_report();
    CHECK(report["failure_count"] == 1);
}

TEST_CASE("qa task uses category and optional key") {
    MockLlmServer server;
    TempDir dir;
    auto rs = small_corpus(2);
    AnnotateOptions opts;
    opts.sleep = kNoSleep;
    opts.keys[rs[0].doc_id] = "due date";
    AnnotationRun run = annotate_corpus(rs, Task::qa, mock_config(server), dir / "cache", opts);
    CHECK(run.qa.size() == 2);
    std::vector<std::string> prompts = server.prompts();
    std::size_t with_key = 0;
    for (const std::string& p : prompts) {
        CHECK(p.find("\nCategory: memo\n") != std::string::npos);
        if (p.find("\nKey: due date\n") != std::string::npos) ++with_key;
    }
    CHECK(with_key == 1);
    for (const QaAnnotation& a : run.qa) {
        CHECK(a.template_id == QaTemplate::prompt1);
        CHECK_FALSE(a.score.has_value());
    }
}

TEST_CASE("qa_score task scores existing pairs") {
    MockLlmServer server;
    TempDir dir;
    auto rs = small_corpus(3);
    AnnotateOptions opts;
    opts.sleep = kNoSleep;
    opts.qa_inputs = {{rs[0].doc_id, "Q?", "A.", std::nullopt, "m", QaTemplate::prompt1},
                      {rs[1].doc_id, "Q2?", "A2.", std::nullopt, "m", QaTemplate::prompt1}};
    AnnotationRun run = annotate_corpus(rs, Task::qa_score, mock_config(server), dir / "cache", opts);
    CHECK(run.qa.size() == 2);
    CHECK(run.failures.size() == 1);  // rs[2] has no pair
    for (const QaAnnotation& a : run.qa) {
        CHECK(a.template_id == QaTemplate::prompt3);
        REQUIRE(a.score.has_value());
    }
    CHECK(server.chat_calls() == 2);
}

TEST_CASE("endpoint failures do not abort the run") {
    MockLlmServer server([](const std::string& prompt, std::size_t) {
        if (prompt.find("FAIL") != std::string::npos) return MockReply{400, "{}"};
        return MockReply{200, testing::chat_body(testing::default_completion(prompt))};
    });
    TempDir dir;
    auto rs = small_corpus(5);
    rs[2].ocr_text += " FAIL";
    AnnotateOptions opts;
    opts.sleep = kNoSleep;
    AnnotationRun run = annotate_corpus(rs, Task::summary, mock_config(server), dir / "cache", opts);
    CHECK(run.summaries.size() == 4);
    REQUIRE(run.failures.size() == 1);
    CHECK(run.failures[0].reason.rfind("endpoint:", 0) == 0);
    // failed requests are not cached
    AnnotationRun again = annotate_corpus(rs, Task::summary, mock_config(server), dir / "cache", opts);
    CHECK(again.endpoint_calls == 1);
}

TEST_CASE("cache files are named by the hex digest") {
    TempDir dir;
    ResponseCache cache(dir / "c");
    std::string k = ResponseCache::key(TemplateId::prompt2_summary, "prompt", "m");
    CHECK(k.size() == 64);
    CHECK(k != ResponseCache::key(TemplateId::prompt1_qa, "prompt", "m"));
    CHECK_FALSE(cache.get(k).has_value());
    cache.put(k, TemplateId::prompt2_summary, "m", "text");
    CHECK(cache.get(k) == "text");
    CHECK(cache.path_for(k).filename() == k + ".json");
}
