// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <set>

#include "docsum/gate_split.hpp"
#include "support/fixtures.hpp"

using namespace docsum;
using namespace docsum::split;

namespace {

std::vector<std::string> make_ids(std::size_t n) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back("id" + std::to_string(i));
    return ids;
}

void check_partition(const SplitManifest& m, const std::vector<std::string>& ids) {
    std::set<std::string> all;
    for (const auto* part : {&m.train_ids, &m.val_ids, &m.test_ids}) {
        for (const std::string& id : *part) CHECK(all.insert(id).second);
    }
    CHECK(all == std::set<std::string>(ids.begin(), ids.end()));
}

}  // namespace

TEST_CASE("gate keeps only scores strictly above the threshold") {
    std::vector<SummaryAnnotation> s{{"a", "x", 0.6, "m"}, {"b", "y", 0.9, "m"}, {"c", "z", 0.98, "m"}};
    GateResult<SummaryAnnotation> g = confidence_gate(s);
    REQUIRE(g.kept.size() == 1);
    CHECK(g.kept[0].doc_id == "c");
    CHECK(g.dropped.size() == 2);
    CHECK(confidence_gate(s, 0.5).kept.size() == 3);
}

TEST_CASE("qa gate requires scores") {
    std::vector<QaAnnotation> q{{"a", "q", "a", 0.95, "m", QaTemplate::prompt3},
                                {"b", "q", "a", std::nullopt, "m", QaTemplate::prompt1}};
    CHECK_THROWS_AS(confidence_gate(std::span<const QaAnnotation>(q)), SplitError);
    q.pop_back();
    CHECK(confidence_gate(std::span<const QaAnnotation>(q)).kept.size() == 1);
}

TEST_CASE("documents pass when both summary and qa pass") {
    std::vector<SummaryAnnotation> s{{"a", "x", 0.95, "m"}, {"b", "y", 0.95, "m"}, {"c", "z", 0.5, "m"}};
    std::vector<QaAnnotation> q{{"a", "q", "a", 0.99, "m", QaTemplate::prompt3},
                                {"b", "q", "a", 0.8, "m", QaTemplate::prompt3},
                                {"c", "q", "a", 0.99, "m", QaTemplate::prompt3}};
    CHECK(gate_documents(s, std::nullopt) == std::vector<std::string>{"a", "b"});
    CHECK(gate_documents(s, std::span<const QaAnnotation>(q)) == std::vector<std::string>{"a"});
}

TEST_CASE("split sizes follow the floor rule") {
    SplitSizes s = split_sizes(29444, SplitRatios{});
    CHECK(s.train == 20610);
    CHECK(s.val == 4416);
    CHECK(s.test == 4418);
    SplitSizes z = split_sizes(0, SplitRatios{});
    CHECK(z.train + z.val + z.test == 0);
    SplitSizes t = split_sizes(10, SplitRatios{0.7, 0.2, 0.1});
    CHECK(t.train == 7);
    CHECK(t.val == 2);
    CHECK(t.test == 1);
}

TEST_CASE("split is a seeded partition") {
    auto ids = make_ids(1000);
    SplitManifest a = split_dataset(ids, 5);
    SplitManifest b = split_dataset(ids, 5);
    SplitManifest c = split_dataset(ids, 6);
    check_partition(a, ids);
    CHECK(a.train_ids == b.train_ids);
    CHECK(a.test_ids == b.test_ids);
    CHECK(a.train_ids != c.train_ids);
    CHECK(a.train_ids.size() == 700);
    CHECK(std::is_sorted(a.val_ids.begin(), a.val_ids.end()));
    // input order does not matter
    std::vector<std::string> shuffled = ids;
    seeded_shuffle(shuffled, 1);
    SplitManifest d = split_dataset(shuffled, 5);
    CHECK(d.train_ids == a.train_ids);
    CHECK_THROWS_AS(split_dataset({"x", "x"}, 1), SplitError);
}

TEST_CASE("ratio parsing") {
    SplitRatios r = parse_ratios("0.8,0.1,0.1");
    CHECK(r.train == 0.8);
    CHECK_THROWS_AS(parse_ratios("0.8,0.1"), SplitError);
    CHECK_THROWS_AS(parse_ratios("0.8,0.3,0.1"), SplitError);
    CHECK_THROWS_AS(parse_ratios("0.8,-0.1,0.3"), SplitError);
    CHECK_THROWS_AS(parse_ratios("a,b,c"), SplitError);
}

TEST_CASE("stratified split partitions each label") {
    std::map<std::string, std::string> labelled;
    for (int i = 0; i < 300; ++i) labelled["id" + std::to_string(i)] = i % 3 == 0 ? "memo" : "letter";
    SplitManifest m = split_dataset_stratified(labelled, 2);
    std::vector<std::string> ids;
    for (const auto& [id, _] : labelled) ids.push_back(id);
    check_partition(m, ids);
    std::size_t memo_train = 0;
    for (const std::string& id : m.train_ids) memo_train += labelled[id] == "memo";
    CHECK(memo_train == 70);
}

TEST_CASE("manifest file round trip") {
    testing::TempDir dir;
    SplitManifest m = split_dataset(make_ids(50), 3);
    write_manifest(m, dir / "split.json");
    SplitManifest r = read_manifest(dir / "split.json");
    CHECK(r.seed == 3);
    CHECK(r.train_ids == m.train_ids);
    CHECK(r.val_ids == m.val_ids);
    CHECK(r.test_ids == m.test_ids);
}
