// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "docsum/hash.hpp"
#include "docsum/record.hpp"
#include "docsum/rng.hpp"

namespace docsum::testing {

namespace fs = std::filesystem;

class TempDir {
public:
    TempDir() {
        static std::uint64_t counter = 0;
        SeededRng rng(reinterpret_cast<std::uintptr_t>(this) ^ ++counter ^
                      static_cast<std::uint64_t>(std::chrono::steady_clock::now().time_since_epoch().count()));
        path_ = fs::temp_directory_path() / ("docsum_test_" + std::to_string(rng.next()));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const fs::path& path() const { return path_; }
    fs::path operator/(const std::string& name) const { return path_ / name; }

private:
    fs::path path_;
};

inline const std::vector<std::string>& admin_words() {
    static const std::vector<std::string> w = {
        "invoice", "tax",     "notice",  "payment", "due",     "office",  "form",   "record",  "account",
        "date",    "amount",  "total",   "county",  "memo",    "letter",  "permit", "license", "renewal",
        "fee",     "balance", "receipt", "section", "number",  "address", "city",   "state",   "signed",
        "request", "approved", "denied", "review",  "hearing", "claim",   "policy", "member",  "benefit"};
    return w;
}

inline std::string synthetic_text(SeededRng& rng, std::size_t words) {
    const auto& w = admin_words();
    std::string s;
    for (std::size_t i = 0; i < words; ++i) {
        if (i) s += (rng.below(14) == 0) ? ". " : " ";
        s += w[rng.below(w.size())];
        if (rng.below(9) == 0) s += std::to_string(rng.below(1000));
    }
    return s;
}

inline std::string padded(std::size_t i, int width = 4) {
    std::string s = std::to_string(i);
    return std::string(width - std::min<std::size_t>(s.size(), width), '0') + s;
}

struct PlantedCorpus {
    std::vector<DocumentRecord> records;
    std::size_t duplicates = 0, empties = 0, shorts = 0, unique = 0;
};

/// unique long documents, plus exact-modulo-case/whitespace copies of the
/// first `duplicates` of them, empty documents, and short ones.
inline PlantedCorpus planted_corpus(std::size_t unique, std::size_t duplicates, std::size_t empties,
                                    std::size_t shorts, std::uint64_t seed, std::size_t min_words = 100) {
    PlantedCorpus c;
    c.unique = unique;
    c.duplicates = duplicates;
    c.empties = empties;
    c.shorts = shorts;
    SeededRng rng(seed);
    std::vector<std::string> texts;
    for (std::size_t i = 0; i < unique; ++i) {
        texts.push_back(synthetic_text(rng, min_words + rng.below(200)));
        c.records.push_back(make_record("doc" + padded(i), texts.back(), {"memo"}, Source::pretrain_corpus, "memo"));
    }
    for (std::size_t i = 0; i < duplicates; ++i) {
        std::string t = "  " + texts[i % unique] + " \n";
        for (char& ch : t) {
            if (ch >= 'a' && ch <= 'z' && rng.below(3) == 0) ch = static_cast<char>(ch - 'a' + 'A');
            if (ch == ' ' && rng.below(4) == 0) ch = '\t';
        }
        c.records.push_back(make_record("dup" + padded(i), t, {"memo"}, Source::pretrain_corpus, "memo"));
    }
    for (std::size_t i = 0; i < empties; ++i) {
        c.records.push_back(make_record("empty" + padded(i), i % 2 ? "" : " \n\t ", {"memo"}, Source::pretrain_corpus,
                                        "memo"));
    }
    for (std::size_t i = 0; i < shorts; ++i) {
        c.records.push_back(make_record("short" + padded(i), synthetic_text(rng, 1 + rng.below(min_words - 1)),
                                        {"memo"}, Source::pretrain_corpus, "memo"));
    }
    seeded_shuffle(c.records, seed + 1);
    return c;
}

inline void write_file(const fs::path& p, const std::string& content) {
    fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    out << content;
}

/// Downstream layout: <category>/<id>.txt, n documents over five
/// categories, with a couple of near-copies and a short page mixed in.
inline void write_corpus_dir(const fs::path& root, std::size_t n, std::uint64_t seed) {
    static const char* kCats[] = {"letter", "memo", "invoice", "form", "report"};
    SeededRng rng(seed);
    std::vector<std::string> texts;
    for (std::size_t i = 0; i < n; ++i) {
        std::string t;
        if (i % 17 == 16 && !texts.empty()) {
            t = texts[texts.size() / 2];  // duplicate page
        } else if (i % 23 == 22) {
            t = synthetic_text(rng, 12);  // short page
        } else {
            t = synthetic_text(rng, 120 + rng.below(500));
        }
        texts.push_back(t);
        write_file(root / kCats[i % 5] / ("page" + padded(i) + ".txt"), t);
    }
}

}  // namespace docsum::testing
