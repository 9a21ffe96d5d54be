// SPDX-FileCopyrightText: (c) 2026 The docsum Authors
//
// SPDX-License-Identifier: Apache-2.0
#include "docsum/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "docsum/text.hpp"

namespace docsum::metrics {

double f_measure(double precision, double recall) {
    double s = precision + recall;
    return s > 0.0 ? 2.0 * precision * recall / s : 0.0;
}

RougeScore make_score(std::size_t overlap, std::size_t candidate_total, std::size_t reference_total) {
    RougeScore r;
    r.precision = candidate_total ? static_cast<double>(overlap) / static_cast<double>(candidate_total) : 0.0;
    r.recall = reference_total ? static_cast<double>(overlap) / static_cast<double>(reference_total) : 0.0;
    r.f1 = f_measure(r.precision, r.recall);
    return r;
}

std::vector<std::string> rouge_tokens(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        auto c = static_cast<unsigned char>(ch);
        if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c >= 0x80) {
            cur.push_back(ch);
        } else if (c >= 'A' && c <= 'Z') {
            cur.push_back(text::to_lower_ascii(ch));
        } else if (!cur.empty()) {
            out.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

std::vector<std::string> split_sentences(std::string_view text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    auto flush = [&](std::size_t end) {
        std::string_view s = text::trim(text.substr(start, end - start));
        if (!s.empty()) out.emplace_back(s);
        start = end;
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '\n') {
            flush(i);
            start = i + 1;
        } else if ((c == '.' || c == '!' || c == '?') && i + 1 < text.size() && text::is_space(text[i + 1])) {
            flush(i + 1);
        }
    }
    flush(text.size());
    return out;
}

RougeScore rouge_n(TokenView candidate, TokenView reference, std::size_t n) {
    if (n == 0) return {};
    auto grams = [n](TokenView t) {
        std::map<std::vector<std::string>, std::size_t> counts;
        for (std::size_t i = 0; i + n <= t.size(); ++i) ++counts[std::vector<std::string>(t.begin() + i, t.begin() + i + n)];
        return counts;
    };
    auto cand = grams(candidate);
    auto ref = grams(reference);
    std::size_t overlap = 0;
    for (const auto& [g, c] : cand) {
        auto it = ref.find(g);
        if (it != ref.end()) overlap += std::min(c, it->second);
    }
    std::size_t cand_total = candidate.size() >= n ? candidate.size() - n + 1 : 0;
    std::size_t ref_total = reference.size() >= n ? reference.size() - n + 1 : 0;
    return make_score(overlap, cand_total, ref_total);
}

RougeScore rouge_n(std::string_view candidate, std::string_view reference, std::size_t n) {
    return rouge_n(rouge_tokens(candidate), rouge_tokens(reference), n);
}

namespace {

std::vector<std::vector<std::uint32_t>> lcs_table(TokenView a, TokenView b) {
    std::vector<std::vector<std::uint32_t>> t(a.size() + 1, std::vector<std::uint32_t>(b.size() + 1, 0));
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            t[i][j] = a[i - 1] == b[j - 1] ? t[i - 1][j - 1] + 1 : std::max(t[i - 1][j], t[i][j - 1]);
        }
    }
    return t;
}

}  // namespace

std::size_t lcs_length(TokenView a, TokenView b) {
    if (a.empty() || b.empty()) return 0;
    // Two rolling rows.
    std::vector<std::uint32_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

std::vector<std::size_t> lcs_positions_in_second(TokenView a, TokenView b) {
    auto t = lcs_table(a, b);
    std::vector<std::size_t> pos;
    std::size_t i = a.size(), j = b.size();
    while (i > 0 && j > 0) {
        if (a[i - 1] == b[j - 1]) {
            pos.push_back(j - 1);
            --i;
            --j;
        } else if (t[i - 1][j] > t[i][j - 1]) {
            --i;
        } else {
            --j;
        }
    }
    std::reverse(pos.begin(), pos.end());
    return pos;
}

RougeScore rouge_l(TokenView candidate, TokenView reference) {
    return make_score(lcs_length(candidate, reference), candidate.size(), reference.size());
}

RougeScore rouge_l(std::string_view candidate, std::string_view reference) {
    return rouge_l(rouge_tokens(candidate), rouge_tokens(reference));
}

RougeScore rouge_lsum(std::span<const Tokens> candidate_sentences, std::span<const Tokens> reference_sentences) {
    std::size_t cand_total = 0, ref_total = 0, overlap = 0;
    for (const Tokens& c : candidate_sentences) cand_total += c.size();
    for (const Tokens& r : reference_sentences) {
        ref_total += r.size();
        std::set<std::size_t> matched;
        for (const Tokens& c : candidate_sentences) {
            for (std::size_t p : lcs_positions_in_second(c, r)) matched.insert(p);
        }
        overlap += matched.size();
    }
    return make_score(overlap, cand_total, ref_total);
}

RougeScore rouge_lsum(std::string_view candidate, std::string_view reference) {
    auto tokenize = [](std::string_view t) {
        std::vector<Tokens> out;
        for (const std::string& s : split_sentences(t)) out.push_back(rouge_tokens(s));
        return out;
    };
    return rouge_lsum(tokenize(candidate), tokenize(reference));
}

double dot(const Embedding& a, const Embedding& b) {
    double s = 0.0;
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

BertScore bertscore(std::span<const Embedding> candidate, std::span<const Embedding> reference,
                    std::span<const double> candidate_weights, std::span<const double> reference_weights) {
    BertScore out;
    if (candidate.empty() || reference.empty()) return out;
    const bool weighted_c = candidate_weights.size() == candidate.size();
    const bool weighted_r = reference_weights.size() == reference.size();

    // sim[i][j]: reference token i vs candidate token j
    std::vector<double> col_max(candidate.size(), -1.0);
    double recall_num = 0.0, recall_den = 0.0;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        double row_max = -1.0;
        for (std::size_t j = 0; j < candidate.size(); ++j) {
            double s = dot(reference[i], candidate[j]);
            row_max = std::max(row_max, s);
            col_max[j] = std::max(col_max[j], s);
        }
        double w = weighted_r ? reference_weights[i] : 1.0;
        recall_num += w * std::clamp(row_max, 0.0, 1.0);
        recall_den += w;
    }
    double precision_num = 0.0, precision_den = 0.0;
    for (std::size_t j = 0; j < candidate.size(); ++j) {
        double w = weighted_c ? candidate_weights[j] : 1.0;
        precision_num += w * std::clamp(col_max[j], 0.0, 1.0);
        precision_den += w;
    }
    out.recall = recall_den > 0.0 ? recall_num / recall_den : 0.0;
    out.precision = precision_den > 0.0 ? precision_num / precision_den : 0.0;
    out.f1 = f_measure(out.precision, out.recall);
    return out;
}

IdfWeights compute_idf(std::span<const Tokens> references) {
    std::map<std::string, std::size_t> df;
    for (const Tokens& r : references) {
        std::set<std::string> uniq(r.begin(), r.end());
        for (const std::string& t : uniq) ++df[t];
    }
    IdfWeights idf;
    const double m = static_cast<double>(references.size());
    for (const auto& [t, n] : df) idf[t] = std::log((m + 1.0) / (static_cast<double>(n) + 1.0));
    return idf;
}

}  // namespace docsum::metrics
