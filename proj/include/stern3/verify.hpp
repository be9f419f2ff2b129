#pragma once

// Named verification suites, shared by the CLI and the acceptance tests.
// Each suite returns a flat list of named checks with the first
// counterexample of any failing check.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stern3/analytics.hpp"
#include "stern3/index.hpp"
#include "stern3/linalg.hpp"
#include "stern3/seqcore.hpp"
#include "stern3/series.hpp"
#include "stern3/subgraph.hpp"

namespace stern3 {

struct SuiteReport {
    std::string suite;
    int max_level = 0;
    std::vector<IdentityCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
};

struct SuiteOptions {
    int max_level = 6;
    std::optional<int> depth;          // graph suite; defaults to max_level
    std::optional<Index> max_n;        // series suite; defaults to the end of level min(max_level, 4)
    std::size_t memo_budget = default_memo_budget;
};

inline constexpr std::array<std::string_view, 8> suite_names{"all",    "symmetry", "sums",   "tribonacci",
                                                             "delta", "graph",    "series", "matrix"};

inline bool is_suite(std::string_view name) {
    return std::find(suite_names.begin(), suite_names.end(), name) != suite_names.end();
}

namespace detail {

inline IdentityCheck check(std::string name) { return IdentityCheck{std::move(name), true, std::nullopt}; }

inline void suite_symmetry(const SuiteOptions& o, std::vector<IdentityCheck>& out) {
    auto c = check("threefold_symmetry");
    for (int n = 1; n <= o.max_level; ++n)
        if (!verify_threefold(n))
            fail_once(c, "level " + std::to_string(n));
    out.push_back(std::move(c));
}

inline void suite_sums(const SuiteOptions& o, std::vector<IdentityCheck>& out) {
    auto c = check("level_sum_3x5^n");
    BigInt expected = 3;
    for (int n = 0; n <= o.max_level; ++n, expected *= 5) {
        const BigInt got = level_sum(n);
        if (got != expected)
            fail_once(c, "level " + std::to_string(n) + ": " + got.str() + " != " + expected.str());
    }
    out.push_back(std::move(c));
}

inline void suite_tribonacci(const SuiteOptions& o, std::vector<IdentityCheck>& out) {
    auto standard = check("standard_tribonacci");
    const std::vector<BigInt> want{1, 1, 1, 3, 5, 9, 17, 31, 57, 105, 193};
    if (tribonacci_subsequence(Digits{}, want.size()) != want)
        fail_once(standard, "prefix () does not give 1,1,1,3,5,9,...");
    out.push_back(std::move(standard));

    auto rec = check("tribonacci_recurrence");
    const int len = std::min(o.max_level, 5);
    for (int L = 0; L <= len; ++L)
        for (level_cursor<> cur(L); !cur.done(); cur.next()) {
            const auto seq = tribonacci_subsequence(cur.digits(), 12);
            for (std::size_t k = 0; k + 3 < seq.size(); ++k)
                if (seq[k + 3] != seq[k] + seq[k + 1] + seq[k + 2])
                    fail_once(rec, "prefix " + format_digits(cur.digits()) + " term " + std::to_string(k + 4));
        }
    out.push_back(std::move(rec));
}

inline void suite_delta(const SuiteOptions& o, std::vector<IdentityCheck>& out) {
    const auto rep = verify_delta_identities(std::max(o.max_level, 2));
    for (const auto& c : rep.checks)
        out.push_back(c);
}

inline void suite_graph(const SuiteOptions& o, std::vector<IdentityCheck>& out) {
    const int depth = o.depth.value_or(o.max_level);
    const auto g = SubdivisionGraph::build(depth);
    const auto counts = path_counts(g);
    auto c = check("path_count_equals_term");
    auto indeg = check("in_degree_three");
    for (VertexId v = 3; v < g.vertex_count(); ++v)
        if (g.vertex(v).parents.size() != 3)
            fail_once(indeg, "vertex " + std::to_string(v));
    term_evaluator<> term_at(Seed{}, o.memo_budget);
    const Index last = level_range(depth).second;
    for (Index N = 1; N <= last; ++N) {
        const VertexId v = g.vertex_of(N);
        if (g.is_initial(v))
            continue;
        const BigInt a = term_at(N);
        if (counts[v] != a)
            fail_once(c, "N=" + std::to_string(N) + ": paths " + counts[v].str() + " != a_N " + a.str());
    }
    out.push_back(std::move(indeg));
    out.push_back(std::move(c));
}

inline void suite_series(const SuiteOptions& o, std::vector<IdentityCheck>& out) {
    const Index max_n = o.max_n.value_or(level_range(std::min(o.max_level, 4)).second);
    const auto s = series_coefficients(static_cast<std::size_t>(max_n));
    term_evaluator<> term_at(Seed{}, o.memo_budget);
    auto c = check("series_equals_recursion");
    if (s[0] != 0)
        fail_once(c, "constant term " + s[0].str());
    for (Index N = 1; N <= max_n; ++N) {
        const BigInt a = term_at(N);
        if (s[static_cast<std::size_t>(N)] != a)
            fail_once(c, "N=" + std::to_string(N) + ": series " + s[static_cast<std::size_t>(N)].str() +
                             " != a_N " + a.str());
    }
    out.push_back(std::move(c));
}

inline void suite_matrix(const SuiteOptions& o, std::vector<IdentityCheck>& out) {
    auto rows = check("bottom_row_equals_triple");
    auto terms = check("recursion_equals_matrix");
    term_evaluator<> term_at(Seed{}, o.memo_budget);
    for (int n = 0; n <= o.max_level; ++n)
        for (level_cursor<> cur(n); !cur.done(); cur.next()) {
            const auto row = bottom_row(cur.digits());
            if (row != cur.triple())
                fail_once(rows, "address " + format_digits(cur.digits()));
            const Index first = cur.first_index();
            for (int k = 1; k <= 3; ++k)
                if (term_at(first + k - 1) != row.at(k))
                    fail_once(terms, "N=" + std::to_string(first + k - 1));
        }
    out.push_back(std::move(rows));
    out.push_back(std::move(terms));
}

} // namespace detail

inline SuiteReport run_suite(std::string_view name, const SuiteOptions& o) {
    if (!is_suite(name))
        throw std::invalid_argument("unknown suite: " + std::string(name));
    if (o.max_level < 0)
        throw std::invalid_argument("max_level must be nonnegative");
    SuiteReport rep{std::string(name), o.max_level, {}};
    const bool all = name == "all";
    if (all || name == "symmetry") detail::suite_symmetry(o, rep.checks);
    if (all || name == "sums") detail::suite_sums(o, rep.checks);
    if (all || name == "tribonacci") detail::suite_tribonacci(o, rep.checks);
    if (all || name == "delta") detail::suite_delta(o, rep.checks);
    if (all || name == "graph") detail::suite_graph(o, rep.checks);
    if (all || name == "series") detail::suite_series(o, rep.checks);
    if (all || name == "matrix") detail::suite_matrix(o, rep.checks);
    return rep;
}

} // namespace stern3
