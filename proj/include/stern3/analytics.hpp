#pragma once

// Level statistics of the unit-seed sequence: level sums, occurrence counts
// per value and position, and checks of the identities they satisfy.

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "stern3/index.hpp"
#include "stern3/reference_table.hpp"
#include "stern3/seqcore.hpp"
#include "stern3/types.hpp"

namespace stern3 {

template <class Int = BigInt>
Int level_sum(int n, const basic_seed<Int>& seed = {}) {
    Int s = 0;
    for (level_cursor<Int> c(n, seed); !c.done(); c.next())
        s += c.triple().sum();
    return s;
}

// Occurrences of one value in one level: overall and per position k = 1, 2, 3.
struct DeltaCounts {
    std::uint64_t total = 0;
    std::array<std::uint64_t, 3> by_pos{};

    DeltaCounts& operator+=(const DeltaCounts& o) {
        total += o.total;
        for (std::size_t k = 0; k < 3; ++k)
            by_pos[k] += o.by_pos[k];
        return *this;
    }

    friend bool operator==(const DeltaCounts&, const DeltaCounts&) = default;
};

template <class Int = BigInt>
class basic_delta_table {
public:
    using level_map = std::map<Int, DeltaCounts>;

    int max_level() const { return static_cast<int>(levels_.size()) - 1; }

    const level_map& level(int n) const { return levels_.at(static_cast<std::size_t>(n)); }

    // Zero counts for values that never occur.
    DeltaCounts at(int n, const Int& m) const {
        if (n < 0 || n > max_level())
            throw std::out_of_range("level " + std::to_string(n) + " not tabulated");
        const auto& lv = level(n);
        auto it = lv.find(m);
        return it == lv.end() ? DeltaCounts{} : it->second;
    }

    void tally(int n, const basic_triple<Int>& t) {
        if (n >= static_cast<int>(levels_.size()))
            levels_.resize(static_cast<std::size_t>(n) + 1);
        auto& lv = levels_[static_cast<std::size_t>(n)];
        for (int k = 1; k <= 3; ++k) {
            auto& c = lv[t.at(k)];
            ++c.total;
            ++c.by_pos[static_cast<std::size_t>(k - 1)];
        }
    }

    void add(int n, const Int& m, const DeltaCounts& c) {
        if (n >= static_cast<int>(levels_.size()))
            levels_.resize(static_cast<std::size_t>(n) + 1);
        levels_[static_cast<std::size_t>(n)][m] += c;
    }

    // Associative merge, for tables built over disjoint subtrees.
    basic_delta_table& merge(const basic_delta_table& o) {
        for (int n = 0; n <= o.max_level(); ++n)
            for (const auto& [m, c] : o.level(n))
                add(n, m, c);
        return *this;
    }

    friend bool operator==(const basic_delta_table&, const basic_delta_table&) = default;

private:
    std::vector<level_map> levels_;
};

using DeltaTable = basic_delta_table<>;

inline constexpr std::string_view delta_csv_header = "level,m,delta,delta1,delta2,delta3";

template <class Int>
std::string to_csv(const basic_delta_table<Int>& table) {
    std::ostringstream os;
    os << delta_csv_header << '\n';
    for (int n = 0; n <= table.max_level(); ++n)
        for (const auto& [m, c] : table.level(n))
            os << n << ',' << to_decimal(m) << ',' << c.total << ',' << c.by_pos[0] << ',' << c.by_pos[1] << ','
               << c.by_pos[2] << '\n';
    return os.str();
}

template <class Int = BigInt>
basic_delta_table<Int> delta_table_from_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != delta_csv_header)
        throw std::invalid_argument("missing delta CSV header");
    basic_delta_table<Int> table;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');)
            f.push_back(cell);
        if (f.size() != 6)
            throw std::invalid_argument("bad delta CSV row: " + line);
        DeltaCounts c;
        c.total = std::stoull(f[2]);
        for (std::size_t k = 0; k < 3; ++k)
            c.by_pos[k] = std::stoull(f[3 + k]);
        if constexpr (std::is_integral_v<Int>)
            table.add(std::stoi(f[0]), static_cast<Int>(std::stoull(f[1])), c);
        else
            table.add(std::stoi(f[0]), Int(f[1]), c);
    }
    return table;
}

// Streams each level's triples; memory is the count table plus one path.
template <class Int = BigInt>
basic_delta_table<Int> delta_table(int max_level) {
    basic_delta_table<Int> table;
    for (int n = 0; n <= max_level; ++n)
        for (level_cursor<Int> c(n); !c.done(); c.next())
            table.tally(n, c.triple());
    return table;
}

// The three children of a triple, by digit 0, 1, 2.
template <class Int>
std::array<basic_triple<Int>, 3> induced_triples(const basic_triple<Int>& t) {
    return {child_triple(t, 0), child_triple(t, 1), child_triple(t, 2)};
}

// Streams the three thirds of level n (first digit 0, 1, 2) in lockstep.
template <class Int = BigInt>
bool verify_threefold(int n, const basic_seed<Int>& seed = {}) {
    if (n < 1)
        throw std::invalid_argument("three-fold symmetry needs level >= 1");
    level_cursor<Int> a(n, seed, {0}), b(n, seed, {1}), c(n, seed, {2});
    for (; !a.done(); a.next(), b.next(), c.next())
        if (!(a.triple() == b.triple() && a.triple() == c.triple()))
            return false;
    return b.done() && c.done();
}

// a at (J;1), (J;2), (J;3), then position 3 of J,1 / J,1,1 / ...
template <class Int = BigInt>
std::vector<Int> tribonacci_subsequence(const Digits& prefix, std::size_t count) {
    if (count < 4)
        throw std::invalid_argument("tribonacci subsequence needs at least 4 terms");
    basic_triple<Int> t = triple_of<Int>(prefix);
    std::vector<Int> out{t.v1, t.v2, t.v3};
    while (out.size() < count) {
        t = child_triple(t, 1);
        out.push_back(t.v3);
    }
    return out;
}

struct IdentityCheck {
    std::string name;
    bool pass = true;
    std::optional<std::string> counterexample;
};

struct IdentityReport {
    int max_level = 0;
    std::vector<IdentityCheck> checks;
    std::vector<std::string> notes;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }

    const IdentityCheck* find(std::string_view name) const {
        for (const auto& c : checks)
            if (c.name == name)
                return &c;
        return nullptr;
    }
};

namespace detail {

inline std::string counts_string(const DeltaCounts& c) {
    return std::to_string(c.total) + "," + std::to_string(c.by_pos[0]) + "," + std::to_string(c.by_pos[1]) + "," +
           std::to_string(c.by_pos[2]);
}

inline void fail_once(IdentityCheck& check, std::string why) {
    if (check.pass) {
        check.pass = false;
        check.counterexample = std::move(why);
    }
}

} // namespace detail

inline IdentityReport verify_delta_identities(const DeltaTable& table) {
    const int L = table.max_level();
    IdentityReport rep;
    rep.max_level = L;

    IdentityCheck parity{"no_even_values", true, std::nullopt};
    IdentityCheck columns{"column_sum", true, std::nullopt};
    IdentityCheck top3{"top_value_pos3_count", true, std::nullopt};
    IdentityCheck shift{"shift", true, std::nullopt};
    IdentityCheck doubling{"doubling", true, std::nullopt};
    IdentityCheck recursion{"top_value_recursion", true, std::nullopt};

    for (int n = 0; n <= L; ++n)
        for (const auto& [m, c] : table.level(n)) {
            if (m % 2 == 0 && c.total != 0)
                detail::fail_once(parity, "level " + std::to_string(n) + " value " + to_decimal(m) + " occurs " +
                                              std::to_string(c.total) + " times");
            if (c.total != c.by_pos[0] + c.by_pos[1] + c.by_pos[2])
                detail::fail_once(columns, "level " + std::to_string(n) + " value " + to_decimal(m));
        }

    // delta_n^3(2n+1) == 9 for n >= 2.
    for (int n = 2; n <= L; ++n) {
        const auto c = table.at(n, BigInt(2 * n + 1));
        if (c.by_pos[2] != 9)
            detail::fail_once(top3, "n=" + std::to_string(n) + ": delta3(" + std::to_string(2 * n + 1) +
                                        ")=" + std::to_string(c.by_pos[2]));
    }

    // delta_n(m) == delta_{n+1}^1(m) == delta_{n+1}^2(m), over every m seen at n or n+1.
    for (int n = 0; n + 1 <= L; ++n) {
        std::vector<BigInt> values;
        for (const auto& [m, c] : table.level(n))
            values.push_back(m);
        for (const auto& [m, c] : table.level(n + 1))
            values.push_back(m);
        for (const auto& m : values) {
            const auto lo = table.at(n, m);
            const auto hi = table.at(n + 1, m);
            if (lo.total != hi.by_pos[0] || lo.total != hi.by_pos[1])
                detail::fail_once(shift, "n=" + std::to_string(n) + " m=" + to_decimal(m) + ": " +
                                             std::to_string(lo.total) + " vs " + detail::counts_string(hi));
        }
    }

    // delta_{k+m}(2k+1) == 2^m delta_k(2k+1).
    for (int k = 1; k <= L; ++k) {
        const BigInt v(2 * k + 1);
        const std::uint64_t base = table.at(k, v).total;
        for (int m = 1; k + m <= L; ++m) {
            const std::uint64_t got = table.at(k + m, v).total;
            if (got != (base << m))
                detail::fail_once(doubling, "k=" + std::to_string(k) + " m=" + std::to_string(m) + ": " +
                                                std::to_string(got) + " != 2^" + std::to_string(m) + "*" +
                                                std::to_string(base));
        }
    }

    // delta_n(2n+1) == 9 + 2 delta_{n-1}(2n+1) for n >= 2.
    for (int n = 2; n <= L; ++n) {
        const BigInt v(2 * n + 1);
        const std::uint64_t lhs = table.at(n, v).total;
        const std::uint64_t rhs = 9 + 2 * table.at(n - 1, v).total;
        if (lhs != rhs)
            detail::fail_once(recursion, "n=" + std::to_string(n) + ": " + std::to_string(lhs) + " != " +
                                             std::to_string(rhs));
    }

    if (L >= 1) {
        const auto c = table.at(1, BigInt(3));
        const auto prev = table.at(0, BigInt(3));
        if (c.by_pos[2] != 9)
            rep.notes.push_back("n=1: delta3(3)=" + std::to_string(c.by_pos[2]) +
                                ", so the pos-3 count of 2n+1 is 9 only from n=2 on");
        if (c.total != 9 + 2 * prev.total)
            rep.notes.push_back("n=1: delta(3)=" + std::to_string(c.total) + " while 9+2*delta_0(3)=" +
                                std::to_string(9 + 2 * prev.total) + "; recursion checked from n=2 on");
    }

    rep.checks = {parity, columns, top3, shift, doubling, recursion};
    return rep;
}

inline IdentityReport verify_delta_identities(int max_level) {
    if (max_level < 2)
        throw std::invalid_argument("delta identities need max_level >= 2");
    return verify_delta_identities(delta_table(max_level));
}

enum class RowStatus { match, mismatch, duplicate, not_tabulated };

inline const char* to_string(RowStatus s) {
    switch (s) {
    case RowStatus::match: return "match";
    case RowStatus::mismatch: return "mismatch";
    case RowStatus::duplicate: return "duplicate";
    case RowStatus::not_tabulated: return "not_tabulated";
    }
    return "?";
}

struct RowComparison {
    ReferenceRow row;
    DeltaCounts derived;
    RowStatus status = RowStatus::match;
    std::optional<std::string> note;
};

struct ReferenceComparison {
    std::vector<RowComparison> rows;

    std::size_t count(RowStatus s) const {
        std::size_t n = 0;
        for (const auto& r : rows)
            n += r.status == s;
        return n;
    }

    // Rows whose printed counts equal the derived ones, duplicates included.
    std::size_t exact_matches() const {
        std::size_t n = 0;
        for (const auto& r : rows)
            n += r.status != RowStatus::not_tabulated && r.status != RowStatus::mismatch;
        return n;
    }
};

// Row-by-row diff against the reference table. Never throws on disagreement.
inline ReferenceComparison compare_with_reference(const DeltaTable& table) {
    ReferenceComparison out;
    std::vector<std::pair<int, int>> seen;
    for (const auto& row : reference_delta_rows) {
        RowComparison rc{row, {}, RowStatus::match, std::nullopt};
        if (row.level > table.max_level()) {
            rc.status = RowStatus::not_tabulated;
            out.rows.push_back(rc);
            continue;
        }
        rc.derived = table.at(row.level, BigInt(row.value));
        const DeltaCounts printed{row.total, {row.pos1, row.pos2, row.pos3}};
        const bool repeated = std::find(seen.begin(), seen.end(), std::pair{row.level, row.value}) != seen.end();
        seen.emplace_back(row.level, row.value);
        if (!(printed == rc.derived))
            rc.status = RowStatus::mismatch;
        else if (repeated)
            rc.status = RowStatus::duplicate;
        if (row.level == 1 && row.value == 3)
            rc.note = "pos-3 count is " + std::to_string(rc.derived.by_pos[2]) + ", not 9: the 2n+1 rule starts at n=2";
        out.rows.push_back(rc);
    }
    return out;
}

inline std::string format_comparison(const ReferenceComparison& cmp) {
    std::ostringstream os;
    for (const auto& r : cmp.rows) {
        os << '(' << r.row.level << ',' << r.row.value << ") " << to_string(r.status) << " printed="
           << r.row.total << ',' << r.row.pos1 << ',' << r.row.pos2 << ',' << r.row.pos3;
        if (r.status != RowStatus::not_tabulated)
            os << " derived=" << detail::counts_string(r.derived);
        if (r.note)
            os << " note: " << *r.note;
        os << '\n';
    }
    os << "rows=" << cmp.rows.size() << " exact=" << cmp.exact_matches()
       << " mismatch=" << cmp.count(RowStatus::mismatch) << " duplicate=" << cmp.count(RowStatus::duplicate)
       << " not_tabulated=" << cmp.count(RowStatus::not_tabulated) << '\n';
    return os.str();
}

} // namespace stern3
