#pragma once

// The triatomic sequence: triples over subdivision digits, level walks and
// single-term access.

#include <array>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "stern3/index.hpp"
#include "stern3/types.hpp"

namespace stern3 {

template <class Int = BigInt>
struct basic_triple {
    Int v1{};
    Int v2{};
    Int v3{};

    // 1-based, matching the position k of an address.
    const Int& at(int pos) const {
        switch (pos) {
        case 1: return v1;
        case 2: return v2;
        case 3: return v3;
        }
        throw std::out_of_range("triple position must be 1, 2 or 3");
    }

    Int sum() const { return v1 + v2 + v3; }

    friend bool operator==(const basic_triple&, const basic_triple&) = default;
};

using Triple = basic_triple<>;

// Starting values (a1, a2, a3); any nonnegative integers.
template <class Int = BigInt>
class basic_seed {
public:
    basic_seed() : values_{Int(1), Int(1), Int(1)} {}

    basic_seed(Int a1, Int a2, Int a3)
        : values_{std::move(a1), std::move(a2), std::move(a3)} {
        if (values_.v1 < 0 || values_.v2 < 0 || values_.v3 < 0)
            throw std::invalid_argument("seed components must be nonnegative");
    }

    const basic_triple<Int>& triple() const { return values_; }

    bool is_unit() const { return values_ == basic_triple<Int>{Int(1), Int(1), Int(1)}; }

    friend bool operator==(const basic_seed&, const basic_seed&) = default;

private:
    basic_triple<Int> values_;
};

using Seed = basic_seed<>;

template <class Int>
basic_triple<Int> child_triple(const basic_triple<Int>& t, int digit) {
    Int s = t.sum();
    switch (checked_trit(digit)) {
    case 0: return {t.v1, t.v2, std::move(s)};
    case 1: return {t.v2, t.v3, std::move(s)};
    default: return {t.v3, t.v1, std::move(s)};
    }
}

template <class Int = BigInt>
basic_triple<Int> triple_of(const Digits& digits, const basic_seed<Int>& seed = {}) {
    basic_triple<Int> t = seed.triple();
    for (Trit d : digits)
        t = child_triple(t, d);
    return t;
}

// Reads a_N straight off the address, without any recursion table.
template <class Int = BigInt>
Int term_direct(Index N, const basic_seed<Int>& seed = {}) {
    const IndexTuple t = decode(N);
    return triple_of(t.digits, seed).at(t.pos);
}

inline constexpr std::size_t default_memo_budget = std::size_t{1} << 20;

// Top-down evaluation of a_N through the parent-position recursion. The memo
// holds at most `memo_budget` entries; once full, misses are recomputed.
template <class Int = BigInt>
class term_evaluator {
public:
    explicit term_evaluator(basic_seed<Int> seed = {}, std::size_t memo_budget = default_memo_budget)
        : seed_(std::move(seed)), budget_(memo_budget) {}

    Int operator()(Index N) {
        detail::check_positive(N);
        return eval(N);
    }

    const basic_seed<Int>& seed() const { return seed_; }
    std::size_t memo_size() const { return memo_.size(); }
    std::size_t memo_budget() const { return budget_; }

private:
    Int eval(Index N) {
        if (N <= 3)
            return seed_.triple().at(static_cast<int>(N));
        if (auto it = memo_.find(N); it != memo_.end())
            return it->second;

        const auto parent = parent_positions(N);
        const int pos = static_cast<int>((N - 1) % 3) + 1;
        Int value;
        if (pos == 3) {
            value = eval(parent[0]) + eval(parent[1]) + eval(parent[2]);
        } else {
            // Which parent position feeds child position 1 and 2, per last digit.
            static constexpr std::array<std::array<int, 2>, 3> source{{{0, 1}, {1, 2}, {2, 0}}};
            value = eval(parent[static_cast<std::size_t>(source[last_digit(N)][pos - 1])]);
        }
        if (memo_.size() < budget_)
            memo_.emplace(N, value);
        return value;
    }

    basic_seed<Int> seed_;
    std::size_t budget_;
    std::unordered_map<Index, Int> memo_;
};

template <class Int = BigInt>
Int term(Index N, const basic_seed<Int>& seed = {}) {
    return term_evaluator<Int>(seed)(N);
}

// Walks the 3^n triples of one level in index order (lexicographic digits),
// depth first. Memory is one triple per digit of the level.
//
// An optional prefix restricts the walk to the subtree below that address.
template <class Int = BigInt>
class level_cursor {
public:
    explicit level_cursor(int level, const basic_seed<Int>& seed = {}, Digits prefix = {})
        : level_(level), fixed_(prefix.size()) {
        detail::check_level(level);
        check_digits(prefix);
        if (prefix.size() > static_cast<std::size_t>(level))
            throw std::invalid_argument("prefix longer than level");
        digits_ = std::move(prefix);
        digits_.resize(static_cast<std::size_t>(level), 0);
        stack_.reserve(static_cast<std::size_t>(level) + 1);
        stack_.push_back(seed.triple());
        rebuild(0);
    }

    bool done() const { return done_; }
    int level() const { return level_; }
    const Digits& digits() const { return digits_; }
    const basic_triple<Int>& triple() const { return stack_.back(); }

    // Index of position 1 of the current triple.
    Index first_index() const { return encode(IndexTuple{digits_, 1}); }

    void next() {
        std::size_t j = digits_.size();
        while (j > fixed_ && digits_[j - 1] == 2)
            --j;
        if (j == fixed_) {
            done_ = true;
            return;
        }
        ++digits_[j - 1];
        for (std::size_t i = j; i < digits_.size(); ++i)
            digits_[i] = 0;
        rebuild(j - 1);
    }

private:
    // stack_[i] is the triple after the first i digits.
    void rebuild(std::size_t from) {
        stack_.resize(from + 1);
        for (std::size_t i = from; i < digits_.size(); ++i)
            stack_.push_back(child_triple(stack_[i], digits_[i]));
    }

    int level_;
    std::size_t fixed_;
    Digits digits_;
    std::vector<basic_triple<Int>> stack_;
    bool done_ = false;
};

template <class Int, class Fn>
void for_each_level_triple(int level, const basic_seed<Int>& seed, Fn&& fn) {
    for (level_cursor<Int> c(level, seed); !c.done(); c.next())
        fn(c.digits(), c.triple());
}

// Calls fn(N, a_N) for every N in level_range(level), in order.
template <class Int, class Fn>
void for_each_level_term(int level, const basic_seed<Int>& seed, Fn&& fn) {
    Index N = level_range(level).first;
    for (level_cursor<Int> c(level, seed); !c.done(); c.next()) {
        const auto& t = c.triple();
        fn(N, t.v1);
        fn(N + 1, t.v2);
        fn(N + 2, t.v3);
        N += 3;
    }
}

// Materialized level; only sensible for small levels.
template <class Int = BigInt>
std::vector<Int> level_terms(int level, const basic_seed<Int>& seed = {}) {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(3 * pow3(level)));
    for_each_level_term(level, seed, [&](Index, const Int& v) { out.push_back(v); });
    return out;
}

// a_1..a_count in order, streamed level by level.
template <class Int, class Fn>
void for_each_prefix_term(Index count, const basic_seed<Int>& seed, Fn&& fn) {
    if (count < 1)
        throw std::invalid_argument("count must be at least 1");
    const int top = level_of(count);
    for (int n = 0; n <= top; ++n) {
        for (level_cursor<Int> c(n, seed); !c.done(); c.next()) {
            const auto& t = c.triple();
            Index N = c.first_index();
            for (int k = 1; k <= 3; ++k, ++N) {
                if (N > count)
                    return;
                fn(N, t.at(k));
            }
        }
    }
}

} // namespace stern3
