#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace bettisplit {

// Subsets of an indexed ground set (at most 64 elements) as bitmasks.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask bit(int i) { return Mask{1} << i; }

inline bool has_bit(Mask m, int i) { return (m >> i) & 1; }

inline int lowest_bit(Mask m) { return std::countr_zero(m); }

inline int highest_bit(Mask m) { return 63 - std::countl_zero(m); }

inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

/// Visits the set bits of `m` in ascending order.
template <typename F>
void for_each_bit(Mask m, F&& f) {
    while (m) {
        f(std::countr_zero(m));
        m &= m - 1;
    }
}

inline std::vector<int> bits_of(Mask m) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(popcount(m)));
    for_each_bit(m, [&](int i) { out.push_back(i); });
    return out;
}

inline Mask mask_of(const std::vector<int>& indices) {
    Mask m = 0;
    for (int i : indices) m |= bit(i);
    return m;
}

/// Visits every submask of `m`, including 0 and `m` itself.
template <typename F>
void for_each_submask(Mask m, F&& f) {
    Mask s = m;
    while (true) {
        f(s);
        if (s == 0) break;
        s = (s - 1) & m;
    }
}

class BinomialTable {
    std::vector<std::vector<long long>> b_;

public:
    explicit BinomialTable(int n) : b_(static_cast<size_t>(n) + 1) {
        for (int i = 0; i <= n; ++i) {
            b_[i].resize(static_cast<size_t>(i) + 1);
            b_[i][0] = b_[i][i] = 1;
            for (int j = 1; j < i; ++j) b_[i][j] = b_[i - 1][j - 1] + b_[i - 1][j];
        }
    }

    long long operator()(int n, int k) const {
        if (k < 0 || k > n || n < 0) return 0;
        return b_[static_cast<size_t>(n)][static_cast<size_t>(k)];
    }
};

/// Shared table, large enough for every subset computation on <= 64 indices.
const BinomialTable& binomial_table();

inline long long binomial(int n, int k) { return binomial_table()(n, k); }

}  // namespace bettisplit
