#pragma once
// combinatorics.hpp - Exact binomial coefficients and the hockey-stick sum.
//
// Boundary conventions: C(0,0) = 1, and C(n,k) = 0 whenever k < 0 or k > n.
// A negative upper index is a hard error; nothing in this library evaluates
// one, so seeing it means the caller has a bug. Summation formulas elsewhere
// rely on the silent vanishing of out-of-range lower indices, e.g.
// C(n+k-1, k-2) at k = 1.

#include <stdexcept>
#include <vector>

#include "gibon/natural.hpp"

namespace gibon {

/// C(n,k) by the multiplicative formula. Stateless and reentrant.
inline Natural binomial(int n, int k) {
    if (n < 0) {
        throw std::domain_error("binomial: n must be >= 0");
    }
    if (k < 0 || k > n) return Natural{};
    if (k > n - k) k = n - k;
    Natural result{1};
    for (int i = 0; i < k; ++i) {
        result.mul_small(static_cast<std::uint32_t>(n - i));
        result.div_small(static_cast<std::uint32_t>(i + 1));
    }
    return result;
}

/// Sum_{i=0..n} C(k+i, k). Equals C(k+n+1, k+1).
inline Natural hockey_stick_sum(int k, int n) {
    if (k < 0 || n < 0) {
        throw std::domain_error("hockey_stick_sum: k and n must be >= 0");
    }
    Natural term{1}; // C(k,k)
    Natural total{1};
    for (int i = 1; i <= n; ++i) {
        // C(k+i,k) = C(k+i-1,k) * (k+i) / i
        term.mul_small(static_cast<std::uint32_t>(k + i));
        term.div_small(static_cast<std::uint32_t>(i));
        total += term;
    }
    return total;
}

// Dense triangular Pascal table. Built row-by-row; rows are append-only,
// so extending the table never changes existing entries. Fill is
// single-writer; once materialized the table can be read concurrently.
class BinomialTable {
public:
    explicit BinomialTable(int max_n = 0) { extend_to(max_n); }

    void extend_to(int max_n) {
        if (max_n < 0) {
            throw std::domain_error("BinomialTable: max_n must be >= 0");
        }
        while (static_cast<int>(rows_.size()) <= max_n) {
            const std::size_t n = rows_.size();
            std::vector<Natural> row(n + 1);
            row.front() = Natural{1};
            row.back() = Natural{1};
            for (std::size_t k = 1; k < n; ++k) {
                row[k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
            }
            rows_.push_back(std::move(row));
        }
    }

    int max_n() const noexcept { return static_cast<int>(rows_.size()) - 1; }

    /// Table lookup with the vanishing convention for out-of-range k.
    Natural entry(int n, int k) const {
        if (n < 0) {
            throw std::domain_error("BinomialTable: n must be >= 0");
        }
        if (n > max_n()) {
            throw std::out_of_range("BinomialTable: row not materialized");
        }
        if (k < 0 || k > n) return Natural{};
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

private:
    std::vector<std::vector<Natural>> rows_;
};

} // namespace gibon
