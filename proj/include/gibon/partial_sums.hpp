#pragma once
// partial_sums.hpp - The prefix-sum operator P, its iterates, and the
// a'_k(n) table for a Gibonacci sequence.
//
// P maps a sequence to its running prefix sums; a'_k(n) is the n-th term of
// P^k applied to the seed's Gibonacci sequence. P^0 is the identity, so
// a'_0(n) = G_n; this is forced by the descent identity at k = 1 and by the
// Schreier equivalence at k = 0. The values satisfy
//
//     a'_k(1) = G_1,   a'_k(n) = a'_k(n-1) + a'_{k-1}(n)   (k >= 1, n >= 2)
//
// and the closed form a'_k(n) = Sum_{i=0..n-1} C(k-1+i, k-1) * G_{n-i}.

#include <ostream>
#include <stdexcept>
#include <vector>

#include "gibon/combinatorics.hpp"
#include "gibon/natural.hpp"
#include "gibon/sequences.hpp"

namespace gibon {

/// One application of P: output[n] = Sum_{i=1..n} input[i].
inline SequencePrefix apply_P(const SequencePrefix& prefix) {
    if (prefix.values.empty()) {
        throw std::domain_error("apply_P: prefix must be non-empty");
    }
    SequencePrefix out{prefix.seed, {}};
    out.values.reserve(prefix.values.size());
    Natural running;
    for (const Natural& v : prefix.values) {
        running += v;
        out.values.push_back(running);
    }
    return out;
}

// Memoized table of a'_k(n) values for one seed. Tables for distinct seeds
// are independent. Rows are append-only and any fill order produces the
// same values. at() is the single-writer memoizing accessor; value() is the
// read-only path for a table that has already been materialized, safe for
// concurrent readers.
class PartialSumTable {
public:
    explicit PartialSumTable(GibonacciSeed seed) : seed_(std::move(seed)) {}

    const GibonacciSeed& seed() const noexcept { return seed_; }

    const Natural& at(int k, int n) {
        check_domain(k, n);
        materialize(k, n);
        return rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(n - 1)];
    }

    const Natural& value(int k, int n) const {
        check_domain(k, n);
        if (k >= static_cast<int>(rows_.size()) ||
            n > static_cast<int>(rows_[static_cast<std::size_t>(k)].size())) {
            throw std::out_of_range("PartialSumTable: entry not materialized");
        }
        return rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(n - 1)];
    }

    void materialize(int max_k, int max_n) {
        check_domain(max_k, max_n);
        if (static_cast<int>(rows_.size()) <= max_k) {
            rows_.resize(static_cast<std::size_t>(max_k) + 1);
        }
        auto& base = rows_[0];
        if (base.empty()) base.push_back(seed_.g1);
        if (base.size() < 2 && max_n >= 2) base.push_back(seed_.g2);
        while (static_cast<int>(base.size()) < max_n) {
            const std::size_t m = base.size();
            base.push_back(base[m - 1] + base[m - 2]);
        }
        for (int k = 1; k <= max_k; ++k) {
            auto& row = rows_[static_cast<std::size_t>(k)];
            const auto& below = rows_[static_cast<std::size_t>(k - 1)];
            if (row.empty()) row.push_back(seed_.g1);
            while (static_cast<int>(row.size()) < max_n) {
                const std::size_t m = row.size();
                row.push_back(row[m - 1] + below[m]);
            }
        }
    }

private:
    static void check_domain(int k, int n) {
        if (k < 0) throw std::domain_error("a_value: k must be >= 0");
        if (n < 1) throw std::domain_error("a_value: n must be >= 1");
    }

    GibonacciSeed seed_;
    std::vector<std::vector<Natural>> rows_; // rows_[k][n-1] = a'_k(n)
};

inline Natural a_value(PartialSumTable& table, int k, int n) {
    return table.at(k, n);
}

/// Closed form a'_k(n) = Sum_{i=0..n-1} C(k-1+i, k-1) * G_{n-i}, k >= 1.
inline Natural a_closed_form(const GibonacciSeed& seed, int k, int n) {
    if (k < 1) {
        throw std::domain_error("a_closed_form: k must be >= 1");
    }
    if (n < 1) {
        throw std::domain_error("a_closed_form: n must be >= 1");
    }
    const SequencePrefix g = gibonacci_prefix(seed, n);
    Natural coeff{1}; // C(k-1, k-1)
    Natural total;
    for (int i = 0; i < n; ++i) {
        if (i > 0) {
            // C(k-1+i, k-1) = C(k-2+i, k-1) * (k-1+i) / i
            coeff.mul_small(static_cast<std::uint32_t>(k - 1 + i));
            coeff.div_small(static_cast<std::uint32_t>(i));
        }
        total += coeff * g.at(n - i);
    }
    return total;
}

/// a'_k(3) = (k+1) * G_2 + (C(k+1, k-1) + 1) * G_1, k >= 0.
inline Natural a_at_3(const GibonacciSeed& seed, int k) {
    if (k < 0) {
        throw std::domain_error("a_at_3: k must be >= 0");
    }
    Natural g2_coeff{static_cast<std::uint64_t>(k) + 1};
    Natural g1_coeff = binomial(k + 1, k - 1) + Natural{1};
    return g2_coeff * seed.g2 + g1_coeff * seed.g1;
}

// The exact gap a'_{k-1}(n+2) - a'_k(n). Exposed as the subtracted quantity
// so the identity can be checked additively; Natural cannot go negative.
inline Natural a_descent_residual(const GibonacciSeed& seed, int k, int n) {
    if (k < 1) {
        throw std::domain_error("a_descent_residual: k must be >= 1");
    }
    if (n < 1) {
        throw std::domain_error("a_descent_residual: n must be >= 1");
    }
    return binomial(n + k - 1, k - 1) * seed.g2 + binomial(n + k - 1, k - 2) * seed.g1;
}

/// CSV export: header "k,n,value", decimal values, rows sorted by (k, n).
inline void write_csv(std::ostream& os, PartialSumTable& table, int max_k, int max_n) {
    table.materialize(max_k, max_n);
    os << "k,n,value\n";
    for (int k = 0; k <= max_k; ++k) {
        for (int n = 1; n <= max_n; ++n) {
            os << k << ',' << n << ',' << table.value(k, n) << '\n';
        }
    }
}

} // namespace gibon
