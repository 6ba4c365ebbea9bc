#pragma once
// sequences.hpp - Fibonacci and Gibonacci term generation.
//
// Indexing is 1-based throughout: F_1 = F_2 = 1, and a Gibonacci sequence
// starts from two caller-chosen positive integers G_1, G_2 with
// G_n = G_{n-1} + G_{n-2}. All functions here are pure.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gibon/combinatorics.hpp"
#include "gibon/natural.hpp"

namespace gibon {

// The pair (G_1, G_2) that parameterizes every computation in this library.
// Both terms must be >= 1; zero seeds would make the color-palette
// semantics of the enumeration modules meaningless.
struct GibonacciSeed {
    Natural g1;
    Natural g2;

    GibonacciSeed(Natural first, Natural second)
        : g1(std::move(first)), g2(std::move(second)) {
        if (g1.is_zero() || g2.is_zero()) {
            throw std::domain_error("GibonacciSeed: G_1 and G_2 must be >= 1");
        }
    }

    static GibonacciSeed fibonacci() { return {Natural{1}, Natural{1}}; }

    std::string to_string() const {
        return "(" + g1.to_string() + "," + g2.to_string() + ")";
    }

    friend bool operator==(const GibonacciSeed&, const GibonacciSeed&) = default;
};

// A finite prefix of a sequence derived from a seed. Terms are 1-based via
// at(); values[0] holds the first term.
struct SequencePrefix {
    GibonacciSeed seed;
    std::vector<Natural> values;

    int length() const noexcept { return static_cast<int>(values.size()); }

    const Natural& at(int n) const {
        if (n < 1 || n > length()) {
            throw std::domain_error("SequencePrefix: index out of range");
        }
        return values[static_cast<std::size_t>(n - 1)];
    }
};

inline Natural fibonacci(int n) {
    if (n < 1) {
        throw std::domain_error("fibonacci: n must be >= 1");
    }
    Natural prev{1}, cur{1};
    for (int i = 3; i <= n; ++i) {
        Natural next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return n == 1 ? prev : cur;
}

inline Natural gibonacci(const GibonacciSeed& seed, int n) {
    if (n < 1) {
        throw std::domain_error("gibonacci: n must be >= 1");
    }
    if (n == 1) return seed.g1;
    Natural prev = seed.g1, cur = seed.g2;
    for (int i = 3; i <= n; ++i) {
        Natural next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline SequencePrefix gibonacci_prefix(const GibonacciSeed& seed, int length) {
    if (length < 1) {
        throw std::domain_error("gibonacci_prefix: length must be >= 1");
    }
    SequencePrefix prefix{seed, {}};
    prefix.values.reserve(static_cast<std::size_t>(length));
    prefix.values.push_back(seed.g1);
    if (length >= 2) prefix.values.push_back(seed.g2);
    for (int i = 3; i <= length; ++i) {
        const std::size_t m = prefix.values.size();
        prefix.values.push_back(prefix.values[m - 1] + prefix.values[m - 2]);
    }
    return prefix;
}

/// G_n = G_1 * F_{n-2} + G_2 * F_{n-1}, valid for n > 2.
inline Natural gibonacci_via_fibonacci(const GibonacciSeed& seed, int n) {
    if (n <= 2) {
        throw std::domain_error("gibonacci_via_fibonacci: n must be > 2");
    }
    return seed.g1 * fibonacci(n - 2) + seed.g2 * fibonacci(n - 1);
}

/// Shallow-diagonal identity: F_n = Sum_{i=0..floor((n-1)/2)} C(n-i-1, i).
inline Natural fibonacci_diagonal(int n) {
    if (n < 1) {
        throw std::domain_error("fibonacci_diagonal: n must be >= 1");
    }
    Natural total;
    for (int i = 0; 2 * i <= n - 1; ++i) {
        total += binomial(n - i - 1, i);
    }
    return total;
}

} // namespace gibon
