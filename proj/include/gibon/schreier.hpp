#pragma once
// schreier.hpp - Colored Schreier sets: counting, enumeration, and the
// brute-force oracle.
//
// A Schreier set is a finite S with min S >= |S|. A colored Schreier set
// additionally carries a color on its minimum element: one of G_1 colors
// when min S = |S|, one of G_2 colors when min S > |S|. The weighted count
// of colored sets S within {1..n} with |S| >= k is
//
//     s'_k(n) = Sum_{l>=k} ( C(n-l, l) * G_2 + C(n-l, l-1) * G_1 ),
//
// where terms vanish once l > floor((n+1)/2). The empty set participates
// only at k = 0, in the MinExceedsSize class with weight G_2 (the l = 0
// term of the sum).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gibon/combinatorics.hpp"
#include "gibon/natural.hpp"
#include "gibon/sequences.hpp"

namespace gibon {

enum class ColorClass { MinEqualsSize, MinExceedsSize };

inline std::string_view to_string(ColorClass c) {
    return c == ColorClass::MinEqualsSize ? "min_equals_size" : "min_exceeds_size";
}

enum class MinRelation { Equals, Exceeds };

struct ColoredSchreierSet {
    std::vector<int> elements; // strictly increasing, possibly empty
    ColorClass color_class;
    std::uint64_t color_index;

    friend bool operator==(const ColoredSchreierSet&, const ColoredSchreierSet&) = default;
};

inline bool is_schreier(const std::vector<int>& elements) {
    return elements.empty() || elements.front() >= static_cast<int>(elements.size());
}

/// Checks every type invariant of a colored set against its seed's palettes.
inline void validate(const ColoredSchreierSet& s, const GibonacciSeed& seed) {
    for (std::size_t i = 0; i < s.elements.size(); ++i) {
        if (s.elements[i] < 1) {
            throw std::domain_error("ColoredSchreierSet: elements must be positive");
        }
        if (i > 0 && s.elements[i] <= s.elements[i - 1]) {
            throw std::domain_error("ColoredSchreierSet: elements must be strictly increasing");
        }
    }
    if (!is_schreier(s.elements)) {
        throw std::domain_error("ColoredSchreierSet: min must be >= size");
    }
    const bool min_equals_size =
        !s.elements.empty() && s.elements.front() == static_cast<int>(s.elements.size());
    if (min_equals_size != (s.color_class == ColorClass::MinEqualsSize)) {
        throw std::domain_error("ColoredSchreierSet: color class does not match min vs size");
    }
    const Natural& palette = s.color_class == ColorClass::MinEqualsSize ? seed.g1 : seed.g2;
    if (Natural{s.color_index} >= palette) {
        throw std::domain_error("ColoredSchreierSet: color index outside palette");
    }
}

// Ground-set bound n, minimum cardinality k, and the coloring seed.
struct CountQuery {
    int n;
    int k;
    GibonacciSeed seed;

    CountQuery(int n_, int k_, GibonacciSeed seed_) : n(n_), k(k_), seed(std::move(seed_)) {
        if (n < 1) throw std::domain_error("CountQuery: n must be >= 1");
        if (k < 0) throw std::domain_error("CountQuery: k must be >= 0");
    }
};

namespace detail {

// Vanishing convention for summation formulas: a negative upper index can
// only arise from a term that is identically zero (e.g. C(n-k, k) with
// k > n in the decrement residual).
inline Natural binomial_or_zero(int n, int k) {
    if (n < 0 || k < 0 || k > n) return Natural{};
    return binomial(n, k);
}

inline std::uint64_t palette_size(const GibonacciSeed& seed, ColorClass c) {
    return (c == ColorClass::MinEqualsSize ? seed.g1 : seed.g2).to_u64();
}

} // namespace detail

/// Number of S within {1..n} with |S| = ell and min S = ell (C(n-ell, ell-1))
/// or min S > ell (C(n-ell, ell)).
inline Natural count_fixed_size(int n, int ell, MinRelation relation) {
    if (n < 1) throw std::domain_error("count_fixed_size: n must be >= 1");
    if (ell < 1) throw std::domain_error("count_fixed_size: ell must be >= 1");
    return relation == MinRelation::Exceeds ? detail::binomial_or_zero(n - ell, ell)
                                            : detail::binomial_or_zero(n - ell, ell - 1);
}

/// The colored count s'_k(n).
inline Natural s_colored(const CountQuery& query) {
    Natural total;
    const int ell_max = (query.n + 1) / 2;
    for (int ell = query.k; ell <= ell_max; ++ell) {
        total += detail::binomial_or_zero(query.n - ell, ell) * query.seed.g2;
        total += detail::binomial_or_zero(query.n - ell, ell - 1) * query.seed.g1;
    }
    return total;
}

// The l = k term of s'_k(n): exactly s'_k(n) - s'_{k+1}(n), so the decrement
// identity can be checked without subtraction.
inline Natural s_decrement_residual(const CountQuery& query) {
    return detail::binomial_or_zero(query.n - query.k, query.k) * query.seed.g2 +
           detail::binomial_or_zero(query.n - query.k, query.k - 1) * query.seed.g1;
}

// Emits every colored Schreier set for the query, ordered by size, then
// lexicographic elements, then color index. The stream length equals
// s_colored(query). Single pass; run independent enumerations concurrently
// if needed.
template <typename Visitor>
void enumerate_colored(const CountQuery& query, Visitor&& visit) {
    if (query.k == 0) {
        const std::uint64_t palette = query.seed.g2.to_u64();
        for (std::uint64_t c = 0; c < palette; ++c) {
            visit(ColoredSchreierSet{{}, ColorClass::MinExceedsSize, c});
        }
    }
    const int ell_max = (query.n + 1) / 2;
    for (int ell = std::max(query.k, 1); ell <= ell_max; ++ell) {
        // Subsets with min >= ell are exactly the ell-combinations of
        // {ell..n}; generate them in lexicographic order.
        std::vector<int> combo(static_cast<std::size_t>(ell));
        for (int i = 0; i < ell; ++i) combo[static_cast<std::size_t>(i)] = ell + i;
        while (true) {
            const ColorClass cls = combo.front() == ell ? ColorClass::MinEqualsSize
                                                        : ColorClass::MinExceedsSize;
            const std::uint64_t palette = detail::palette_size(query.seed, cls);
            for (std::uint64_t c = 0; c < palette; ++c) {
                visit(ColoredSchreierSet{combo, cls, c});
            }
            int i = ell - 1;
            while (i >= 0 && combo[static_cast<std::size_t>(i)] == query.n - (ell - 1 - i)) --i;
            if (i < 0) break;
            ++combo[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < ell; ++j) {
                combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }
}

inline std::vector<ColoredSchreierSet> collect_colored(const CountQuery& query) {
    std::vector<ColoredSchreierSet> out;
    enumerate_colored(query, [&](ColoredSchreierSet s) { out.push_back(std::move(s)); });
    return out;
}

// Independent oracle: scans all 2^n subsets of {1..n} and accumulates the
// palette weight of every qualifying set. Never reuses the formula path.
inline Natural brute_force_colored_count(const CountQuery& query) {
    if (query.n > 24) {
        throw std::domain_error("brute_force_colored_count: n must be <= 24 (oracle scale guard)");
    }
    Natural total;
    const std::uint32_t end = 1u << query.n;
    for (std::uint32_t mask = 0; mask < end; ++mask) {
        const int size = std::popcount(mask);
        if (mask == 0) {
            if (query.k == 0) total += query.seed.g2;
            continue;
        }
        if (size < query.k) continue;
        const int min = std::countr_zero(mask) + 1;
        if (min < size) continue;
        total += min == size ? query.seed.g1 : query.seed.g2;
    }
    return total;
}

inline std::string to_json_line(const ColoredSchreierSet& s) {
    std::string out = "{\"elements\":[";
    for (std::size_t i = 0; i < s.elements.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(s.elements[i]);
    }
    out += "],\"color_class\":\"";
    out += to_string(s.color_class);
    out += "\",\"color_index\":";
    out += std::to_string(s.color_index);
    out += '}';
    return out;
}

/// JSON-lines export: one object per set, then a {"total": N} summary line.
inline void write_sets_jsonl(std::ostream& os, const CountQuery& query) {
    enumerate_colored(query, [&](const ColoredSchreierSet& s) {
        os << to_json_line(s) << '\n';
    });
    os << "{\"total\":" << s_colored(query) << "}\n";
}

} // namespace gibon
