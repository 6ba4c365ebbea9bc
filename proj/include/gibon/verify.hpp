#pragma once
// verify.hpp - Identity-verification harness over parameter grids.
//
// Each identity gets one report. Failures are collected, never thrown, so a
// single run surfaces every broken identity. Grids derive from the RunConfig:
// two-parameter identities run over k <= max_k, n <= max_n; one-dimensional
// sequence identities run to 2 * max_n (they are cheap and the interesting
// range is longer); enumeration- and subset-scan-backed checks are capped by
// oracle_max_n.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gibon/combinatorics.hpp"
#include "gibon/lattice.hpp"
#include "gibon/natural.hpp"
#include "gibon/partial_sums.hpp"
#include "gibon/schreier.hpp"
#include "gibon/sequences.hpp"

namespace gibon {

struct RunConfig {
    std::vector<GibonacciSeed> seeds;
    int max_k = 12;
    int max_n = 40;
    int oracle_max_n = 16;

    void validate() const {
        if (seeds.empty()) throw std::domain_error("RunConfig: at least one seed required");
        if (max_k < 0) throw std::domain_error("RunConfig: max_k must be >= 0");
        if (max_n < 1) throw std::domain_error("RunConfig: max_n must be >= 1");
        if (oracle_max_n < 1 || oracle_max_n > 24) {
            throw std::domain_error("RunConfig: oracle_max_n must be in 1..24");
        }
    }
};

/// Battery: Fibonacci seed plus three generic ones.
inline RunConfig default_config() {
    RunConfig config;
    config.seeds = {
        GibonacciSeed{Natural{1}, Natural{1}},
        GibonacciSeed{Natural{1}, Natural{2}},
        GibonacciSeed{Natural{3}, Natural{2}},
        GibonacciSeed{Natural{7}, Natural{5}},
    };
    return config;
}

struct VerificationFailure {
    std::string seed; // "(g1,g2)" or "-" for seedless identities
    int k;
    int n;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    std::string identity;
    std::string grid;
    long checked = 0;
    std::vector<VerificationFailure> failures;

    bool passed() const noexcept { return checked > 0 && failures.empty(); }
};

// Pluggable a'_k(n) source so tests can inject corrupted values and confirm
// the harness catches them.
using AValueFn = std::function<Natural(const GibonacciSeed&, int k, int n)>;

namespace detail {

inline AValueFn table_backed_a() {
    return [](const GibonacciSeed& seed, int k, int n) {
        PartialSumTable table(seed);
        return table.at(k, n);
    };
}

struct Checker {
    VerificationReport report;

    void expect(const Natural& expected, const Natural& actual, const std::string& seed, int k,
                int n) {
        ++report.checked;
        if (expected != actual) {
            report.failures.push_back(
                VerificationFailure{seed, k, n, expected.to_string(), actual.to_string()});
        }
    }

    void expect_flag(bool ok, const std::string& seed, int k, int n, const std::string& what) {
        ++report.checked;
        if (!ok) {
            report.failures.push_back(VerificationFailure{seed, k, n, what, "violated"});
        }
    }
};

} // namespace detail

inline VerificationReport verify_hockey_stick(const RunConfig& config) {
    config.validate();
    detail::Checker c;
    c.report.identity = "hockey-stick";
    c.report.grid = "k=0..max_k, n=0..max_n";
    for (int k = 0; k <= config.max_k; ++k) {
        for (int n = 0; n <= config.max_n; ++n) {
            c.expect(binomial(k + n + 1, k + 1), hockey_stick_sum(k, n), "-", k, n);
        }
    }
    return c.report;
}

inline VerificationReport verify_gibonacci_via_fibonacci(const RunConfig& config) {
    config.validate();
    detail::Checker c;
    c.report.identity = "gibonacci-via-fibonacci";
    c.report.grid = "seeds, n=3..2*max_n";
    const int hi = std::max(3, 2 * config.max_n);
    for (const auto& seed : config.seeds) {
        for (int n = 3; n <= hi; ++n) {
            c.expect(gibonacci(seed, n), gibonacci_via_fibonacci(seed, n), seed.to_string(), 0, n);
        }
    }
    return c.report;
}

inline VerificationReport verify_fibonacci_diagonal(const RunConfig& config) {
    config.validate();
    detail::Checker c;
    c.report.identity = "fibonacci-diagonal";
    c.report.grid = "n=1..2*max_n";
    for (int n = 1; n <= 2 * config.max_n; ++n) {
        c.expect(fibonacci(n), fibonacci_diagonal(n), "-", 0, n);
    }
    return c.report;
}

inline VerificationReport verify_closed_form(const RunConfig& config, AValueFn a = {}) {
    config.validate();
    if (!a) a = detail::table_backed_a();
    detail::Checker c;
    c.report.identity = "closed-form";
    c.report.grid = "seeds, k=1..max_k, n=1..max_n";
    for (const auto& seed : config.seeds) {
        for (int k = 1; k <= config.max_k; ++k) {
            for (int n = 1; n <= config.max_n; ++n) {
                c.expect(a(seed, k, n), a_closed_form(seed, k, n), seed.to_string(), k, n);
            }
        }
    }
    return c.report;
}

inline VerificationReport verify_descent(const RunConfig& config) {
    config.validate();
    detail::Checker c;
    c.report.identity = "descent";
    c.report.grid = "seeds, k=1..max_k, n=1..max_n";
    for (const auto& seed : config.seeds) {
        PartialSumTable table(seed);
        for (int k = 1; k <= config.max_k; ++k) {
            for (int n = 1; n <= config.max_n; ++n) {
                c.expect(table.at(k - 1, n + 2), table.at(k, n) + a_descent_residual(seed, k, n),
                         seed.to_string(), k, n);
            }
        }
    }
    return c.report;
}

inline VerificationReport verify_a_at_3(const RunConfig& config) {
    config.validate();
    detail::Checker c;
    c.report.identity = "a-at-3";
    c.report.grid = "seeds, k=0..max_k";
    for (const auto& seed : config.seeds) {
        PartialSumTable table(seed);
        for (int k = 0; k <= config.max_k; ++k) {
            c.expect(table.at(k, 3), a_at_3(seed, k), seed.to_string(), k, 3);
        }
    }
    return c.report;
}

inline VerificationReport verify_partial_sum_k1(const RunConfig& config) {
    config.validate();
    detail::Checker c;
    c.report.identity = "partial-sum-k1";
    c.report.grid = "seeds, n=1..2*max_n";
    for (const auto& seed : config.seeds) {
        PartialSumTable table(seed);
        for (int n = 1; n <= 2 * config.max_n; ++n) {
            c.expect(gibonacci(seed, n + 2), table.at(1, n) + seed.g2, seed.to_string(), 1, n);
        }
    }
    return c.report;
}

inline VerificationReport verify_schreier_vs_oracle(const RunConfig& config) {
    config.validate();
    detail::Checker c;
    c.report.identity = "schreier-vs-oracle";
    c.report.grid = "seeds, n=1..oracle_max_n, k=0..floor((n+1)/2)+1";
    for (const auto& seed : config.seeds) {
        for (int n = 1; n <= config.oracle_max_n; ++n) {
            for (int k = 0; k <= (n + 1) / 2 + 1; ++k) {
                const CountQuery query{n, k, seed};
                c.expect(brute_force_colored_count(query), s_colored(query), seed.to_string(), k,
                         n);
            }
        }
    }
    return c.report;
}

inline VerificationReport verify_schreier_vs_partial_sums(const RunConfig& config) {
    config.validate();
    detail::Checker c;
    c.report.identity = "schreier-vs-partial-sums";
    c.report.grid = "seeds, n=1..max_n, k=0..floor((n+1)/2)";
    for (const auto& seed : config.seeds) {
        PartialSumTable table(seed);
        for (int n = 1; n <= config.max_n; ++n) {
            c.expect(gibonacci(seed, n + 2), s_colored(CountQuery{n, 0, seed}), seed.to_string(),
                     0, n);
            for (int k = 1; k <= (n + 1) / 2; ++k) {
                c.expect(table.at(k, n - 2 * (k - 1)), s_colored(CountQuery{n, k, seed}),
                         seed.to_string(), k, n);
            }
        }
    }
    return c.report;
}

inline VerificationReport verify_decrement(const RunConfig& config) {
    config.validate();
    detail::Checker c;
    c.report.identity = "decrement";
    c.report.grid = "seeds, n=1..max_n, k=0..floor((n+1)/2)+1";
    for (const auto& seed : config.seeds) {
        for (int n = 1; n <= config.max_n; ++n) {
            for (int k = 0; k <= (n + 1) / 2 + 1; ++k) {
                const CountQuery query{n, k, seed};
                const CountQuery next{n, k + 1, seed};
                c.expect(s_colored(query), s_colored(next) + s_decrement_residual(query),
                         seed.to_string(), k, n);
            }
        }
    }
    return c.report;
}

inline VerificationReport verify_bijection_round_trip(const RunConfig& config) {
    config.validate();
    detail::Checker c;
    c.report.identity = "bijection-round-trip";
    c.report.grid = "seeds, n=1..oracle_max_n, k=0..floor((n+1)/2)";
    for (const auto& seed : config.seeds) {
        for (int n = 1; n <= config.oracle_max_n; ++n) {
            for (int k = 0; k <= (n + 1) / 2; ++k) {
                bool ok = true;
                enumerate_colored(CountQuery{n, k, seed}, [&](const ColoredSchreierSet& s) {
                    const ColoredLatticePath p = path_from_set(s, n);
                    if (set_from_path(p) != s) ok = false;
                });
                enumerate_paths(seed, k, n, [&](const ColoredLatticePath& p) {
                    if (path_from_set(set_from_path(p), n) != p) ok = false;
                });
                c.expect_flag(ok, seed.to_string(), k, n, "round-trip identity");
            }
        }
    }
    return c.report;
}

inline VerificationReport verify_path_count_agreement(const RunConfig& config) {
    config.validate();
    detail::Checker c;
    c.report.identity = "path-count-agreement";
    c.report.grid = "seeds, n=1..oracle_max_n, k=0..floor((n+1)/2)";
    for (const auto& seed : config.seeds) {
        for (int n = 1; n <= config.oracle_max_n; ++n) {
            for (int k = 0; k <= (n + 1) / 2; ++k) {
                Natural count;
                enumerate_paths(seed, k, n, [&](const ColoredLatticePath&) {
                    count += Natural{1};
                });
                c.expect(s_colored(CountQuery{n, k, seed}), count, seed.to_string(), k, n);
            }
        }
    }
    return c.report;
}

/// Runs every identity report in a fixed order.
inline std::vector<VerificationReport> verify_all(const RunConfig& config) {
    config.validate();
    std::vector<VerificationReport> reports;
    reports.push_back(verify_hockey_stick(config));
    reports.push_back(verify_gibonacci_via_fibonacci(config));
    reports.push_back(verify_fibonacci_diagonal(config));
    reports.push_back(verify_closed_form(config));
    reports.push_back(verify_descent(config));
    reports.push_back(verify_a_at_3(config));
    reports.push_back(verify_partial_sum_k1(config));
    reports.push_back(verify_schreier_vs_oracle(config));
    reports.push_back(verify_schreier_vs_partial_sums(config));
    reports.push_back(verify_decrement(config));
    reports.push_back(verify_bijection_round_trip(config));
    reports.push_back(verify_path_count_agreement(config));
    return reports;
}

} // namespace gibon
