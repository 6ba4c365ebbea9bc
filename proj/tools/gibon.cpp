// gibon - exact Gibonacci partial sums, colored Schreier sets, and colored
// lattice paths, with a built-in identity verifier.
//
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification
// failure.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gibon/lattice.hpp"
#include "gibon/natural.hpp"
#include "gibon/partial_sums.hpp"
#include "gibon/schreier.hpp"
#include "gibon/sequences.hpp"
#include "gibon/verify.hpp"

namespace {

struct SeedArgs {
    std::string g1 = "1";
    std::string g2 = "1";

    gibon::GibonacciSeed seed() const {
        return {gibon::Natural::from_string(g1), gibon::Natural::from_string(g2)};
    }
};

const CLI::Validator decimal_digits{
    [](std::string& value) -> std::string {
        if (value.empty()) return "must be a decimal integer";
        for (char c : value) {
            if (c < '0' || c > '9') return "must be a non-negative decimal integer";
        }
        return {};
    },
    "UINT"};

void add_seed_options(CLI::App* sub, SeedArgs& args) {
    sub->add_option("--g1", args.g1, "first Gibonacci term G_1 (default 1)")
        ->check(decimal_digits);
    sub->add_option("--g2", args.g2, "second Gibonacci term G_2 (default 1)")
        ->check(decimal_digits);
}

std::vector<gibon::GibonacciSeed> parse_seed_list(const std::vector<std::string>& pairs) {
    std::vector<gibon::GibonacciSeed> seeds;
    for (const auto& pair : pairs) {
        const auto comma = pair.find(',');
        if (comma == std::string::npos) {
            throw std::domain_error("seed must be of the form G1,G2");
        }
        seeds.emplace_back(gibon::Natural::from_string(pair.substr(0, comma)),
                           gibon::Natural::from_string(pair.substr(comma + 1)));
    }
    return seeds;
}

int run_verify(const gibon::RunConfig& config) {
    const auto reports = gibon::verify_all(config);
    bool all_passed = true;
    for (const auto& report : reports) {
        std::string name = report.identity;
        name.resize(28, ' ');
        if (report.passed()) {
            std::cout << "PASS " << name << " checked=" << report.checked << "\n";
            continue;
        }
        all_passed = false;
        std::cout << "FAIL " << name << " checked=" << report.checked
                  << " failures=" << report.failures.size() << "\n";
        std::size_t shown = 0;
        for (const auto& f : report.failures) {
            if (++shown > 10) {
                std::cout << "  ...\n";
                break;
            }
            std::cout << "  seed=" << f.seed << " k=" << f.k << " n=" << f.n
                      << " expected=" << f.expected << " actual=" << f.actual << "\n";
        }
    }
    std::cout << (all_passed ? "all identities verified\n" : "verification FAILED\n");
    return all_passed ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Gibonacci partial sums, colored Schreier sets, and lattice paths"};
    app.require_subcommand(1);

    SeedArgs a_seed, s_seed, table_seed, sets_seed, paths_seed, render_seed;
    int a_k = 0, a_n = 1;
    int s_k = 0, s_n = 1;
    int table_k = 0, table_n = 1;
    int sets_k = 0, sets_n = 1;
    int paths_k = 0, paths_n = 1;
    int render_k = 0, render_n = 1;
    std::string render_format = "ascii";

    auto* cmd_a = app.add_subcommand("a", "print the iterated partial sum a'_k(n)");
    add_seed_options(cmd_a, a_seed);
    cmd_a->add_option("--k", a_k, "number of partial-sum iterations")->required();
    cmd_a->add_option("--n", a_n, "term index (1-based)")->required();

    auto* cmd_s = app.add_subcommand("s", "print the colored Schreier count s'_k(n)");
    add_seed_options(cmd_s, s_seed);
    cmd_s->add_option("--k", s_k, "minimum set cardinality")->required();
    cmd_s->add_option("--n", s_n, "ground-set bound")->required();

    auto* cmd_table = app.add_subcommand("table", "CSV table of a'_k(n) for k<=K, n<=N");
    add_seed_options(cmd_table, table_seed);
    cmd_table->add_option("--k", table_k, "largest k row")->required();
    cmd_table->add_option("--n", table_n, "largest n column")->required();

    auto* cmd_sets =
        app.add_subcommand("enumerate-sets", "JSON lines of colored Schreier sets");
    add_seed_options(cmd_sets, sets_seed);
    cmd_sets->add_option("--k", sets_k, "minimum set cardinality")->required();
    cmd_sets->add_option("--n", sets_n, "ground-set bound")->required();

    auto* cmd_paths =
        app.add_subcommand("enumerate-paths", "JSON lines of colored lattice paths");
    add_seed_options(cmd_paths, paths_seed);
    cmd_paths->add_option("--k", paths_k, "minimum path height")->required();
    cmd_paths->add_option("--n", paths_n, "grid width")->required();

    auto* cmd_render = app.add_subcommand("render", "draw the lattice paths for k, n");
    add_seed_options(cmd_render, render_seed);
    cmd_render->add_option("--k", render_k, "minimum path height")->required();
    cmd_render->add_option("--n", render_n, "grid width")->required();
    cmd_render->add_option("--format", render_format, "ascii or svg (default ascii)")
        ->check(CLI::IsMember({"ascii", "svg"}));

    auto* cmd_verify = app.add_subcommand("verify", "verify every identity over a grid");
    int verify_max_k = 12, verify_max_n = 40, verify_oracle_max_n = 16;
    std::vector<std::string> verify_seeds;
    cmd_verify->add_option("--max-k", verify_max_k, "largest k (default 12)");
    cmd_verify->add_option("--max-n", verify_max_n, "largest n (default 40)");
    cmd_verify->add_option("--oracle-max-n", verify_oracle_max_n,
                           "subset-scan cutoff, at most 24 (default 16)");
    cmd_verify->add_option("--seed", verify_seeds,
                           "seed pair G1,G2 (repeatable; default battery)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(cmd_a)) {
            gibon::PartialSumTable table(a_seed.seed());
            std::cout << table.at(a_k, a_n) << "\n";
        } else if (app.got_subcommand(cmd_s)) {
            std::cout << gibon::s_colored(gibon::CountQuery{s_n, s_k, s_seed.seed()}) << "\n";
        } else if (app.got_subcommand(cmd_table)) {
            gibon::PartialSumTable table(table_seed.seed());
            gibon::write_csv(std::cout, table, table_k, table_n);
        } else if (app.got_subcommand(cmd_sets)) {
            gibon::write_sets_jsonl(std::cout,
                                    gibon::CountQuery{sets_n, sets_k, sets_seed.seed()});
        } else if (app.got_subcommand(cmd_paths)) {
            gibon::write_paths_jsonl(std::cout, paths_seed.seed(), paths_k, paths_n);
        } else if (app.got_subcommand(cmd_render)) {
            const auto paths = gibon::collect_paths(render_seed.seed(), render_k, render_n);
            if (render_format == "svg") {
                std::cout << gibon::render_paths_svg(paths);
            } else {
                int index = 0;
                for (const auto& p : paths) {
                    std::cout << "path " << ++index << ": ups [";
                    for (std::size_t i = 0; i < p.up_columns.size(); ++i) {
                        if (i > 0) std::cout << ' ';
                        std::cout << p.up_columns[i];
                    }
                    std::cout << "], " << gibon::to_string(p.color_class) << ", color "
                              << p.color_index << " (" << gibon::color_letter(p.color_index)
                              << ")\n";
                    std::cout << gibon::render_path(p, gibon::RenderFormat::Ascii) << "\n";
                }
                std::cout << "total " << paths.size() << "\n";
            }
        } else if (app.got_subcommand(cmd_verify)) {
            gibon::RunConfig config = gibon::default_config();
            config.max_k = verify_max_k;
            config.max_n = verify_max_n;
            config.oracle_max_n = verify_oracle_max_n;
            if (!verify_seeds.empty()) config.seeds = parse_seed_list(verify_seeds);
            return run_verify(config);
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
