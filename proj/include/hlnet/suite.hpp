#ifndef HLNET_SUITE_HPP
#define HLNET_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hlnet/oracles.hpp"
#include "hlnet/report.hpp"

namespace hlnet {

struct SuiteConfig {
    /// Upper bound on g for the pure-formula inequalities.
    std::uint64_t g_max = 4096;
    /// Largest n for the slack inequality (n-2)g >= 2e_g.
    int n_max = 24;
    /// Largest n for strict monotonicity of n*g - e_g.
    int monotone_n_max = 64;
    /// The increment identity e_(i+1) - e_i = s + 1 is checked for i <= this.
    std::uint64_t increment_max = std::uint64_t{1} << 16;
    /// Construction checks run for construct_n_min <= n <= construct_n_max on
    /// the hypercube plus `random_recipes` seeded recipes.
    int construct_n_min = 2;
    int construct_n_max = 12;
    int random_recipes = 5;
    std::uint64_t seed = 1;
    /// Brute-force e_g comparisons for 2 <= n <= oracle_n_max (0 disables).
    int oracle_n_max = 4;
    SearchLimits limits;
    /// Fill elapsed_ms; off by default so reports are byte-reproducible.
    bool timing = false;
};

/// One violated inequality with both sides, for failure output.
struct SuiteViolation {
    std::string check;
    std::string witness;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;

    std::string describe() const;
};

struct SuiteResult {
    std::vector<ReportRow> rows;
    std::vector<SuiteViolation> violations;
    bool budget_exhausted = false;

    bool passed() const noexcept { return violations.empty() && !budget_exhausted; }
};

// Individual sections, each appending rows (sorted by n, g within a section).
void run_lemma_checks(const SuiteConfig& cfg, SuiteResult& out);
void run_construction_checks(const SuiteConfig& cfg, SuiteResult& out);
void run_oracle_checks(const SuiteConfig& cfg, SuiteResult& out);

/// g values used for cut checks at dimension n: 1, 2, 3 and 2^k - 1, 2^k,
/// 2^k + 1, restricted to g <= 2^ceil(n/2). Sorted, no duplicates.
std::vector<std::uint64_t> cut_sample_sizes(int n);

/// Every section in a fixed order.
SuiteResult run_suite(const SuiteConfig& cfg);

/// Seed of the k-th seeded recipe for a suite run, k = 0, 1, ...
inline std::uint64_t suite_recipe_seed(const SuiteConfig& cfg, int k) {
    return cfg.seed + static_cast<std::uint64_t>(k);
}

} // namespace hlnet

#endif
