#include "hlnet/suite.hpp"

#include <algorithm>
#include <chrono>

#include "hlnet/extremal.hpp"
#include "hlnet/ms_construction.hpp"

namespace hlnet {

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
public:
    explicit Stopwatch(bool enabled) : enabled_(enabled), start_(Clock::now()) {}
    std::int64_t ms() const {
        if (!enabled_)
            return 0;
        return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
    }

private:
    bool enabled_;
    Clock::time_point start_;
};

struct Tally {
    std::int64_t cases = 0;
    std::int64_t held = 0;
};

ReportRow tally_row(const std::string& check, int n, std::uint64_t g, const Tally& t,
                    std::int64_t elapsed) {
    ReportRow row;
    row.check = check;
    row.n = n;
    row.g = g;
    row.formula_value = t.cases;
    row.construction_value = t.held;
    row.status = t.cases == t.held ? "pass" : "fail";
    row.elapsed_ms = elapsed;
    return row;
}

std::string witness(std::initializer_list<std::pair<const char*, std::int64_t>> fields) {
    std::string out;
    for (const auto& [name, value] : fields) {
        if (!out.empty())
            out += ' ';
        out += name;
        out += '=';
        out += std::to_string(value);
    }
    return out;
}

struct NamedRecipe {
    std::string name;
    Recipe recipe;
};

std::vector<NamedRecipe> recipes_for(const SuiteConfig& cfg, int n, bool include_g84) {
    std::vector<NamedRecipe> out;
    out.push_back({"hypercube", hypercube(n)});
    if (include_g84 && n == 3)
        out.push_back({"g84", g84()});
    for (int k = 0; k < cfg.random_recipes; ++k) {
        const std::uint64_t seed = suite_recipe_seed(cfg, k);
        out.push_back({"random:seed=" + std::to_string(seed), random_hl(n, seed)});
    }
    return out;
}

} // namespace

std::string SuiteViolation::describe() const {
    return check + " violated at " + witness + ": lhs=" + std::to_string(lhs) +
           " rhs=" + std::to_string(rhs);
}

std::vector<std::uint64_t> cut_sample_sizes(int n) {
    const std::uint64_t limit = proven_g_limit(n);
    std::vector<std::uint64_t> gs{1, 2, 3};
    for (std::uint64_t p = 2; p <= limit; p <<= 1) {
        gs.push_back(p - 1);
        gs.push_back(p);
        gs.push_back(p + 1);
    }
    std::erase_if(gs, [&](std::uint64_t g) { return g < 1 || g > limit; });
    std::sort(gs.begin(), gs.end());
    gs.erase(std::unique(gs.begin(), gs.end()), gs.end());
    return gs;
}

void run_lemma_checks(const SuiteConfig& cfg, SuiteResult& out) {
    auto record = [&](const char* check, const std::string& where, std::int64_t lhs,
                      std::int64_t rhs) { out.violations.push_back({check, where, lhs, rhs}); };

    {
        Stopwatch sw(cfg.timing);
        Tally t;
        for (std::uint64_t i = 1; i <= cfg.increment_max; ++i) {
            ++t.cases;
            const std::int64_t diff = extremal_edges(i + 1) - extremal_edges(i);
            const std::int64_t step = extremal_increment(i);
            if (diff == step)
                ++t.held;
            else
                record("lemma-increment", witness({{"i", static_cast<std::int64_t>(i)}}), diff, step);
        }
        out.rows.push_back(tally_row("lemma-increment", 0, cfg.increment_max, t, sw.ms()));
    }
    {
        Stopwatch sw(cfg.timing);
        Tally t;
        for (std::uint64_t g0 = 1; 2 * g0 <= cfg.g_max; ++g0) {
            for (std::uint64_t g1 = g0; g0 + g1 <= cfg.g_max; ++g1) {
                ++t.cases;
                if (check_superadditive(g0, g1)) {
                    ++t.held;
                } else {
                    record("lemma-superadditive",
                           witness({{"g0", static_cast<std::int64_t>(g0)},
                                    {"g1", static_cast<std::int64_t>(g1)}}),
                           extremal_edges(g0 + g1),
                           extremal_edges(g0) + extremal_edges(g1) + static_cast<std::int64_t>(g0));
                }
            }
        }
        out.rows.push_back(tally_row("lemma-superadditive", 0, cfg.g_max, t, sw.ms()));
    }
    {
        Stopwatch sw(cfg.timing);
        Tally t;
        for (std::uint64_t i = 1; 2 * i <= cfg.g_max; ++i) {
            for (std::uint64_t j = i; i + j <= cfg.g_max; ++j) {
                ++t.cases;
                if (check_merge(i, j)) {
                    ++t.held;
                } else {
                    record("lemma-merge",
                           witness({{"i", static_cast<std::int64_t>(i)},
                                    {"j", static_cast<std::int64_t>(j)}}),
                           extremal_edges(i + 1) + extremal_edges(j), extremal_edges(i + j));
                }
            }
        }
        out.rows.push_back(tally_row("lemma-merge", 0, cfg.g_max, t, sw.ms()));
    }
    for (int n = 2; n <= cfg.n_max; ++n) {
        Stopwatch sw(cfg.timing);
        Tally t;
        const std::uint64_t top = std::min<std::uint64_t>(std::uint64_t{1} << (n - 2), cfg.g_max);
        for (std::uint64_t g = 1; g <= top; ++g) {
            ++t.cases;
            if (check_slack(n, g)) {
                ++t.held;
            } else {
                record("lemma-slack", witness({{"n", n}, {"g", static_cast<std::int64_t>(g)}}),
                       static_cast<std::int64_t>(n - 2) * static_cast<std::int64_t>(g),
                       2 * extremal_edges(g));
            }
        }
        out.rows.push_back(tally_row("lemma-slack", n, top, t, sw.ms()));
    }
    for (int n = 2; n <= cfg.monotone_n_max; ++n) {
        Stopwatch sw(cfg.timing);
        Tally t;
        const std::uint64_t top = std::min<std::uint64_t>(proven_g_limit(n) - 1, cfg.g_max);
        for (std::uint64_t g = 1; g <= top; ++g) {
            ++t.cases;
            if (check_strict_increase(n, g)) {
                ++t.held;
            } else {
                const auto gi = static_cast<std::int64_t>(g);
                record("lemma-monotone", witness({{"n", n}, {"g", gi}}),
                       n * (gi + 1) - extremal_edges(g + 1), n * gi - extremal_edges(g));
            }
        }
        out.rows.push_back(tally_row("lemma-monotone", n, top, t, sw.ms()));
    }
}

void run_construction_checks(const SuiteConfig& cfg, SuiteResult& out) {
    for (int n = std::max(cfg.construct_n_min, 1); n <= cfg.construct_n_max; ++n) {
        for (const auto& [name, recipe] : recipes_for(cfg, n, true)) {
            const Graph graph = materialize(recipe);
            const std::uint64_t top =
                std::min(proven_g_limit(n), (std::uint64_t{1} << n) - 1);
            for (std::uint64_t g = 1; g <= top; ++g) {
                Stopwatch sw(cfg.timing);
                const MsTrace trace = extremal_subgraph(recipe, g);
                ReportRow row;
                row.check = "ms:" + name;
                row.n = n;
                row.g = g;
                row.formula_value = extremal_edges(g);
                row.construction_value = induced_edge_count(graph, trace.selected);
                const bool ok = trace.selected.size() == g &&
                                *row.construction_value == row.formula_value;
                row.status = ok ? "pass" : "fail";
                row.elapsed_ms = sw.ms();
                if (!ok)
                    out.violations.push_back(
                        {row.check, witness({{"n", n}, {"g", static_cast<std::int64_t>(g)}}),
                         *row.construction_value, row.formula_value});
                out.rows.push_back(std::move(row));
            }
            if (n < 8)
                continue;
            for (std::uint64_t g : cut_sample_sizes(n)) {
                Stopwatch sw(cfg.timing);
                const EdgeSet cut = build_component_cut(recipe, g);
                const CutReport report = verify_cut(graph, cut, g);
                ReportRow row;
                row.check = "cut:" + name;
                row.n = n;
                row.g = g;
                row.formula_value = component_edge_connectivity(n, g, CutMode::strict).value;
                row.construction_value = report.cut_size;
                const bool ok = report.matches_prediction &&
                                report.isolated_count == static_cast<std::int64_t>(g) &&
                                report.component_count >= static_cast<std::int64_t>(g) + 1;
                row.status = std::string(ok ? "pass" : "fail") +
                             " components=" + std::to_string(report.component_count) +
                             " isolated=" + std::to_string(report.isolated_count);
                row.elapsed_ms = sw.ms();
                if (!ok)
                    out.violations.push_back(
                        {row.check,
                         witness({{"n", n},
                                  {"g", static_cast<std::int64_t>(g)},
                                  {"components", report.component_count},
                                  {"isolated", report.isolated_count}}),
                         report.cut_size, row.formula_value});
                out.rows.push_back(std::move(row));
            }
        }
    }
}

void run_oracle_checks(const SuiteConfig& cfg, SuiteResult& out) {
    for (int n = 2; n <= cfg.oracle_n_max; ++n) {
        for (const auto& [name, recipe] : recipes_for(cfg, n, true)) {
            const Graph graph = materialize(recipe);
            const std::uint64_t count = graph.vertex_count();
            for (std::uint64_t g = 1; g <= count; ++g) {
                Stopwatch sw(cfg.timing);
                const auto result = max_induced_edges(graph, g, cfg.limits);
                ReportRow row;
                row.check = "oracle-eg:" + name;
                row.n = n;
                row.g = g;
                row.formula_value = extremal_edges(g);
                if (g < count)
                    row.construction_value =
                        induced_edge_count(graph, extremal_subgraph(recipe, g).selected);
                row.oracle_value = result.value;
                if (result.status == SearchStatus::incomplete) {
                    row.status = "incomplete";
                    out.budget_exhausted = true;
                } else {
                    const bool ok = *result.value == row.formula_value &&
                                    (!row.construction_value ||
                                     *row.construction_value == row.formula_value);
                    row.status = ok ? "pass" : "fail";
                    if (!ok)
                        out.violations.push_back(
                            {row.check, witness({{"n", n}, {"g", static_cast<std::int64_t>(g)}}),
                             *result.value, row.formula_value});
                }
                row.elapsed_ms = sw.ms();
                out.rows.push_back(std::move(row));
            }
        }
    }
}

SuiteResult run_suite(const SuiteConfig& cfg) {
    SuiteResult result;
    run_lemma_checks(cfg, result);
    run_construction_checks(cfg, result);
    run_oracle_checks(cfg, result);
    return result;
}

} // namespace hlnet
