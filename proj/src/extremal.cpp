#include "hlnet/extremal.hpp"

#include <bit>
#include <string>

#include "hlnet/common.hpp"

namespace hlnet {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        fail(ErrorCode::overflow, "64-bit overflow evaluating the extremal function");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        fail(ErrorCode::overflow, "64-bit overflow evaluating the extremal function");
    return r;
}

std::int64_t pow2(int t) {
    if (t > 62)
        fail(ErrorCode::overflow, "2^" + std::to_string(t) + " does not fit in int64");
    return std::int64_t{1} << t;
}

std::string str(std::uint64_t v) { return std::to_string(v); }

} // namespace

std::uint64_t Decomposition::value() const {
    std::uint64_t g = 0;
    for (int t : exponents)
        g += std::uint64_t{1} << t;
    return g;
}

Decomposition decompose(std::uint64_t g) {
    if (g == 0)
        fail(ErrorCode::domain, "decompose: g must be positive");
    Decomposition d;
    std::uint64_t rest = g;
    while (rest != 0) {
        const int t = std::bit_width(rest) - 1;  // floor(log2 rest)
        d.exponents.push_back(t);
        rest -= std::uint64_t{1} << t;
    }
    return d;
}

std::int64_t extremal_edges(std::uint64_t g) {
    if (g == 0)
        return 0;
    const Decomposition d = decompose(g);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < d.exponents.size(); ++i) {
        const int t = d.exponents[i];
        if (t > 0)
            total = checked_add(total, checked_mul(t, pow2(t - 1)));
        total = checked_add(total, checked_mul(static_cast<std::int64_t>(i), pow2(t)));
    }
    return total;
}

std::int64_t extremal_increment(std::uint64_t i) {
    if (i == 0)
        fail(ErrorCode::domain, "extremal_increment: i must be positive");
    return decompose(i).s() + 1;
}

std::uint64_t proven_g_limit(int n) {
    if (n < 0 || n > 126)
        fail(ErrorCode::domain, "proven_g_limit: n out of range");
    return std::uint64_t{1} << ((n + 1) / 2);
}

CLambda component_edge_connectivity(int n, std::uint64_t g, CutMode mode) {
    const bool in_proven_range = n >= 8 && n <= formula_max_dimension && g <= proven_g_limit(n);
    if (mode == CutMode::strict) {
        if (n < 8)
            fail(ErrorCode::domain, "strict mode requires n >= 8 (got n=" + std::to_string(n) + ")");
        if (n > formula_max_dimension)
            fail(ErrorCode::domain, "n=" + std::to_string(n) + " exceeds the formula range (n <= 62)");
        if (!in_proven_range)
            fail(ErrorCode::domain, "strict mode requires g <= 2^ceil(n/2) = " +
                                        str(proven_g_limit(n)) + " (got g=" + str(g) + ")");
    } else {
        if (n < 1 || n > formula_max_dimension)
            fail(ErrorCode::domain, "n must lie in [1, 62] (got n=" + std::to_string(n) + ")");
        if (g >= (std::uint64_t{1} << n))
            fail(ErrorCode::domain, "g must be below 2^n = " + str(std::uint64_t{1} << n) +
                                        " (got g=" + str(g) + ")");
    }
    CLambda out;
    out.proven = in_proven_range;
    if (g == 0)
        return out;
    out.value = checked_add(checked_mul(n, static_cast<std::int64_t>(g)), -extremal_edges(g));
    return out;
}

bool check_superadditive(std::uint64_t g0, std::uint64_t g1) {
    if (g0 < 1 || g0 > g1)
        fail(ErrorCode::domain, "superadditivity needs 1 <= g0 <= g1 (got " + str(g0) + ", " +
                                    str(g1) + ")");
    if (g1 > (std::uint64_t{1} << 61))
        fail(ErrorCode::overflow, "superadditivity arguments too large");
    const std::int64_t lhs = extremal_edges(g0 + g1);
    const std::int64_t rhs = checked_add(checked_add(extremal_edges(g0), extremal_edges(g1)),
                                         static_cast<std::int64_t>(g0));
    return lhs >= rhs;
}

bool check_slack(int n, std::uint64_t g) {
    if (n < 2 || n > formula_max_dimension)
        fail(ErrorCode::domain, "slack check needs 2 <= n <= 62 (got n=" + std::to_string(n) + ")");
    if (g > (std::uint64_t{1} << (n - 2)))
        fail(ErrorCode::domain, "slack check needs g <= 2^(n-2) (got g=" + str(g) + ")");
    const std::int64_t lhs = checked_mul(n - 2, static_cast<std::int64_t>(g));
    return checked_add(lhs, -checked_mul(2, extremal_edges(g))) >= 0;
}

bool check_merge(std::uint64_t i, std::uint64_t j) {
    if (i < 1 || i > j)
        fail(ErrorCode::domain, "merge check needs 1 <= i <= j (got " + str(i) + ", " + str(j) + ")");
    if (j > (std::uint64_t{1} << 61))
        fail(ErrorCode::overflow, "merge check arguments too large");
    return checked_add(extremal_edges(i + 1), extremal_edges(j)) <= extremal_edges(i + j);
}

bool check_strict_increase(int n, std::uint64_t g) {
    if (n < 2 || n > 64)
        fail(ErrorCode::domain, "monotonicity check needs 2 <= n <= 64 (got n=" +
                                    std::to_string(n) + ")");
    if (g < 1 || g >= proven_g_limit(n))
        fail(ErrorCode::domain, "monotonicity check needs 1 <= g < 2^ceil(n/2) (got g=" + str(g) + ")");
    const auto gi = static_cast<std::int64_t>(g);
    const std::int64_t before = checked_add(checked_mul(n, gi), -extremal_edges(g));
    const std::int64_t after = checked_add(checked_mul(n, gi + 1), -extremal_edges(g + 1));
    return after > before;
}

} // namespace hlnet
