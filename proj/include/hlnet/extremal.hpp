#ifndef HLNET_EXTREMAL_HPP
#define HLNET_EXTREMAL_HPP

#include <cstdint>
#include <vector>

namespace hlnet {

/// Exponents [t_0, ..., t_s] with g = sum 2^t_i and t_0 > t_1 > ... > t_s,
/// produced greedily: t_i = floor(log2(g - sum_{r<i} 2^t_r)).
struct Decomposition {
    std::vector<int> exponents;

    /// Index of the last exponent.
    int s() const noexcept { return static_cast<int>(exponents.size()) - 1; }
    std::uint64_t value() const;
};

/// Requires g >= 1.
Decomposition decompose(std::uint64_t g);

/// Maximum number of edges induced by g vertices of any n-dimensional
/// HL-network (n large enough to hold g):
///
///     e_g = sum_i t_i 2^(t_i - 1) + sum_i i 2^(t_i)
///
/// e_0 = 0. Throws ErrorCode::overflow if the value leaves int64 range.
std::int64_t extremal_edges(std::uint64_t g);

/// s + 1 for the decomposition of i, i.e. e_(i+1) - e_i. Computed from the
/// decomposition only, never by differencing extremal_edges. Requires i >= 1.
std::int64_t extremal_increment(std::uint64_t i);

enum class CutMode { strict, permissive };

struct CLambda {
    std::int64_t value = 0;
    /// False when (n, g) lies outside n >= 8, g <= 2^ceil(n/2); the value is
    /// then only the size of a constructible cut, an upper bound.
    bool proven = false;
};

/// 2^ceil(n/2), the largest g covered by the component edge connectivity result.
std::uint64_t proven_g_limit(int n);

/// (g+1)-component edge connectivity n*g - e_g. Strict mode rejects inputs
/// outside n >= 8, g <= 2^ceil(n/2) with ErrorCode::domain; permissive mode
/// accepts 1 <= n <= 62, 0 <= g < 2^n and flags the result. g = 0 gives 0.
CLambda component_edge_connectivity(int n, std::uint64_t g, CutMode mode);

// Checkable forms of the structural inequalities on e_g. Each returns whether
// the inequality holds and throws ErrorCode::domain outside its domain.

/// e_(g0+g1) >= e_g0 + e_g1 + g0, for 1 <= g0 <= g1.
bool check_superadditive(std::uint64_t g0, std::uint64_t g1);

/// (n-2) g - 2 e_g >= 0, for n >= 2, g <= 2^(n-2).
bool check_slack(int n, std::uint64_t g);

/// e_(i+1) + e_j <= e_(i+j), for 1 <= i <= j.
bool check_merge(std::uint64_t i, std::uint64_t j);

/// n(g+1) - e_(g+1) > n g - e_g, for n >= 2, 1 <= g < 2^ceil(n/2). Accepts
/// n up to 64.
bool check_strict_increase(int n, std::uint64_t g);

} // namespace hlnet

#endif
