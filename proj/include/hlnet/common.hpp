#ifndef HLNET_COMMON_HPP
#define HLNET_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hlnet {

/// Vertex label in [0, 2^n). At every recursion level the most significant
/// bit of the local label selects the half: 0 = left, 1 = right.
using VertexId = std::uint32_t;

enum class ErrorCode {
    invalid_argument = 1,
    domain = 2,
    parse = 3,
    io = 4,
    overflow = 5,
    limit = 6,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

/// Largest dimension that may be built or materialized. Defaults to 20
/// (about 10^6 vertices); process-wide and safe to change from any thread.
int max_dimension() noexcept;
void set_max_dimension(int n);

/// Largest dimension accepted by the closed-form functions (n·2^(n-1) must
/// fit in a signed 64-bit integer).
inline constexpr int formula_max_dimension = 62;

} // namespace hlnet

#endif
