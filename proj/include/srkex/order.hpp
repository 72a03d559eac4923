#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "srkex/matrix.hpp"

namespace srkex {

using BigInt = boost::multiprecision::cpp_int;

/// Period/preperiod/order of a power sequence M^1, M^2, ...
/// Convention: indexing starts at exponent 1; purely periodic sequences
/// have preperiod 0, and ord = per + preperiod is the normative
/// identity (so the identity matrix has per=1, preperiod=0, ord=1).
struct OrderProfile {
    std::uint64_t preperiod = 0;
    std::uint64_t period = 0;
    std::uint64_t ord = 0;
};

struct CapExceeded {
    std::uint64_t cap = 0;
};

using OrderResult = std::variant<OrderProfile, CapExceeded>;

// Hash-map cycle detection over canonical matrix serializations; at
// most `cap` matrix multiplications. CapExceeded certifies ord > cap.
OrderResult order_profile_bruteforce(const SemiringMatrix& m, std::uint64_t cap);

// per(M) for a Boolean matrix via Tarjan SCC + BFS level-difference
// gcd per component, lcm over components. O(n^3) overall.
std::uint64_t scc_period(const SemiringMatrix& m);

struct LandauResult {
    int n = 0;
    BigInt value;               // g(n)
    std::vector<int> partition; // sorted ascending, padded with 1s to sum n
};

// Exact g(n) by dynamic programming over primes <= 2.86 sqrt(n ln n);
// 1 <= n <= 4096.
LandauResult landau_g(int n);

// Block-diagonal Boolean permutation matrix with cycle lengths equal
// to the extremal partition; scc_period(result) == g(n).
SemiringMatrix extremal_matrix(int n);

// Values of n in [3, n_max] violating
// ln g(n) <= sqrt(n ln n) (1 + ln ln n / (2 ln n)); empty when the
// upper bound holds throughout.
std::vector<int> massias_check(int n_max);

} // namespace srkex
