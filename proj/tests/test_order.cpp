#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "srkex/order.hpp"
#include "srkex/rng.hpp"
#include "srkex/semiring.hpp"

using namespace srkex;

namespace {

SemiringMatrix cycle_matrix(const std::vector<int>& lengths) {
    const int n = std::accumulate(lengths.begin(), lengths.end(), 0);
    SemiringMatrix m(builtin_shared("boolean_b2"), n);
    int off = 0;
    for (int len : lengths) {
        for (int i = 0; i < len; ++i) m.set(off + i, off + (i + 1) % len, 1);
        off += len;
    }
    return m;
}

OrderProfile profile_of(const SemiringMatrix& m, std::uint64_t cap) {
    const OrderResult r = order_profile_bruteforce(m, cap);
    REQUIRE(std::holds_alternative<OrderProfile>(r));
    return std::get<OrderProfile>(r);
}

} // namespace

TEST_CASE("identity matrix power sequence is constant") {
    const OrderProfile p = profile_of(identity(builtin_shared("s6"), 4), 10);
    CHECK(p.period == 1);
    CHECK(p.preperiod == 0);
    CHECK(p.ord == 1);
}

TEST_CASE("single 5-cycle permutation") {
    const OrderProfile p = profile_of(cycle_matrix({5}), 20);
    CHECK(p.period == 5);
    CHECK(p.preperiod == 0);
    CHECK(p.ord == 5);
}

TEST_CASE("upper triangular boolean matrix is idempotent from the start") {
    SemiringMatrix m(builtin_shared("boolean_b2"), 2);
    m.set(0, 0, 1);
    m.set(0, 1, 1);
    m.set(1, 1, 1);
    const OrderProfile p = profile_of(m, 10);
    CHECK(p.period == 1);
    CHECK(p.preperiod == 0);
}

TEST_CASE("cap exceeded is data, not an error") {
    const OrderResult r = order_profile_bruteforce(cycle_matrix({5}), 3);
    REQUIRE(std::holds_alternative<CapExceeded>(r));
    CHECK(std::get<CapExceeded>(r).cap == 3);
}

TEST_CASE("ord = period + preperiod and the sequence repeats accordingly") {
    RngStream rng(314);
    TablePtr b2 = builtin_shared("boolean_b2");
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(5));
        const SemiringMatrix m = random_matrix(b2, n, rng);
        const OrderProfile p = profile_of(m, 2000);
        CHECK(p.ord == p.period + p.preperiod);
        // spot-check M^(pr + per + t) == M^(pr + t) for t = 1, 2
        auto power = [&](std::uint64_t e) {
            SemiringMatrix acc = m;
            for (std::uint64_t i = 1; i < e; ++i) acc = mat_mul(acc, m);
            return acc;
        };
        for (std::uint64_t t = 1; t <= 2; ++t)
            CHECK(power(p.preperiod + p.period + t) == power(p.preperiod + t));
    }
}

TEST_CASE("scc_period on explicit cycle structures") {
    CHECK(scc_period(cycle_matrix({6})) == 6);
    CHECK(scc_period(cycle_matrix({3, 5})) == 15);
    CHECK(scc_period(cycle_matrix({1})) == 1);
    CHECK(scc_period(identity(builtin_shared("boolean_b2"), 4)) == 1);
}

TEST_CASE("scc_period rejects non-boolean matrices") {
    CHECK_THROWS_AS(scc_period(identity(builtin_shared("s6"), 3)), StructuralError);
}

TEST_CASE("scc_period equals brute-force period on 500 random matrices") {
    RngStream rng(2718281828);
    TablePtr b2 = builtin_shared("boolean_b2");
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(7)); // 2..8
        const SemiringMatrix m = random_matrix(b2, n, rng);
        const OrderProfile p = profile_of(m, 5000);
        CAPTURE(trial);
        CHECK(scc_period(m) == p.period);
    }
}

namespace {

// exhaustive maximization of lcm over all partitions of n
BigInt max_lcm_over_partitions(int n, int max_part, const BigInt& current) {
    BigInt best = current;
    for (int part = std::min(n, max_part); part >= 2; --part) {
        const BigInt with = boost::multiprecision::lcm(current, BigInt(part));
        const BigInt sub = max_lcm_over_partitions(n - part, part, with);
        if (sub > best) best = sub;
    }
    return best;
}

} // namespace

TEST_CASE("landau_g(20) is 420 with the canonical partition") {
    const LandauResult r = landau_g(20);
    CHECK(r.value == 420);
    CHECK(r.partition == std::vector<int>{1, 3, 4, 5, 7});
}

TEST_CASE("landau_g agrees with the exhaustive partition oracle up to 64") {
    for (int n = 1; n <= 64; ++n) {
        const LandauResult r = landau_g(n);
        CAPTURE(n);
        CHECK(r.value == max_lcm_over_partitions(n, n, 1));
        // partition invariants
        CHECK(std::accumulate(r.partition.begin(), r.partition.end(), 0) == n);
        BigInt l = 1;
        for (int part : r.partition) l = boost::multiprecision::lcm(l, BigInt(part));
        CHECK(l == r.value);
    }
}

TEST_CASE("landau_g is non-decreasing") {
    BigInt prev = 0;
    for (int n = 1; n <= 200; ++n) {
        const BigInt v = landau_g(n).value;
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("landau_g range checks") {
    CHECK_THROWS(landau_g(0));
    CHECK_THROWS(landau_g(4097));
    CHECK(landau_g(4096).value > 0);
    CHECK(landau_g(1).value == 1);
}

TEST_CASE("extremal matrices achieve g(n)") {
    CHECK(scc_period(extremal_matrix(20)) == 420);
    const OrderProfile p = profile_of(extremal_matrix(20), 10000);
    CHECK(p.period == 420);
    CHECK(p.preperiod == 0);

    const SemiringMatrix one = extremal_matrix(1);
    CHECK(one.n() == 1);
    CHECK(one.at(0, 0) == 1);
    CHECK(scc_period(one) == 1);

    CHECK(scc_period(extremal_matrix(7)) == 12); // partition 3 + 4
}

TEST_CASE("extremal matrices match landau values for small n") {
    for (int n = 1; n <= 24; ++n) {
        CAPTURE(n);
        CHECK(BigInt(scc_period(extremal_matrix(n))) == landau_g(n).value);
    }
}

TEST_CASE("massias upper bound holds") {
    CHECK(massias_check(1024).empty());
    // n = 256 numeric spot check from the tabulated value
    const LandauResult r = landau_g(256);
    CHECK(r.value == BigInt("4243057729190280"));
}
