// Acceptance suite: thirteen numbered checks, one verdict line each.
// Exits nonzero if any check fails; failures print the measured values
// so discrepancies are auditable from the test log alone.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "srkex/attacks.hpp"
#include "srkex/io.hpp"
#include "srkex/order.hpp"
#include "srkex/protocol.hpp"
#include "srkex/semiring.hpp"

using namespace srkex;

namespace {

int g_failures = 0;

void verdict(int criterion, bool pass, const std::string& label, const std::string& detail = "") {
    std::cout << "criterion " << criterion << " (" << label << "): " << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

template <typename F>
double timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string partition_str(const std::vector<int>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += '+';
        s += std::to_string(parts[i]);
    }
    return s;
}

// --- 1: tabulated Landau values ---------------------------------------------

void criterion_1() {
    struct Row {
        int n;
        const char* value;
        std::vector<int> partition; // sorted ascending
    };
    // tabulated reference values; the n=512 row reproduces the
    // published table verbatim
    const std::vector<Row> rows = {
        {20, "420", {1, 3, 4, 5, 7}},
        {256, "4243057729190280", {5, 7, 8, 9, 11, 13, 17, 19, 23, 29, 31, 41, 43}},
        {512,
         "703730288156441825899620",
         {1, 1, 1, 4, 5, 7, 9, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61}},
        {1024,
         "8556747082684398277434193536488991600",
         {1, 1, 1, 7, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
          71, 73, 79, 83, 89}},
    };
    bool pass = true;
    std::string detail;
    const double secs = timed([&] {
        for (const Row& row : rows) {
            const LandauResult r = landau_g(row.n);
            if (r.value != BigInt(row.value) || r.partition != row.partition) {
                pass = false;
                std::ostringstream os;
                if (!detail.empty()) detail += "; ";
                os << "g(" << row.n << ") computed " << r.value << " ["
                   << partition_str(r.partition) << "], table says " << row.value << " ["
                   << partition_str(row.partition) << "]";
                detail += os.str();
            }
        }
    });
    if (secs >= 5.0) {
        pass = false;
        detail += (detail.empty() ? "" : "; ") + std::to_string(secs) + "s exceeds 5s";
    }
    verdict(1, pass, "Landau regression", detail);
}

// --- 2: Landau vs exhaustive partitions -------------------------------------

BigInt max_lcm_partitions(int n, int max_part, const BigInt& acc) {
    BigInt best = acc;
    for (int part = std::min(n, max_part); part >= 2; --part) {
        const BigInt sub =
            max_lcm_partitions(n - part, part, boost::multiprecision::lcm(acc, BigInt(part)));
        if (sub > best) best = sub;
    }
    return best;
}

void criterion_2() {
    bool pass = true;
    std::string detail;
    const double secs = timed([&] {
        for (int n = 1; n <= 64 && pass; ++n)
            if (landau_g(n).value != max_lcm_partitions(n, n, 1)) {
                pass = false;
                detail = "mismatch at n=" + std::to_string(n);
            }
    });
    if (secs >= 60.0) pass = false;
    verdict(2, pass, "Landau oracle equivalence",
            detail.empty() ? std::to_string(secs) + "s" : detail);
}

// --- 3: simplicity suite ----------------------------------------------------

void criterion_3() {
    bool pass = true;
    std::string detail;
    const double secs = timed([&] {
        const std::pair<const char*, bool> cases[] = {
            {"boolean_b2", true}, {"s6", true},   {"s20", true},
            {"zmod4", false},     {"zmod6", false}, {"zmod5", true},
        };
        for (const auto& [name, expected] : cases)
            if (is_simple(builtin(name)) != expected) {
                pass = false;
                detail += std::string(name) + " wrong; ";
            }
    });
    if (secs >= 10.0) pass = false;
    verdict(3, pass, "simplicity suite", detail.empty() ? std::to_string(secs) + "s" : detail);
}

// --- 4: axiom suite ---------------------------------------------------------

void criterion_4() {
    bool pass = true;
    std::string detail;
    for (const char* name : {"boolean_b2", "s6", "s20"})
        if (!validate_axioms(builtin(name)).ok()) {
            pass = false;
            detail += std::string(name) + " reported violations; ";
        }
    static constexpr int kMutations[20][4] = {
        {0, 0, 0, 1}, {0, 0, 0, 2}, {0, 0, 0, 3}, {0, 0, 0, 4}, {0, 0, 0, 5},
        {0, 0, 1, 0}, {0, 0, 1, 2}, {0, 0, 1, 3}, {0, 0, 1, 4}, {0, 0, 1, 5},
        {0, 0, 2, 0}, {0, 0, 2, 1}, {0, 0, 2, 3}, {0, 0, 2, 4}, {0, 0, 2, 5},
        {0, 0, 3, 0}, {0, 0, 3, 1}, {0, 0, 3, 2}, {0, 0, 3, 4}, {0, 0, 3, 5},
    };
    const SemiringTable base = builtin("s6");
    int caught = 0;
    for (const auto& m : kMutations) {
        SemiringTable t = base;
        (m[0] ? t.mul : t.add)[m[1] * 6 + m[2]] = static_cast<std::uint8_t>(m[3]);
        if (!validate_axioms(t).ok()) ++caught;
    }
    if (caught != 20) {
        pass = false;
        detail += std::to_string(caught) + "/20 mutations caught";
    }
    verdict(4, pass, "axiom suite", detail);
}

// --- 5: period oracle equivalence -------------------------------------------

void criterion_5() {
    bool pass = true;
    std::string detail;
    const double secs = timed([&] {
        RngStream rng(5550555);
        TablePtr b2 = builtin_shared("boolean_b2");
        for (int trial = 0; trial < 500; ++trial) {
            const int n = 2 + static_cast<int>(rng.below(7));
            const SemiringMatrix m = random_matrix(b2, n, rng);
            const OrderResult r = order_profile_bruteforce(m, 5000);
            const auto* profile = std::get_if<OrderProfile>(&r);
            if (!profile || scc_period(m) != profile->period) {
                pass = false;
                detail = "mismatch at trial " + std::to_string(trial);
                return;
            }
        }
    });
    if (secs >= 30.0) pass = false;
    verdict(5, pass, "period oracle equivalence",
            detail.empty() ? std::to_string(secs) + "s" : detail);
}

// --- 6: extremal construction -----------------------------------------------

void criterion_6() {
    const SemiringMatrix m = extremal_matrix(20);
    const std::uint64_t scc = scc_period(m);
    const OrderResult r = order_profile_bruteforce(m, 10000);
    const auto* profile = std::get_if<OrderProfile>(&r);
    const bool pass = scc == 420 && profile && profile->period == 420;
    std::ostringstream os;
    os << "scc_period=" << scc << " brute period="
       << (profile ? std::to_string(profile->period) : std::string("cap exceeded"));
    verdict(6, pass, "extremal construction", os.str());
}

// --- 7: fixture matrix orders -----------------------------------------------

void criterion_7() {
    const ProtocolInstance inst = paper_instance();
    bool pass = true;
    std::string detail;
    const double secs = timed([&] {
        const std::pair<const char*, const SemiringMatrix*> fixtures[] = {{"M1", &inst.m1},
                                                                          {"M2", &inst.m2}};
        for (const auto& [name, mp] : fixtures) {
            const SemiringMatrix& m = *mp;
            const OrderResult r = order_profile_bruteforce(m, 421);
            if (const auto* profile = std::get_if<OrderProfile>(&r)) {
                pass = false;
                std::ostringstream os;
                if (!detail.empty()) detail += "; ";
                os << name << " ord=" << profile->ord << " (period " << profile->period
                   << ", preperiod " << profile->preperiod << ") <= 420, claim ord > 420 fails";
                detail += os.str();
            } else {
                detail += std::string(detail.empty() ? "" : "; ") + name + " ord > 420";
            }
        }
    });
    if (secs >= 60.0) pass = false;
    verdict(7, pass, "fixture matrix order claim", detail);
}

// --- 8: protocol round-trip -------------------------------------------------

void criterion_8() {
    bool pass = true;
    std::string detail;
    const double secs = timed([&] {
        const ProtocolInstance inst = paper_instance();
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
            SeededRng master(seed);
            RngStream alice = master.stream("acceptance/alice");
            RngStream bob = master.stream("acceptance/bob");
            auto [ka, ta] = keygen(inst, alice);
            auto [kb, tb] = keygen(inst, bob);
            if (!(derive_shared(inst, ka, tb).k == derive_shared(inst, kb, ta).k)) {
                pass = false;
                detail = "disagreement at seed " + std::to_string(seed);
                return;
            }
        }
    });
    if (secs >= 120.0) pass = false;
    verdict(8, pass, "protocol round-trip",
            detail.empty() ? "100/100 sessions agree, " + std::to_string(secs) + "s" : detail);
}

// --- 9: linear attack success -----------------------------------------------

void criterion_9() {
    bool pass = true;
    std::string detail;
    int successes = 0;
    long long rounds = 0;
    const double secs = timed([&] {
        RngStream rng(909);
        const std::uint64_t primes[] = {2, 3, 5, 7};
        for (int trial = 0; trial < 100; ++trial) {
            const std::uint64_t p = primes[trial % 4];
            const int n = 2 + trial % 7; // 2..8
            std::vector<std::uint64_t> m(static_cast<std::size_t>(n) * n);
            for (auto& e : m) e = rng.below(p);
            const LinearizedAction lin = fm_linearization(p, n, m);
            std::vector<std::uint64_t> u(n);
            for (auto& e : u) e = rng.below(p);
            auto apply = [&](const std::vector<std::uint64_t>& mat,
                             const std::vector<std::uint64_t>& vec) {
                std::vector<std::uint64_t> out(n, 0);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        out[i] = (out[i] + mat[static_cast<std::size_t>(i) * n + j] * vec[j]) % p;
                return out;
            };
            const auto mg = lin.sample(rng);
            const auto mh = lin.sample(rng);
            const LinearAttackResult r =
                linear_algebra_attack(lin, u, apply(mg, u), apply(mh, u), rng);
            if (r.sigma && *r.sigma == apply(mg, apply(mh, u))) ++successes;
            rounds += r.rounds;
        }
    });
    const double mean_rounds = rounds / 100.0;
    if (successes != 100 || mean_rounds > 4.0 || secs >= 60.0) pass = false;
    std::ostringstream os;
    os << successes << "/100 recovered, mean rounds " << mean_rounds;
    verdict(9, pass, "linear attack success", os.str());
}

// --- 10: BSGS cost shape ----------------------------------------------------

std::uint64_t primitive_root(std::uint64_t p) {
    std::vector<std::uint64_t> factors;
    std::uint64_t m = p - 1;
    for (std::uint64_t d = 2; d * d <= m; ++d)
        while (m % d == 0) {
            factors.push_back(d);
            while (m % d == 0) m /= d;
            break;
        }
    if (m > 1) factors.push_back(m);
    for (std::uint64_t g = 2;; ++g) {
        bool ok = true;
        for (std::uint64_t q : factors)
            if (powmod(g, (p - 1) / q, p) == 1) ok = false;
        if (ok) return g;
    }
}

void criterion_10() {
    bool pass = true;
    std::string detail;
    const std::uint64_t primes[] = {1019, 10007, 99991, 999983};
    RngStream rng(101010);
    for (std::uint64_t p : primes) {
        const std::uint64_t g = primitive_root(p);
        const auto action = make_modmul_group_action(p, g, p - 1);
        const double budget = 10.0 * std::sqrt(static_cast<double>(p - 1));
        // 50 trials spread over the four group sizes
        for (int trial = 0; trial < 13 && pass; ++trial) {
            const ActionElem x{1};
            const ActionElem y{powmod(g, 1 + rng.below(p - 1), p)};
            const BsgsResult r = randomized_bsgs(*action, x, y, p - 1, rng);
            if (!r.witness || !(action->act(*r.witness, x) == y)) {
                pass = false;
                detail = "unverified witness at p=" + std::to_string(p);
            } else if (static_cast<double>(r.applications) > budget) {
                pass = false;
                detail = "p=" + std::to_string(p) + " used " + std::to_string(r.applications) +
                         " applications, budget " + std::to_string(budget);
            }
        }
    }
    verdict(10, pass, "BSGS cost shape", detail.empty() ? "52 verified trials in budget" : detail);
}

// --- 11: orbit lower bound --------------------------------------------------

void criterion_11() {
    const ProtocolInstance inst = paper_instance();
    const std::uint64_t samples = 1ull << 20;
    const OrbitEstimate est = orbit_estimate(inst, samples, 49, 20250823, 4);
    const bool pass = est.distinct_count == samples && est.collision_count == 0 &&
                      est.lower_bound_log2 >= 20.0;
    std::ostringstream os;
    os << "distinct=" << est.distinct_count << " collisions=" << est.collision_count
       << " lower_bound_log2=" << est.lower_bound_log2;
    if (est.point_estimate_log2) os << " point_estimate_log2=" << *est.point_estimate_log2;
    verdict(11, pass, "orbit lower bound", os.str());
}

// --- 12: Massias bound ------------------------------------------------------

void criterion_12() {
    const std::vector<int> violations = massias_check(1024);
    verdict(12, violations.empty(), "Massias bound",
            violations.empty() ? "no violations up to 1024"
                               : std::to_string(violations.size()) + " violations");
}

// --- 13: congruence lifting -------------------------------------------------

void criterion_13() {
    bool pass = true;
    std::string detail;
    const double secs = timed([&] {
        const SemiringTable m2 = matrix_semiring_table(builtin("boolean_b2"), 2);
        int full = 0, pairs = 0;
        for (int a = 0; a < m2.order; ++a)
            for (int b = a + 1; b < m2.order; ++b) {
                const std::pair<int, int> seed[] = {{a, b}};
                ++pairs;
                if (generated_congruence(m2, seed).full()) ++full;
            }
        if (pairs != 120 || full != 120) {
            pass = false;
            detail = std::to_string(full) + "/" + std::to_string(pairs) + " pairs collapse";
        }
    });
    if (secs >= 5.0) pass = false;
    verdict(13, pass, "congruence lifting",
            detail.empty() ? "all 120 pairs generate the full relation" : detail);
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    std::cout << (g_failures ? std::to_string(g_failures) + " criterion(s) failed" : "all criteria passed")
              << std::endl;
    return g_failures ? 1 : 0;
}
