#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "srkex/action.hpp"
#include "srkex/protocol.hpp"
#include "srkex/rng.hpp"

namespace srkex {

struct SapInstance {
    const SemigroupAction* action = nullptr;
    ActionElem x, y; // y promised in the orbit of x
};

// Ordered source of semigroup elements for brute force.
class GEnumerator {
public:
    virtual ~GEnumerator() = default;
    virtual std::optional<ActionElem> next() = 0;
};

// Polynomial pairs over the center, by increasing total degree then
// lexicographic coefficients.
std::unique_ptr<GEnumerator> two_sided_enumerator(const TwoSidedAction& action, int max_degree);
// exponents 1, 2, 3, ...
std::unique_ptr<GEnumerator> exponent_enumerator(std::uint64_t max_exponent);

struct Exhausted {
    std::uint64_t tried = 0;
};

using BruteForceResult = std::variant<ActionElem, Exhausted>;

// First enumerated g with act(g, x) == y; witnesses are verified by
// re-applying the action before being returned.
BruteForceResult brute_force_sap(const SapInstance& inst, GEnumerator& enumeration,
                                 std::uint64_t budget);

struct EveFraction {
    std::uint64_t samples = 0;
    std::uint64_t hits = 0;
    double fraction = 0.0;
    double wilson_low = 0.0;
    double wilson_high = 0.0;
};

// Monte-Carlo estimate of |G_Eve| / |G| with a 95% Wilson interval.
EveFraction eve_set_fraction(const SemigroupAction& action, const ActionElem& s,
                             const ActionElem& token, std::uint64_t sample_count,
                             RngStream& rng);

struct CyclicAttackResult {
    std::optional<std::uint64_t> exponent; // k with act(g^k, x) == y
    std::uint64_t period = 0;
    std::uint64_t preperiod = 0;
    std::uint64_t applications = 0; // act() calls consumed
};

// Cyclic-semigroup case: Brent cycle detection on {g^j x}, then BSGS
// inside the cycle with inverse giant steps realized as g^(rho - m)
// offsets.
CyclicAttackResult cyclic_attack(const SemigroupAction& action, const ActionElem& g,
                                 const ActionElem& x, const ActionElem& y, std::uint64_t cap);

struct BsgsResult {
    std::optional<ActionElem> witness;
    std::uint64_t applications = 0;
};

// Group-action case: randomized baby-step giant-step.
BsgsResult randomized_bsgs(const GroupAction& action, const ActionElem& x, const ActionElem& y,
                           std::uint64_t group_size_hint, RngStream& rng);

/// A semigroup action linearized over F_p: an oracle drawing random
/// elements of F_p[G] as n x n matrices (flattened row-major).
struct LinearizedAction {
    std::uint64_t p = 0;
    int n = 0;
    int k = 0; // dim F_p[G]
    std::function<std::vector<std::uint64_t>(RngStream&)> sample;
};

struct LinearAttackResult {
    std::optional<std::vector<std::uint64_t>> sigma; // psi((gh) x)
    int rounds = 0; // sampling rounds used (1 = first family worked)
};

// Probabilistic reduction of the Diffie-Hellman semigroup problem to
// linear algebra over F_p: sample k matrices, extract a subfamily with
// maximal Span{M_i u}, solve for M_g and M_h, return M_g M_h u.
// Resamples on inconsistent systems, up to retry_budget rounds.
LinearAttackResult linear_algebra_attack(const LinearizedAction& lin,
                                         const std::vector<std::uint64_t>& u,
                                         const std::vector<std::uint64_t>& v,
                                         const std::vector<std::uint64_t>& w,
                                         RngStream& rng, int retry_budget = 64);

// Specialization for G = F_p[M] acting on F_p^n: the oracle draws
// random polynomials in M of degree below deg(minpoly of M).
LinearizedAction fm_linearization(std::uint64_t p, int n, const std::vector<std::uint64_t>& m);

LinearAttackResult fm_action_break(std::uint64_t p, int n, const std::vector<std::uint64_t>& m,
                                   const std::vector<std::uint64_t>& u,
                                   const std::vector<std::uint64_t>& v,
                                   const std::vector<std::uint64_t>& w, RngStream& rng);

struct OrbitEstimate {
    std::uint64_t samples_drawn = 0;
    std::uint64_t distinct_count = 0;
    std::uint64_t collision_count = 0;
    double lower_bound_log2 = 0.0;
    std::optional<double> point_estimate_log2; // birthday estimate, absent with no collisions
};

// Samples random key pairs, digests the resulting tokens and counts
// collisions. Digest collisions are re-verified on full matrices
// before entering the birthday estimator. Deterministic for a fixed
// (seed, workers) pair.
OrbitEstimate orbit_estimate(const ProtocolInstance& inst, std::uint64_t sample_count,
                             int degree_bound, std::uint64_t seed, int workers = 1);

// tiny helpers shared with tests
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

// Degree of the minimal polynomial of M over F_p (first linear
// dependency among I, M, M^2, ...).
int minimal_polynomial_degree(std::uint64_t p, int n, const std::vector<std::uint64_t>& m);

} // namespace srkex
