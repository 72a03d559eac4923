#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "srkex/matrix.hpp"
#include "srkex/rng.hpp"

namespace srkex {

// Opaque encoded element; each action defines its own layout. Equality
// on semigroup elements is deliberately not part of the interface (no
// canonical form exists in general); only set elements are compared.
using ActionElem = std::vector<std::uint64_t>;

class SemigroupAction {
public:
    virtual ~SemigroupAction() = default;
    virtual bool commutative() const { return true; }
    virtual ActionElem compose(const ActionElem& g, const ActionElem& h) const = 0;
    virtual ActionElem act(const ActionElem& g, const ActionElem& s) const = 0;
    virtual ActionElem identity_elem() const = 0;
    virtual ActionElem sample_g(RngStream& rng) const = 0;
};

// Group actions additionally expose inverses (used by BSGS attacks).
class GroupAction : public SemigroupAction {
public:
    virtual ActionElem inverse(const ActionElem& g) const = 0;
};

// g^e via square-and-multiply over compose, e >= 1
ActionElem action_power(const SemigroupAction& a, const ActionElem& g, std::uint64_t e);

// Counts act() calls; used by attack-cost assertions.
class CountingAction : public SemigroupAction {
public:
    explicit CountingAction(const SemigroupAction& inner) : inner_(inner) {}
    bool commutative() const override { return inner_.commutative(); }
    ActionElem compose(const ActionElem& g, const ActionElem& h) const override { return inner_.compose(g, h); }
    ActionElem act(const ActionElem& g, const ActionElem& s) const override {
        ++applications_;
        return inner_.act(g, s);
    }
    ActionElem identity_elem() const override { return inner_.identity_elem(); }
    ActionElem sample_g(RngStream& rng) const override { return inner_.sample_g(rng); }
    std::uint64_t applications() const { return applications_; }

private:
    const SemigroupAction& inner_;
    mutable std::uint64_t applications_ = 0;
};

// (N, *) acting on <g> in (Z/pZ)* by exponentiation; exponents are kept
// mod p-1. G elem = {exponent in [1, p-1]}, S elem = {residue}.
std::unique_ptr<SemigroupAction> make_modexp_action(std::uint64_t p, std::uint64_t g);

// Subgroup of (Z/pZ)* of the given order acting on itself by
// multiplication. G elem = S elem = {residue}.
std::unique_ptr<GroupAction> make_modmul_group_action(std::uint64_t p, std::uint64_t generator,
                                                      std::uint64_t group_order);

// F_p[M] acting on F_p^n; G elems are the n x n matrix images
// themselves (flattened row-major), S elems are vectors.
std::unique_ptr<SemigroupAction> make_fm_linear_action(std::uint64_t p, int n,
                                                       std::vector<std::uint64_t> m);

/// Two-sided action: pairs (p, q) of center polynomials acting on
/// Mat_n(R) by X -> p(M1) X q(M2). G elem layout:
/// [len_p, p coeffs..., len_q, q coeffs...]; S elem = matrix entries.
class TwoSidedAction : public SemigroupAction {
public:
    TwoSidedAction(SemiringMatrix m1, SemiringMatrix m2, int degree_bound);

    ActionElem compose(const ActionElem& g, const ActionElem& h) const override;
    ActionElem act(const ActionElem& g, const ActionElem& s) const override;
    ActionElem identity_elem() const override;
    ActionElem sample_g(RngStream& rng) const override;

    ActionElem encode_g(const CenterPolynomial& p, const CenterPolynomial& q) const;
    std::pair<CenterPolynomial, CenterPolynomial> decode_g(const ActionElem& g) const;
    ActionElem encode_s(const SemiringMatrix& x) const;
    SemiringMatrix decode_s(const ActionElem& s) const;

    const SemiringMatrix& m1() const { return m1_; }
    const SemiringMatrix& m2() const { return m2_; }
    const TablePtr& table() const { return m1_.table(); }
    const std::vector<int>& center_elems() const { return center_; }
    int degree_bound() const { return degree_bound_; }

private:
    SemiringMatrix m1_, m2_;
    std::vector<int> center_;
    int degree_bound_;
};

} // namespace srkex
