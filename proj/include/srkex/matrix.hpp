#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "srkex/rng.hpp"
#include "srkex/semiring.hpp"

namespace srkex {

/// n x n matrix of element indices over a fixed semiring.
class SemiringMatrix {
public:
    SemiringMatrix(TablePtr table, int n);
    SemiringMatrix(TablePtr table, int n, std::vector<std::uint8_t> entries);

    int n() const { return n_; }
    const TablePtr& table() const { return table_; }
    const std::vector<std::uint8_t>& entries() const { return entries_; }

    int at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, int v) { entries_[static_cast<std::size_t>(i) * n_ + j] = static_cast<std::uint8_t>(v); }

    // canonical row-major byte serialization, used for hashing and equality
    std::span<const std::uint8_t> bytes() const { return entries_; }

    bool operator==(const SemiringMatrix& other) const;

private:
    TablePtr table_;
    int n_;
    std::vector<std::uint8_t> entries_;
};

SemiringMatrix mat_add(const SemiringMatrix& a, const SemiringMatrix& b);
SemiringMatrix mat_mul(const SemiringMatrix& a, const SemiringMatrix& b);
SemiringMatrix identity(TablePtr table, int n);
SemiringMatrix zero_matrix(TablePtr table, int n);
SemiringMatrix random_matrix(TablePtr table, int n, RngStream& rng);

/// Polynomial r_0 + r_1 t + ... + r_k t^k with coefficients in the
/// center. Leading zeros are not normalized (no subtraction exists, so
/// there is no canonical form); equality of semigroup elements is only
/// ever tested through matrix images.
struct CenterPolynomial {
    std::vector<std::uint8_t> coeffs; // coeffs[i] is r_i
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Validates center membership and rejects the all-zero polynomial
// (it would collapse every public token to the zero matrix).
CenterPolynomial make_center_poly(const SemiringTable& t, std::vector<std::uint8_t> coeffs);

// coefficient convolution over the semiring
CenterPolynomial poly_mul(const SemiringTable& t, const CenterPolynomial& p, const CenterPolynomial& q);

// Horner evaluation, O(deg * n^3) semiring operations
SemiringMatrix eval_poly(const CenterPolynomial& p, const SemiringMatrix& m);

// p(M1) * X * q(M2)
SemiringMatrix two_sided_apply(const CenterPolynomial& p, const SemiringMatrix& m1,
                               const SemiringMatrix& x,
                               const CenterPolynomial& q, const SemiringMatrix& m2);

// The semiring Mat_n(R) itself as an explicit table (element i is the
// matrix whose entries are the base-k digits of i, row-major). Only
// sensible for tiny k^(n*n); used to check that simplicity lifts.
SemiringTable matrix_semiring_table(const SemiringTable& base, int n);

} // namespace srkex
