#include "srkex/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace srkex {

namespace {

void require_table(const TablePtr& t) {
    if (!t) throw StructuralError("matrix needs a semiring table");
}

bool same_semiring(const SemiringMatrix& a, const SemiringMatrix& b) {
    return a.table().get() == b.table().get() || *a.table() == *b.table();
}

void require_compatible(const SemiringMatrix& a, const SemiringMatrix& b) {
    if (!same_semiring(a, b))
        throw StructuralError("matrix operands over different semirings");
    if (a.n() != b.n())
        throw StructuralError("matrix dimension mismatch");
}

} // namespace

SemiringMatrix::SemiringMatrix(TablePtr table, int n)
    : table_(std::move(table)), n_(n) {
    require_table(table_);
    if (n <= 0) throw StructuralError("matrix dimension must be positive");
    const int z = table_->zero.value_or(0);
    entries_.assign(static_cast<std::size_t>(n) * n, static_cast<std::uint8_t>(z));
}

SemiringMatrix::SemiringMatrix(TablePtr table, int n, std::vector<std::uint8_t> entries)
    : table_(std::move(table)), n_(n), entries_(std::move(entries)) {
    require_table(table_);
    if (n <= 0) throw StructuralError("matrix dimension must be positive");
    if (entries_.size() != static_cast<std::size_t>(n) * n)
        throw StructuralError("matrix entry count does not match dimension");
    for (std::uint8_t v : entries_)
        if (v >= table_->order) throw StructuralError("matrix entry out of semiring range");
}

bool SemiringMatrix::operator==(const SemiringMatrix& other) const {
    return n_ == other.n_ && entries_ == other.entries_ && same_semiring(*this, other);
}

SemiringMatrix mat_add(const SemiringMatrix& a, const SemiringMatrix& b) {
    require_compatible(a, b);
    const SemiringTable& t = *a.table();
    std::vector<std::uint8_t> out(a.entries().size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint8_t>(t.add_at(a.entries()[i], b.entries()[i]));
    return SemiringMatrix(a.table(), a.n(), std::move(out));
}

SemiringMatrix mat_mul(const SemiringMatrix& a, const SemiringMatrix& b) {
    require_compatible(a, b);
    const SemiringTable& t = *a.table();
    const int n = a.n();
    std::vector<std::uint8_t> out(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int acc = t.mul_at(a.at(i, 0), b.at(0, j));
            for (int k = 1; k < n; ++k)
                acc = t.add_at(acc, t.mul_at(a.at(i, k), b.at(k, j)));
            out[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint8_t>(acc);
        }
    }
    return SemiringMatrix(a.table(), n, std::move(out));
}

SemiringMatrix identity(TablePtr table, int n) {
    require_table(table);
    if (!table->zero || !table->one)
        throw StructuralError("identity matrix needs declared zero and one");
    SemiringMatrix m(table, n);
    for (int i = 0; i < n; ++i) m.set(i, i, *table->one);
    return m;
}

SemiringMatrix zero_matrix(TablePtr table, int n) {
    require_table(table);
    if (!table->zero) throw StructuralError("zero matrix needs a declared zero");
    return SemiringMatrix(std::move(table), n);
}

SemiringMatrix random_matrix(TablePtr table, int n, RngStream& rng) {
    require_table(table);
    std::vector<std::uint8_t> e(static_cast<std::size_t>(n) * n);
    for (auto& v : e) v = static_cast<std::uint8_t>(rng.below(table->order));
    return SemiringMatrix(std::move(table), n, std::move(e));
}

CenterPolynomial make_center_poly(const SemiringTable& t, std::vector<std::uint8_t> coeffs) {
    if (coeffs.empty()) throw StructuralError("polynomial needs at least one coefficient");
    const std::vector<int> c = center(t);
    bool any_nonzero = false;
    for (std::uint8_t r : coeffs) {
        if (r >= t.order) throw StructuralError("coefficient out of semiring range");
        if (std::find(c.begin(), c.end(), r) == c.end())
            throw std::invalid_argument("coefficient " + std::to_string(r) + " is not central");
        if (!t.zero || r != *t.zero) any_nonzero = true;
    }
    if (t.zero && !any_nonzero)
        throw std::invalid_argument("all-zero center polynomial rejected");
    return CenterPolynomial{std::move(coeffs)};
}

CenterPolynomial poly_mul(const SemiringTable& t, const CenterPolynomial& p, const CenterPolynomial& q) {
    if (!t.zero) throw StructuralError("polynomial product needs a declared zero");
    const std::uint8_t z = static_cast<std::uint8_t>(*t.zero);
    std::vector<std::uint8_t> out(p.coeffs.size() + q.coeffs.size() - 1, z);
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        for (std::size_t j = 0; j < q.coeffs.size(); ++j) {
            const int prod = t.mul_at(p.coeffs[i], q.coeffs[j]);
            out[i + j] = static_cast<std::uint8_t>(t.add_at(out[i + j], prod));
        }
    return CenterPolynomial{std::move(out)};
}

SemiringMatrix eval_poly(const CenterPolynomial& p, const SemiringMatrix& m) {
    const TablePtr& t = m.table();
    if (!t->zero || !t->one)
        throw StructuralError("polynomial evaluation needs declared zero and one");
    // Horner: result = r_k I; result = result*M + r_i I
    const int n = m.n();
    auto scalar = [&](std::uint8_t r) {
        SemiringMatrix d(t, n);
        for (int i = 0; i < n; ++i) d.set(i, i, r);
        return d;
    };
    SemiringMatrix result = scalar(p.coeffs.back());
    for (int i = static_cast<int>(p.coeffs.size()) - 2; i >= 0; --i)
        result = mat_add(mat_mul(result, m), scalar(p.coeffs[i]));
    return result;
}

SemiringMatrix two_sided_apply(const CenterPolynomial& p, const SemiringMatrix& m1,
                               const SemiringMatrix& x,
                               const CenterPolynomial& q, const SemiringMatrix& m2) {
    return mat_mul(mat_mul(eval_poly(p, m1), x), eval_poly(q, m2));
}

SemiringTable matrix_semiring_table(const SemiringTable& base, int n) {
    const int k = base.order;
    std::size_t count = 1;
    for (int i = 0; i < n * n; ++i) {
        count *= static_cast<std::size_t>(k);
        if (count > 256) throw StructuralError("matrix semiring too large for a table");
    }
    auto base_ptr = std::make_shared<const SemiringTable>(base);

    auto decode = [&](std::size_t code) {
        std::vector<std::uint8_t> e(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n * n; ++i) {
            e[i] = static_cast<std::uint8_t>(code % k);
            code /= k;
        }
        return SemiringMatrix(base_ptr, n, std::move(e));
    };
    auto encode = [&](const SemiringMatrix& m) {
        std::size_t code = 0;
        for (int i = n * n - 1; i >= 0; --i) code = code * k + m.entries()[i];
        return code;
    };

    SemiringTable t;
    t.name = "mat" + std::to_string(n) + "_" + base.name;
    t.order = static_cast<int>(count);
    t.add.resize(count * count);
    t.mul.resize(count * count);
    for (std::size_t a = 0; a < count; ++a) {
        const SemiringMatrix ma = decode(a);
        for (std::size_t b = 0; b < count; ++b) {
            const SemiringMatrix mb = decode(b);
            t.add[a * count + b] = static_cast<std::uint8_t>(encode(mat_add(ma, mb)));
            t.mul[a * count + b] = static_cast<std::uint8_t>(encode(mat_mul(ma, mb)));
        }
    }
    if (base.zero) t.zero = static_cast<int>(encode(zero_matrix(base_ptr, n)));
    if (base.zero && base.one) t.one = static_cast<int>(encode(identity(base_ptr, n)));
    return t;
}

} // namespace srkex
