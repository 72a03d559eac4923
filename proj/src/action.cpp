#include "srkex/action.hpp"

#include <stdexcept>

namespace srkex {

ActionElem action_power(const SemigroupAction& a, const ActionElem& g, std::uint64_t e) {
    if (e == 0) throw std::invalid_argument("action_power: exponent must be >= 1");
    ActionElem result = a.identity_elem();
    ActionElem base = g;
    while (e) {
        if (e & 1) result = a.compose(result, base);
        e >>= 1;
        if (e) base = a.compose(base, base);
    }
    return result;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1;
    }
    return result;
}

// (N, *) acting on <g> by exponentiation; exponent arithmetic is done
// mod p-1 (valid on (Z/pZ)* by Fermat).
class ModExpAction final : public SemigroupAction {
public:
    ModExpAction(std::uint64_t p, std::uint64_t g) : p_(p), g_(g) {
        if (p < 3) throw std::invalid_argument("modexp action needs p >= 3");
        if (g % p == 0) throw std::invalid_argument("base must be a unit mod p");
    }

    ActionElem compose(const ActionElem& g, const ActionElem& h) const override {
        std::uint64_t e = mulmod(g.at(0), h.at(0), p_ - 1);
        if (e == 0) e = p_ - 1; // exponent p-1 acts as exponent 0 would not
        return {e};
    }

    ActionElem act(const ActionElem& g, const ActionElem& s) const override {
        return {powmod_u64(s.at(0), g.at(0), p_)};
    }

    ActionElem identity_elem() const override { return {1}; }

    ActionElem sample_g(RngStream& rng) const override { return {1 + rng.below(p_ - 1)}; }

    std::uint64_t base() const { return g_; }
    std::uint64_t modulus() const { return p_; }

private:
    std::uint64_t p_, g_;
};

class ModMulGroupAction final : public GroupAction {
public:
    ModMulGroupAction(std::uint64_t p, std::uint64_t generator, std::uint64_t order)
        : p_(p), gen_(generator), order_(order) {
        if (order == 0 || powmod_u64(generator, order, p) != 1)
            throw std::invalid_argument("generator order mismatch");
    }

    ActionElem compose(const ActionElem& g, const ActionElem& h) const override {
        return {mulmod(g.at(0), h.at(0), p_)};
    }

    ActionElem act(const ActionElem& g, const ActionElem& s) const override {
        return {mulmod(g.at(0), s.at(0), p_)};
    }

    ActionElem identity_elem() const override { return {1}; }

    ActionElem sample_g(RngStream& rng) const override {
        return {powmod_u64(gen_, 1 + rng.below(order_), p_)};
    }

    ActionElem inverse(const ActionElem& g) const override {
        return {powmod_u64(g.at(0), p_ - 2, p_)};
    }

private:
    std::uint64_t p_, gen_, order_;
};

class FmLinearAction final : public SemigroupAction {
public:
    FmLinearAction(std::uint64_t p, int n, std::vector<std::uint64_t> m)
        : p_(p), n_(n), m_(std::move(m)) {
        if (m_.size() != static_cast<std::size_t>(n) * n)
            throw std::invalid_argument("matrix size mismatch");
    }

    ActionElem compose(const ActionElem& g, const ActionElem& h) const override {
        ActionElem out(static_cast<std::size_t>(n_) * n_, 0);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const std::uint64_t gik = g[static_cast<std::size_t>(i) * n_ + k];
                if (!gik) continue;
                for (int j = 0; j < n_; ++j)
                    out[static_cast<std::size_t>(i) * n_ + j] =
                        (out[static_cast<std::size_t>(i) * n_ + j] +
                         mulmod(gik, h[static_cast<std::size_t>(k) * n_ + j], p_)) % p_;
            }
        return out;
    }

    ActionElem act(const ActionElem& g, const ActionElem& s) const override {
        ActionElem out(n_, 0);
        for (int i = 0; i < n_; ++i) {
            std::uint64_t acc = 0;
            for (int j = 0; j < n_; ++j)
                acc = (acc + mulmod(g[static_cast<std::size_t>(i) * n_ + j], s[j], p_)) % p_;
            out[i] = acc;
        }
        return out;
    }

    ActionElem identity_elem() const override {
        ActionElem id(static_cast<std::size_t>(n_) * n_, 0);
        for (int i = 0; i < n_; ++i) id[static_cast<std::size_t>(i) * n_ + i] = 1;
        return id;
    }

    // random polynomial in M with degree < n, evaluated to its matrix
    ActionElem sample_g(RngStream& rng) const override {
        ActionElem result(static_cast<std::size_t>(n_) * n_, 0);
        ActionElem power = identity_elem();
        for (int d = 0; d < n_; ++d) {
            const std::uint64_t c = rng.below(p_);
            for (std::size_t i = 0; i < result.size(); ++i)
                result[i] = (result[i] + mulmod(c, power[i], p_)) % p_;
            if (d + 1 < n_) power = compose(power, m_);
        }
        return result;
    }

private:
    std::uint64_t p_;
    int n_;
    std::vector<std::uint64_t> m_;
};

} // namespace

std::unique_ptr<SemigroupAction> make_modexp_action(std::uint64_t p, std::uint64_t g) {
    return std::make_unique<ModExpAction>(p, g);
}

std::unique_ptr<GroupAction> make_modmul_group_action(std::uint64_t p, std::uint64_t generator,
                                                      std::uint64_t group_order) {
    return std::make_unique<ModMulGroupAction>(p, generator, group_order);
}

std::unique_ptr<SemigroupAction> make_fm_linear_action(std::uint64_t p, int n,
                                                       std::vector<std::uint64_t> m) {
    return std::make_unique<FmLinearAction>(p, n, std::move(m));
}

TwoSidedAction::TwoSidedAction(SemiringMatrix m1, SemiringMatrix m2, int degree_bound)
    : m1_(std::move(m1)), m2_(std::move(m2)), degree_bound_(degree_bound) {
    if (m1_.n() != m2_.n() || !(*m1_.table() == *m2_.table()))
        throw StructuralError("two-sided action needs matching M1/M2");
    if (degree_bound < 1) throw std::invalid_argument("degree bound must be >= 1");
    center_ = center(*table());
    if (center_.size() < 2)
        throw std::invalid_argument("center too small for a usable action");
}

ActionElem TwoSidedAction::encode_g(const CenterPolynomial& p, const CenterPolynomial& q) const {
    ActionElem g;
    g.push_back(p.coeffs.size());
    g.insert(g.end(), p.coeffs.begin(), p.coeffs.end());
    g.push_back(q.coeffs.size());
    g.insert(g.end(), q.coeffs.begin(), q.coeffs.end());
    return g;
}

std::pair<CenterPolynomial, CenterPolynomial> TwoSidedAction::decode_g(const ActionElem& g) const {
    const std::size_t lp = g.at(0);
    CenterPolynomial p, q;
    p.coeffs.assign(g.begin() + 1, g.begin() + 1 + lp);
    const std::size_t lq = g.at(1 + lp);
    q.coeffs.assign(g.begin() + 2 + lp, g.begin() + 2 + lp + lq);
    return {std::move(p), std::move(q)};
}

ActionElem TwoSidedAction::encode_s(const SemiringMatrix& x) const {
    return ActionElem(x.entries().begin(), x.entries().end());
}

SemiringMatrix TwoSidedAction::decode_s(const ActionElem& s) const {
    std::vector<std::uint8_t> e(s.begin(), s.end());
    return SemiringMatrix(m1_.table(), m1_.n(), std::move(e));
}

// (p1,q1)*(p2,q2) = (p1 p2, q2 q1); with central coefficients the
// order on the q side is immaterial, kept for the two-sided identity
ActionElem TwoSidedAction::compose(const ActionElem& g, const ActionElem& h) const {
    auto [pg, qg] = decode_g(g);
    auto [ph, qh] = decode_g(h);
    return encode_g(poly_mul(*table(), pg, ph), poly_mul(*table(), qh, qg));
}

ActionElem TwoSidedAction::act(const ActionElem& g, const ActionElem& s) const {
    auto [p, q] = decode_g(g);
    return encode_s(two_sided_apply(p, m1_, decode_s(s), q, m2_));
}

ActionElem TwoSidedAction::identity_elem() const {
    const std::uint8_t one = static_cast<std::uint8_t>(table()->one.value());
    CenterPolynomial unit{{one}};
    return encode_g(unit, unit);
}

ActionElem TwoSidedAction::sample_g(RngStream& rng) const {
    auto draw = [&] {
        while (true) {
            const int deg = 1 + static_cast<int>(rng.below(degree_bound_));
            std::vector<std::uint8_t> coeffs(deg + 1);
            bool any = false;
            for (auto& c : coeffs) {
                c = static_cast<std::uint8_t>(center_[rng.below(center_.size())]);
                if (!table()->zero || c != *table()->zero) any = true;
            }
            if (any) return CenterPolynomial{std::move(coeffs)};
        }
    };
    CenterPolynomial p = draw();
    CenterPolynomial q = draw();
    return encode_g(p, q);
}

} // namespace srkex
