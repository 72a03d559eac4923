#include "srkex/attacks.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "srkex/io.hpp"

namespace srkex {

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    auto mulmod = [mod](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % mod);
    };
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) result = mulmod(result, base);
        base = mulmod(base, base);
        exp >>= 1;
    }
    return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    return powmod(a % p, p - 2, p); // p prime
}

namespace {

std::string elem_key(const ActionElem& e) {
    return std::string(reinterpret_cast<const char*>(e.data()), e.size() * sizeof(std::uint64_t));
}

// Pairs of center polynomials ordered by total degree, then degree of
// p, then lexicographic concatenated coefficient tuples (coefficients
// run over the center in table order). All-zero polynomials are
// skipped, they are not semigroup elements.
class TwoSidedEnumerator final : public GEnumerator {
public:
    TwoSidedEnumerator(const TwoSidedAction& action, int max_degree)
        : action_(action), zero_(action.table()->zero),
          center_(action.center_elems()), max_degree_(max_degree) {}

    std::optional<ActionElem> next() override {
        while (total_ <= 2 * max_degree_) {
            if (advance_state()) {
                CenterPolynomial p, q;
                p.coeffs.assign(coeffs_.begin(), coeffs_.begin() + deg_p_ + 1);
                q.coeffs.assign(coeffs_.begin() + deg_p_ + 1, coeffs_.end());
                if (all_zero(p.coeffs) || all_zero(q.coeffs)) continue;
                return action_.encode_g(p, q);
            }
        }
        return std::nullopt;
    }

private:
    bool all_zero(const std::vector<std::uint8_t>& c) const {
        if (!zero_) return false;
        return std::all_of(c.begin(), c.end(),
                           [&](std::uint8_t v) { return v == *zero_; });
    }

    // one step of the (total degree, deg p, counter) odometer; fills
    // coeffs_ and returns true when a candidate is ready
    bool advance_state() {
        if (!started_) {
            started_ = true;
            total_ = 0;
            deg_p_ = 0;
            counter_.assign(2, 0);
            fill_coeffs();
            return true;
        }
        // increment base-|center| counter, least significant position last
        for (int pos = static_cast<int>(counter_.size()) - 1; pos >= 0; --pos) {
            if (++counter_[pos] < center_.size()) {
                fill_coeffs();
                return true;
            }
            counter_[pos] = 0;
        }
        // next degree split
        if (deg_p_ < total_ && deg_p_ + 1 <= max_degree_ && total_ - (deg_p_ + 1) <= max_degree_) {
            ++deg_p_;
        } else {
            ++total_;
            deg_p_ = std::max(0, total_ - max_degree_);
            if (total_ > 2 * max_degree_) return false;
        }
        counter_.assign(static_cast<std::size_t>(total_) + 2, 0);
        fill_coeffs();
        return true;
    }

    void fill_coeffs() {
        coeffs_.resize(counter_.size());
        for (std::size_t i = 0; i < counter_.size(); ++i)
            coeffs_[i] = static_cast<std::uint8_t>(center_[counter_[i]]);
    }

    const TwoSidedAction& action_;
    std::optional<int> zero_;
    std::vector<int> center_;
    int max_degree_;
    bool started_ = false;
    int total_ = 0;
    int deg_p_ = 0;
    std::vector<std::size_t> counter_;
    std::vector<std::uint8_t> coeffs_;
};

class ExponentEnumerator final : public GEnumerator {
public:
    explicit ExponentEnumerator(std::uint64_t max_exponent) : max_(max_exponent) {}
    std::optional<ActionElem> next() override {
        if (current_ >= max_) return std::nullopt;
        return ActionElem{++current_};
    }

private:
    std::uint64_t max_, current_ = 0;
};

} // namespace

std::unique_ptr<GEnumerator> two_sided_enumerator(const TwoSidedAction& action, int max_degree) {
    return std::make_unique<TwoSidedEnumerator>(action, max_degree);
}

std::unique_ptr<GEnumerator> exponent_enumerator(std::uint64_t max_exponent) {
    return std::make_unique<ExponentEnumerator>(max_exponent);
}

BruteForceResult brute_force_sap(const SapInstance& inst, GEnumerator& enumeration,
                                 std::uint64_t budget) {
    std::uint64_t tried = 0;
    while (tried < budget) {
        auto g = enumeration.next();
        if (!g) break;
        ++tried;
        if (inst.action->act(*g, inst.x) == inst.y) return *g;
    }
    return Exhausted{tried};
}

EveFraction eve_set_fraction(const SemigroupAction& action, const ActionElem& s,
                             const ActionElem& token, std::uint64_t sample_count,
                             RngStream& rng) {
    EveFraction result;
    result.samples = sample_count;
    for (std::uint64_t i = 0; i < sample_count; ++i) {
        const ActionElem g = action.sample_g(rng);
        if (action.act(g, s) == token) ++result.hits;
    }
    const double n = static_cast<double>(sample_count);
    const double p_hat = sample_count ? static_cast<double>(result.hits) / n : 0.0;
    result.fraction = p_hat;
    const double z = 1.959963984540054; // 95%
    if (sample_count) {
        const double denom = 1.0 + z * z / n;
        const double centre = (p_hat + z * z / (2.0 * n)) / denom;
        const double half =
            z * std::sqrt(p_hat * (1.0 - p_hat) / n + z * z / (4.0 * n * n)) / denom;
        result.wilson_low = std::max(0.0, centre - half);
        result.wilson_high = std::min(1.0, centre + half);
    }
    return result;
}

CyclicAttackResult cyclic_attack(const SemigroupAction& action, const ActionElem& g,
                                 const ActionElem& x, const ActionElem& y, std::uint64_t cap) {
    CyclicAttackResult result;
    std::uint64_t apps = 0;
    auto step = [&](const ActionElem& s) {
        ++apps;
        return action.act(g, s);
    };

    // Brent: find the period of {g^j x}
    const ActionElem x1 = step(x);
    std::uint64_t power = 1, lam = 1;
    ActionElem tortoise = x1;
    ActionElem hare = step(x1);
    while (tortoise != hare) {
        if (apps > cap) {
            result.applications = apps;
            return result;
        }
        if (power == lam) {
            tortoise = hare;
            power *= 2;
            lam = 0;
        }
        hare = step(hare);
        ++lam;
    }
    result.period = lam;

    // preperiod: advance a second pointer lam steps ahead, then walk both
    hare = x1;
    for (std::uint64_t i = 0; i < lam; ++i) hare = step(hare);
    tortoise = x1;
    std::uint64_t mu = 0;
    while (tortoise != hare) {
        tortoise = step(tortoise);
        hare = step(hare);
        ++mu;
        if (apps > 4 * cap + 16) {
            result.applications = apps;
            return result;
        }
    }
    result.preperiod = mu;
    const std::uint64_t rho = lam, tau = mu;

    auto verified = [&](std::uint64_t k) -> std::optional<std::uint64_t> {
        const ActionElem gk = action_power(action, g, k);
        if (action.act(gk, x) == y) return k;
        return std::nullopt;
    };

    // tail scan: y may sit before the cycle
    ActionElem cur = x1;
    for (std::uint64_t j = 1; j <= tau; ++j) {
        if (cur == y) {
            result.exponent = verified(j);
            result.applications = apps;
            return result;
        }
        cur = step(cur);
    }
    // cur is now x_{tau+1}, the first cycle element

    // baby steps from the cycle entry
    const std::uint64_t m = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(rho)))));
    std::unordered_map<std::string, std::uint64_t> baby;
    ActionElem b = cur;
    for (std::uint64_t t = 0; t < std::min(m, rho); ++t) {
        baby.emplace(elem_key(b), t);
        b = step(b);
    }

    auto try_offset = [&](std::uint64_t offset) -> bool {
        const auto it = baby.find(elem_key(cur));
        if (it != baby.end()) {
            const std::uint64_t k = tau + 1 + (offset + it->second) % rho;
            result.exponent = verified(k);
            return true;
        }
        return false;
    };

    cur = y;
    if (try_offset(0)) {
        result.applications = apps;
        return result;
    }
    if (rho > m) {
        // giant steps: one application of g^(rho - m) walks m slots
        // backwards around the cycle
        const ActionElem giant = action_power(action, g, rho - m);
        for (std::uint64_t i = 1; i * m < rho + m; ++i) {
            ++apps;
            cur = action.act(giant, cur);
            if (try_offset(i * m)) {
                result.applications = apps;
                return result;
            }
        }
    }
    result.applications = apps;
    return result;
}

BsgsResult randomized_bsgs(const GroupAction& action, const ActionElem& x, const ActionElem& y,
                           std::uint64_t group_size_hint, RngStream& rng) {
    BsgsResult result;
    const std::uint64_t m = std::max<std::uint64_t>(
        1, static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(group_size_hint)))));
    std::unordered_map<std::string, ActionElem> table; // h_i x -> h_i
    for (std::uint64_t i = 0; i < m; ++i) {
        const ActionElem h = action.sample_g(rng);
        ++result.applications;
        table.emplace(elem_key(action.act(h, x)), h);
    }
    const std::uint64_t trial_budget = 64 * m + 64;
    for (std::uint64_t trial = 0; trial < trial_budget; ++trial) {
        const ActionElem h = action.sample_g(rng);
        ++result.applications;
        const auto it = table.find(elem_key(action.act(h, y)));
        if (it == table.end()) continue;
        const ActionElem witness = action.compose(action.inverse(h), it->second);
        ++result.applications;
        if (action.act(witness, x) == y) {
            result.witness = witness;
            return result;
        }
    }
    return result;
}

namespace {

using FpVec = std::vector<std::uint64_t>;

std::uint64_t fp_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

// Row-reduce the augmented system [A | rhs...] (rows x cols matrix A,
// any number of right-hand sides) with partial pivoting over F_p.
// Solves each rhs with free variables set to zero; a rhs with an
// inconsistent row yields nullopt for that rhs.
std::vector<std::optional<FpVec>> fp_solve(std::uint64_t p, int rows, int cols, FpVec a,
                                           std::vector<FpVec> rhs) {
    const int nrhs = static_cast<int>(rhs.size());
    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int r = row; r < rows; ++r)
            if (a[static_cast<std::size_t>(r) * cols + col]) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row) {
            for (int c = 0; c < cols; ++c)
                std::swap(a[static_cast<std::size_t>(pivot) * cols + c],
                          a[static_cast<std::size_t>(row) * cols + c]);
            for (auto& b : rhs) std::swap(b[pivot], b[row]);
        }
        const std::uint64_t inv = inv_mod(a[static_cast<std::size_t>(row) * cols + col], p);
        for (int c = col; c < cols; ++c)
            a[static_cast<std::size_t>(row) * cols + c] =
                fp_mul(a[static_cast<std::size_t>(row) * cols + c], inv, p);
        for (auto& b : rhs) b[row] = fp_mul(b[row], inv, p);
        for (int r = 0; r < rows; ++r) {
            if (r == row) continue;
            const std::uint64_t factor = a[static_cast<std::size_t>(r) * cols + col];
            if (!factor) continue;
            for (int c = col; c < cols; ++c) {
                const std::uint64_t sub =
                    fp_mul(factor, a[static_cast<std::size_t>(row) * cols + c], p);
                auto& cell = a[static_cast<std::size_t>(r) * cols + c];
                cell = (cell + p - sub) % p;
            }
            for (auto& b : rhs) b[r] = (b[r] + p - fp_mul(factor, b[row], p)) % p;
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    std::vector<std::optional<FpVec>> solutions(nrhs);
    for (int s = 0; s < nrhs; ++s) {
        bool consistent = true;
        for (int r = row; r < rows; ++r)
            if (rhs[s][r]) consistent = false;
        if (!consistent) continue;
        FpVec x(cols, 0);
        for (int r = 0; r < row; ++r) x[pivot_col_of_row[r]] = rhs[s][r];
        solutions[s] = std::move(x);
    }
    return solutions;
}

FpVec mat_vec(std::uint64_t p, int n, const FpVec& m, const FpVec& v) {
    FpVec out(n, 0);
    for (int i = 0; i < n; ++i) {
        std::uint64_t acc = 0;
        for (int j = 0; j < n; ++j)
            acc = (acc + fp_mul(m[static_cast<std::size_t>(i) * n + j], v[j], p)) % p;
        out[i] = acc;
    }
    return out;
}

FpVec fp_mat_mul(std::uint64_t p, int n, const FpVec& a, const FpVec& b) {
    FpVec out(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const std::uint64_t aik = a[static_cast<std::size_t>(i) * n + k];
            if (!aik) continue;
            for (int j = 0; j < n; ++j) {
                auto& cell = out[static_cast<std::size_t>(i) * n + j];
                cell = (cell + fp_mul(aik, b[static_cast<std::size_t>(k) * n + j], p)) % p;
            }
        }
    return out;
}

} // namespace

LinearAttackResult linear_algebra_attack(const LinearizedAction& lin, const FpVec& u,
                                         const FpVec& v, const FpVec& w, RngStream& rng,
                                         int retry_budget) {
    LinearAttackResult result;
    const int n = lin.n;
    const int k = lin.k;
    for (int round = 1; round <= retry_budget; ++round) {
        std::vector<FpVec> mats;
        mats.reserve(k);
        FpVec columns(static_cast<std::size_t>(n) * k, 0);
        for (int i = 0; i < k; ++i) {
            mats.push_back(lin.sample(rng));
            const FpVec mu = mat_vec(lin.p, n, mats.back(), u);
            for (int r = 0; r < n; ++r) columns[static_cast<std::size_t>(r) * k + i] = mu[r];
        }
        auto solutions = fp_solve(lin.p, n, k, columns, {v, w});
        if (!solutions[0] || !solutions[1]) continue;

        auto combine = [&](const FpVec& coeffs) {
            FpVec m(static_cast<std::size_t>(n) * n, 0);
            for (int i = 0; i < k; ++i) {
                if (!coeffs[i]) continue;
                for (std::size_t e = 0; e < m.size(); ++e)
                    m[e] = (m[e] + fp_mul(coeffs[i], mats[i][e], lin.p)) % lin.p;
            }
            return m;
        };
        const FpVec mg = combine(*solutions[0]);
        const FpVec mh = combine(*solutions[1]);
        // by construction M_g u = v and M_h u = w; keep the check anyway
        if (mat_vec(lin.p, n, mg, u) != v || mat_vec(lin.p, n, mh, u) != w) continue;
        result.rounds = round;
        result.sigma = mat_vec(lin.p, n, mg, mat_vec(lin.p, n, mh, u));
        return result;
    }
    result.rounds = retry_budget;
    return result;
}

int minimal_polynomial_degree(std::uint64_t p, int n, const FpVec& m) {
    const std::size_t dim = static_cast<std::size_t>(n) * n;
    // reduced basis rows with their pivot positions
    std::vector<FpVec> basis;
    std::vector<std::size_t> pivots;
    FpVec power(dim, 0);
    for (int i = 0; i < n; ++i) power[static_cast<std::size_t>(i) * n + i] = 1;
    for (int degree = 0; degree <= n; ++degree) {
        FpVec row = power;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const std::uint64_t factor = row[pivots[b]];
            if (!factor) continue;
            for (std::size_t e = 0; e < dim; ++e)
                row[e] = (row[e] + p - fp_mul(factor, basis[b][e], p)) % p;
        }
        std::size_t pivot = dim;
        for (std::size_t e = 0; e < dim; ++e)
            if (row[e]) {
                pivot = e;
                break;
            }
        if (pivot == dim) return degree; // first linear dependency
        const std::uint64_t inv = inv_mod(row[pivot], p);
        for (std::size_t e = 0; e < dim; ++e) row[e] = fp_mul(row[e], inv, p);
        basis.push_back(std::move(row));
        pivots.push_back(pivot);
        power = fp_mat_mul(p, n, power, m);
    }
    return n; // cannot happen: minpoly degree <= n
}

LinearizedAction fm_linearization(std::uint64_t p, int n, const FpVec& m) {
    LinearizedAction lin;
    lin.p = p;
    lin.n = n;
    lin.k = minimal_polynomial_degree(p, n, m);
    auto powers = std::make_shared<std::vector<FpVec>>();
    FpVec power(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) power[static_cast<std::size_t>(i) * n + i] = 1;
    for (int d = 0; d < lin.k; ++d) {
        powers->push_back(power);
        if (d + 1 < lin.k) power = fp_mat_mul(p, n, power, m);
    }
    lin.sample = [p, n, powers](RngStream& rng) {
        FpVec out(static_cast<std::size_t>(n) * n, 0);
        for (const FpVec& pw : *powers) {
            const std::uint64_t c = rng.below(p);
            if (!c) continue;
            for (std::size_t e = 0; e < out.size(); ++e)
                out[e] = (out[e] + fp_mul(c, pw[e], p)) % p;
        }
        return out;
    };
    return lin;
}

LinearAttackResult fm_action_break(std::uint64_t p, int n, const FpVec& m, const FpVec& u,
                                   const FpVec& v, const FpVec& w, RngStream& rng) {
    return linear_algebra_attack(fm_linearization(p, n, m), u, v, w, rng);
}

namespace {

struct Digest128 {
    std::uint64_t hi = 0, lo = 0;
    bool operator==(const Digest128&) const = default;
};

struct Digest128Hash {
    std::size_t operator()(const Digest128& d) const { return d.hi ^ (d.lo * 0x9e3779b97f4a7c15ULL); }
};

Digest128 digest128(std::span<const std::uint8_t> bytes) {
    const auto full = sha256(bytes);
    Digest128 d;
    std::memcpy(&d.hi, full.data(), 8);
    std::memcpy(&d.lo, full.data() + 8, 8);
    return d;
}

// one token draw in the precomputed-power representation
struct OrbitSampler {
    const SemiringTable* t;
    int n;
    std::vector<int> cent;
    int degree_bound;
    std::vector<std::vector<std::uint8_t>> left;  // M1^i * S
    std::vector<std::vector<std::uint8_t>> right; // M2^j

    std::vector<std::uint8_t> draw_coeffs(RngStream& rng) const {
        while (true) {
            const int deg = 1 + static_cast<int>(rng.below(degree_bound));
            std::vector<std::uint8_t> coeffs(deg + 1);
            bool any = false;
            for (auto& c : coeffs) {
                c = static_cast<std::uint8_t>(cent[rng.below(cent.size())]);
                if (!t->zero || c != *t->zero) any = true;
            }
            if (any) return coeffs;
        }
    }

    std::vector<std::uint8_t> combine(const std::vector<std::uint8_t>& coeffs,
                                      const std::vector<std::vector<std::uint8_t>>& powers) const {
        const std::size_t size = static_cast<std::size_t>(n) * n;
        std::vector<std::uint8_t> acc(size, static_cast<std::uint8_t>(t->zero.value()));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            const std::uint8_t c = coeffs[i];
            if (t->zero && c == *t->zero) continue;
            const auto& pw = powers[i];
            if (t->one && c == *t->one) {
                for (std::size_t e = 0; e < size; ++e)
                    acc[e] = static_cast<std::uint8_t>(t->add_at(acc[e], pw[e]));
            } else {
                for (std::size_t e = 0; e < size; ++e)
                    acc[e] = static_cast<std::uint8_t>(t->add_at(acc[e], t->mul_at(c, pw[e])));
            }
        }
        return acc;
    }

    std::vector<std::uint8_t> token(RngStream& rng) const {
        const auto ls = combine(draw_coeffs(rng), left);   // p(M1) S
        const auto qm = combine(draw_coeffs(rng), right);  // q(M2)
        std::vector<std::uint8_t> out(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int acc = t->mul_at(ls[static_cast<std::size_t>(i) * n], qm[j]);
                for (int k = 1; k < n; ++k)
                    acc = t->add_at(acc, t->mul_at(ls[static_cast<std::size_t>(i) * n + k],
                                                   qm[static_cast<std::size_t>(k) * n + j]));
                out[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint8_t>(acc);
            }
        return out;
    }
};

OrbitSampler make_orbit_sampler(const ProtocolInstance& inst, int degree_bound) {
    OrbitSampler s;
    s.t = inst.table.get();
    s.n = inst.n;
    s.cent = center(*inst.table);
    s.degree_bound = degree_bound;
    SemiringMatrix lp = inst.s; // M1^0 * S
    SemiringMatrix rp = identity(inst.table, inst.n);
    for (int d = 0; d <= degree_bound; ++d) {
        s.left.push_back(lp.entries());
        s.right.push_back(rp.entries());
        if (d < degree_bound) {
            lp = mat_mul(inst.m1, lp);
            rp = mat_mul(rp, inst.m2);
        }
    }
    return s;
}

} // namespace

OrbitEstimate orbit_estimate(const ProtocolInstance& inst, std::uint64_t sample_count,
                             int degree_bound, std::uint64_t seed, int workers) {
    if (workers < 1) workers = 1;
    const OrbitSampler sampler = make_orbit_sampler(inst, degree_bound);
    const SeededRng master(seed);

    auto worker_stream = [&](int w) {
        return master.stream("attacks/orbit-worker-" + std::to_string(w));
    };
    auto worker_share = [&](int w) {
        return sample_count / workers + (static_cast<std::uint64_t>(w) < sample_count % workers ? 1 : 0);
    };

    // pass 1: digest counts per worker, merged in worker order
    std::vector<std::unordered_map<Digest128, std::uint32_t, Digest128Hash>> partial(workers);
    {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w)
            threads.emplace_back([&, w] {
                RngStream rng = worker_stream(w);
                auto& counts = partial[w];
                const std::uint64_t share = worker_share(w);
                counts.reserve(share * 2);
                for (std::uint64_t i = 0; i < share; ++i)
                    ++counts[digest128(sampler.token(rng))];
            });
        for (auto& th : threads) th.join();
    }
    std::unordered_map<Digest128, std::uint32_t, Digest128Hash> counts;
    for (auto& part : partial) {
        for (const auto& [d, c] : part) counts[d] += c;
        part.clear();
    }

    std::unordered_set<Digest128, Digest128Hash> collided;
    for (const auto& [d, c] : counts)
        if (c >= 2) collided.insert(d);

    OrbitEstimate est;
    est.samples_drawn = sample_count;
    est.distinct_count = counts.size();

    if (!collided.empty()) {
        // pass 2: replay the deterministic streams and keep the full
        // matrices behind collided digests, so only genuine value
        // collisions reach the birthday estimator
        std::unordered_map<Digest128, std::vector<std::vector<std::uint8_t>>, Digest128Hash> groups;
        for (int w = 0; w < workers; ++w) {
            RngStream rng = worker_stream(w);
            const std::uint64_t share = worker_share(w);
            for (std::uint64_t i = 0; i < share; ++i) {
                auto tok = sampler.token(rng);
                const Digest128 d = digest128(tok);
                if (collided.contains(d)) groups[d].push_back(std::move(tok));
            }
        }
        std::uint64_t distinct = counts.size();
        std::uint64_t pair_collisions = 0;
        for (auto& [d, toks] : groups) {
            std::map<std::vector<std::uint8_t>, std::uint64_t> by_value;
            for (auto& tk : toks) ++by_value[tk];
            distinct += by_value.size() - 1; // digest counted once in pass 1
            for (const auto& [val, c] : by_value) pair_collisions += c * (c - 1) / 2;
        }
        est.distinct_count = distinct;
        est.collision_count = pair_collisions;
        if (pair_collisions >= 1) {
            const double n = static_cast<double>(sample_count);
            est.point_estimate_log2 =
                std::log2(n * n / (2.0 * static_cast<double>(pair_collisions)));
        }
    }
    est.lower_bound_log2 = std::log2(static_cast<double>(est.distinct_count));
    return est;
}

} // namespace srkex
