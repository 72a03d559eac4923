#include "srkex/order.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>

namespace srkex {

OrderResult order_profile_bruteforce(const SemiringMatrix& m, std::uint64_t cap) {
    // power sequence starts at exponent 1; the map stores the first
    // index at which each matrix appeared. unordered_map keys on the
    // full serialization, so hash hits are verified byte-for-byte.
    std::unordered_map<std::string, std::uint64_t> first_seen;
    SemiringMatrix power = m;
    for (std::uint64_t idx = 1; idx <= cap; ++idx) {
        std::string key(power.bytes().begin(), power.bytes().end());
        auto [it, inserted] = first_seen.try_emplace(std::move(key), idx);
        if (!inserted) {
            const std::uint64_t k = it->second;
            OrderProfile profile;
            profile.period = idx - k;
            profile.preperiod = k - 1;
            profile.ord = profile.period + profile.preperiod;
            return profile;
        }
        power = mat_mul(power, m);
    }
    return CapExceeded{cap};
}

namespace {

struct BoolDigraph {
    int n = 0;
    std::vector<std::vector<int>> out;
};

BoolDigraph as_digraph(const SemiringMatrix& m) {
    if (m.table()->name != "boolean_b2")
        throw StructuralError("scc_period expects a boolean_b2 matrix");
    BoolDigraph g;
    g.n = m.n();
    g.out.resize(g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (m.at(i, j)) g.out[i].push_back(j);
    return g;
}

// iterative Tarjan
std::vector<int> scc_components(const BoolDigraph& g) {
    std::vector<int> comp(g.n, -1), low(g.n), dfn(g.n, -1), stack, on_stack(g.n, 0);
    int timer = 0, comp_count = 0;
    struct Frame {
        int v;
        std::size_t edge;
    };
    std::vector<Frame> call;
    for (int root = 0; root < g.n; ++root) {
        if (dfn[root] != -1) continue;
        call.push_back({root, 0});
        while (!call.empty()) {
            auto& [v, edge] = call.back();
            if (edge == 0) {
                dfn[v] = low[v] = timer++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            bool descended = false;
            while (edge < g.out[v].size()) {
                const int w = g.out[v][edge++];
                if (dfn[w] == -1) {
                    call.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], dfn[w]);
            }
            if (descended) continue;
            if (low[v] == dfn[v]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = comp_count;
                } while (w != v);
                ++comp_count;
            }
            const int child = v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[child]);
        }
    }
    return comp;
}

// period of one SCC: gcd over intra-component edges (u,v) of
// |level(u) + 1 - level(v)| from a BFS level labeling, min 1
std::uint64_t component_period(const BoolDigraph& g, const std::vector<int>& comp, int c, int start) {
    std::vector<std::int64_t> level(g.n, -1);
    std::vector<int> queue{start};
    level[start] = 0;
    std::int64_t gcd = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (int v : g.out[u]) {
            if (comp[v] != c) continue;
            if (level[v] == -1) {
                level[v] = level[u] + 1;
                queue.push_back(v);
            } else {
                gcd = std::gcd(gcd, std::abs(level[u] + 1 - level[v]));
            }
        }
    }
    return gcd == 0 ? 1 : static_cast<std::uint64_t>(gcd);
}

} // namespace

std::uint64_t scc_period(const SemiringMatrix& m) {
    const BoolDigraph g = as_digraph(m);
    const std::vector<int> comp = scc_components(g);
    const int comp_count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<int> start(comp_count, -1);
    for (int v = 0; v < g.n; ++v)
        if (start[comp[v]] == -1) start[comp[v]] = v;
    std::uint64_t result = 1;
    for (int c = 0; c < comp_count; ++c) {
        const std::uint64_t p = component_period(g, comp, c, start[c]);
        result = std::lcm(result, p);
    }
    return result;
}

namespace {

std::vector<int> primes_up_to(int m) {
    std::vector<char> sieve(m + 1, 1);
    std::vector<int> primes;
    for (int i = 2; i <= m; ++i) {
        if (!sieve[i]) continue;
        primes.push_back(i);
        for (long long j = static_cast<long long>(i) * i; j <= m; j += i) sieve[j] = 0;
    }
    return primes;
}

} // namespace

constexpr int kLandauMaxN = 4096;

struct LandauDp {
    std::vector<int> primes;
    // dp[i][m]: max lcm with parts drawn from the first i primes (at
    // most one power each) summing to <= m. dp.back()[m] is g(m).
    std::vector<std::vector<BigInt>> dp;
};

// Every part of an extremal partition is a prime power with prime
// <= 2.86 sqrt(n ln n). One table for the full supported range;
// g is monotone, so the wider prime bound stays exact for smaller n.
const LandauDp& landau_dp() {
    static const LandauDp table = [] {
        LandauDp t;
        const int n = kLandauMaxN;
        const int bound = static_cast<int>(2.86 * std::sqrt(n * std::log(n))) + 1;
        t.primes = primes_up_to(bound);
        const int np = static_cast<int>(t.primes.size());
        t.dp.assign(np + 1, std::vector<BigInt>(n + 1, 1));
        for (int i = 1; i <= np; ++i) {
            const int p = t.primes[i - 1];
            for (int m = 0; m <= n; ++m) {
                BigInt best = t.dp[i - 1][m];
                for (long long pe = p; pe <= m; pe *= p) {
                    BigInt cand = t.dp[i - 1][m - static_cast<int>(pe)] * static_cast<int>(pe);
                    if (cand > best) best = std::move(cand);
                }
                t.dp[i][m] = std::move(best);
            }
        }
        return t;
    }();
    return table;
}

LandauResult landau_g(int n) {
    if (n < 1 || n > kLandauMaxN) throw std::invalid_argument("landau_g: n out of [1, 4096]");
    const LandauDp& t = landau_dp();
    const int np = static_cast<int>(t.primes.size());
    LandauResult result;
    result.n = n;
    result.value = t.dp[np][n];

    // Backtrack the minimal-sum choice (skip a prime when possible,
    // then the smallest usable power); the leftover budget becomes 1s.
    // This makes the padded sorted partition lexicographically minimal
    // among equal-lcm extremal partitions.
    std::vector<int> parts;
    int m = n;
    for (int i = np; i >= 1; --i) {
        if (t.dp[i][m] == t.dp[i - 1][m]) continue;
        const int p = t.primes[i - 1];
        for (long long pe = p; pe <= m; pe *= p) {
            if (t.dp[i - 1][m - static_cast<int>(pe)] * static_cast<int>(pe) == t.dp[i][m]) {
                parts.push_back(static_cast<int>(pe));
                m -= static_cast<int>(pe);
                break;
            }
        }
    }
    const int used = std::accumulate(parts.begin(), parts.end(), 0);
    parts.insert(parts.end(), n - used, 1);
    std::sort(parts.begin(), parts.end());
    result.partition = std::move(parts);
    return result;
}

SemiringMatrix extremal_matrix(int n) {
    const LandauResult g = landau_g(n);
    SemiringMatrix m(builtin_shared("boolean_b2"), n);
    int offset = 0;
    for (int part : g.partition) {
        for (int i = 0; i < part; ++i)
            m.set(offset + i, offset + (i + 1) % part, 1);
        offset += part;
    }
    return m;
}

std::vector<int> massias_check(int n_max) {
    if (n_max > 4096) throw std::invalid_argument("massias_check: n_max out of range");
    std::vector<int> violations;
    for (int n = 3; n <= n_max; ++n) {
        const LandauResult g = landau_g(n);
        const double ln_g = std::log(g.value.convert_to<double>());
        const double ln_n = std::log(static_cast<double>(n));
        const double bound = std::sqrt(n * ln_n) * (1.0 + std::log(ln_n) / (2.0 * ln_n));
        if (ln_g > bound) violations.push_back(n);
    }
    return violations;
}

} // namespace srkex
