#include "srkex/semiring.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

namespace srkex {

namespace {

void check_shape(const SemiringTable& t) {
    const int k = t.order;
    if (k <= 0)
        throw StructuralError("semiring order must be positive");
    const std::size_t want = static_cast<std::size_t>(k) * k;
    if (t.add.size() != want || t.mul.size() != want)
        throw StructuralError("operation table has wrong dimensions for order " + std::to_string(k));
    for (std::uint8_t v : t.add)
        if (v >= k) throw StructuralError("add table entry out of range");
    for (std::uint8_t v : t.mul)
        if (v >= k) throw StructuralError("mul table entry out of range");
    if (t.zero && (*t.zero < 0 || *t.zero >= k))
        throw StructuralError("zero index out of range");
    if (t.one && (*t.one < 0 || *t.one >= k))
        throw StructuralError("one index out of range");
}

} // namespace

AxiomReport validate_axioms(const SemiringTable& t) {
    check_shape(t);
    AxiomReport report;
    const int k = t.order;
    auto fail = [&](const char* law, int a, int b, int c) {
        report.violations.push_back({law, {a, b, c}});
    };
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (t.add_at(a, b) != t.add_at(b, a)) fail("add-commutativity", a, b, -1);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c) {
                if (t.add_at(t.add_at(a, b), c) != t.add_at(a, t.add_at(b, c)))
                    fail("add-associativity", a, b, c);
                if (t.mul_at(t.mul_at(a, b), c) != t.mul_at(a, t.mul_at(b, c)))
                    fail("mul-associativity", a, b, c);
                if (t.mul_at(a, t.add_at(b, c)) != t.add_at(t.mul_at(a, b), t.mul_at(a, c)))
                    fail("left-distributivity", a, b, c);
                if (t.mul_at(t.add_at(a, b), c) != t.add_at(t.mul_at(a, c), t.mul_at(b, c)))
                    fail("right-distributivity", a, b, c);
            }
    if (t.zero) {
        const int z = *t.zero;
        for (int a = 0; a < k; ++a) {
            if (t.add_at(a, z) != a || t.add_at(z, a) != a) fail("zero-additive-identity", a, z, -1);
            if (t.mul_at(a, z) != z || t.mul_at(z, a) != z) fail("zero-absorbing", a, z, -1);
        }
    }
    if (t.one) {
        const int o = *t.one;
        for (int a = 0; a < k; ++a)
            if (t.mul_at(a, o) != a || t.mul_at(o, a) != a) fail("one-multiplicative-identity", a, o, -1);
    }
    return report;
}

std::vector<int> center(const SemiringTable& t) {
    std::vector<int> result;
    for (int c = 0; c < t.order; ++c) {
        bool commutes = true;
        for (int a = 0; a < t.order && commutes; ++a)
            commutes = t.mul_at(c, a) == t.mul_at(a, c);
        if (commutes) result.push_back(c);
    }
    return result;
}

int CongruencePartition::class_count() const {
    int count = 0;
    for (std::size_t e = 0; e < representative.size(); ++e)
        if (representative[e] == static_cast<int>(e)) ++count;
    return count;
}

std::vector<std::vector<int>> CongruencePartition::classes() const {
    std::map<int, std::vector<int>> by_rep;
    for (std::size_t e = 0; e < representative.size(); ++e)
        by_rep[representative[e]].push_back(static_cast<int>(e));
    std::vector<std::vector<int>> result;
    result.reserve(by_rep.size());
    for (auto& [rep, members] : by_rep) result.push_back(std::move(members));
    return result;
}

CongruencePartition generated_congruence(const SemiringTable& t,
                                         std::span<const std::pair<int, int>> seed_pairs) {
    check_shape(t);
    const int k = t.order;
    for (auto [a, b] : seed_pairs)
        if (a < 0 || a >= k || b < 0 || b >= k)
            throw StructuralError("seed pair element out of range");

    std::vector<int> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    bool changed = false;
    auto unite = [&](int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[std::max(ra, rb)] = std::min(ra, rb);
            changed = true;
        }
    };
    for (auto [a, b] : seed_pairs) unite(a, b);

    // Fixpoint: enforce compatibility between each element and its
    // current representative until no class merges occur. Each pass is
    // O(k^2); at most k merges, so O(k^3) with union-find overhead.
    do {
        changed = false;
        for (int x = 0; x < k; ++x) {
            const int r = find(x);
            if (r == x) continue;
            for (int c = 0; c < k; ++c) {
                unite(t.add_at(x, c), t.add_at(r, c));
                unite(t.add_at(c, x), t.add_at(c, r));
                unite(t.mul_at(x, c), t.mul_at(r, c));
                unite(t.mul_at(c, x), t.mul_at(c, r));
            }
        }
    } while (changed);

    CongruencePartition part;
    part.representative.resize(k);
    for (int x = 0; x < k; ++x) part.representative[x] = find(x);
    return part;
}

bool is_simple(const SemiringTable& t) {
    if (t.order < 2) throw StructuralError("simplicity needs order >= 2");
    for (int a = 0; a < t.order; ++a)
        for (int b = a + 1; b < t.order; ++b) {
            const std::pair<int, int> seed[] = {{a, b}};
            if (!generated_congruence(t, seed).full()) return false;
        }
    return true;
}

SemiringTable zmod(int n) {
    if (n < 1) throw StructuralError("zmod needs n >= 1");
    SemiringTable t;
    t.name = "zmod" + std::to_string(n);
    t.order = n;
    t.add.resize(static_cast<std::size_t>(n) * n);
    t.mul.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            t.add[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint8_t>((a + b) % n);
            t.mul[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint8_t>((a * b) % n);
        }
    t.zero = 0;
    if (n > 1) t.one = 1;
    return t;
}

namespace {

// S_{6,1}: the unique simple semiring of order 6 (up to isomorphism).
constexpr std::uint8_t kS6Add[36] = {
    0, 1, 2, 3, 4, 5,
    1, 1, 1, 1, 1, 5,
    2, 1, 2, 1, 2, 5,
    3, 1, 1, 3, 3, 5,
    4, 1, 2, 3, 4, 5,
    5, 5, 5, 5, 5, 5,
};
constexpr std::uint8_t kS6Mul[36] = {
    0, 0, 0, 0, 0, 0,
    0, 1, 2, 3, 4, 5,
    0, 2, 2, 0, 0, 5,
    0, 3, 4, 3, 4, 3,
    0, 4, 4, 0, 0, 3,
    0, 5, 2, 5, 2, 5,
};

// Order-20 simple semiring; symbols 0,a,b,...,r,1 encoded as indices
// 0..19 in table order (zero = 0, one = 19).
constexpr std::uint8_t kS20Add[400] = {
    0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,
    1,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,
    2,2,2,3,5,5,6,7,8,9,11,11,12,13,14,15,16,17,18,19,
    3,3,3,3,6,6,6,8,8,9,12,12,12,19,14,16,16,17,18,19,
    4,4,5,6,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,
    5,5,5,6,5,5,6,7,8,9,11,11,12,13,14,15,16,17,18,19,
    6,6,6,6,6,6,6,8,8,9,12,12,12,19,14,16,16,17,18,19,
    7,7,7,8,7,7,8,7,8,9,13,13,19,13,14,15,16,17,18,19,
    8,8,8,8,8,8,8,8,8,9,19,19,19,19,14,16,16,17,18,19,
    9,9,9,9,9,9,9,9,9,9,14,14,14,14,14,17,17,17,18,14,
    10,10,11,12,10,11,12,13,19,14,10,11,12,13,14,15,16,17,18,19,
    11,11,11,12,11,11,12,13,19,14,11,11,12,13,14,15,16,17,18,19,
    12,12,12,12,12,12,12,19,19,14,12,12,12,19,14,16,16,17,18,19,
    13,13,13,19,13,13,19,13,19,14,13,13,19,13,14,15,16,17,18,19,
    14,14,14,14,14,14,14,14,14,14,14,14,14,14,14,17,17,17,18,14,
    15,15,15,16,15,15,16,15,16,17,15,15,16,15,17,15,16,17,18,16,
    16,16,16,16,16,16,16,16,16,17,16,16,16,16,17,16,16,17,18,16,
    17,17,17,17,17,17,17,17,17,17,17,17,17,17,17,17,17,17,18,17,
    18,18,18,18,18,18,18,18,18,18,18,18,18,18,18,18,18,18,18,18,
    19,19,19,19,19,19,19,19,19,14,19,19,19,19,14,16,16,17,18,19,
};
constexpr std::uint8_t kS20Mul[400] = {
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,1,1,1,1,1,2,2,2,3,1,
    0,0,0,0,1,1,1,2,2,3,1,1,1,2,3,2,2,3,3,2,
    0,1,2,3,1,2,3,2,3,3,1,2,3,2,3,2,3,3,3,3,
    0,0,0,0,0,0,0,0,0,0,4,4,4,4,4,7,7,7,9,4,
    0,0,0,0,1,1,1,2,2,3,4,4,4,5,6,7,7,8,9,5,
    0,1,2,3,1,2,3,2,3,3,4,5,6,5,6,7,8,8,9,6,
    0,0,0,0,4,4,4,7,7,9,4,4,4,7,9,7,7,9,9,7,
    0,1,2,3,4,5,6,7,8,9,4,5,6,7,9,7,8,9,9,8,
    0,4,7,9,4,7,9,7,9,9,4,7,9,7,9,7,9,9,9,9,
    0,0,0,0,0,0,0,0,0,0,10,10,10,10,10,15,15,15,18,10,
    0,0,0,0,1,1,1,2,2,3,10,10,10,11,12,15,15,16,18,11,
    0,1,2,3,1,2,3,2,3,3,10,11,12,11,12,15,16,16,18,12,
    0,0,0,0,4,4,4,7,7,9,10,10,10,13,14,15,15,17,18,13,
    0,4,7,9,4,7,9,7,9,9,10,13,14,13,14,15,17,17,18,14,
    0,0,0,0,10,10,10,15,15,18,10,10,10,15,18,15,15,18,18,15,
    0,1,2,3,10,11,12,15,16,18,10,11,12,15,18,15,16,18,18,16,
    0,4,7,9,10,13,14,15,17,18,10,13,14,15,18,15,17,18,18,17,
    0,10,15,18,10,15,18,15,18,18,10,15,18,15,18,15,18,18,18,18,
    0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,
};

} // namespace

SemiringTable builtin(const std::string& name) {
    if (name == "boolean_b2") {
        SemiringTable t;
        t.name = name;
        t.order = 2;
        t.add = {0, 1, 1, 1}; // max
        t.mul = {0, 0, 0, 1}; // min
        t.zero = 0;
        t.one = 1;
        return t;
    }
    if (name == "s6") {
        SemiringTable t;
        t.name = name;
        t.order = 6;
        t.add.assign(kS6Add, kS6Add + 36);
        t.mul.assign(kS6Mul, kS6Mul + 36);
        t.zero = 0;
        t.one = 1;
        return t;
    }
    if (name == "s20") {
        SemiringTable t;
        t.name = name;
        t.order = 20;
        t.add.assign(kS20Add, kS20Add + 400);
        t.mul.assign(kS20Mul, kS20Mul + 400);
        t.zero = 0;
        t.one = 19;
        return t;
    }
    if (name.starts_with("zmod")) {
        int n = 0;
        const char* first = name.data() + 4;
        const char* last = name.data() + name.size();
        auto [ptr, ec] = std::from_chars(first, last, n);
        if (ec == std::errc{} && ptr == last) return zmod(n);
    }
    throw StructuralError("unknown builtin semiring: " + name);
}

TablePtr builtin_shared(const std::string& name) {
    return std::make_shared<const SemiringTable>(builtin(name));
}

} // namespace srkex
