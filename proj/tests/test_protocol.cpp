#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "srkex/attacks.hpp"
#include "srkex/io.hpp"
#include "srkex/protocol.hpp"

using namespace srkex;

namespace {

ProtocolInstance small_instance(std::uint64_t seed, int n, int deg) {
    TablePtr s6 = builtin_shared("s6");
    SeededRng master(seed);
    RngStream rng = master.stream("test/instance");
    return ProtocolInstance{s6, n, random_matrix(s6, n, rng), random_matrix(s6, n, rng),
                            random_matrix(s6, n, rng), deg};
}

} // namespace

TEST_CASE("paper instance loads with in-range matrices") {
    const ProtocolInstance inst = paper_instance();
    CHECK(inst.table->name == "s6");
    CHECK(inst.n == 20);
    CHECK(inst.degree_bound == 49);
    for (const SemiringMatrix* m : {&inst.m1, &inst.m2, &inst.s}) {
        CHECK(m->n() == 20);
        for (int i = 0; i < 20; ++i)
            for (int j = 0; j < 20; ++j) {
                CHECK(m->at(i, j) >= 0);
                CHECK(m->at(i, j) < 6);
            }
    }
    const SemiringMatrix a = paper_token_a();
    CHECK(a.n() == 20);
    CHECK(validate_axioms(*inst.table).ok());
}

TEST_CASE("honest parties agree, small instances") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const ProtocolInstance inst = small_instance(seed, 4, 6);
        SeededRng master(seed);
        RngStream alice = master.stream("alice");
        RngStream bob = master.stream("bob");
        auto [ka, ta] = keygen(inst, alice);
        auto [kb, tb] = keygen(inst, bob);
        CHECK(derive_shared(inst, ka, tb).k == derive_shared(inst, kb, ta).k);
    }
}

TEST_CASE("honest parties agree on the paper instance") {
    const ProtocolInstance inst = paper_instance();
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        SeededRng master(seed);
        RngStream alice = master.stream("alice");
        RngStream bob = master.stream("bob");
        auto [ka, ta] = keygen(inst, alice);
        auto [kb, tb] = keygen(inst, bob);
        const SharedKey a = derive_shared(inst, ka, tb);
        const SharedKey b = derive_shared(inst, kb, ta);
        CHECK(a.k == b.k);
        CHECK(a.digest == b.digest);
        CHECK(a.k.n() == 20);
    }
}

TEST_CASE("unit keys leave the token at S, and derive is transparent for them") {
    const ProtocolInstance inst = small_instance(3, 4, 5);
    const CenterPolynomial unit = make_center_poly(*inst.table, {1});
    const PrivateKey trivial{unit, unit};
    CHECK(two_sided_apply(trivial.p, inst.m1, inst.s, trivial.q, inst.m2) == inst.s);
    SeededRng master(9);
    RngStream rng = master.stream("peer");
    auto [peer_key, peer_token] = keygen(inst, rng);
    CHECK(derive_shared(inst, trivial, peer_token).k == peer_token.a);
}

TEST_CASE("keygen guards") {
    ProtocolInstance inst = small_instance(1, 3, 4);
    inst.degree_bound = 0;
    SeededRng master(1);
    RngStream rng = master.stream("x");
    CHECK_THROWS(keygen(inst, rng));

    // a one-element semiring has a one-element center: unusable
    auto z1 = std::make_shared<const SemiringTable>(zmod(1));
    ProtocolInstance degenerate{z1, 2, SemiringMatrix(z1, 2), SemiringMatrix(z1, 2),
                                SemiringMatrix(z1, 2), 3};
    CHECK_THROWS(keygen(degenerate, rng));
}

TEST_CASE("derive rejects mismatched tokens") {
    const ProtocolInstance inst = small_instance(2, 4, 4);
    SeededRng master(2);
    RngStream rng = master.stream("x");
    auto [key, token] = keygen(inst, rng);
    const PublicToken bad{SemiringMatrix(inst.table, 3)};
    CHECK_THROWS(derive_shared(inst, key, bad));
}

TEST_CASE("boolean n=2 exhaustive degree-1 keys all agree") {
    TablePtr b2 = builtin_shared("boolean_b2");
    SeededRng master(8);
    RngStream rng = master.stream("x");
    const ProtocolInstance inst{b2, 2, random_matrix(b2, 2, rng), random_matrix(b2, 2, rng),
                                random_matrix(b2, 2, rng), 1};
    std::vector<PrivateKey> keys;
    for (int p0 = 0; p0 < 2; ++p0)
        for (int p1 = 0; p1 < 2; ++p1)
            for (int q0 = 0; q0 < 2; ++q0)
                for (int q1 = 0; q1 < 2; ++q1) {
                    if (!p0 && !p1) continue;
                    if (!q0 && !q1) continue;
                    keys.push_back(PrivateKey{
                        make_center_poly(*b2, {static_cast<std::uint8_t>(p0),
                                               static_cast<std::uint8_t>(p1)}),
                        make_center_poly(*b2, {static_cast<std::uint8_t>(q0),
                                               static_cast<std::uint8_t>(q1)})});
                }
    for (const PrivateKey& ka : keys)
        for (const PrivateKey& kb : keys) {
            const PublicToken ta{two_sided_apply(ka.p, inst.m1, inst.s, ka.q, inst.m2)};
            const PublicToken tb{two_sided_apply(kb.p, inst.m1, inst.s, kb.q, inst.m2)};
            CHECK(derive_shared(inst, ka, tb).k == derive_shared(inst, kb, ta).k);
        }
}

TEST_CASE("generic exchange over modular exponentiation") {
    const auto action = make_modexp_action(101, 2);
    const DhReport r = generic_dh(*action, {2}, {7}, {11});
    CHECK(r.agree);
    CHECK(r.alice_side == ActionElem{61}); // 2^77 mod 101
    CHECK(r.bob_side == ActionElem{61});

    // exponent 1 leaves the peer token unchanged
    const ActionElem bs = action->act({11}, {2});
    const DhReport r2 = generic_dh(*action, {2}, {1}, {11});
    CHECK(r2.agree);
    CHECK(r2.alice_side == bs);
}

TEST_CASE("generic exchange over the two-sided action") {
    TablePtr s6 = builtin_shared("s6");
    SeededRng master(5);
    RngStream rng = master.stream("x");
    const TwoSidedAction action(random_matrix(s6, 4, rng), random_matrix(s6, 4, rng), 5);
    for (int trial = 0; trial < 10; ++trial) {
        const ActionElem s = action.encode_s(random_matrix(s6, 4, rng));
        const DhReport r = generic_dh(action, s, action.sample_g(rng), action.sample_g(rng));
        CHECK(r.agree);
    }
}

TEST_CASE("generic_dh refuses non-commutative actions") {
    class NonCommutative final : public SemigroupAction {
    public:
        bool commutative() const override { return false; }
        ActionElem compose(const ActionElem&, const ActionElem&) const override { return {}; }
        ActionElem act(const ActionElem&, const ActionElem& s) const override { return s; }
        ActionElem identity_elem() const override { return {}; }
        ActionElem sample_g(RngStream&) const override { return {}; }
    } bad;
    CHECK_THROWS(generic_dh(bad, {1}, {2}, {3}));
}

TEST_CASE("transcripts are deterministic and end with the verdict") {
    const ProtocolInstance inst = small_instance(4, 4, 6);
    const std::string a = session_transcript(inst, 12345);
    const std::string b = session_transcript(inst, 12345);
    CHECK(a == b);
    CHECK(a.find("agreement=true\n") != std::string::npos);
    CHECK(a.ends_with("agreement=true\n"));
    const std::string c = session_transcript(inst, 54321);
    CHECK(c != a);
    CHECK(c.ends_with("agreement=true\n"));
}

TEST_CASE("token and key sizes never change") {
    const ProtocolInstance inst = paper_instance();
    SeededRng master(77);
    RngStream rng = master.stream("x");
    auto [ka, ta] = keygen(inst, rng);
    auto [kb, tb] = keygen(inst, rng);
    CHECK(ta.a.n() == inst.n);
    CHECK(tb.a.n() == inst.n);
    CHECK(derive_shared(inst, ka, tb).k.n() == inst.n);
}
