#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "srkex/action.hpp"
#include "srkex/matrix.hpp"
#include "srkex/rng.hpp"

namespace srkex {

struct ProtocolInstance {
    TablePtr table;
    int n = 0;
    SemiringMatrix m1, m2, s;
    int degree_bound = 49;
};

struct PrivateKey {
    CenterPolynomial p, q;
};

struct PublicToken {
    SemiringMatrix a;
};

struct SharedKey {
    SemiringMatrix k;
    std::array<std::uint8_t, 32> digest; // sha256 of k's canonical bytes
};

// p, q drawn with uniform center coefficients, degree uniform in
// [1, degree_bound], all-zero draws resampled. Deterministic per rng.
std::pair<PrivateKey, PublicToken> keygen(const ProtocolInstance& inst, RngStream& rng);

SharedKey derive_shared(const ProtocolInstance& inst, const PrivateKey& own,
                        const PublicToken& peer);

struct DhReport {
    ActionElem alice_side, bob_side; // act(a, bs) and act(b, as)
    bool agree = false;
};

// Generic two-pass exchange over any commutative action, with an
// agreement check. Refuses non-commutative actions.
DhReport generic_dh(const SemigroupAction& action, const ActionElem& s,
                    const ActionElem& a, const ActionElem& b);

// s6 semiring, n = 20, the fixed M1/M2/S fixtures, degree bound 49
ProtocolInstance paper_instance();

// the A token published alongside the fixtures (preimage undisclosed)
SemiringMatrix paper_token_a();

// Line-oriented session transcript: instance header, both tokens, the
// shared-key digest, and the agreement verdict.
std::string session_transcript(const ProtocolInstance& inst, std::uint64_t seed);

} // namespace srkex
