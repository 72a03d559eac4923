#include "srkex/protocol.hpp"

#include <sstream>
#include <stdexcept>

#include "srkex/io.hpp"

namespace srkex {

namespace {

CenterPolynomial draw_key_poly(const SemiringTable& t, const std::vector<int>& cent,
                               int degree_bound, RngStream& rng) {
    while (true) {
        const int deg = 1 + static_cast<int>(rng.below(degree_bound));
        std::vector<std::uint8_t> coeffs(deg + 1);
        bool any_nonzero = false;
        for (auto& c : coeffs) {
            c = static_cast<std::uint8_t>(cent[rng.below(cent.size())]);
            if (!t.zero || c != *t.zero) any_nonzero = true;
        }
        if (any_nonzero) return CenterPolynomial{std::move(coeffs)};
    }
}

} // namespace

std::pair<PrivateKey, PublicToken> keygen(const ProtocolInstance& inst, RngStream& rng) {
    if (inst.degree_bound < 1)
        throw std::invalid_argument("degree bound must be >= 1");
    const std::vector<int> cent = center(*inst.table);
    if (cent.size() < 2)
        throw std::invalid_argument("instance unusable: center has fewer than 2 elements");
    PrivateKey key;
    key.p = draw_key_poly(*inst.table, cent, inst.degree_bound, rng);
    key.q = draw_key_poly(*inst.table, cent, inst.degree_bound, rng);
    PublicToken token{two_sided_apply(key.p, inst.m1, inst.s, key.q, inst.m2)};
    return {std::move(key), std::move(token)};
}

SharedKey derive_shared(const ProtocolInstance& inst, const PrivateKey& own,
                        const PublicToken& peer) {
    if (peer.a.n() != inst.n)
        throw StructuralError("peer token dimension mismatch");
    SemiringMatrix k = two_sided_apply(own.p, inst.m1, peer.a, own.q, inst.m2);
    SharedKey result{std::move(k), {}};
    result.digest = sha256(result.k.bytes());
    return result;
}

DhReport generic_dh(const SemigroupAction& action, const ActionElem& s,
                    const ActionElem& a, const ActionElem& b) {
    if (!action.commutative())
        throw std::invalid_argument("generic_dh requires a commutative action");
    const ActionElem as = action.act(a, s);
    const ActionElem bs = action.act(b, s);
    DhReport report;
    report.alice_side = action.act(a, bs);
    report.bob_side = action.act(b, as);
    report.agree = report.alice_side == report.bob_side;
    return report;
}

namespace {

// 20x20 fixtures over S_{6,1}, transcribed verbatim; entries are
// element indices 0..5, row-major, one row per literal line.
constexpr char kPaperM1[] =
    "10000000000000000000"
    "00100000000100000000"
    "00010000000000000000"
    "00001000000000000000"
    "01000000000000000000"
    "00000010000000000000"
    "00000002000000000010"
    "00000100000000000000"
    "00000000010000000000"
    "00000000001000000000"
    "00000000000200000000"
    "00000000000010000000"
    "00000000100000000000"
    "00000000000000100000"
    "00000000000000010000"
    "00000000000000001000"
    "00010000000000000100"
    "00000000000000000010"
    "00000000000000000001"
    "00000000000001000000";
constexpr char kPaperM2[] =
    "00000000000000000010"
    "00000000000100000000"
    "00000010000000000000"
    "00100000001000000000"
    "00000000000000000004"
    "00000000000000010000"
    "02000000000000000000"
    "00000000000000000100"
    "00010000100000000000"
    "00000000000310000000"
    "00000000000000200000"
    "00010000000000000100"
    "00000000001000000000"
    "00000100000000000000"
    "00000000010000000000"
    "00000001000000000000"
    "10000000000000000000"
    "00001000000000000000"
    "00000020000000001000"
    "00000000000001000000";
constexpr char kPaperS[] =
    "01000000000000000000"
    "00100000000100000000"
    "10000000000000000000"
    "00010100000000000000"
    "00000001000000001000"
    "00000010000000000000"
    "00000100000000000000"
    "01000001000000010000"
    "00000000010000010200"
    "00000000001000000000"
    "00000000000100000000"
    "00000000100000000000"
    "00010000000010000000"
    "00000000000051000000"
    "00100000000000100001"
    "00010000000000010000"
    "00000000020000000001"
    "00200000000010000010"
    "00001000000000000100"
    "00010000000000001000";
constexpr char kPaperA[] =
    "01222024022224240200"
    "12112111111114211214"
    "12112111111114211214"
    "12112111111114211214"
    "12112111111114211214"
    "12211121022251211111"
    "12111112022151121111"
    "12111112022214111111"
    "02222424221120200200"
    "02222424222120220200"
    "02222020222220220200"
    "02212424011114210200"
    "02222424211124210200"
    "12111111111151111111"
    "12111111121151111111"
    "12111111111114111111"
    "12111111111151211111"
    "12111114022151141111"
    "12111111121251111111"
    "12111111022151111111";

SemiringMatrix digits_to_matrix(TablePtr table, const char* digits) {
    std::vector<std::uint8_t> e(400);
    for (int i = 0; i < 400; ++i) e[i] = static_cast<std::uint8_t>(digits[i] - '0');
    return SemiringMatrix(std::move(table), 20, std::move(e));
}

} // namespace

ProtocolInstance paper_instance() {
    TablePtr s6 = builtin_shared("s6");
    return ProtocolInstance{
        s6, 20,
        digits_to_matrix(s6, kPaperM1),
        digits_to_matrix(s6, kPaperM2),
        digits_to_matrix(s6, kPaperS),
        49,
    };
}

SemiringMatrix paper_token_a() {
    return digits_to_matrix(builtin_shared("s6"), kPaperA);
}

std::string session_transcript(const ProtocolInstance& inst, std::uint64_t seed) {
    SeededRng master(seed);
    RngStream alice = master.stream("protocol/alice");
    RngStream bob = master.stream("protocol/bob");
    auto [ka, ta] = keygen(inst, alice);
    auto [kb, tb] = keygen(inst, bob);
    const SharedKey alice_key = derive_shared(inst, ka, tb);
    const SharedKey bob_key = derive_shared(inst, kb, ta);

    std::ostringstream out;
    out << "session\n";
    out << "semiring " << inst.table->name << "\n";
    out << "n " << inst.n << "\n";
    out << "degree_bound " << inst.degree_bound << "\n";
    out << "seed " << seed << "\n";
    out << "token_alice\n" << serialize_matrix(ta.a);
    out << "token_bob\n" << serialize_matrix(tb.a);
    out << "shared_digest " << hex(alice_key.digest) << "\n";
    out << "agreement=" << (alice_key.k == bob_key.k ? "true" : "false") << "\n";
    return out.str();
}

} // namespace srkex
