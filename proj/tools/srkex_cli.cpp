// srkex: command-line front end for the semiring key-exchange toolkit.
//
// Every randomized code path is driven by --seed (default 1729), so a
// fixed invocation always produces byte-identical output.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "srkex/attacks.hpp"
#include "srkex/io.hpp"
#include "srkex/order.hpp"
#include "srkex/protocol.hpp"
#include "srkex/semiring.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 1729;

struct Options {
    std::uint64_t seed = kDefaultSeed;
    std::string format = "kv"; // kv | human
    int workers = 1;
    std::string builtin_name;
    std::string semiring_file;
    std::string matrix_file;
    bool paper = false;
    int n = 3;
    int deg = 3;
    std::uint64_t budget = 1'000'000;
    std::uint64_t cap = 10'000;
    std::uint64_t samples = 100'000;
    int landau_n = 0;
    std::uint64_t p = 101;
    std::uint64_t gen = 2;
    std::uint64_t group_order = 0;
    std::uint64_t exponent = 0;
    int trials = 20;
};

bool human(const Options& o) { return o.format == "human"; }

srkex::SemiringTable load_semiring(const Options& o) {
    if (!o.semiring_file.empty()) return srkex::parse_semiring_file(o.semiring_file);
    if (!o.builtin_name.empty()) return srkex::builtin(o.builtin_name);
    throw srkex::StructuralError("need --builtin or --semiring-file");
}

// The matrix format names its semiring; when no table source is given
// explicitly, fall back to the builtin of that name.
srkex::SemiringMatrix load_matrix(const Options& o) {
    if (o.matrix_file.empty()) throw srkex::StructuralError("need --matrix-file");
    srkex::TablePtr table;
    if (!o.semiring_file.empty() || !o.builtin_name.empty()) {
        table = std::make_shared<const srkex::SemiringTable>(load_semiring(o));
    } else {
        std::ifstream in(o.matrix_file);
        std::string line, word, name;
        while (std::getline(in, line)) {
            std::istringstream ss(line);
            if (ss >> word >> name && word == "semiring") break;
        }
        if (word != "semiring") throw srkex::StructuralError("matrix file names no semiring");
        table = srkex::builtin_shared(name);
    }
    return srkex::parse_matrix_file(o.matrix_file, std::move(table));
}

// small demo instance over any builtin semiring with zero/one
srkex::ProtocolInstance demo_instance(const Options& o) {
    if (o.paper) return srkex::paper_instance();
    auto table = std::make_shared<const srkex::SemiringTable>(load_semiring(o));
    srkex::SeededRng master(o.seed);
    srkex::RngStream rng = master.stream("cli/instance");
    return srkex::ProtocolInstance{
        table, o.n,
        srkex::random_matrix(table, o.n, rng),
        srkex::random_matrix(table, o.n, rng),
        srkex::random_matrix(table, o.n, rng),
        o.deg,
    };
}

int cmd_semiring_validate(const Options& o) {
    const srkex::SemiringTable t = load_semiring(o);
    const srkex::AxiomReport report = srkex::validate_axioms(t);
    if (human(o)) {
        std::cout << "semiring " << t.name << " (order " << t.order << ")\n";
        if (report.ok()) {
            std::cout << "all axioms hold\n";
        } else {
            for (const auto& v : report.violations)
                std::cout << "violated: " << v.law << " at (" << v.witness[0] << ", "
                          << v.witness[1] << ", " << v.witness[2] << ")\n";
        }
    } else {
        std::cout << "valid=" << (report.ok() ? "true" : "false")
                  << " violations=" << report.violations.size();
        if (!report.ok()) std::cout << " first=" << report.violations.front().law;
        std::cout << "\n";
    }
    return 0;
}

int cmd_semiring_simple(const Options& o) {
    const srkex::SemiringTable t = load_semiring(o);
    const bool simple = srkex::is_simple(t);
    if (human(o))
        std::cout << "semiring " << t.name << " is " << (simple ? "simple" : "not simple") << "\n";
    else
        std::cout << "simple=" << (simple ? "true" : "false") << "\n";
    return 0;
}

std::string partition_string(const std::vector<int>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += '+';
        out += std::to_string(parts[i]);
    }
    return out;
}

int cmd_landau(const Options& o) {
    const srkex::LandauResult r = srkex::landau_g(o.landau_n);
    if (human(o)) {
        std::cout << "g(" << r.n << ") = " << r.value << "\n";
        std::cout << "partition: " << partition_string(r.partition) << "\n";
    } else {
        std::cout << "g=" << r.value << " partition=" << partition_string(r.partition) << "\n";
    }
    return 0;
}

int cmd_order(const Options& o) {
    const srkex::SemiringMatrix m = load_matrix(o);
    const srkex::OrderResult r = srkex::order_profile_bruteforce(m, o.cap);
    if (const auto* profile = std::get_if<srkex::OrderProfile>(&r)) {
        if (human(o))
            std::cout << "ord = " << profile->ord << " (period " << profile->period
                      << ", preperiod " << profile->preperiod << ")\n";
        else
            std::cout << "preperiod=" << profile->preperiod << " period=" << profile->period
                      << " ord=" << profile->ord << "\n";
    } else {
        if (human(o))
            std::cout << "ord > " << o.cap << " (no repeat within cap)\n";
        else
            std::cout << "ord_gt=" << o.cap << "\n";
    }
    return 0;
}

int cmd_keyexchange_demo(const Options& o) {
    const srkex::ProtocolInstance inst = demo_instance(o);
    const std::string transcript = srkex::session_transcript(inst, o.seed);
    if (human(o)) {
        std::cout << transcript;
    } else {
        // last lines carry the digest and verdict
        std::istringstream in(transcript);
        std::string line, digest, verdict;
        while (std::getline(in, line)) {
            if (line.rfind("shared_digest ", 0) == 0) digest = line.substr(14);
            if (line.rfind("agreement=", 0) == 0) verdict = line;
        }
        std::cout << verdict << " digest=" << digest << " seed=" << o.seed << "\n";
    }
    return 0;
}

int cmd_keyexchange_bench(const Options& o) {
    using clock = std::chrono::steady_clock;
    srkex::SeededRng master(o.seed);
    if (human(o)) std::cout << "op        n  deg  theta  ms       semiring_ops\n";
    for (int n : {5, 10, 20}) {
        for (int deg : {9, 49}) {
            Options local = o;
            local.builtin_name = "s6";
            local.n = n;
            local.deg = deg;
            local.paper = false;
            const srkex::ProtocolInstance inst = demo_instance(local);
            srkex::RngStream rng = master.stream("cli/bench");

            const auto t0 = clock::now();
            auto [key, token] = srkex::keygen(inst, rng);
            const auto t1 = clock::now();
            auto [key2, token2] = srkex::keygen(inst, rng);
            const srkex::SharedKey shared = srkex::derive_shared(inst, key, token2);
            const auto t2 = clock::now();
            (void)shared;

            const double keygen_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            const double derive_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
            // analytic shape: Horner costs ~2 deg n^3 semiring ops per
            // polynomial, two polynomials per operation
            const long long ops = 4LL * deg * n * n * n;
            auto line = [&](const char* op, double ms) {
                if (human(o))
                    std::cout << op << (std::string(10 - std::string(op).size(), ' '))
                              << n << "  " << deg << "  " << inst.table->order << "  " << ms
                              << "  " << ops << "\n";
                else
                    std::cout << "bench op=" << op << " n=" << n << " deg=" << deg
                              << " theta=" << inst.table->order << " ms=" << ms
                              << " semiring_ops=" << ops << "\n";
            };
            line("keygen", keygen_ms);
            line("derive", derive_ms);
        }
    }
    return 0;
}

int cmd_attack_brute(const Options& o) {
    const srkex::ProtocolInstance inst = demo_instance(o);
    srkex::TwoSidedAction action(inst.m1, inst.m2, inst.degree_bound);
    srkex::SeededRng master(o.seed);
    srkex::RngStream rng = master.stream("cli/attack-brute");
    const srkex::ActionElem hidden = action.sample_g(rng);
    const srkex::ActionElem x = action.encode_s(inst.s);
    const srkex::ActionElem y = action.act(hidden, x);
    srkex::SapInstance sap{&action, x, y};
    auto enumerator = srkex::two_sided_enumerator(action, inst.degree_bound);
    const srkex::BruteForceResult r = srkex::brute_force_sap(sap, *enumerator, o.budget);
    if (const auto* witness = std::get_if<srkex::ActionElem>(&r)) {
        const bool verified = action.act(*witness, x) == y;
        if (human(o))
            std::cout << "witness found, verified=" << (verified ? "true" : "false") << "\n";
        else
            std::cout << "found=true verified=" << (verified ? "true" : "false") << "\n";
    } else {
        const auto tried = std::get<srkex::Exhausted>(r).tried;
        if (human(o))
            std::cout << "exhausted after " << tried << " candidates\n";
        else
            std::cout << "found=false tried=" << tried << "\n";
    }
    return 0;
}

int cmd_attack_linear(const Options& o) {
    srkex::SeededRng master(o.seed);
    srkex::RngStream rng = master.stream("cli/attack-linear");
    int successes = 0;
    long long total_rounds = 0;
    for (int trial = 0; trial < o.trials; ++trial) {
        const int n = o.n;
        std::vector<std::uint64_t> m(static_cast<std::size_t>(n) * n);
        for (auto& e : m) e = rng.below(o.p);
        const srkex::LinearizedAction lin = srkex::fm_linearization(o.p, n, m);
        std::vector<std::uint64_t> u(n);
        for (auto& e : u) e = rng.below(o.p);
        // ground truth: two secret oracle elements acting on u
        const auto mg = lin.sample(rng);
        const auto mh = lin.sample(rng);
        auto apply = [&](const std::vector<std::uint64_t>& mat, const std::vector<std::uint64_t>& vec) {
            std::vector<std::uint64_t> out(n, 0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    out[i] = (out[i] + static_cast<unsigned __int128>(mat[static_cast<std::size_t>(i) * n + j]) * vec[j] % o.p) % o.p;
            return out;
        };
        const auto v = apply(mg, u);
        const auto w = apply(mh, u);
        const auto truth = apply(mg, w);
        const srkex::LinearAttackResult r = srkex::linear_algebra_attack(lin, u, v, w, rng);
        if (r.sigma && *r.sigma == truth) ++successes;
        total_rounds += r.rounds;
    }
    const double mean_rounds = o.trials ? static_cast<double>(total_rounds) / o.trials : 0.0;
    if (human(o))
        std::cout << successes << "/" << o.trials << " recoveries, mean rounds " << mean_rounds
                  << "\n";
    else
        std::cout << "trials=" << o.trials << " successes=" << successes
                  << " mean_rounds=" << mean_rounds << "\n";
    return 0;
}

int cmd_attack_cyclic(const Options& o) {
    const std::uint64_t order = o.group_order ? o.group_order : o.p - 1;
    auto action = srkex::make_modmul_group_action(o.p, o.gen, order);
    srkex::SeededRng master(o.seed);
    srkex::RngStream rng = master.stream("cli/attack-cyclic");
    const std::uint64_t hidden = o.exponent ? o.exponent : 1 + rng.below(order);
    const srkex::ActionElem g{o.gen};
    const srkex::ActionElem x{1};
    const srkex::ActionElem y{srkex::powmod(o.gen, hidden, o.p)};
    const srkex::CyclicAttackResult r = srkex::cyclic_attack(*action, g, x, y, o.cap);
    if (human(o)) {
        if (r.exponent)
            std::cout << "exponent " << *r.exponent << " (hidden " << hidden << "), period "
                      << r.period << ", " << r.applications << " applications\n";
        else
            std::cout << "not found within cap\n";
    } else {
        std::cout << "found=" << (r.exponent ? "true" : "false");
        if (r.exponent) std::cout << " exponent=" << *r.exponent;
        std::cout << " period=" << r.period << " preperiod=" << r.preperiod
                  << " applications=" << r.applications << "\n";
    }
    return 0;
}

int cmd_attack_bsgs(const Options& o) {
    const std::uint64_t order = o.group_order ? o.group_order : o.p - 1;
    auto action = srkex::make_modmul_group_action(o.p, o.gen, order);
    srkex::SeededRng master(o.seed);
    srkex::RngStream rng = master.stream("cli/attack-bsgs");
    const std::uint64_t hidden = o.exponent ? o.exponent : 1 + rng.below(order);
    const srkex::ActionElem x{1};
    const srkex::ActionElem y{srkex::powmod(o.gen, hidden, o.p)};
    const srkex::BsgsResult r = srkex::randomized_bsgs(*action, x, y, order, rng);
    const bool found = r.witness.has_value();
    const bool verified = found && action->act(*r.witness, x) == y;
    if (human(o))
        std::cout << (found ? "witness found" : "timed out") << ", verified="
                  << (verified ? "true" : "false") << ", " << r.applications << " applications\n";
    else
        std::cout << "found=" << (found ? "true" : "false")
                  << " verified=" << (verified ? "true" : "false")
                  << " applications=" << r.applications << "\n";
    return 0;
}

int cmd_orbit_estimate(const Options& o) {
    Options local = o;
    if (!local.paper && local.builtin_name.empty() && local.semiring_file.empty())
        local.paper = true;
    const srkex::ProtocolInstance inst = demo_instance(local);
    const int deg = local.paper ? (o.deg == 3 ? 49 : o.deg) : o.deg;
    const srkex::OrbitEstimate est =
        srkex::orbit_estimate(inst, o.samples, deg, o.seed, o.workers);
    if (human(o)) {
        std::cout << est.distinct_count << " distinct tokens in " << est.samples_drawn
                  << " samples (" << est.collision_count << " collisions)\n";
        std::cout << "orbit size lower bound: 2^" << est.lower_bound_log2 << "\n";
        if (est.point_estimate_log2)
            std::cout << "birthday point estimate: 2^" << *est.point_estimate_log2 << "\n";
    } else {
        std::cout << "samples=" << est.samples_drawn << " distinct=" << est.distinct_count
                  << " collisions=" << est.collision_count
                  << " lower_bound_log2=" << est.lower_bound_log2;
        if (est.point_estimate_log2)
            std::cout << " point_estimate_log2=" << *est.point_estimate_log2;
        std::cout << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"semiring key-exchange toolkit"};
    app.require_subcommand(1);
    app.add_option("--seed", o.seed, "deterministic seed (default 1729)");
    app.add_option("--format", o.format, "output format: kv (default) or human")
        ->check(CLI::IsMember({"kv", "human"}));
    app.add_option("--workers", o.workers, "worker threads where supported");

    auto add_table_flags = [&](CLI::App* cmd) {
        cmd->add_option("--builtin", o.builtin_name, "builtin semiring name");
        cmd->add_option("--semiring-file", o.semiring_file, "semiring table file");
    };
    auto add_instance_flags = [&](CLI::App* cmd) {
        add_table_flags(cmd);
        cmd->add_flag("--paper", o.paper, "use the published 20x20 s6 instance");
        cmd->add_option("--n", o.n, "matrix dimension for generated instances");
        cmd->add_option("--deg", o.deg, "polynomial degree bound");
    };

    int (*handler)(const Options&) = nullptr;
    auto set = [&](int (*fn)(const Options&)) { return [&handler, fn] { handler = fn; }; };

    CLI::App* semiring = app.add_subcommand("semiring", "semiring table operations");
    semiring->require_subcommand(1);
    CLI::App* validate = semiring->add_subcommand("validate", "check all semiring axioms");
    add_table_flags(validate);
    validate->callback(set(cmd_semiring_validate));
    CLI::App* simple = semiring->add_subcommand("simple", "congruence-simplicity test");
    add_table_flags(simple);
    simple->callback(set(cmd_semiring_simple));

    CLI::App* landau = app.add_subcommand("landau", "Landau's function g(n) with partition");
    landau->add_option("n", o.landau_n, "argument n, 1..4096")->required();
    landau->callback(set(cmd_landau));

    CLI::App* order = app.add_subcommand("order", "order/period/preperiod of a matrix");
    order->add_option("--matrix-file", o.matrix_file, "matrix file")->required();
    order->add_option("--cap", o.cap, "power-sequence cap");
    add_table_flags(order);
    order->callback(set(cmd_order));

    CLI::App* kex = app.add_subcommand("keyexchange", "two-sided key exchange");
    kex->require_subcommand(1);
    CLI::App* demo = kex->add_subcommand("demo", "run one seeded session");
    add_instance_flags(demo);
    demo->callback(set(cmd_keyexchange_demo));
    CLI::App* bench = kex->add_subcommand("bench", "keygen/derive timings over (n, deg)");
    bench->callback(set(cmd_keyexchange_bench));

    CLI::App* attack = app.add_subcommand("attack", "cryptanalysis experiments");
    attack->require_subcommand(1);
    CLI::App* brute = attack->add_subcommand("brute", "brute-force search for a hidden key");
    add_instance_flags(brute);
    brute->add_option("--budget", o.budget, "max candidates to try");
    brute->callback(set(cmd_attack_brute));
    CLI::App* linear = attack->add_subcommand("linear", "linear-algebra attack over F_p");
    linear->add_option("--p", o.p, "prime modulus");
    linear->add_option("--n", o.n, "dimension");
    linear->add_option("--trials", o.trials, "number of seeded instances");
    linear->callback(set(cmd_attack_linear));
    CLI::App* cyclic = attack->add_subcommand("cyclic", "cycle-detection attack on g^k x");
    cyclic->add_option("--p", o.p, "prime modulus");
    cyclic->add_option("--gen", o.gen, "generator");
    cyclic->add_option("--group-order", o.group_order, "order of <gen> (default p-1)");
    cyclic->add_option("--exponent", o.exponent, "hidden exponent (default seeded random)");
    cyclic->add_option("--cap", o.cap, "application cap");
    cyclic->callback(set(cmd_attack_cyclic));
    CLI::App* bsgs = attack->add_subcommand("bsgs", "randomized baby-step giant-step");
    bsgs->add_option("--p", o.p, "prime modulus");
    bsgs->add_option("--gen", o.gen, "generator");
    bsgs->add_option("--group-order", o.group_order, "order of <gen> (default p-1)");
    bsgs->add_option("--exponent", o.exponent, "hidden exponent (default seeded random)");
    bsgs->callback(set(cmd_attack_bsgs));

    CLI::App* orbit = app.add_subcommand("orbit-estimate", "birthday estimate of the token orbit");
    add_instance_flags(orbit);
    orbit->add_option("--samples", o.samples, "number of token samples");
    orbit->callback(set(cmd_orbit_estimate));

    // let --seed/--format/--workers appear after any subcommand
    for (CLI::App* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (CLI::App* nested : sub->get_subcommands({})) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors
    }
    try {
        return handler ? handler(o) : 2;
    } catch (const std::exception& e) {
        if (o.format == "human")
            std::cerr << "error: " << e.what() << "\n";
        else
            std::cout << "error=" << '"' << e.what() << '"' << "\n";
        return 1;
    }
}
