#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace srkex {

// Structural problems (bad shapes, out-of-range indices, parse failures)
// are distinct from semantic axiom violations, which are reported as data.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A finite semiring given by explicit k x k operation tables.
/// Elements are dense indices 0..k-1, tables row-major, the left
/// operand indexes the row. Immutable after construction.
struct SemiringTable {
    std::string name;
    int order = 0; // k, the cardinality theta
    std::vector<std::uint8_t> add; // k*k
    std::vector<std::uint8_t> mul; // k*k
    std::optional<int> zero;
    std::optional<int> one;

    int add_at(int a, int b) const { return add[static_cast<std::size_t>(a) * order + b]; }
    int mul_at(int a, int b) const { return mul[static_cast<std::size_t>(a) * order + b]; }

    bool operator==(const SemiringTable& other) const = default;
};

using TablePtr = std::shared_ptr<const SemiringTable>;

struct AxiomViolation {
    std::string law;            // e.g. "add-associativity"
    std::array<int, 3> witness; // elements involved (unused slots are -1)
};

struct AxiomReport {
    std::vector<AxiomViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Throws StructuralError on malformed tables; axiom violations are data.
AxiomReport validate_axioms(const SemiringTable& t);

// {c : c*a == a*c for all a}
std::vector<int> center(const SemiringTable& t);

/// Partition of the elements into congruence classes; class id is the
/// smallest member index (canonical representative).
struct CongruencePartition {
    std::vector<int> representative; // representative[e] for each element e
    int class_count() const;
    std::vector<std::vector<int>> classes() const;
    bool full() const { return class_count() == 1; }
    bool discrete() const { return class_count() == static_cast<int>(representative.size()); }
};

CongruencePartition generated_congruence(const SemiringTable& t,
                                         std::span<const std::pair<int, int>> seed_pairs);

// true iff every single unequal pair generates the full relation
bool is_simple(const SemiringTable& t);

// boolean_b2, s6, s20, or "zmodN"
SemiringTable builtin(const std::string& name);
TablePtr builtin_shared(const std::string& name);
SemiringTable zmod(int n);

} // namespace srkex
