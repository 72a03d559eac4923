#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include "srkex/matrix.hpp"
#include "srkex/semiring.hpp"

namespace srkex {

// Semiring table text format:
//   semiring <name>
//   order <k>
//   zero <idx|none>
//   one <idx|none>
//   add
//   <k rows of k indices>
//   mul
//   <k rows of k indices>
// '#' starts a comment line. Parsing is strict; errors carry line numbers.
SemiringTable parse_semiring(std::istream& in);
SemiringTable parse_semiring_file(const std::string& path);
std::string serialize_semiring(const SemiringTable& t);

// Matrix text format:
//   matrix
//   semiring <name>
//   n <n>
//   <n rows of n indices>
SemiringMatrix parse_matrix(std::istream& in, TablePtr table);
SemiringMatrix parse_matrix_file(const std::string& path, TablePtr table);
std::string serialize_matrix(const SemiringMatrix& m);

std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data);
std::string hex(std::span<const std::uint8_t> data);

} // namespace srkex
