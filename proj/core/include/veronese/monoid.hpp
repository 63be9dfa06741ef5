#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "veronese/error.hpp"

namespace veronese::monoid {

using Exponents = std::vector<std::uint64_t>;

// An atom: exponents with value exactly N.
using Atom = Exponents;

// The monoid M_a of exponent vectors m with sum(m_i * a_i) = 0 mod N,
// where N = prod(a_i).
struct WeightedMonoidInstance {
  std::vector<std::uint64_t> weights;  // a_i >= 1
  std::uint64_t capacity = 1;          // N

  explicit WeightedMonoidInstance(std::vector<std::uint64_t> a);

  std::size_t rank() const noexcept { return weights.size(); }
};

struct MonoidElement {
  Exponents exponents;
  std::uint64_t value = 0;  // sum m_i * a_i
  std::uint64_t level = 0;  // value / N
};

// Canonical 0/1 assignment matrix for an element of level q: n = q*N rows,
// one per letter occurrence, laid out letter-major (the m_1 copies of the
// first letter occupy the first m_1*a_1 rows, and so on). Row sums are 1 and
// column j sums to m_j * a_j, so only the column index per row is stored.
struct AssignmentMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> letter;  // letter[row] = column carrying the 1

  std::uint64_t column_sum(std::size_t j) const noexcept;
};

std::uint64_t value_of(const WeightedMonoidInstance& inst, const Exponents& exponents);

bool contains(const WeightedMonoidInstance& inst, const Exponents& exponents);

// Validated element; throws NotMember when the value is not a multiple of N.
MonoidElement element(const WeightedMonoidInstance& inst, Exponents exponents);

// All solutions of sum(m_i * a_i) = target, ascending lexicographic.
std::vector<Exponents> knapsack_solutions(const std::vector<std::uint64_t>& weights,
                                          std::uint64_t target,
                                          std::size_t guard = 1'000'000);

// The atom set S_a: all solutions of sum(m_i * a_i) = N, ascending
// lexicographic. Guarded at N <= 10^6.
std::vector<Atom> atoms(const WeightedMonoidInstance& inst);

AssignmentMatrix assignment_matrix(const WeightedMonoidInstance& inst, const Exponents& exponents);

// Write a level-q element as a sum of exactly q atoms. One atom is peeled
// per round: build the canonical assignment matrix, partition rows into
// zero-sum blocks column by column (stage j groups a_j blocks at a time on
// column-j sums mod a_j), read the atom off the first block of N rows, and
// recurse on the remainder.
std::vector<Atom> decompose(const WeightedMonoidInstance& inst, const Exponents& exponents,
                            std::uint64_t value_guard = 10'000'000);

// Exhaustive multiset search over the atom set; some decomposition into
// level-many atoms, or absent if none exists. Guarded at level <= 4 and
// at most 50 atoms.
std::optional<std::vector<Atom>> decompose_oracle(const WeightedMonoidInstance& inst,
                                                  const Exponents& exponents);

}  // namespace veronese::monoid
