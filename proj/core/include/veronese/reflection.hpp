#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "veronese/error.hpp"

namespace veronese::reflection {

// How an entry's reference representation is materialized over a prime
// field; the parameter is n for the families and m for dihedral/scalar.
enum class RepKind {
  trivial,
  permutation,         // symmetric group, natural n-dimensional
  signed_permutation,  // hyperoctahedral group of n x n signed permutations
  dihedral,            // diag(z, z^-1) and the coordinate swap, z of order m
  scalar,              // 1-dimensional, multiplication by a root of order m
};

struct ReflectionGroupEntry {
  std::string name;
  std::uint64_t order = 1;
  std::vector<std::uint64_t> degrees;  // fundamental degrees, prod = order
  std::size_t dimension = 1;
  RepKind kind = RepKind::trivial;
  std::uint64_t parameter = 1;
  std::uint64_t root_order = 1;  // root of unity the reference rep needs
  std::uint64_t exponent = 1;    // group exponent (standard fact, checked in tests)
};

// Built-in entries; every one satisfies prod(degrees) = order.
const std::vector<ReflectionGroupEntry>& catalog();

// nullptr when no entry carries the name.
const ReflectionGroupEntry* find_entry(std::string_view name);

// Exponent vector over the fundamental invariants f_1..f_r; the weighted
// degree of (m_1..m_r) is sum(m_i * degrees[i]).
using FundamentalExponent = std::vector<std::uint64_t>;

std::uint64_t weighted_degree(const ReflectionGroupEntry& entry, const FundamentalExponent& e);

// All f-monomials of weighted degree d*|G|, ascending lexicographic.
std::vector<FundamentalExponent> rd_basis(const ReflectionGroupEntry& entry, std::uint64_t d,
                                          std::size_t guard = 1'000'000);

// Split an f-monomial of weighted degree d*|G| into d pieces of weighted
// degree |G| via the weighted-monoid decomposition with a = degrees.
std::vector<FundamentalExponent> factor(const ReflectionGroupEntry& entry,
                                        const FundamentalExponent& exponent);

}  // namespace veronese::reflection
