#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "veronese/error.hpp"

namespace veronese::zerosum {

using Index = std::size_t;

// Certificate: sorted, distinct positions into a sequence.
using IndexSet = std::vector<Index>;

// A sequence of residues mod a fixed modulus m >= 1. Terms are stored
// reduced to [0, m).
struct ResidueSequence {
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> terms;

  ResidueSequence(std::uint64_t m, const std::vector<std::int64_t>& raw);

  // Terms already reduced to [0, m).
  static ResidueSequence from_reduced(std::uint64_t m, std::vector<std::uint64_t> reduced);

  std::size_t length() const noexcept { return terms.size(); }
  std::uint64_t sum_mod() const noexcept;
};

// A sequence of elements of Z/m_1 x ... x Z/m_s; component j of every term
// is stored reduced mod orders[j].
struct AbelianElementSequence {
  std::vector<std::uint64_t> orders;
  std::vector<std::vector<std::uint64_t>> terms;

  AbelianElementSequence(std::vector<std::uint64_t> group_orders,
                         const std::vector<std::vector<std::int64_t>>& raw);
  static AbelianElementSequence from_reduced(std::vector<std::uint64_t> group_orders,
                                             std::vector<std::vector<std::uint64_t>> reduced);

  std::size_t length() const noexcept { return terms.size(); }
  std::uint64_t group_order() const noexcept;
  std::vector<std::uint64_t> sum_mod() const;
};

struct BlockPartition {
  std::vector<IndexSet> blocks;  // pairwise disjoint, covering 0..len-1
};

// Erdos-Ginzburg-Ziv for prime modulus p = seq.modulus: picks exactly p
// positions with zero term-sum mod p out of the first 2p-1 terms.
//
// If some residue occurs p times among those terms, the earliest such run is
// returned. Otherwise the Cauchy-Davenport pair construction applies: sort
// the first 2p-1 entries, form the p-1 pairs (s_i, s_{i+p-1}) of distinct
// residues, and grow the achievable-sum set one pair at a time, recording
// parent choices; the target is minus the leftover entry. O(p^2).
IndexSet egz_prime(const ResidueSequence& seq);

// General modulus m = seq.modulus; length >= 2m-1 required. m = 1 returns
// the first position. Composite m = p*v (p the smallest prime factor) is
// handled by extracting 2v-1 zero-sum p-blocks and recursing on the
// block sums divided by p, mod v.
IndexSet egz(const ResidueSequence& seq);

// Partition all positions into blocks of size m = seq.modulus, each with
// zero term-sum. Requires the length to be a positive multiple of m and the
// total to vanish mod m. Blocks are extracted with egz while at least 2m-1
// positions remain; the residual block of m positions is then zero-sum
// because the total is (extracted blocks are zero-sum, counts stay
// multiples of m).
BlockPartition partition_zero_sum(const ResidueSequence& seq);

// Zero-sum subset of size |G| for a sequence of d*|G| elements of a finite
// abelian group with zero total, d >= 2. Works down a composition chain
// with cyclic prime quotients: peel the largest prime p of the first
// nontrivial cyclic factor, partition into zero-sum p-blocks on that
// coordinate, replace blocks by their sums in the kernel subgroup, recurse.
IndexSet egz_abelian(const AbelianElementSequence& seq);

// Exhaustive oracle: lexicographically smallest subset of m = seq.modulus
// positions with zero term-sum, or absent if none exists. Guarded at
// length <= 25.
std::optional<IndexSet> zero_sum_oracle(const ResidueSequence& seq);

}  // namespace veronese::zerosum
