#include "veronese/monoid.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "veronese/zerosum.hpp"

namespace veronese::monoid {

namespace {

constexpr std::uint64_t kAtomCapacityCap = 1'000'000;
constexpr std::uint64_t kOracleLevelCap = 4;
constexpr std::size_t kOracleAtomCap = 50;

void check_rank(const WeightedMonoidInstance& inst, const Exponents& e) {
  if (e.size() != inst.rank()) {
    fail(errc::dimension_mismatch, "expected " + std::to_string(inst.rank()) + " exponents, got " +
                                       std::to_string(e.size()));
  }
}

// One round of the staged partition: extracts a single atom from a level>=2
// element.
Atom peel_atom(const WeightedMonoidInstance& inst, const Exponents& exps) {
  const std::size_t r = inst.rank();
  const std::uint64_t n_cap = inst.capacity;
  AssignmentMatrix mat = assignment_matrix(inst, exps);

  // Blocks start as singleton rows; stage j merges groups of a_j blocks so
  // that every merged block has column-j sum divisible by a_j.
  std::vector<std::vector<std::size_t>> blocks(mat.rows);
  for (std::size_t i = 0; i < mat.rows; ++i) blocks[i] = {i};

  for (std::size_t j = 0; j < r; ++j) {
    const std::uint64_t aj = inst.weights[j];
    std::vector<std::uint64_t> sums;
    sums.reserve(blocks.size());
    for (const auto& block : blocks) {
      std::uint64_t s = 0;
      for (std::size_t row : block) s += (mat.letter[row] == j) ? 1 : 0;
      sums.push_back(s % aj);
    }
    zerosum::BlockPartition part =
        zerosum::partition_zero_sum(zerosum::ResidueSequence::from_reduced(aj, sums));
    std::vector<std::vector<std::size_t>> merged;
    merged.reserve(part.blocks.size());
    for (const auto& group : part.blocks) {
      std::vector<std::size_t> rows;
      for (std::size_t bi : group) {
        rows.insert(rows.end(), blocks[bi].begin(), blocks[bi].end());
      }
      merged.push_back(std::move(rows));
    }
    blocks = std::move(merged);
#ifndef NDEBUG
    // After stage j every block's column-l sum is divisible by a_l, l <= j.
    for (const auto& block : blocks) {
      for (std::size_t l = 0; l <= j; ++l) {
        std::uint64_t s = 0;
        for (std::size_t row : block) s += (mat.letter[row] == l) ? 1 : 0;
        assert(s % inst.weights[l] == 0);
      }
    }
#endif
  }

  const auto& first = blocks.front();
  assert(first.size() == n_cap);
  Atom atom(r, 0);
  for (std::size_t row : first) atom[mat.letter[row]] += 1;
  std::uint64_t check = 0;
  for (std::size_t j = 0; j < r; ++j) {
    assert(atom[j] % inst.weights[j] == 0);
    check += atom[j];
    atom[j] /= inst.weights[j];
  }
  assert(check == n_cap);
  (void)check;
  (void)n_cap;
  return atom;
}

}  // namespace

WeightedMonoidInstance::WeightedMonoidInstance(std::vector<std::uint64_t> a)
    : weights(std::move(a)) {
  if (weights.empty()) fail(errc::invalid_argument, "need at least one weight");
  capacity = 1;
  for (std::uint64_t w : weights) {
    if (w == 0) fail(errc::invalid_argument, "weights must be >= 1");
    capacity *= w;
  }
}

std::uint64_t AssignmentMatrix::column_sum(std::size_t j) const noexcept {
  std::uint64_t s = 0;
  for (std::uint32_t l : letter) s += (l == j) ? 1 : 0;
  return s;
}

std::uint64_t value_of(const WeightedMonoidInstance& inst, const Exponents& exponents) {
  check_rank(inst, exponents);
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) v += exponents[i] * inst.weights[i];
  return v;
}

bool contains(const WeightedMonoidInstance& inst, const Exponents& exponents) {
  return value_of(inst, exponents) % inst.capacity == 0;
}

MonoidElement element(const WeightedMonoidInstance& inst, Exponents exponents) {
  const std::uint64_t v = value_of(inst, exponents);
  if (v % inst.capacity != 0) {
    fail(errc::not_member, "value " + std::to_string(v) + " is not a multiple of " +
                               std::to_string(inst.capacity));
  }
  return MonoidElement{std::move(exponents), v, v / inst.capacity};
}

std::vector<Exponents> knapsack_solutions(const std::vector<std::uint64_t>& weights,
                                          std::uint64_t target, std::size_t guard) {
  std::vector<Exponents> out;
  Exponents cur(weights.size(), 0);
  // Ascending lexicographic by construction: outer coordinates run from 0 up.
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t rest) -> void {
    if (i + 1 == weights.size()) {
      if (rest % weights[i] == 0) {
        cur[i] = rest / weights[i];
        if (out.size() >= guard) fail(errc::too_large, "enumeration guard exceeded");
        out.push_back(cur);
        cur[i] = 0;
      }
      return;
    }
    for (std::uint64_t m = 0; m * weights[i] <= rest; ++m) {
      cur[i] = m;
      self(self, i + 1, rest - m * weights[i]);
    }
    cur[i] = 0;
  };
  if (!weights.empty()) rec(rec, 0, target);
  return out;
}

std::vector<Atom> atoms(const WeightedMonoidInstance& inst) {
  if (inst.capacity > kAtomCapacityCap) {
    fail(errc::too_large, "atom enumeration capped at N <= " + std::to_string(kAtomCapacityCap));
  }
  return knapsack_solutions(inst.weights, inst.capacity);
}

AssignmentMatrix assignment_matrix(const WeightedMonoidInstance& inst, const Exponents& exponents) {
  check_rank(inst, exponents);
  AssignmentMatrix mat;
  mat.cols = inst.rank();
  mat.rows = static_cast<std::size_t>(value_of(inst, exponents));
  mat.letter.reserve(mat.rows);
  for (std::size_t j = 0; j < inst.rank(); ++j) {
    for (std::uint64_t c = 0; c < exponents[j] * inst.weights[j]; ++c) {
      mat.letter.push_back(static_cast<std::uint32_t>(j));
    }
  }
  return mat;
}

std::vector<Atom> decompose(const WeightedMonoidInstance& inst, const Exponents& exponents,
                            std::uint64_t value_guard) {
  MonoidElement el = element(inst, exponents);
  if (el.value > value_guard) {
    fail(errc::too_large, "element value exceeds guard " + std::to_string(value_guard));
  }

  std::vector<Atom> parts;
  parts.reserve(static_cast<std::size_t>(el.level));
  Exponents cur = el.exponents;
  std::uint64_t level = el.level;
  while (level >= 2) {
    Atom atom = peel_atom(inst, cur);
    for (std::size_t j = 0; j < cur.size(); ++j) {
      assert(cur[j] >= atom[j]);
      cur[j] -= atom[j];
    }
    parts.push_back(std::move(atom));
    --level;
  }
  if (level == 1) parts.push_back(cur);
  return parts;
}

std::optional<std::vector<Atom>> decompose_oracle(const WeightedMonoidInstance& inst,
                                                  const Exponents& exponents) {
  MonoidElement el = element(inst, exponents);
  if (el.level > kOracleLevelCap) {
    fail(errc::too_large, "oracle capped at level " + std::to_string(kOracleLevelCap));
  }
  std::vector<Atom> pool = atoms(inst);
  if (pool.size() > kOracleAtomCap) {
    fail(errc::too_large, "oracle capped at " + std::to_string(kOracleAtomCap) + " atoms");
  }
  if (el.level == 0) return std::vector<Atom>{};

  std::vector<Atom> chosen;
  Exponents rest = el.exponents;
  auto fits = [&](const Atom& a) {
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (a[j] > rest[j]) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t from, std::uint64_t left) -> bool {
    if (left == 0) {
      for (std::uint64_t v : rest) {
        if (v != 0) return false;
      }
      return true;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (!fits(pool[i])) continue;
      for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= pool[i][j];
      chosen.push_back(pool[i]);
      if (self(self, i, left - 1)) return true;
      chosen.pop_back();
      for (std::size_t j = 0; j < rest.size(); ++j) rest[j] += pool[i][j];
    }
    return false;
  };
  if (rec(rec, 0, el.level)) return chosen;
  return std::nullopt;
}

}  // namespace veronese::monoid
