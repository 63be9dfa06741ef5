#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "veronese/monoid.hpp"

using namespace veronese;
using monoid::Atom;
using monoid::Exponents;
using monoid::WeightedMonoidInstance;

namespace {

bool valid_decomposition(const WeightedMonoidInstance& inst, const Exponents& element,
                         const std::vector<Atom>& parts) {
  Exponents acc(inst.rank(), 0);
  for (const Atom& a : parts) {
    if (monoid::value_of(inst, a) != inst.capacity) return false;
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += a[j];
  }
  return acc == element;
}

}  // namespace

TEST_CASE("instance computes the capacity") {
  WeightedMonoidInstance inst({2, 3});
  CHECK(inst.capacity == 6);
  CHECK_THROWS_AS(WeightedMonoidInstance({2, 0}), Error);
  CHECK_THROWS_AS(WeightedMonoidInstance({}), Error);
}

TEST_CASE("contains") {
  WeightedMonoidInstance inst({2, 3});
  CHECK(monoid::contains(inst, {3, 0}));
  CHECK_FALSE(monoid::contains(inst, {1, 1}));
  CHECK(monoid::contains(inst, {0, 0}));
  CHECK_THROWS_AS(monoid::contains(inst, {1, 1, 1}), Error);
}

TEST_CASE("atoms frozen examples") {
  CHECK(monoid::atoms(WeightedMonoidInstance({2, 3})) ==
        std::vector<Atom>{{0, 2}, {3, 0}});
  CHECK(monoid::atoms(WeightedMonoidInstance({1})) == std::vector<Atom>{{1}});
  CHECK(monoid::atoms(WeightedMonoidInstance({2, 2})) ==
        std::vector<Atom>{{0, 2}, {1, 1}, {2, 0}});
  CHECK_THROWS_AS(monoid::atoms(WeightedMonoidInstance({2, 500'001})), Error);
}

TEST_CASE("atoms are level one and lexicographically sorted") {
  for (const auto& weights :
       std::vector<std::vector<std::uint64_t>>{{2, 3}, {4, 4, 4}, {1, 2, 3}, {5}}) {
    WeightedMonoidInstance inst(weights);
    auto as = monoid::atoms(inst);
    CHECK(std::is_sorted(as.begin(), as.end()));
    CHECK(std::adjacent_find(as.begin(), as.end()) == as.end());
    for (const Atom& a : as) CHECK(monoid::value_of(inst, a) == inst.capacity);
    // independent count agrees with the enumerator
    CHECK(as.size() == oracles::knapsack_count(weights, inst.capacity));
  }
}

TEST_CASE("assignment matrix canonical layout") {
  WeightedMonoidInstance inst({2, 3});
  auto mat = monoid::assignment_matrix(inst, {6, 4});
  CHECK(mat.rows == 24);
  CHECK(mat.cols == 2);
  CHECK(mat.column_sum(0) == 12);  // m_1 * a_1
  CHECK(mat.column_sum(1) == 12);  // m_2 * a_2
  // letter-major: the first m_1*a_1 rows carry column 0
  for (std::size_t r = 0; r < 12; ++r) CHECK(mat.letter[r] == 0);
  for (std::size_t r = 12; r < 24; ++r) CHECK(mat.letter[r] == 1);
}

TEST_CASE("decompose frozen examples") {
  WeightedMonoidInstance inst23({2, 3});
  CHECK(monoid::decompose(inst23, {6, 4}) ==
        std::vector<Atom>{{3, 0}, {3, 0}, {0, 2}, {0, 2}});
  CHECK(monoid::decompose(inst23, {3, 0}) == std::vector<Atom>{{3, 0}});
  CHECK(monoid::decompose(WeightedMonoidInstance({1, 1}), {2, 3}) ==
        std::vector<Atom>{{1, 0}, {1, 0}, {0, 1}, {0, 1}, {0, 1}});
  CHECK(monoid::decompose(inst23, {0, 0}).empty());
  CHECK_THROWS_AS(monoid::decompose(inst23, {1, 1}), Error);
}

TEST_CASE("decompose_oracle frozen examples") {
  WeightedMonoidInstance inst23({2, 3});
  auto o1 = monoid::decompose_oracle(inst23, {6, 4});
  REQUIRE(o1.has_value());
  CHECK(o1->size() == 4);
  CHECK(valid_decomposition(inst23, {6, 4}, *o1));

  auto o2 = monoid::decompose_oracle(inst23, {0, 0});
  REQUIRE(o2.has_value());
  CHECK(o2->empty());

  WeightedMonoidInstance inst22({2, 2});
  auto o3 = monoid::decompose_oracle(inst22, {1, 3});
  REQUIRE(o3.has_value());
  CHECK(o3->size() == 2);
  CHECK(valid_decomposition(inst22, {1, 3}, *o3));

  // guard: level above 4
  CHECK_THROWS_AS(monoid::decompose_oracle(inst23, {15, 0}), Error);
}

TEST_CASE("exhaustive desk-scale agreement with the oracle") {
  // weights in {1..3}^r, r <= 2 here (the acceptance suite covers {1..4}^3):
  // every element with level <= 3 decomposes, and the oracle agrees whenever
  // its guards admit it.
  for (std::uint64_t a1 = 1; a1 <= 3; ++a1) {
    for (std::uint64_t a2 = 0; a2 <= 3; ++a2) {
      std::vector<std::uint64_t> weights = {a1};
      if (a2 > 0) weights.push_back(a2);
      WeightedMonoidInstance inst(weights);
      const std::uint64_t n_cap = inst.capacity;
      for (std::uint64_t q = 1; q <= 3; ++q) {
        auto members = monoid::knapsack_solutions(weights, q * n_cap);
        for (const auto& m : members) {
          bool small_enough = true;
          for (auto e : m) {
            if (e > 3 * n_cap) small_enough = false;
          }
          if (!small_enough) continue;
          auto parts = monoid::decompose(inst, m);
          CHECK(parts.size() == q);
          CHECK(valid_decomposition(inst, m, parts));
          if (monoid::atoms(inst).size() <= 50 && q <= 4) {
            auto oracle = monoid::decompose_oracle(inst, m);
            REQUIRE(oracle.has_value());
            CHECK(valid_decomposition(inst, m, *oracle));
          }
        }
      }
    }
  }
}
