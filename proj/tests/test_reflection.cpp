#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "veronese/monoid.hpp"
#include "veronese/reflection.hpp"

using namespace veronese;
using reflection::FundamentalExponent;

TEST_CASE("catalog entries pass the degree product check") {
  std::set<std::string> names;
  for (const auto& e : reflection::catalog()) {
    std::uint64_t prod = 1;
    for (auto d : e.degrees) prod *= d;
    CHECK(prod == e.order);
    CHECK(names.insert(e.name).second);  // unique names
    CHECK(e.degrees.size() >= 1);
  }
  CHECK(reflection::catalog().size() >= 10);
}

TEST_CASE("catalog frozen entries") {
  const auto* s3 = reflection::find_entry("symmetric_3");
  REQUIRE(s3 != nullptr);
  CHECK(s3->order == 6);
  CHECK(s3->degrees == std::vector<std::uint64_t>{1, 2, 3});

  const auto* d4 = reflection::find_entry("dihedral_4");
  REQUIRE(d4 != nullptr);
  CHECK(d4->order == 8);
  CHECK(d4->degrees == std::vector<std::uint64_t>{2, 4});

  const auto* trivial = reflection::find_entry("trivial");
  REQUIRE(trivial != nullptr);
  CHECK(trivial->order == 1);
  CHECK(trivial->degrees == std::vector<std::uint64_t>{1});

  CHECK(reflection::find_entry("no_such_group") == nullptr);
}

TEST_CASE("rd_basis frozen examples") {
  const auto* d3 = reflection::find_entry("dihedral_3");  // degrees (2,3), order 6
  REQUIRE(d3 != nullptr);
  CHECK(reflection::rd_basis(*d3, 1) ==
        std::vector<FundamentalExponent>{{0, 2}, {3, 0}});
  CHECK(reflection::rd_basis(*d3, 0) == std::vector<FundamentalExponent>{{0, 0}});
  CHECK(reflection::rd_basis(*d3, 2) ==
        std::vector<FundamentalExponent>{{0, 4}, {3, 2}, {6, 0}});
}

TEST_CASE("factor frozen examples") {
  const auto* d3 = reflection::find_entry("dihedral_3");
  REQUIRE(d3 != nullptr);
  CHECK(reflection::factor(*d3, {3, 2}) ==
        std::vector<FundamentalExponent>{{3, 0}, {0, 2}});
  CHECK(reflection::factor(*d3, {0, 2}) == std::vector<FundamentalExponent>{{0, 2}});

  const auto* d4 = reflection::find_entry("dihedral_4");  // degrees (2,4), order 8
  REQUIRE(d4 != nullptr);
  auto parts = reflection::factor(*d4, {4, 4});
  REQUIRE(parts.size() == 3);
  CHECK(parts == std::vector<FundamentalExponent>{{4, 0}, {0, 2}, {0, 2}});

  try {
    reflection::factor(*d3, {1, 1});  // weighted degree 5
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_multiple);
  }
}

TEST_CASE("rd_basis sizes: monotone and equal to the independent count") {
  for (const auto& e : reflection::catalog()) {
    std::uint64_t prev = 0;
    for (std::uint64_t d = 1; d <= 3; ++d) {
      auto b = reflection::rd_basis(e, d);
      CHECK(b.size() >= prev);
      prev = b.size();
      CHECK(b.size() == oracles::knapsack_count(e.degrees, d * e.order));
    }
  }
}

TEST_CASE("every rd_basis element factors into level-one parts") {
  for (const auto& e : reflection::catalog()) {
    for (std::uint64_t d = 1; d <= 2; ++d) {
      for (const auto& exp : reflection::rd_basis(e, d)) {
        auto parts = reflection::factor(e, exp);
        CHECK(parts.size() == d);
        FundamentalExponent acc(e.degrees.size(), 0);
        for (const auto& p : parts) {
          CHECK(reflection::weighted_degree(e, p) == e.order);
          for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += p[j];
        }
        CHECK(acc == exp);
      }
    }
  }
}
