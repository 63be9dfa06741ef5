#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "veronese/linverify.hpp"

using namespace veronese;
using linverify::Mat;
using linverify::MatrixGroup;
using linverify::Polynomial;

namespace {

Mat from_rows(const fp::PrimeField& F, const std::vector<std::vector<std::int64_t>>& rows) {
  Mat m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = F.reduce(rows[i][j]);
  }
  return m;
}

// S_3 on three coordinates: transposition and 3-cycle.
MatrixGroup s3_permutation(std::uint64_t p) {
  fp::PrimeField F(p);
  return linverify::close_group(
      F, {from_rows(F, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}),
          from_rows(F, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})});
}

// Standard two-dimensional reflection representation of S_3.
MatrixGroup s3_standard(std::uint64_t p) {
  fp::PrimeField F(p);
  return linverify::close_group(
      F, {from_rows(F, {{-1, 1}, {0, 1}}), from_rows(F, {{0, -1}, {1, -1}})});
}

Polynomial monomial_poly(std::vector<std::uint32_t> exps) {
  Polynomial p;
  for (auto e : exps) p.degree += e;
  p.terms.emplace_back(std::move(exps), 1);
  return p;
}

bool fixed_by_generators(const MatrixGroup& g, const Polynomial& p) {
  linverify::PolyContext ctx(g.field, g.dimension);
  for (const Mat& m : g.generators) {
    if (!(ctx.apply_matrix(m, p) == p)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("prime utilities") {
  CHECK(fp::is_prime(2));
  CHECK(fp::is_prime(7));
  CHECK_FALSE(fp::is_prime(1));
  CHECK_FALSE(fp::is_prime(91));
  CHECK(fp::smallest_prime_factor(12) == 2);
  CHECK(fp::smallest_prime_factor(35) == 5);

  CHECK(fp::choose_prime(6, 6) == 7);
  CHECK(fp::choose_prime(1, 1) == 2);
  CHECK(fp::choose_prime(4, 8) == 5);
}

TEST_CASE("roots of unity are deterministic") {
  fp::PrimeField F(7);
  const std::uint64_t z = F.root_of_unity(6);
  CHECK(F.pow(z, 6) == 1);
  CHECK(F.pow(z, 3) != 1);
  CHECK(F.pow(z, 2) != 1);
  CHECK(z == F.root_of_unity(6));
  CHECK_THROWS_AS(F.root_of_unity(5), Error);
}

TEST_CASE("close_group examples") {
  fp::PrimeField F7(7);
  auto trivial = linverify::close_group(F7, {Mat::identity(2)});
  CHECK(trivial.order() == 1);
  CHECK(trivial.exponent == 1);

  auto s3 = s3_permutation(7);
  CHECK(s3.order() == 6);
  CHECK(s3.exponent == 6);

  fp::PrimeField F5(5);
  Mat z(1);
  z.at(0, 0) = 2;  // multiplicative order 4 mod 5
  auto c4 = linverify::close_group(F5, {z});
  CHECK(c4.order() == 4);
  CHECK(c4.exponent == 4);
}

TEST_CASE("close_group error taxonomy") {
  fp::PrimeField F7(7);
  Mat sing(2);
  sing.at(0, 0) = 1;  // second row zero
  try {
    linverify::close_group(F7, {sing});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_invertible);
  }

  try {
    s3_permutation(3);  // 3 divides |S_3| = 6
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::characteristic_divides_order);
  }

  fp::PrimeField F11(11);
  Mat big(1);
  big.at(0, 0) = 2;  // order 10 mod 11
  try {
    linverify::close_group(F11, {big}, 5);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::group_too_large);
  }
}

TEST_CASE("reynolds frozen examples") {
  auto s3 = s3_permutation(7);

  Polynomial one = monomial_poly({0, 0, 0});
  CHECK(linverify::reynolds(s3, one) == one);

  // averaging x1 gives (1/3)(x1+x2+x3) = 5*(x1+x2+x3) mod 7
  Polynomial x1 = monomial_poly({1, 0, 0});
  Polynomial avg = linverify::reynolds(s3, x1);
  REQUIRE(avg.terms.size() == 3);
  for (const auto& [exps, coeff] : avg.terms) CHECK(coeff == 5);

  // x1 - x2 symmetrizes to zero
  Polynomial diff;
  diff.degree = 1;
  diff.terms.emplace_back(std::vector<std::uint32_t>{1, 0, 0}, 1);
  diff.terms.emplace_back(std::vector<std::uint32_t>{0, 1, 0}, 6);
  CHECK(linverify::reynolds(s3, diff).is_zero());
}

TEST_CASE("reynolds is idempotent and lands in the invariants") {
  auto s3 = s3_permutation(7);
  std::mt19937_64 rng(0x5eed0020);
  linverify::PolyContext ctx(s3.field, 3);
  for (int round = 0; round < 20; ++round) {
    std::uniform_int_distribution<std::uint64_t> deg_dist(1, 4);
    const std::uint64_t deg = deg_dist(rng);
    const auto& tab = ctx.table(deg);
    Polynomial p;
    p.degree = deg;
    std::uniform_int_distribution<std::uint64_t> coeff(0, 6);
    for (std::size_t i = 0; i < tab.size(); ++i) {
      const std::uint64_t c = coeff(rng);
      if (c != 0) p.terms.emplace_back(tab[i], c);
    }
    Polynomial r = linverify::reynolds(s3, p);
    CHECK(linverify::reynolds(s3, r) == r);
    CHECK(fixed_by_generators(s3, r));
  }
}

TEST_CASE("invariant_basis frozen examples") {
  auto s3 = s3_permutation(7);
  auto b1 = linverify::invariant_basis(s3, 1);
  REQUIRE(b1.rank() == 1);
  REQUIRE(b1.vectors[0].terms.size() == 3);
  for (const auto& [exps, coeff] : b1.vectors[0].terms) CHECK(coeff == 1);

  auto b0 = linverify::invariant_basis(s3, 0);
  CHECK(b0.rank() == 1);

  auto std2 = s3_standard(7);
  CHECK(linverify::invariant_basis(std2, 1).rank() == 0);
}

TEST_CASE("echelon determinism") {
  auto s3 = s3_permutation(7);
  auto a = linverify::invariant_basis(s3, 4);
  auto b = linverify::invariant_basis(s3, 4);
  REQUIRE(a.rank() == b.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) CHECK(a.vectors[i] == b.vectors[i]);
  for (const auto& v : a.vectors) CHECK(fixed_by_generators(s3, v));
}

TEST_CASE("check_surjectivity on the standard S_3 representation") {
  auto std2 = s3_standard(7);
  // fundamental degrees (2,3): knapsack counts of 2a+3b = 6, 12, 18
  const std::vector<std::uint64_t> dims = {2, 3, 4};
  for (std::uint64_t d = 1; d <= 3; ++d) {
    auto rep = linverify::check_surjectivity(std2, d);
    CHECK(rep.dim_r1 == 2);
    CHECK(rep.dim_rd == dims[static_cast<std::size_t>(d - 1)]);
    CHECK(rep.dim_rd == oracles::knapsack_count({2, 3}, d * 6));
    CHECK(rep.surjective);
    CHECK(rep.rank == rep.dim_rd);
  }
}

TEST_CASE("check_surjectivity on the trivial group and permutation S_3") {
  fp::PrimeField F7(7);
  auto trivial = linverify::close_group(F7, {Mat::identity(1)});
  for (std::uint64_t d = 1; d <= 3; ++d) {
    auto rep = linverify::check_surjectivity(trivial, d);
    CHECK(rep.dim_r1 == 1);
    CHECK(rep.dim_rd == 1);
    CHECK(rep.surjective);
  }

  auto s3 = s3_permutation(7);
  auto rep = linverify::check_surjectivity(s3, 2);
  CHECK(rep.dim_r1 == 7);   // partitions of 6 into at most 3 parts
  CHECK(rep.dim_rd == 19);  // partitions of 12 into at most 3 parts
  CHECK(rep.surjective);
}

TEST_CASE("molien frozen examples") {
  fp::PrimeField F7(7);
  auto trivial = linverify::close_group(F7, {Mat::identity(1)});
  auto series = linverify::molien(trivial, 6);
  for (const auto& c : series) CHECK(c == 1);

  auto s3 = s3_permutation(7);
  auto m = linverify::molien(s3, 12);
  CHECK(m[0] == 1);
  CHECK(m[6] == 7);
  CHECK(m[12] == 19);
  for (std::uint64_t n = 0; n <= 12; ++n) {
    CHECK(m[static_cast<std::size_t>(n)] == oracles::partitions_at_most(n, 3));
  }

  Mat two(1);
  two.at(0, 0) = 2;  // 2 mod 7 has no lift in {-1,0,1}
  auto c3 = linverify::close_group(F7, {two});
  CHECK_THROWS_AS(linverify::molien(c3, 4), Error);
}

TEST_CASE("molien coefficients equal invariant ranks for integer groups") {
  // permutation S_3 and S_4, signed permutations B_2 and B_3, and the
  // crystallographic dihedral rotation of order 6
  struct Case {
    MatrixGroup group;
    std::uint64_t max_degree;
  };
  std::vector<Case> cases;
  cases.push_back({s3_permutation(7), 12});
  {
    fp::PrimeField F13(13);  // 13 = 1 mod exponent(S_4) = 12, 13 does not divide 24
    cases.push_back({linverify::close_group(
                         F13, {from_rows(F13, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
                               from_rows(F13, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}})}),
                     12});
  }
  {
    fp::PrimeField F5(5);  // exponent(B_2) = 4
    cases.push_back({linverify::close_group(F5, {from_rows(F5, {{0, 1}, {1, 0}}),
                                                 from_rows(F5, {{-1, 0}, {0, 1}})}),
                     12});
  }
  {
    fp::PrimeField F13(13);  // exponent(B_3) = 12
    cases.push_back({linverify::close_group(
                         F13, {from_rows(F13, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}),
                               from_rows(F13, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}),
                               from_rows(F13, {{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}})}),
                     10});
  }
  {
    fp::PrimeField F7(7);  // dihedral of order 12, exponent 6
    cases.push_back({linverify::close_group(F7, {from_rows(F7, {{1, -1}, {1, 0}}),
                                                 from_rows(F7, {{0, 1}, {1, 0}})}),
                     12});
  }
  for (const auto& [group, max_degree] : cases) {
    auto series = linverify::molien(group, max_degree);
    for (std::uint64_t n = 0; n <= max_degree; ++n) {
      CHECK(series[static_cast<std::size_t>(n)] ==
            linverify::invariant_basis(group, n).rank());
    }
  }
}

TEST_CASE("catalog groups: closure matches the entry and R_1 matches rd_basis") {
  for (const auto& entry : reflection::catalog()) {
    fp::PrimeField F(fp::choose_prime(entry.exponent, entry.order));
    auto group = linverify::close_group(F, linverify::materialize_entry(entry, F));
    CHECK(group.order() == entry.order);
    CHECK(group.exponent == entry.exponent);
    // Degree-d|G| spaces for the larger entries (symmetric_4 and
    // signed_permutation_3) are beyond desk scale for dense echelon work;
    // those are covered by the Molien ranks above and the factorization
    // sweep instead.
    if (entry.order > 12) continue;
    CHECK(linverify::invariant_basis(group, entry.order).rank() ==
          reflection::rd_basis(entry, 1).size());
    for (std::uint64_t d = 1; d <= 2; ++d) {
      auto rep = linverify::check_surjectivity(group, d);
      CHECK(rep.surjective);
      CHECK(rep.dim_rd == reflection::rd_basis(entry, d).size());
    }
  }
}

TEST_CASE("diagonal actions realized as matrices") {
  using diagonal::AbelianGroup;
  using diagonal::DiagonalAction;

  std::vector<DiagonalAction> actions;
  actions.emplace_back(AbelianGroup{{3}}, std::vector<diagonal::GroupElement>{{1}, {2}});
  actions.emplace_back(AbelianGroup{{2, 2}},
                       std::vector<diagonal::GroupElement>{{1, 0}, {0, 1}});
  actions.emplace_back(AbelianGroup{{4}}, std::vector<diagonal::GroupElement>{{1}, {3}});

  for (const auto& action : actions) {
    fp::PrimeField F(fp::choose_prime(action.group.exponent(), action.group.order()));
    auto group = linverify::close_group(F, linverify::materialize_diagonal(action, F));
    for (std::uint64_t d = 1; d <= 3; ++d) {
      const auto dim = diagonal::dimension(action, d);
      CHECK(dim == linverify::invariant_basis(group, d * action.group.order()).rank());
    }
    auto rep = linverify::check_surjectivity(group, 2);
    CHECK(rep.surjective);
  }
}
