#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "veronese/error.hpp"

namespace veronese::diagonal {

using BigInt = boost::multiprecision::cpp_int;

struct AbelianGroup {
  std::vector<std::uint64_t> orders;  // m_j >= 1

  std::uint64_t order() const;     // product of the m_j
  std::uint64_t exponent() const;  // lcm of the m_j
};

// One dual-group weight per variable, component j reduced mod orders[j].
using GroupElement = std::vector<std::uint64_t>;

// A diagonal action of a finite abelian group on a polynomial ring: each
// variable scales by the character attached to its weight. Roots of unity
// are never materialized; everything runs on the exponents.
struct DiagonalAction {
  AbelianGroup group;
  std::vector<GroupElement> weights;
  bool faithful = false;  // computed: do the weights generate the dual group?

  DiagonalAction(AbelianGroup g, std::vector<GroupElement> variable_weights);

  std::size_t dimension() const noexcept { return weights.size(); }
};

struct Monomial {
  std::vector<std::uint64_t> exponents;

  std::uint64_t degree() const noexcept;
  bool operator==(const Monomial&) const = default;
};

struct GenerationReport {
  std::uint64_t d = 0;
  std::uint64_t dim_rd = 0;
  bool all_factorable = false;
  std::vector<std::pair<Monomial, std::vector<Monomial>>> witnesses;
  std::vector<Monomial> counterexamples;
};

constexpr std::uint64_t kDefaultEnumerationGuard = 10'000'000;

GroupElement weight_of(const DiagonalAction& action, const Monomial& monomial);

bool is_invariant(const DiagonalAction& action, const Monomial& monomial);

// All invariant monomials of total degree d*|G|, ordered degree-
// lexicographically (leading variable exponent first and descending).
std::vector<Monomial> basis(const DiagonalAction& action, std::uint64_t d,
                            std::uint64_t guard = kDefaultEnumerationGuard);

// Split an invariant monomial of degree d*|G| into d invariant monomials of
// degree |G|: flatten to letters in variable-major order and pull out
// zero-weight-sum blocks of |G| letters with the zero-sum solvers.
std::vector<Monomial> factor_invariant(const DiagonalAction& action, const Monomial& monomial);

// Factor every basis monomial of R_d for d = 1..d_max and report dimensions,
// witnesses and (never expected) counterexamples.
std::vector<GenerationReport> check_generation(const DiagonalAction& action, std::uint64_t d_max,
                                               std::uint64_t guard = kDefaultEnumerationGuard);

// |basis(action, d)| by lattice-point counting, without materializing.
BigInt dimension(const DiagonalAction& action, std::uint64_t d);

}  // namespace veronese::diagonal
