#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "veronese/error.hpp"
#include "veronese/fp.hpp"
#include "veronese/matrix_group.hpp"

namespace veronese::linverify {

// Homogeneous polynomial over F_p in sparse form; terms are sorted with the
// leading variable's exponent first and descending (the fixed monomial
// order used throughout for deterministic echelon forms).
struct Polynomial {
  std::uint64_t degree = 0;
  std::vector<std::pair<std::vector<std::uint32_t>, std::uint64_t>> terms;

  bool is_zero() const noexcept { return terms.empty(); }
  std::string to_string(const std::string& var_prefix = "x") const;

  bool operator==(const Polynomial&) const = default;
};

// All monomials of one degree, in the fixed order, with index lookup.
class MonomialTable {
 public:
  MonomialTable(std::size_t nvars, std::uint64_t degree, std::uint64_t guard);

  std::size_t size() const noexcept { return monomials_.size(); }
  const std::vector<std::uint32_t>& operator[](std::size_t i) const { return monomials_[i]; }
  std::size_t index_of(const std::vector<std::uint32_t>& exps) const;

  std::size_t nvars() const noexcept { return nvars_; }
  std::uint64_t degree() const noexcept { return degree_; }

 private:
  std::size_t nvars_;
  std::uint64_t degree_;
  std::vector<std::vector<std::uint32_t>> monomials_;
};

// Per-call context: a field, a variable count, and lazily built monomial
// tables. Operations construct their own context, so the public entry
// points stay pure.
class PolyContext {
 public:
  PolyContext(fp::PrimeField field, std::size_t nvars,
              std::uint64_t guard = 10'000'000);

  const fp::PrimeField& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const MonomialTable& table(std::uint64_t degree);

  // Dense coefficient vector aligned with table(degree).
  using Dense = std::vector<std::uint64_t>;

  Dense dense_monomial(const std::vector<std::uint32_t>& exps);
  Dense to_dense(const Polynomial& p);
  Polynomial to_sparse(std::uint64_t degree, const Dense& coeffs);

  Dense multiply(std::uint64_t deg_a, const Dense& a, std::uint64_t deg_b, const Dense& b);

  // Substitute x_i -> sum_j M[i][j] x_j into a single monomial.
  Dense apply_matrix_monomial(const Mat& m, const std::vector<std::uint32_t>& exps);

  // Same substitution extended linearly to a polynomial.
  Polynomial apply_matrix(const Mat& m, const Polynomial& p);

 private:
  fp::PrimeField field_;
  std::size_t nvars_;
  std::uint64_t guard_;
  std::map<std::uint64_t, MonomialTable> tables_;
};

}  // namespace veronese::linverify
