#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "veronese/diagonal.hpp"
#include "veronese/matrix_group.hpp"
#include "veronese/poly.hpp"
#include "veronese/reflection.hpp"

namespace veronese::linverify {

using BigInt = boost::multiprecision::cpp_int;

// Basis of the degree-n invariant forms, in reduced row echelon form over
// the fixed monomial order; echelon determinism makes repeated runs
// bit-identical.
struct GradedBasis {
  std::uint64_t degree = 0;
  std::vector<Polynomial> vectors;

  std::size_t rank() const noexcept { return vectors.size(); }
};

// Averaging projector (1/|G|) sum_g g.poly onto the invariants.
Polynomial reynolds(const MatrixGroup& group, const Polynomial& poly,
                    std::uint64_t guard = 10'000'000);

// Reynolds image of every degree-n monomial, row reduced.
GradedBasis invariant_basis(const MatrixGroup& group, std::uint64_t degree,
                            std::uint64_t guard = 10'000'000);

struct SurjectivityReport {
  std::uint64_t d = 0;
  std::uint64_t dim_r1 = 0;
  std::uint64_t dim_rd = 0;
  std::uint64_t rank = 0;  // of the degree-d products of R_1 inside R_d
  bool surjective = false;
  std::optional<Polynomial> missing;  // an invariant outside the span
};

// Does Sym^d R_1 -> R_d surject? R_1 is the degree-|G| invariant space;
// products of d of its basis vectors are row reduced until the rank reaches
// dim R_d or the products run out.
SurjectivityReport check_surjectivity(const MatrixGroup& group, std::uint64_t d,
                                      std::uint64_t guard = 10'000'000);

// Exact Hilbert-series coefficients c_0..c_D of the invariant ring,
// (1/|G|) sum_g 1/det(I - t g), for groups whose elements lift to integer
// matrices with entries in {-1, 0, 1} (permutation and signed-permutation
// style representations).
std::vector<BigInt> molien(const MatrixGroup& group, std::uint64_t max_degree);

// Reference representation of a catalog entry over F_p; needs a
// root_order-th root of unity in the field.
std::vector<Mat> materialize_entry(const reflection::ReflectionGroupEntry& entry,
                                   const fp::PrimeField& field);

// Diagonal matrices realizing a diagonal abelian action over F_p; needs
// roots of unity of each cyclic order.
std::vector<Mat> materialize_diagonal(const diagonal::DiagonalAction& action,
                                      const fp::PrimeField& field);

}  // namespace veronese::linverify
