#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "veronese/error.hpp"
#include "veronese/fp.hpp"

namespace veronese::linverify {

// Dense square matrix over a prime field, row-major, entries in [0, p).
struct Mat {
  std::size_t n = 0;
  std::vector<std::uint64_t> a;

  Mat() = default;
  explicit Mat(std::size_t dim) : n(dim), a(dim * dim, 0) {}

  std::uint64_t& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return a[i * n + j]; }

  static Mat identity(std::size_t dim);

  bool operator==(const Mat&) const = default;
  auto operator<=>(const Mat&) const = default;
};

Mat mat_mul(const fp::PrimeField& F, const Mat& A, const Mat& B);
bool mat_invertible(const fp::PrimeField& F, Mat A);

// Exact integer matrices for closing integer representations before a
// field has been chosen.
struct IntMat {
  std::size_t n = 0;
  std::vector<std::int64_t> a;

  IntMat() = default;
  explicit IntMat(std::size_t dim) : n(dim), a(dim * dim, 0) {}

  std::int64_t& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  std::int64_t at(std::size_t i, std::size_t j) const { return a[i * n + j]; }

  bool operator==(const IntMat&) const = default;
  auto operator<=>(const IntMat&) const = default;
};

constexpr std::size_t kDefaultClosureCap = 10'000;

struct MatrixGroup {
  fp::PrimeField field;
  std::size_t dimension = 0;
  std::vector<Mat> generators;
  std::vector<Mat> elements;  // full closure, identity first, BFS order
  std::uint64_t exponent = 1;

  std::uint64_t order() const noexcept { return elements.size(); }
};

// Breadth-first closure of the generators. Checks invertibility, enforces
// the element cap, computes the exponent, and rejects fields whose
// characteristic divides the group order.
MatrixGroup close_group(const fp::PrimeField& field, std::vector<Mat> generators,
                        std::size_t cap = kDefaultClosureCap);

struct IntClosure {
  std::vector<IntMat> elements;
  std::uint64_t order = 0;
  std::uint64_t exponent = 1;
};

// Closure over the integers; finite only for finite integer matrix groups,
// the cap turns a divergent closure into GroupTooLarge.
IntClosure close_group_integer(const std::vector<IntMat>& generators,
                               std::size_t cap = kDefaultClosureCap);

Mat reduce_mod(const fp::PrimeField& F, const IntMat& m);

}  // namespace veronese::linverify
