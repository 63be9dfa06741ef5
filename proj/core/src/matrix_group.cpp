#include "veronese/matrix_group.hpp"

#include <map>
#include <numeric>
#include <string>

namespace veronese::linverify {

Mat Mat::identity(std::size_t dim) {
  Mat m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

Mat mat_mul(const fp::PrimeField& F, const Mat& A, const Mat& B) {
  if (A.n != B.n) fail(errc::dimension_mismatch, "matrix dimensions differ");
  Mat C(A.n);
  for (std::size_t i = 0; i < A.n; ++i) {
    for (std::size_t k = 0; k < A.n; ++k) {
      const std::uint64_t aik = A.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < A.n; ++j) {
        C.at(i, j) = (C.at(i, j) + aik * B.at(k, j)) % F.characteristic();
      }
    }
  }
  return C;
}

bool mat_invertible(const fp::PrimeField& F, Mat A) {
  const std::size_t n = A.n;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && A.at(pivot, col) == 0) ++pivot;
    if (pivot == n) continue;
    std::swap_ranges(A.a.begin() + static_cast<std::ptrdiff_t>(pivot * n),
                     A.a.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * n),
                     A.a.begin() + static_cast<std::ptrdiff_t>(rank * n));
    const std::uint64_t inv = F.inv(A.at(rank, col));
    for (std::size_t j = 0; j < n; ++j) A.at(rank, j) = F.mul(A.at(rank, j), inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == rank || A.at(i, col) == 0) continue;
      const std::uint64_t f = A.at(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(rank, j)));
      }
    }
    ++rank;
  }
  return rank == n;
}

namespace {

template <typename M, typename Mul>
std::vector<M> bfs_closure(const std::vector<M>& generators, const M& id, Mul&& mul,
                           std::size_t cap) {
  std::map<M, std::size_t> seen;
  std::vector<M> elements;
  elements.push_back(id);
  seen.emplace(id, 0);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const M& g : generators) {
      M next = mul(elements[head], g);
      if (seen.emplace(next, elements.size()).second) {
        if (elements.size() + 1 > cap) {
          fail(errc::group_too_large, "closure exceeds cap of " + std::to_string(cap));
        }
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

template <typename M, typename Mul>
std::uint64_t element_exponent(const std::vector<M>& elements, const M& id, Mul&& mul) {
  std::uint64_t e = 1;
  for (const M& g : elements) {
    std::uint64_t ord = 1;
    M acc = g;
    while (!(acc == id)) {
      acc = mul(acc, g);
      ++ord;
    }
    e = std::lcm(e, ord);
  }
  return e;
}

}  // namespace

MatrixGroup close_group(const fp::PrimeField& field, std::vector<Mat> generators, std::size_t cap) {
  if (generators.empty()) fail(errc::invalid_argument, "need at least one generator");
  const std::size_t n = generators.front().n;
  for (const Mat& g : generators) {
    if (g.n != n) fail(errc::dimension_mismatch, "generators of mixed dimension");
    if (!mat_invertible(field, g)) fail(errc::not_invertible, "generator is singular");
  }
  const Mat id = Mat::identity(n);
  auto mul = [&](const Mat& a, const Mat& b) { return mat_mul(field, a, b); };
  std::vector<Mat> elements = bfs_closure(generators, id, mul, cap);
  MatrixGroup grp{field, n, std::move(generators), std::move(elements), 1};
  grp.exponent = element_exponent(grp.elements, id, mul);
  if (grp.order() % field.characteristic() == 0) {
    fail(errc::characteristic_divides_order,
         "characteristic " + std::to_string(field.characteristic()) + " divides the group order " +
             std::to_string(grp.order()));
  }
  return grp;
}

IntClosure close_group_integer(const std::vector<IntMat>& generators, std::size_t cap) {
  if (generators.empty()) fail(errc::invalid_argument, "need at least one generator");
  const std::size_t n = generators.front().n;
  for (const IntMat& g : generators) {
    if (g.n != n) fail(errc::dimension_mismatch, "generators of mixed dimension");
  }
  IntMat id(n);
  for (std::size_t i = 0; i < n; ++i) id.at(i, i) = 1;
  auto mul = [&](const IntMat& a, const IntMat& b) {
    IntMat c(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const std::int64_t aik = a.at(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < n; ++j) c.at(i, j) += aik * b.at(k, j);
      }
    }
    return c;
  };
  IntClosure cl;
  cl.elements = bfs_closure(generators, id, mul, cap);
  cl.order = cl.elements.size();
  cl.exponent = element_exponent(cl.elements, id, mul);
  return cl;
}

Mat reduce_mod(const fp::PrimeField& F, const IntMat& m) {
  Mat out(m.n);
  for (std::size_t i = 0; i < m.n * m.n; ++i) {
    out.a[i] = F.reduce(m.a[i]);
  }
  return out;
}

}  // namespace veronese::linverify
