#include <cassert>

#include "veronese/linverify.hpp"

namespace veronese::linverify {

namespace {

using Series = std::vector<BigInt>;  // coefficients, ascending degree

// Entries of I - t*g are linear in t; coefficients stay exact integers.
struct LinPoly {
  BigInt c0;
  BigInt c1;
};

// det(I - t*g) by Laplace expansion along rows with a bitmask cache over
// column subsets; fine for the small dimensions this tool works at.
std::vector<BigInt> det_one_minus_tg(const IntMat& g) {
  const std::size_t n = g.n;
  if (n > 20) fail(errc::too_large, "Molien determinant capped at dimension 20");
  std::vector<std::vector<LinPoly>> b(n, std::vector<LinPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      b[i][j] = LinPoly{BigInt(i == j ? 1 : 0), BigInt(-g.at(i, j))};
    }
  }

  // dp[mask]: determinant of the first popcount(mask) rows on the columns
  // in mask, as a polynomial in t of degree <= popcount(mask).
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<std::vector<BigInt>> dp(full + 1);
  dp[0] = {BigInt(1)};
  for (std::size_t mask = 1; mask <= full; ++mask) {
    const int k = __builtin_popcountll(mask);
    std::vector<BigInt> det(static_cast<std::size_t>(k) + 1, BigInt(0));
    int pos = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      const LinPoly& e = b[static_cast<std::size_t>(k - 1)][j];
      const std::vector<BigInt>& sub = dp[mask & ~(std::size_t{1} << j)];
      const bool negate = ((k - 1) + pos) % 2 != 0;
      for (std::size_t d = 0; d < sub.size(); ++d) {
        BigInt t0 = e.c0 * sub[d];
        BigInt t1 = e.c1 * sub[d];
        if (negate) {
          t0 = -t0;
          t1 = -t1;
        }
        det[d] += t0;
        det[d + 1] += t1;
      }
      ++pos;
    }
    dp[mask] = std::move(det);
  }
  return dp[full];
}

// Multiplicative inverse of a power series with constant term 1.
Series invert_series(const std::vector<BigInt>& q, std::uint64_t max_degree) {
  assert(!q.empty() && q[0] == 1);
  Series r(max_degree + 1, BigInt(0));
  r[0] = 1;
  for (std::uint64_t k = 1; k <= max_degree; ++k) {
    BigInt acc = 0;
    for (std::uint64_t j = 1; j <= k && j < q.size(); ++j) {
      acc += q[j] * r[k - j];
    }
    r[k] = -acc;
  }
  return r;
}

IntMat lift_integer(const Mat& m, std::uint64_t p) {
  IntMat out(m.n);
  for (std::size_t i = 0; i < m.n * m.n; ++i) {
    const std::uint64_t e = m.a[i];
    if (e == 0 || e == 1) {
      out.a[i] = static_cast<std::int64_t>(e);
    } else if (e == p - 1) {
      out.a[i] = -1;
    } else {
      fail(errc::non_integer_entries,
           "entry " + std::to_string(e) + " mod " + std::to_string(p) +
               " has no integer lift in {-1, 0, 1}");
    }
  }
  return out;
}

}  // namespace

std::vector<BigInt> molien(const MatrixGroup& group, std::uint64_t max_degree) {
  const std::uint64_t p = group.field.characteristic();
  Series total(max_degree + 1, BigInt(0));
  for (const Mat& g : group.elements) {
    const IntMat lifted = lift_integer(g, p);
    std::vector<BigInt> det = det_one_minus_tg(lifted);
    assert(det[0] == 1);
    const Series inv = invert_series(det, max_degree);
    for (std::size_t k = 0; k <= max_degree; ++k) total[k] += inv[k];
  }
  const BigInt order(group.order());
  for (auto& c : total) {
    if (c % order != 0) {
      fail(errc::non_integer_entries,
           "Molien coefficient not integral; the lifted matrices do not form the same group");
    }
    c /= order;
  }
  return total;
}

}  // namespace veronese::linverify
