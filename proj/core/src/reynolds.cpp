#include <algorithm>
#include <cassert>

#include "veronese/linverify.hpp"

namespace veronese::linverify {

namespace {

// Incrementally maintained reduced row echelon form over F_p. Inserting a
// row reduces it against the current pivots, normalizes, back-eliminates,
// and keeps rows sorted by pivot column, so the row set only depends on the
// span of what was inserted.
class RowReducer {
 public:
  RowReducer(const fp::PrimeField& F, std::size_t width) : F_(F), width_(width) {}

  // Returns true when the row enlarged the span.
  bool insert(std::vector<std::uint64_t> row) {
    assert(row.size() == width_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::uint64_t c = row[pivots_[r]];
      if (c != 0) subtract(row, rows_[r], c);
    }
    std::size_t lead = 0;
    while (lead < width_ && row[lead] == 0) ++lead;
    if (lead == width_) return false;

    const std::uint64_t inv = F_.inv(row[lead]);
    for (auto& x : row) x = F_.mul(x, inv);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::uint64_t c = rows_[r][lead];
      if (c != 0) subtract(rows_[r], row, c);
    }
    const auto pos = static_cast<std::size_t>(
        std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin());
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
    return true;
  }

  // Remainder of the row after reduction against the span; zero iff the row
  // lies in it.
  std::vector<std::uint64_t> reduce(std::vector<std::uint64_t> row) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::uint64_t c = row[pivots_[r]];
      if (c != 0) subtract(row, rows_[r], c);
    }
    return row;
  }

  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<std::vector<std::uint64_t>>& rows() const noexcept { return rows_; }

 private:
  void subtract(std::vector<std::uint64_t>& target, const std::vector<std::uint64_t>& src,
                std::uint64_t factor) const {
    for (std::size_t i = 0; i < width_; ++i) {
      target[i] = F_.sub(target[i], F_.mul(factor, src[i]));
    }
  }

  fp::PrimeField F_;
  std::size_t width_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

PolyContext::Dense reynolds_dense(const MatrixGroup& group, PolyContext& ctx,
                                  const std::vector<std::uint32_t>& exps) {
  const std::uint64_t degree = [&] {
    std::uint64_t d = 0;
    for (std::uint32_t e : exps) d += e;
    return d;
  }();
  const fp::PrimeField& F = group.field;
  PolyContext::Dense sum(ctx.table(degree).size(), 0);
  for (const Mat& g : group.elements) {
    PolyContext::Dense img = ctx.apply_matrix_monomial(g, exps);
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = F.add(sum[k], img[k]);
  }
  const std::uint64_t scale = F.inv(group.order() % F.characteristic());
  for (auto& x : sum) x = F.mul(x, scale);
  return sum;
}

}  // namespace

Polynomial reynolds(const MatrixGroup& group, const Polynomial& poly, std::uint64_t guard) {
  const fp::PrimeField& F = group.field;
  if (group.order() % F.characteristic() == 0) {
    fail(errc::characteristic_divides_order, "Reynolds operator needs |G| invertible");
  }
  PolyContext ctx(F, group.dimension, guard);
  PolyContext::Dense sum(ctx.table(poly.degree).size(), 0);
  for (const auto& [exps, coeff] : poly.terms) {
    PolyContext::Dense avg = reynolds_dense(group, ctx, exps);
    for (std::size_t k = 0; k < sum.size(); ++k) {
      sum[k] = (sum[k] + coeff * avg[k]) % F.characteristic();
    }
  }
  return ctx.to_sparse(poly.degree, sum);
}

GradedBasis invariant_basis(const MatrixGroup& group, std::uint64_t degree, std::uint64_t guard) {
  const fp::PrimeField& F = group.field;
  if (group.order() % F.characteristic() == 0) {
    fail(errc::characteristic_divides_order, "invariant basis needs |G| invertible");
  }
  PolyContext ctx(F, group.dimension, guard);
  const MonomialTable& tab = ctx.table(degree);
  RowReducer reducer(F, tab.size());
  for (std::size_t i = 0; i < tab.size(); ++i) {
    reducer.insert(reynolds_dense(group, ctx, tab[i]));
  }
  GradedBasis basis;
  basis.degree = degree;
  basis.vectors.reserve(reducer.rank());
  for (const auto& row : reducer.rows()) {
    basis.vectors.push_back(ctx.to_sparse(degree, row));
  }
  return basis;
}

SurjectivityReport check_surjectivity(const MatrixGroup& group, std::uint64_t d,
                                      std::uint64_t guard) {
  if (d == 0) fail(errc::invalid_argument, "d must be >= 1");
  const fp::PrimeField& F = group.field;
  const std::uint64_t g = group.order();
  GradedBasis r1 = invariant_basis(group, g, guard);
  GradedBasis rd = invariant_basis(group, d * g, guard);

  SurjectivityReport rep;
  rep.d = d;
  rep.dim_r1 = r1.rank();
  rep.dim_rd = rd.rank();

  PolyContext ctx(F, group.dimension, guard);
  std::vector<PolyContext::Dense> r1_dense;
  r1_dense.reserve(r1.rank());
  for (const Polynomial& p : r1.vectors) r1_dense.push_back(ctx.to_dense(p));

  RowReducer span(F, ctx.table(d * g).size());
  // Multisets of basis indices in lexicographic order; rank can only reach
  // dim R_d, so stop as soon as it does.
  std::vector<std::size_t> pick(static_cast<std::size_t>(d), 0);
  bool done = r1.rank() == 0;
  while (!done && span.rank() < rep.dim_rd) {
    PolyContext::Dense prod = r1_dense[pick[0]];
    std::uint64_t deg = g;
    for (std::size_t i = 1; i < pick.size(); ++i) {
      prod = ctx.multiply(deg, prod, g, r1_dense[pick[i]]);
      deg += g;
    }
    span.insert(std::move(prod));
    // next multiset (non-decreasing index tuples)
    std::size_t i = pick.size();
    while (i-- > 0) {
      if (pick[i] + 1 < r1.rank()) {
        ++pick[i];
        for (std::size_t j = i + 1; j < pick.size(); ++j) pick[j] = pick[i];
        break;
      }
      if (i == 0) done = true;
    }
  }
  rep.rank = span.rank();
  rep.surjective = rep.rank == rep.dim_rd;
  if (!rep.surjective) {
    for (const Polynomial& p : rd.vectors) {
      auto rem = span.reduce(ctx.to_dense(p));
      if (std::any_of(rem.begin(), rem.end(), [](std::uint64_t x) { return x != 0; })) {
        rep.missing = ctx.to_sparse(d * g, rem);
        break;
      }
    }
  }
  return rep;
}

std::vector<Mat> materialize_entry(const reflection::ReflectionGroupEntry& entry,
                                   const fp::PrimeField& field) {
  const std::size_t n = entry.dimension;
  const std::uint64_t p = field.characteristic();
  std::vector<Mat> gens;
  switch (entry.kind) {
    case reflection::RepKind::trivial: {
      gens.push_back(Mat::identity(n));
      break;
    }
    case reflection::RepKind::permutation: {
      // transposition (1 2) and the n-cycle
      Mat t = Mat::identity(n);
      if (n >= 2) {
        t.at(0, 0) = 0;
        t.at(1, 1) = 0;
        t.at(0, 1) = 1;
        t.at(1, 0) = 1;
      }
      Mat c(n);
      for (std::size_t i = 0; i < n; ++i) c.at(i, (i + 1) % n) = 1;
      gens.push_back(t);
      gens.push_back(c);
      break;
    }
    case reflection::RepKind::signed_permutation: {
      Mat t = Mat::identity(n);
      if (n >= 2) {
        t.at(0, 0) = 0;
        t.at(1, 1) = 0;
        t.at(0, 1) = 1;
        t.at(1, 0) = 1;
      }
      Mat c(n);
      for (std::size_t i = 0; i < n; ++i) c.at(i, (i + 1) % n) = 1;
      Mat s = Mat::identity(n);
      s.at(0, 0) = p - 1;
      gens.push_back(t);
      gens.push_back(c);
      gens.push_back(s);
      break;
    }
    case reflection::RepKind::dihedral: {
      const std::uint64_t z = field.root_of_unity(entry.parameter);
      Mat r(2);
      r.at(0, 0) = z;
      r.at(1, 1) = field.inv(z);
      Mat s(2);
      s.at(0, 1) = 1;
      s.at(1, 0) = 1;
      gens.push_back(r);
      gens.push_back(s);
      break;
    }
    case reflection::RepKind::scalar: {
      Mat z(1);
      z.at(0, 0) = field.root_of_unity(entry.parameter);
      gens.push_back(z);
      break;
    }
  }
  return gens;
}

std::vector<Mat> materialize_diagonal(const diagonal::DiagonalAction& action,
                                      const fp::PrimeField& field) {
  const std::size_t n = action.dimension();
  std::vector<Mat> gens;
  for (std::size_t j = 0; j < action.group.orders.size(); ++j) {
    const std::uint64_t m = action.group.orders[j];
    const std::uint64_t z = field.root_of_unity(m);
    Mat g(n);
    for (std::size_t i = 0; i < n; ++i) {
      g.at(i, i) = field.pow(z, action.weights[i][j]);
    }
    gens.push_back(g);
  }
  if (gens.empty()) gens.push_back(Mat::identity(n));
  return gens;
}

}  // namespace veronese::linverify
