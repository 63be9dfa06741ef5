#include "veronese/poly.hpp"

#include <algorithm>
#include <cassert>

namespace veronese::linverify {

namespace {

// Grlex-descending comparison within a fixed degree reduces to plain
// lexicographic comparison of exponent vectors, larger first.
bool mono_before(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  return a > b;
}

std::uint64_t count_monomials(std::size_t nvars, std::uint64_t degree, std::uint64_t guard) {
  // C(nvars + degree - 1, degree), clamped against the guard.
  std::uint64_t count = 1;
  for (std::uint64_t i = 1; i < nvars; ++i) {
    // count *= (degree + i) / i, exact at each step
    if (count > guard * 4) return guard + 1;  // avoid overflow, already too big
    count = count * (degree + i) / i;
  }
  return count;
}

}  // namespace

std::string Polynomial::to_string(const std::string& var_prefix) const {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (t > 0) out += " + ";
    const auto& [exps, coeff] = terms[t];
    out += std::to_string(coeff);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      out += "*" + var_prefix + std::to_string(i + 1);
      if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
    }
  }
  return out;
}

MonomialTable::MonomialTable(std::size_t nvars, std::uint64_t degree, std::uint64_t guard)
    : nvars_(nvars), degree_(degree) {
  if (count_monomials(nvars, degree, guard) > guard) {
    fail(errc::too_large, "monomial table for degree " + std::to_string(degree) +
                              " in " + std::to_string(nvars) + " variables exceeds guard");
  }
  std::vector<std::uint32_t> exps(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t rest) -> void {
    if (i + 1 == nvars) {
      exps[i] = static_cast<std::uint32_t>(rest);
      monomials_.push_back(exps);
      exps[i] = 0;
      return;
    }
    for (std::uint64_t e = rest + 1; e-- > 0;) {
      exps[i] = static_cast<std::uint32_t>(e);
      self(self, i + 1, rest - e);
    }
    exps[i] = 0;
  };
  if (nvars > 0) {
    rec(rec, 0, degree);
  } else if (degree == 0) {
    monomials_.push_back({});
  }
  assert(std::is_sorted(monomials_.begin(), monomials_.end(),
                        [](const auto& a, const auto& b) { return mono_before(a, b); }));
}

std::size_t MonomialTable::index_of(const std::vector<std::uint32_t>& exps) const {
  auto it = std::lower_bound(monomials_.begin(), monomials_.end(), exps,
                             [](const auto& a, const auto& b) { return mono_before(a, b); });
  if (it == monomials_.end() || *it != exps) {
    fail(errc::invalid_argument, "monomial not in table");
  }
  return static_cast<std::size_t>(it - monomials_.begin());
}

PolyContext::PolyContext(fp::PrimeField field, std::size_t nvars, std::uint64_t guard)
    : field_(field), nvars_(nvars), guard_(guard) {}

const MonomialTable& PolyContext::table(std::uint64_t degree) {
  auto it = tables_.find(degree);
  if (it == tables_.end()) {
    it = tables_.emplace(degree, MonomialTable(nvars_, degree, guard_)).first;
  }
  return it->second;
}

PolyContext::Dense PolyContext::dense_monomial(const std::vector<std::uint32_t>& exps) {
  std::uint64_t degree = 0;
  for (std::uint32_t e : exps) degree += e;
  const MonomialTable& tab = table(degree);
  Dense d(tab.size(), 0);
  d[tab.index_of(exps)] = 1;
  return d;
}

PolyContext::Dense PolyContext::to_dense(const Polynomial& p) {
  const MonomialTable& tab = table(p.degree);
  Dense d(tab.size(), 0);
  for (const auto& [exps, coeff] : p.terms) {
    d[tab.index_of(exps)] = field_.add(d[tab.index_of(exps)], coeff % field_.characteristic());
  }
  return d;
}

Polynomial PolyContext::to_sparse(std::uint64_t degree, const Dense& coeffs) {
  const MonomialTable& tab = table(degree);
  Polynomial p;
  p.degree = degree;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) p.terms.emplace_back(tab[i], coeffs[i]);
  }
  return p;
}

PolyContext::Dense PolyContext::multiply(std::uint64_t deg_a, const Dense& a, std::uint64_t deg_b,
                                         const Dense& b) {
  const MonomialTable& ta = table(deg_a);
  const MonomialTable& tb = table(deg_b);
  const MonomialTable& tc = table(deg_a + deg_b);
  Dense c(tc.size(), 0);
  std::vector<std::uint32_t> exps(nvars_);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      for (std::size_t v = 0; v < nvars_; ++v) exps[v] = ta[i][v] + tb[j][v];
      const std::size_t k = tc.index_of(exps);
      c[k] = (c[k] + a[i] * b[j]) % field_.characteristic();
    }
  }
  return c;
}

PolyContext::Dense PolyContext::apply_matrix_monomial(const Mat& m,
                                                      const std::vector<std::uint32_t>& exps) {
  if (m.n != nvars_) fail(errc::dimension_mismatch, "matrix does not match variable count");
  // Product over variables of (row_i(m) . x)^{e_i}, built degree by degree.
  Dense acc = {1};  // degree-0 polynomial 1
  std::uint64_t acc_deg = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps[i] == 0) continue;
    Dense linear(table(1).size(), 0);
    for (std::size_t j = 0; j < nvars_; ++j) {
      // table(1) lists x_1 first, x_n last
      linear[table(1).index_of([&] {
        std::vector<std::uint32_t> e(nvars_, 0);
        e[j] = 1;
        return e;
      }())] = m.at(i, j);
    }
    for (std::uint32_t rep = 0; rep < exps[i]; ++rep) {
      acc = multiply(acc_deg, acc, 1, linear);
      ++acc_deg;
    }
  }
  return acc;
}

Polynomial PolyContext::apply_matrix(const Mat& m, const Polynomial& p) {
  const MonomialTable& tab = table(p.degree);
  Dense out(tab.size(), 0);
  for (const auto& [exps, coeff] : p.terms) {
    Dense img = apply_matrix_monomial(m, exps);
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] = (out[k] + coeff * img[k]) % field_.characteristic();
    }
  }
  return to_sparse(p.degree, out);
}

}  // namespace veronese::linverify
