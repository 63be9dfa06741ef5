#include "veronese/diagonal.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <string>

#include "veronese/zerosum.hpp"

namespace veronese::diagonal {

namespace {

void check_dimension(const DiagonalAction& action, const Monomial& m) {
  if (m.exponents.size() != action.dimension()) {
    fail(errc::dimension_mismatch, "monomial has " + std::to_string(m.exponents.size()) +
                                       " exponents, action has dimension " +
                                       std::to_string(action.dimension()));
  }
}

GroupElement identity(const AbelianGroup& g) { return GroupElement(g.orders.size(), 0); }

GroupElement add(const AbelianGroup& g, const GroupElement& a, const GroupElement& b) {
  GroupElement c(g.orders.size());
  for (std::size_t j = 0; j < g.orders.size(); ++j) c[j] = (a[j] + b[j]) % g.orders[j];
  return c;
}

// C(n + D - 1, D) compared against the guard without overflow.
BigInt monomial_count(std::size_t nvars, std::uint64_t degree) {
  BigInt num = 1;
  for (std::uint64_t i = 1; i < nvars; ++i) {
    num *= BigInt(degree + i);
    num /= BigInt(i);
  }
  return num;
}

// Enumerate monomials of fixed degree, leading exponent descending, calling
// fn on each exponent vector.
template <typename Fn>
void for_each_monomial(std::size_t nvars, std::uint64_t degree, Fn&& fn) {
  std::vector<std::uint64_t> exps(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t rest) -> void {
    if (i + 1 == nvars) {
      exps[i] = rest;
      fn(exps);
      exps[i] = 0;
      return;
    }
    for (std::uint64_t e = rest + 1; e-- > 0;) {
      exps[i] = e;
      self(self, i + 1, rest - e);
    }
    exps[i] = 0;
  };
  if (nvars > 0) {
    rec(rec, 0, degree);
  } else if (degree == 0) {
    fn(exps);
  }
}

}  // namespace

std::uint64_t AbelianGroup::order() const {
  std::uint64_t o = 1;
  for (std::uint64_t m : orders) {
    if (m == 0) fail(errc::invalid_argument, "cyclic order must be >= 1");
    o *= m;
  }
  return o;
}

std::uint64_t AbelianGroup::exponent() const {
  std::uint64_t e = 1;
  for (std::uint64_t m : orders) e = std::lcm(e, m);
  return e;
}

DiagonalAction::DiagonalAction(AbelianGroup g, std::vector<GroupElement> variable_weights)
    : group(std::move(g)), weights(std::move(variable_weights)) {
  const std::uint64_t order = group.order();  // validates the orders
  for (auto& w : weights) {
    if (w.size() != group.orders.size()) {
      fail(errc::dimension_mismatch, "weight arity does not match group rank");
    }
    for (std::size_t j = 0; j < w.size(); ++j) w[j] %= group.orders[j];
  }
  // Faithful iff the weights generate the full dual group.
  std::set<GroupElement> span;
  span.insert(identity(group));
  bool grew = true;
  while (grew && span.size() < order) {
    grew = false;
    for (const auto& w : weights) {
      std::vector<GroupElement> next;
      for (const auto& s : span) next.push_back(add(group, s, w));
      for (auto& s : next) {
        if (span.insert(std::move(s)).second) grew = true;
      }
    }
  }
  faithful = (span.size() == order);
}

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (std::uint64_t e : exponents) d += e;
  return d;
}

GroupElement weight_of(const DiagonalAction& action, const Monomial& monomial) {
  check_dimension(action, monomial);
  GroupElement w = identity(action.group);
  for (std::size_t i = 0; i < action.dimension(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      w[j] = (w[j] + monomial.exponents[i] % action.group.orders[j] * action.weights[i][j]) %
             action.group.orders[j];
    }
  }
  return w;
}

bool is_invariant(const DiagonalAction& action, const Monomial& monomial) {
  const GroupElement w = weight_of(action, monomial);
  return std::all_of(w.begin(), w.end(), [](std::uint64_t c) { return c == 0; });
}

std::vector<Monomial> basis(const DiagonalAction& action, std::uint64_t d, std::uint64_t guard) {
  const std::uint64_t degree = d * action.group.order();
  if (monomial_count(action.dimension(), degree) > guard) {
    fail(errc::too_large, "degree-" + std::to_string(degree) + " monomial count exceeds guard");
  }
  std::vector<Monomial> out;
  for_each_monomial(action.dimension(), degree, [&](const std::vector<std::uint64_t>& exps) {
    Monomial m{exps};
    if (is_invariant(action, m)) out.push_back(std::move(m));
  });
  return out;
}

std::vector<Monomial> factor_invariant(const DiagonalAction& action, const Monomial& monomial) {
  check_dimension(action, monomial);
  const std::uint64_t g = action.group.order();
  const std::uint64_t degree = monomial.degree();
  if (degree == 0 || degree % g != 0) {
    fail(errc::wrong_degree,
         "degree " + std::to_string(degree) + " is not a positive multiple of " + std::to_string(g));
  }
  if (!is_invariant(action, monomial)) fail(errc::not_invariant, "monomial is not invariant");

  // Letters in variable-major order; each letter carries its variable.
  std::vector<std::size_t> letters;
  letters.reserve(static_cast<std::size_t>(degree));
  for (std::size_t i = 0; i < action.dimension(); ++i) {
    for (std::uint64_t c = 0; c < monomial.exponents[i]; ++c) letters.push_back(i);
  }

  const bool cyclic = action.group.orders.size() == 1;
  std::vector<Monomial> parts;
  std::uint64_t d = degree / g;
  while (d >= 2) {
    zerosum::IndexSet picked;
    if (cyclic) {
      std::vector<std::uint64_t> vals;
      vals.reserve(letters.size());
      for (std::size_t v : letters) vals.push_back(action.weights[v][0]);
      picked = zerosum::egz(zerosum::ResidueSequence::from_reduced(action.group.orders[0], vals));
    } else {
      std::vector<std::vector<std::uint64_t>> vals;
      vals.reserve(letters.size());
      for (std::size_t v : letters) vals.push_back(action.weights[v]);
      picked = zerosum::egz_abelian(
          zerosum::AbelianElementSequence::from_reduced(action.group.orders, vals));
    }
    Monomial part{std::vector<std::uint64_t>(action.dimension(), 0)};
    for (auto it = picked.rbegin(); it != picked.rend(); ++it) {
      part.exponents[letters[*it]] += 1;
      letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(*it));
    }
    parts.push_back(std::move(part));
    --d;
  }
  Monomial last{std::vector<std::uint64_t>(action.dimension(), 0)};
  for (std::size_t v : letters) last.exponents[v] += 1;
  parts.push_back(std::move(last));
  return parts;
}

std::vector<GenerationReport> check_generation(const DiagonalAction& action, std::uint64_t d_max,
                                               std::uint64_t guard) {
  if (d_max < 1) fail(errc::invalid_argument, "d_max must be >= 1");
  std::vector<GenerationReport> reports;
  for (std::uint64_t d = 1; d <= d_max; ++d) {
    GenerationReport rep;
    rep.d = d;
    const std::vector<Monomial> rd = basis(action, d, guard);
    rep.dim_rd = rd.size();
    for (const Monomial& m : rd) {
      std::vector<Monomial> parts = factor_invariant(action, m);
      bool ok = parts.size() == d;
      std::vector<std::uint64_t> acc(action.dimension(), 0);
      for (const Monomial& p : parts) {
        if (p.degree() != action.group.order() || !is_invariant(action, p)) ok = false;
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += p.exponents[i];
      }
      if (acc != m.exponents) ok = false;
      if (ok) {
        rep.witnesses.emplace_back(m, std::move(parts));
      } else {
        rep.counterexamples.push_back(m);
      }
    }
    rep.all_factorable = rep.counterexamples.empty();
    reports.push_back(std::move(rep));
  }
  return reports;
}

BigInt dimension(const DiagonalAction& action, std::uint64_t d) {
  const std::uint64_t g = action.group.order();
  const std::uint64_t degree = d * g;
  const auto& orders = action.group.orders;

  // Index group elements in mixed radix over the cyclic orders.
  std::uint64_t gsize = 1;
  for (std::uint64_t m : orders) gsize *= m;
  auto index_of = [&](const GroupElement& e) {
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < orders.size(); ++j) idx = idx * orders[j] + e[j];
    return idx;
  };

  // table[t * gsize + w] = #monomials of degree t in the first vars with
  // weight w; one bounded-knapsack pass per variable.
  std::vector<BigInt> table(static_cast<std::size_t>(degree + 1) * gsize, 0);
  table[index_of(identity(action.group))] = 1;
  for (std::size_t i = 0; i < action.dimension(); ++i) {
    std::vector<BigInt> next(table.size(), 0);
    GroupElement step = identity(action.group);
    for (std::uint64_t e = 0; e <= degree; ++e) {
      // step = e * weight_i
      const std::uint64_t shift_base = e;
      for (std::uint64_t t = 0; t + shift_base <= degree; ++t) {
        for (std::uint64_t w = 0; w < gsize; ++w) {
          const BigInt& src = table[static_cast<std::size_t>(t) * gsize + w];
          if (src == 0) continue;
          GroupElement cur(orders.size());
          std::uint64_t rem = w;
          for (std::size_t j = orders.size(); j-- > 0;) {
            cur[j] = rem % orders[j];
            rem /= orders[j];
          }
          const GroupElement moved = add(action.group, cur, step);
          next[static_cast<std::size_t>(t + shift_base) * gsize + index_of(moved)] += src;
        }
      }
      step = add(action.group, step, action.weights[i]);
    }
    table = std::move(next);
  }
  return table[static_cast<std::size_t>(degree) * gsize + index_of(identity(action.group))];
}

}  // namespace veronese::diagonal
