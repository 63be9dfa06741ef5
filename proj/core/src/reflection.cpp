#include "veronese/reflection.hpp"

#include <numeric>

#include "veronese/monoid.hpp"

namespace veronese::reflection {

namespace {

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

ReflectionGroupEntry symmetric(std::uint64_t n) {
  ReflectionGroupEntry e;
  e.name = "symmetric_" + std::to_string(n);
  e.order = factorial(n);
  for (std::uint64_t d = 1; d <= n; ++d) e.degrees.push_back(d);
  e.dimension = static_cast<std::size_t>(n);
  e.kind = RepKind::permutation;
  e.parameter = n;
  e.root_order = 1;
  e.exponent = 1;
  for (std::uint64_t d = 1; d <= n; ++d) e.exponent = std::lcm(e.exponent, d);
  return e;
}

ReflectionGroupEntry dihedral(std::uint64_t m) {
  ReflectionGroupEntry e;
  e.name = "dihedral_" + std::to_string(m);
  e.order = 2 * m;
  e.degrees = {2, m};
  e.dimension = 2;
  e.kind = RepKind::dihedral;
  e.parameter = m;
  e.root_order = m;
  e.exponent = std::lcm<std::uint64_t>(2, m);
  return e;
}

ReflectionGroupEntry hyperoctahedral(std::uint64_t n) {
  ReflectionGroupEntry e;
  e.name = "signed_permutation_" + std::to_string(n);
  e.order = (std::uint64_t{1} << n) * factorial(n);
  for (std::uint64_t d = 1; d <= n; ++d) e.degrees.push_back(2 * d);
  e.dimension = static_cast<std::size_t>(n);
  e.kind = RepKind::signed_permutation;
  e.parameter = n;
  e.root_order = 1;
  e.exponent = 2;
  for (std::uint64_t d = 1; d <= n; ++d) e.exponent = std::lcm(e.exponent, 2 * d);
  return e;
}

ReflectionGroupEntry scalar(std::uint64_t m) {
  ReflectionGroupEntry e;
  e.name = "cyclic_scalar_" + std::to_string(m);
  e.order = m;
  e.degrees = {m};
  e.dimension = 1;
  e.kind = RepKind::scalar;
  e.parameter = m;
  e.root_order = m;
  e.exponent = m;
  return e;
}

std::vector<ReflectionGroupEntry> build_catalog() {
  std::vector<ReflectionGroupEntry> entries;
  ReflectionGroupEntry trivial;
  trivial.name = "trivial";
  trivial.order = 1;
  trivial.degrees = {1};
  trivial.dimension = 1;
  trivial.kind = RepKind::trivial;
  trivial.parameter = 1;
  trivial.root_order = 1;
  trivial.exponent = 1;
  entries.push_back(trivial);
  entries.push_back(symmetric(2));
  entries.push_back(symmetric(3));
  entries.push_back(symmetric(4));
  entries.push_back(dihedral(3));
  entries.push_back(dihedral(4));
  entries.push_back(dihedral(5));
  entries.push_back(dihedral(6));
  entries.push_back(hyperoctahedral(2));
  entries.push_back(hyperoctahedral(3));
  for (std::uint64_t m = 2; m <= 6; ++m) entries.push_back(scalar(m));

  for (const auto& e : entries) {
    std::uint64_t prod = 1;
    for (std::uint64_t d : e.degrees) prod *= d;
    if (prod != e.order) {
      fail(errc::invalid_argument, "catalog entry " + e.name + " fails the degree product check");
    }
  }
  return entries;
}

}  // namespace

const std::vector<ReflectionGroupEntry>& catalog() {
  static const std::vector<ReflectionGroupEntry> entries = build_catalog();
  return entries;
}

const ReflectionGroupEntry* find_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::uint64_t weighted_degree(const ReflectionGroupEntry& entry, const FundamentalExponent& e) {
  if (e.size() != entry.degrees.size()) {
    fail(errc::dimension_mismatch, "expected " + std::to_string(entry.degrees.size()) +
                                       " exponents, got " + std::to_string(e.size()));
  }
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < e.size(); ++i) v += e[i] * entry.degrees[i];
  return v;
}

std::vector<FundamentalExponent> rd_basis(const ReflectionGroupEntry& entry, std::uint64_t d,
                                          std::size_t guard) {
  return monoid::knapsack_solutions(entry.degrees, d * entry.order, guard);
}

std::vector<FundamentalExponent> factor(const ReflectionGroupEntry& entry,
                                        const FundamentalExponent& exponent) {
  const std::uint64_t v = weighted_degree(entry, exponent);
  if (v == 0 || v % entry.order != 0) {
    fail(errc::not_multiple, "weighted degree " + std::to_string(v) +
                                 " is not a positive multiple of " + std::to_string(entry.order));
  }
  monoid::WeightedMonoidInstance inst(entry.degrees);
  return monoid::decompose(inst, exponent);
}

}  // namespace veronese::reflection
