#include "veronese/zerosum.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

#include "veronese/fp.hpp"

namespace veronese::zerosum {

namespace {

constexpr std::size_t kOracleLengthCap = 25;

std::vector<std::uint64_t> reduce_terms(std::uint64_t m, const std::vector<std::int64_t>& raw) {
  if (m == 0) fail(errc::invalid_argument, "modulus must be >= 1");
  std::vector<std::uint64_t> out;
  out.reserve(raw.size());
  const auto sm = static_cast<std::int64_t>(m);
  for (std::int64_t t : raw) {
    std::int64_t r = t % sm;
    if (r < 0) r += sm;
    out.push_back(static_cast<std::uint64_t>(r));
  }
  return out;
}

// EGZ for prime p on the first 2p-1 entries of vals; returns sorted local
// positions. vals need not be reduced mod p.
IndexSet egz_prime_local(const std::vector<std::uint64_t>& vals, std::uint64_t p) {
  const std::size_t k = static_cast<std::size_t>(2 * p - 1);
  assert(vals.size() >= k);

  std::vector<Index> order(k);
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return vals[a] % p < vals[b] % p;
  });
  auto val = [&](std::size_t sorted_pos) { return vals[order[sorted_pos]] % p; };

  // A residue repeating p times shows up as a constant window of width p.
  for (std::size_t i = 0; i + p - 1 < k; ++i) {
    if (val(i) == val(i + p - 1)) {
      IndexSet res(order.begin() + static_cast<std::ptrdiff_t>(i),
                   order.begin() + static_cast<std::ptrdiff_t>(i + p));
      std::sort(res.begin(), res.end());
      return res;
    }
  }

  // Pairs (s_i, s_{i+p-1}) now have distinct residues. Reach every sum in
  // p-1 steps; layer-by-layer fill with first-writer-wins keeps the
  // reconstruction deterministic and biased toward earlier positions.
  const std::size_t stages = static_cast<std::size_t>(p - 1);
  const Index leftover = order[k - 1];
  const std::uint64_t target = (p - vals[leftover] % p) % p;

  // choice[s][sum]: 0 = unreached, 1 = low element of pair s, 2 = high.
  std::vector<std::vector<std::uint8_t>> choice(stages + 1,
                                                std::vector<std::uint8_t>(p, 0));
  std::vector<std::vector<std::uint64_t>> reached(stages + 1);
  reached[0] = {0};
  std::vector<char> seen_next(p, 0);
  for (std::size_t s = 1; s <= stages; ++s) {
    const std::uint64_t lo = val(s - 1);
    const std::uint64_t hi = val(s - 1 + p - 1);
    std::fill(seen_next.begin(), seen_next.end(), 0);
    for (std::uint64_t sum : reached[s - 1]) {
      for (int which = 0; which < 2; ++which) {
        const std::uint64_t ns = (sum + (which == 0 ? lo : hi)) % p;
        if (!seen_next[ns]) {
          seen_next[ns] = 1;
          choice[s][ns] = static_cast<std::uint8_t>(which + 1);
          reached[s].push_back(ns);
        }
      }
    }
    std::sort(reached[s].begin(), reached[s].end());
  }

  IndexSet res;
  std::uint64_t sum = target;
  for (std::size_t s = stages; s >= 1; --s) {
    const std::uint8_t c = choice[s][sum];
    if (c == 0) throw std::logic_error("egz_prime: sum set not full after p-1 stages");
    const std::size_t sorted_pos = (c == 1) ? s - 1 : s - 1 + p - 1;
    res.push_back(order[sorted_pos]);
    sum = (sum + p - val(sorted_pos) % p) % p;
  }
  assert(sum == 0);
  res.push_back(leftover);
  std::sort(res.begin(), res.end());
  return res;
}

// General EGZ on local positions; never looks past the first 2m-1 entries.
IndexSet egz_local(const std::vector<std::uint64_t>& vals, std::uint64_t m) {
  assert(vals.size() >= 2 * m - 1);
  if (m == 1) return {0};
  if (fp::is_prime(m)) return egz_prime_local(vals, m);

  const std::uint64_t p = fp::smallest_prime_factor(m);
  const std::uint64_t v = m / p;

  // Extract 2v-1 zero-sum p-blocks greedily from the front of the pool,
  // then recurse on the block sums divided by p.
  std::vector<Index> pool(vals.size());
  std::iota(pool.begin(), pool.end(), Index{0});
  std::vector<IndexSet> blocks;
  std::vector<std::uint64_t> block_sums;
  for (std::uint64_t b = 0; b < 2 * v - 1; ++b) {
    std::vector<std::uint64_t> window;
    window.reserve(static_cast<std::size_t>(2 * p - 1));
    for (std::size_t i = 0; i < static_cast<std::size_t>(2 * p - 1); ++i) {
      window.push_back(vals[pool[i]]);
    }
    IndexSet local = egz_prime_local(window, p);
    IndexSet block;
    block.reserve(local.size());
    std::uint64_t sum = 0;
    for (Index li : local) {
      block.push_back(pool[li]);
      sum += vals[pool[li]];
    }
    assert(sum % p == 0);
    block_sums.push_back(sum / p % v);
    blocks.push_back(block);
    // Remove chosen positions; local indices are sorted ascending.
    for (auto it = local.rbegin(); it != local.rend(); ++it) {
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(*it));
    }
  }

  IndexSet chosen_blocks = egz_local(block_sums, v);
  IndexSet res;
  for (Index bi : chosen_blocks) {
    res.insert(res.end(), blocks[bi].begin(), blocks[bi].end());
  }
  std::sort(res.begin(), res.end());
  return res;
}

}  // namespace

ResidueSequence::ResidueSequence(std::uint64_t m, const std::vector<std::int64_t>& raw)
    : modulus(m), terms(reduce_terms(m, raw)) {}

ResidueSequence ResidueSequence::from_reduced(std::uint64_t m, std::vector<std::uint64_t> reduced) {
  if (m == 0) fail(errc::invalid_argument, "modulus must be >= 1");
  ResidueSequence seq(m, {});
  for (std::uint64_t t : reduced) {
    if (t >= m) fail(errc::invalid_argument, "term not reduced");
  }
  seq.terms = std::move(reduced);
  return seq;
}

std::uint64_t ResidueSequence::sum_mod() const noexcept {
  std::uint64_t s = 0;
  for (std::uint64_t t : terms) s = (s + t) % modulus;
  return s;
}

AbelianElementSequence::AbelianElementSequence(std::vector<std::uint64_t> group_orders,
                                               const std::vector<std::vector<std::int64_t>>& raw)
    : orders(std::move(group_orders)) {
  for (std::uint64_t m : orders) {
    if (m == 0) fail(errc::invalid_argument, "cyclic order must be >= 1");
  }
  terms.reserve(raw.size());
  for (const auto& tuple : raw) {
    if (tuple.size() != orders.size()) {
      fail(errc::dimension_mismatch, "tuple arity does not match group rank");
    }
    std::vector<std::uint64_t> t(orders.size());
    for (std::size_t j = 0; j < orders.size(); ++j) {
      const auto sm = static_cast<std::int64_t>(orders[j]);
      std::int64_t r = tuple[j] % sm;
      if (r < 0) r += sm;
      t[j] = static_cast<std::uint64_t>(r);
    }
    terms.push_back(std::move(t));
  }
}

AbelianElementSequence AbelianElementSequence::from_reduced(
    std::vector<std::uint64_t> group_orders, std::vector<std::vector<std::uint64_t>> reduced) {
  AbelianElementSequence seq(std::move(group_orders), {});
  for (const auto& tuple : reduced) {
    if (tuple.size() != seq.orders.size()) {
      fail(errc::dimension_mismatch, "tuple arity does not match group rank");
    }
    for (std::size_t j = 0; j < tuple.size(); ++j) {
      if (tuple[j] >= seq.orders[j]) fail(errc::invalid_argument, "component not reduced");
    }
  }
  seq.terms = std::move(reduced);
  return seq;
}

std::uint64_t AbelianElementSequence::group_order() const noexcept {
  std::uint64_t g = 1;
  for (std::uint64_t m : orders) g *= m;
  return g;
}

std::vector<std::uint64_t> AbelianElementSequence::sum_mod() const {
  std::vector<std::uint64_t> s(orders.size(), 0);
  for (const auto& t : terms) {
    for (std::size_t j = 0; j < orders.size(); ++j) {
      s[j] = (s[j] + t[j]) % orders[j];
    }
  }
  return s;
}

IndexSet egz_prime(const ResidueSequence& seq) {
  const std::uint64_t p = seq.modulus;
  if (!fp::is_prime(p)) {
    fail(errc::not_prime, "modulus " + std::to_string(p) + " is not prime");
  }
  if (seq.length() < 2 * p - 1) {
    fail(errc::length_too_short,
         "need at least " + std::to_string(2 * p - 1) + " terms, have " + std::to_string(seq.length()));
  }
  return egz_prime_local(seq.terms, p);
}

IndexSet egz(const ResidueSequence& seq) {
  const std::uint64_t m = seq.modulus;
  if (seq.length() < 2 * m - 1 || seq.length() == 0) {
    fail(errc::length_too_short,
         "need at least " + std::to_string(2 * m - 1 > 0 ? 2 * m - 1 : 1) + " terms, have " +
             std::to_string(seq.length()));
  }
  return egz_local(seq.terms, m);
}

BlockPartition partition_zero_sum(const ResidueSequence& seq) {
  const std::uint64_t m = seq.modulus;
  if (seq.length() == 0 || seq.length() % m != 0) {
    fail(errc::length_not_multiple, "length must be a positive multiple of the modulus");
  }
  if (seq.sum_mod() != 0) {
    fail(errc::total_not_zero, "total term-sum must vanish mod " + std::to_string(m));
  }

  BlockPartition part;
  std::vector<Index> remaining(seq.length());
  std::iota(remaining.begin(), remaining.end(), Index{0});
  while (remaining.size() >= static_cast<std::size_t>(2 * m - 1)) {
    std::vector<std::uint64_t> vals;
    vals.reserve(remaining.size());
    for (Index i : remaining) vals.push_back(seq.terms[i]);
    IndexSet local = egz_local(vals, m);
    IndexSet block;
    block.reserve(local.size());
    for (Index li : local) block.push_back(remaining[li]);
    for (auto it = local.rbegin(); it != local.rend(); ++it) {
      remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(*it));
    }
    part.blocks.push_back(std::move(block));
  }
  if (!remaining.empty()) {
    assert(remaining.size() == m);
#ifndef NDEBUG
    std::uint64_t s = 0;
    for (Index i : remaining) s = (s + seq.terms[i]) % m;
    assert(s == 0);
#endif
    part.blocks.push_back(remaining);
  }
  return part;
}

IndexSet egz_abelian(const AbelianElementSequence& seq) {
  const std::uint64_t g = seq.group_order();
  if (seq.length() == 0) fail(errc::length_too_short, "empty sequence");
  if (seq.length() % g != 0) {
    fail(errc::length_not_multiple, "length must be a multiple of the group order");
  }
  const std::uint64_t d = seq.length() / g;
  if (d < 2) {
    fail(errc::length_not_doubled, "need at least twice the group order many terms");
  }
  for (std::uint64_t c : seq.sum_mod()) {
    if (c != 0) fail(errc::total_not_zero, "total must be the identity");
  }

  // Walk down a composition chain: each level carries the covered original
  // positions per term.
  std::vector<std::uint64_t> orders = seq.orders;
  std::vector<std::vector<std::uint64_t>> terms = seq.terms;
  std::vector<IndexSet> covers(seq.length());
  for (std::size_t i = 0; i < seq.length(); ++i) covers[i] = {i};

  auto order_of = [&]() {
    std::uint64_t o = 1;
    for (std::uint64_t m : orders) o *= m;
    return o;
  };

  while (order_of() > 1) {
    std::size_t j = 0;
    while (orders[j] == 1) ++j;
    std::uint64_t p = orders[j];
    // Largest prime factor of the leading nontrivial cyclic order.
    for (std::uint64_t q = orders[j]; q > 1;) {
      const std::uint64_t f = fp::smallest_prime_factor(q);
      p = f;
      while (q % f == 0) q /= f;
    }
    // p is now the largest prime factor (loop keeps the last one found).

    std::vector<std::uint64_t> coord;
    coord.reserve(terms.size());
    for (const auto& t : terms) coord.push_back(t[j] % p);
    BlockPartition part = partition_zero_sum(ResidueSequence::from_reduced(p, coord));

    std::vector<std::vector<std::uint64_t>> next_terms;
    std::vector<IndexSet> next_covers;
    next_terms.reserve(part.blocks.size());
    next_covers.reserve(part.blocks.size());
    const std::uint64_t next_order_j = orders[j] / p;
    for (const IndexSet& block : part.blocks) {
      std::vector<std::uint64_t> sum(orders.size(), 0);
      IndexSet cover;
      for (Index bi : block) {
        for (std::size_t l = 0; l < orders.size(); ++l) {
          sum[l] = (sum[l] + terms[bi][l]) % orders[l];
        }
        cover.insert(cover.end(), covers[bi].begin(), covers[bi].end());
      }
      assert(sum[j] % p == 0);
      sum[j] = (sum[j] / p) % next_order_j;
      std::sort(cover.begin(), cover.end());
      next_terms.push_back(std::move(sum));
      next_covers.push_back(std::move(cover));
    }
    orders[j] = next_order_j;
    terms = std::move(next_terms);
    covers = std::move(next_covers);
  }

  return covers.front();
}

std::optional<IndexSet> zero_sum_oracle(const ResidueSequence& seq) {
  if (seq.length() > kOracleLengthCap) {
    fail(errc::too_large, "oracle capped at length " + std::to_string(kOracleLengthCap));
  }
  const std::uint64_t m = seq.modulus;
  const std::size_t n = seq.length();
  if (n < m) return std::nullopt;

  // feasible[pos][need][sum]: some choice of `need` positions from pos..n-1
  // adds up to -sum. Filled backwards; the greedy front-to-back walk over it
  // yields the lexicographically smallest certificate.
  const std::size_t need_max = static_cast<std::size_t>(m);
  std::vector<std::vector<std::vector<char>>> feasible(
      n + 1, std::vector<std::vector<char>>(need_max + 1, std::vector<char>(m, 0)));
  for (std::uint64_t s = 0; s < m; ++s) feasible[n][0][s] = (s == 0);
  for (std::size_t pos = n; pos-- > 0;) {
    for (std::size_t need = 0; need <= need_max; ++need) {
      for (std::uint64_t s = 0; s < m; ++s) {
        bool ok = feasible[pos + 1][need][s];
        if (!ok && need > 0) {
          ok = feasible[pos + 1][need - 1][(s + seq.terms[pos]) % m];
        }
        feasible[pos][need][s] = ok;
      }
    }
  }
  if (!feasible[0][need_max][0]) return std::nullopt;

  IndexSet res;
  std::size_t need = need_max;
  std::uint64_t s = 0;
  for (std::size_t pos = 0; pos < n && need > 0; ++pos) {
    if (feasible[pos + 1][need - 1][(s + seq.terms[pos]) % m]) {
      res.push_back(pos);
      s = (s + seq.terms[pos]) % m;
      --need;
    }
  }
  assert(need == 0 && s == 0);
  return res;
}

}  // namespace veronese::zerosum
