#include "cli_app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "veronese/diagonal.hpp"
#include "veronese/linverify.hpp"
#include "veronese/monoid.hpp"
#include "veronese/reflection.hpp"
#include "veronese/zerosum.hpp"

namespace veronese::cli {

namespace {

using nlohmann::json;

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(errc::usage_error, "cannot parse integer '" + item + "' in '" + text + "'");
    }
  }
  if (out.empty()) fail(errc::usage_error, "empty integer list '" + text + "'");
  return out;
}

std::vector<std::vector<std::int64_t>> parse_tuple_list(const std::string& text) {
  std::vector<std::vector<std::int64_t>> out;
  std::stringstream ss(text);
  std::string group;
  while (std::getline(ss, group, ';')) {
    out.push_back(parse_int_list(group));
  }
  if (out.empty()) fail(errc::usage_error, "empty tuple list '" + text + "'");
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::usage_error, "cannot open input file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    fail(errc::schema_error, "input file '" + path + "': " + e.what());
  }
  return doc;
}

void reject_unknown_keys(const json& doc, const std::vector<std::string>& allowed,
                         const std::string& where) {
  if (!doc.is_object()) fail(errc::schema_error, where + ": expected an object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    bool ok = false;
    for (const auto& k : allowed) {
      if (it.key() == k) ok = true;
    }
    if (!ok) fail(errc::schema_error, where + ": unknown key '" + it.key() + "'");
  }
}

// Group-file schema: {name?, field_prime: int|"auto", dimension, generators}.
json validate_group_document(const json& doc, const std::string& where) {
  reject_unknown_keys(doc, {"name", "field_prime", "dimension", "generators"}, where);
  json out = json::object();
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail(errc::schema_error, where + ".name: expected a string");
    out["name"] = doc["name"];
  }
  if (!doc.contains("field_prime")) fail(errc::schema_error, where + ".field_prime: missing");
  if (doc["field_prime"].is_string()) {
    if (doc["field_prime"] != "auto") {
      fail(errc::schema_error, where + ".field_prime: expected an integer or \"auto\"");
    }
  } else if (!doc["field_prime"].is_number_integer()) {
    fail(errc::schema_error, where + ".field_prime: expected an integer or \"auto\"");
  }
  out["field_prime"] = doc["field_prime"];
  if (!doc.contains("dimension") || !doc["dimension"].is_number_integer() ||
      doc["dimension"].get<std::int64_t>() < 1) {
    fail(errc::schema_error, where + ".dimension: expected a positive integer");
  }
  out["dimension"] = doc["dimension"];
  const auto n = doc["dimension"].get<std::size_t>();
  if (!doc.contains("generators") || !doc["generators"].is_array() || doc["generators"].empty()) {
    fail(errc::schema_error, where + ".generators: expected a non-empty array");
  }
  for (std::size_t g = 0; g < doc["generators"].size(); ++g) {
    const auto& mat = doc["generators"][g];
    const std::string at = where + ".generators[" + std::to_string(g) + "]";
    if (!mat.is_array() || mat.size() != n * n) {
      fail(errc::schema_error, at + ": expected " + std::to_string(n * n) + " row-major entries");
    }
    for (const auto& e : mat) {
      if (!e.is_number_integer()) fail(errc::schema_error, at + ": entries must be integers");
    }
  }
  out["generators"] = doc["generators"];
  return out;
}

// Diagonal-file schema: {name?, orders, weights}.
json validate_diagonal_document(const json& doc, const std::string& where) {
  reject_unknown_keys(doc, {"name", "orders", "weights"}, where);
  json out = json::object();
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail(errc::schema_error, where + ".name: expected a string");
    out["name"] = doc["name"];
  }
  if (!doc.contains("orders") || !doc["orders"].is_array() || doc["orders"].empty()) {
    fail(errc::schema_error, where + ".orders: expected a non-empty array");
  }
  for (const auto& m : doc["orders"]) {
    if (!m.is_number_integer() || m.get<std::int64_t>() < 1) {
      fail(errc::schema_error, where + ".orders: entries must be positive integers");
    }
  }
  if (!doc.contains("weights") || !doc["weights"].is_array() || doc["weights"].empty()) {
    fail(errc::schema_error, where + ".weights: expected a non-empty array");
  }
  const std::size_t arity = doc["orders"].size();
  for (std::size_t i = 0; i < doc["weights"].size(); ++i) {
    const auto& w = doc["weights"][i];
    const std::string at = where + ".weights[" + std::to_string(i) + "]";
    if (!w.is_array() || w.size() != arity) {
      fail(errc::schema_error, at + ": expected a tuple of arity " + std::to_string(arity));
    }
    for (const auto& c : w) {
      if (!c.is_number_integer()) fail(errc::schema_error, at + ": components must be integers");
    }
  }
  out["orders"] = doc["orders"];
  out["weights"] = doc["weights"];
  return out;
}

// Wrap a verify/molien input document: {"group": {...}} or {"diagonal": {...}}.
json classify_input_document(const json& doc, const std::string& where) {
  json out = json::object();
  if (doc.is_object() && doc.contains("generators")) {
    out["group"] = validate_group_document(doc, where);
  } else if (doc.is_object() && doc.contains("orders")) {
    out["diagonal"] = validate_diagonal_document(doc, where);
  } else {
    fail(errc::schema_error, where + ": expected a matrix-group or diagonal-action document");
  }
  return out;
}

zerosum::ResidueSequence sequence_from(const json& params) {
  return zerosum::ResidueSequence(params.at("modulus").get<std::uint64_t>(),
                                  params.at("seq").get<std::vector<std::int64_t>>());
}

diagonal::DiagonalAction action_from(const json& params) {
  diagonal::AbelianGroup group{params.at("orders").get<std::vector<std::uint64_t>>()};
  std::vector<diagonal::GroupElement> weights;
  for (const auto& w : params.at("weights")) {
    diagonal::GroupElement tuple;
    for (std::size_t j = 0; j < w.size(); ++j) {
      const auto m = static_cast<std::int64_t>(group.orders[j]);
      std::int64_t r = w[j].get<std::int64_t>() % m;
      if (r < 0) r += m;
      tuple.push_back(static_cast<std::uint64_t>(r));
    }
    weights.push_back(std::move(tuple));
  }
  return diagonal::DiagonalAction(std::move(group), std::move(weights));
}

struct BuiltGroup {
  linverify::MatrixGroup group;
  std::uint64_t prime = 0;
};

BuiltGroup build_matrix_group(const json& group_doc) {
  const auto n = group_doc.at("dimension").get<std::size_t>();
  std::uint64_t prime = 0;
  if (group_doc.at("field_prime").is_string()) {
    // "auto": close over the integers first to learn order and exponent.
    std::vector<linverify::IntMat> gens;
    for (const auto& raw : group_doc.at("generators")) {
      linverify::IntMat m(n);
      for (std::size_t i = 0; i < n * n; ++i) m.a[i] = raw[i].get<std::int64_t>();
      gens.push_back(std::move(m));
    }
    auto closure = linverify::close_group_integer(gens);
    prime = fp::choose_prime(closure.exponent, closure.order);
  } else {
    const auto p = group_doc.at("field_prime").get<std::int64_t>();
    if (p < 2) fail(errc::schema_error, "field_prime must be at least 2");
    prime = static_cast<std::uint64_t>(p);
  }
  fp::PrimeField F(prime);
  std::vector<linverify::Mat> gens;
  for (const auto& raw : group_doc.at("generators")) {
    linverify::Mat m(n);
    for (std::size_t i = 0; i < n * n; ++i) m.a[i] = F.reduce(raw[i].get<std::int64_t>());
    gens.push_back(std::move(m));
  }
  return BuiltGroup{linverify::close_group(F, std::move(gens)), prime};
}

BuiltGroup build_from_input(const json& params) {
  if (params.contains("group")) return build_matrix_group(params.at("group"));
  const diagonal::DiagonalAction action = action_from(params.at("diagonal"));
  const std::uint64_t prime =
      fp::choose_prime(action.group.exponent(), action.group.order());
  fp::PrimeField F(prime);
  return BuiltGroup{linverify::close_group(F, linverify::materialize_diagonal(action, F)), prime};
}

json polynomial_to_json(const linverify::Polynomial& p) {
  json terms = json::array();
  for (const auto& [exps, coeff] : p.terms) {
    terms.push_back(json{{"exponents", exps}, {"coeff", coeff}});
  }
  return json{{"degree", p.degree}, {"terms", terms}, {"text", p.to_string()}};
}

// ---- result builders ------------------------------------------------------

json run_egz(const json& params) {
  return json{{"indices", zerosum::egz(sequence_from(params))}};
}

json run_partition(const json& params) {
  auto part = zerosum::partition_zero_sum(sequence_from(params));
  return json{{"blocks", part.blocks}};
}

json run_monoid_atoms(const json& params) {
  monoid::WeightedMonoidInstance inst(params.at("weights").get<std::vector<std::uint64_t>>());
  return json{{"capacity", inst.capacity}, {"atoms", monoid::atoms(inst)}};
}

json run_monoid_decompose(const json& params) {
  monoid::WeightedMonoidInstance inst(params.at("weights").get<std::vector<std::uint64_t>>());
  auto element = params.at("element").get<std::vector<std::uint64_t>>();
  auto el = monoid::element(inst, element);
  return json{{"level", el.level}, {"parts", monoid::decompose(inst, element)}};
}

json run_diag_factor(const json& params) {
  auto action = action_from(params);
  diagonal::Monomial monomial{params.at("monomial").get<std::vector<std::uint64_t>>()};
  auto parts = diagonal::factor_invariant(action, monomial);
  json parts_json = json::array();
  for (const auto& p : parts) parts_json.push_back(p.exponents);
  return json{{"faithful", action.faithful}, {"parts", parts_json}};
}

json run_diag_check(const json& params) {
  auto action = action_from(params);
  const auto d_max = params.at("max_d").get<std::uint64_t>();
  json reports = json::array();
  for (const auto& rep : diagonal::check_generation(action, d_max)) {
    json witnesses = json::array();
    for (const auto& [mono, parts] : rep.witnesses) {
      json factor = json::array();
      for (const auto& p : parts) factor.push_back(p.exponents);
      witnesses.push_back(json{{"monomial", mono.exponents}, {"parts", factor}});
    }
    json counterexamples = json::array();
    for (const auto& c : rep.counterexamples) counterexamples.push_back(c.exponents);
    reports.push_back(json{{"d", rep.d},
                           {"dim", rep.dim_rd},
                           {"all_factorable", rep.all_factorable},
                           {"witnesses", witnesses},
                           {"counterexamples", counterexamples}});
  }
  return json{{"faithful", action.faithful}, {"reports", reports}};
}

json run_reflection_catalog(const json&) {
  json entries = json::array();
  for (const auto& e : reflection::catalog()) {
    entries.push_back(json{{"name", e.name},
                           {"order", e.order},
                           {"degrees", e.degrees},
                           {"dimension", e.dimension}});
  }
  return json{{"entries", entries}};
}

json run_reflection_factor(const json& params) {
  const auto name = params.at("entry").get<std::string>();
  const auto* entry = reflection::find_entry(name);
  if (entry == nullptr) fail(errc::unknown_entry, "no catalog entry named '" + name + "'");
  auto exponent = params.at("exponent").get<std::vector<std::uint64_t>>();
  return json{{"order", entry->order}, {"parts", reflection::factor(*entry, exponent)}};
}

json run_verify(const json& params) {
  BuiltGroup built = build_from_input(params);
  const auto d_max = params.at("max_d").get<std::uint64_t>();
  json reports = json::array();
  for (std::uint64_t d = 1; d <= d_max; ++d) {
    auto rep = linverify::check_surjectivity(built.group, d);
    json r{{"d", rep.d},
           {"dim_r1", rep.dim_r1},
           {"dim_rd", rep.dim_rd},
           {"rank", rep.rank},
           {"surjective", rep.surjective}};
    if (rep.missing.has_value()) r["missing"] = polynomial_to_json(*rep.missing);
    reports.push_back(std::move(r));
  }
  return json{{"prime", built.prime},
              {"order", built.group.order()},
              {"exponent", built.group.exponent},
              {"dimension", built.group.dimension},
              {"reports", reports}};
}

json run_molien(const json& params) {
  BuiltGroup built = build_from_input(params);
  const auto max_degree = params.at("max_degree").get<std::uint64_t>();
  auto series = linverify::molien(built.group, max_degree);
  json coeffs = json::array();
  for (const auto& c : series) coeffs.push_back(c.str());
  return json{{"prime", built.prime},
              {"order", built.group.order()},
              {"coefficients", coeffs}};
}

// ---- independent certificate checks ---------------------------------------

bool check_egz(const json& in, const json& res, std::string* why) {
  const auto m = in.at("modulus").get<std::uint64_t>();
  const auto seq = in.at("seq").get<std::vector<std::int64_t>>();
  const auto idx = res.at("indices").get<std::vector<std::size_t>>();
  if (idx.size() != m) {
    if (why) *why = "index count differs from the modulus";
    return false;
  }
  std::int64_t sum = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= seq.size() || (k > 0 && idx[k] <= idx[k - 1])) {
      if (why) *why = "indices not strictly increasing and in range";
      return false;
    }
    sum += seq[idx[k]];
  }
  if ((sum % static_cast<std::int64_t>(m) + static_cast<std::int64_t>(m)) %
          static_cast<std::int64_t>(m) !=
      0) {
    if (why) *why = "selected terms do not sum to zero";
    return false;
  }
  return true;
}

bool check_partition(const json& in, const json& res, std::string* why) {
  const auto m = in.at("modulus").get<std::uint64_t>();
  const auto seq = in.at("seq").get<std::vector<std::int64_t>>();
  const auto blocks = res.at("blocks").get<std::vector<std::vector<std::size_t>>>();
  std::vector<char> covered(seq.size(), 0);
  if (blocks.size() * m != seq.size()) {
    if (why) *why = "block count times modulus differs from the length";
    return false;
  }
  for (const auto& block : blocks) {
    if (block.size() != m) {
      if (why) *why = "block size differs from the modulus";
      return false;
    }
    std::int64_t sum = 0;
    for (std::size_t i : block) {
      if (i >= seq.size() || covered[i]) {
        if (why) *why = "blocks overlap or index out of range";
        return false;
      }
      covered[i] = 1;
      sum += seq[i];
    }
    if ((sum % static_cast<std::int64_t>(m) + static_cast<std::int64_t>(m)) %
            static_cast<std::int64_t>(m) !=
        0) {
      if (why) *why = "a block does not sum to zero";
      return false;
    }
  }
  return true;
}

// Count of solutions by a plain counting pass, independent of the
// enumeration order used by the library.
std::uint64_t count_knapsack(const std::vector<std::uint64_t>& weights, std::uint64_t target) {
  std::vector<std::uint64_t> ways(target + 1, 0);
  ways[0] = 1;
  for (std::uint64_t w : weights) {
    for (std::uint64_t t = w; t <= target; ++t) ways[t] += ways[t - w];
  }
  return ways[target];
}

bool check_monoid_atoms(const json& in, const json& res, std::string* why) {
  const auto weights = in.at("weights").get<std::vector<std::uint64_t>>();
  const auto capacity = res.at("capacity").get<std::uint64_t>();
  std::uint64_t prod = 1;
  for (auto w : weights) prod *= w;
  if (prod != capacity) {
    if (why) *why = "capacity is not the weight product";
    return false;
  }
  const auto atoms = res.at("atoms").get<std::vector<std::vector<std::uint64_t>>>();
  for (const auto& a : atoms) {
    std::uint64_t v = 0;
    for (std::size_t j = 0; j < weights.size(); ++j) v += a[j] * weights[j];
    if (v != capacity || a.size() != weights.size()) {
      if (why) *why = "an atom does not have value N";
      return false;
    }
  }
  if (!std::is_sorted(atoms.begin(), atoms.end())) {
    if (why) *why = "atoms not lexicographically sorted";
    return false;
  }
  if (atoms.size() != count_knapsack(weights, capacity)) {
    if (why) *why = "atom count differs from the independent count";
    return false;
  }
  return true;
}

bool check_parts_sum(const std::vector<std::uint64_t>& weights, std::uint64_t part_value,
                     const std::vector<std::uint64_t>& element,
                     const std::vector<std::vector<std::uint64_t>>& parts, std::string* why) {
  std::vector<std::uint64_t> acc(element.size(), 0);
  for (const auto& p : parts) {
    if (p.size() != weights.size()) {
      if (why) *why = "part arity mismatch";
      return false;
    }
    std::uint64_t v = 0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
      v += p[j] * weights[j];
      acc[j] += p[j];
    }
    if (v != part_value) {
      if (why) *why = "a part does not have the level-one value";
      return false;
    }
  }
  if (acc != element) {
    if (why) *why = "parts do not sum to the element";
    return false;
  }
  return true;
}

bool check_monoid_decompose(const json& in, const json& res, std::string* why) {
  const auto weights = in.at("weights").get<std::vector<std::uint64_t>>();
  const auto element = in.at("element").get<std::vector<std::uint64_t>>();
  const auto parts = res.at("parts").get<std::vector<std::vector<std::uint64_t>>>();
  std::uint64_t capacity = 1;
  for (auto w : weights) capacity *= w;
  std::uint64_t value = 0;
  for (std::size_t j = 0; j < weights.size(); ++j) value += element[j] * weights[j];
  if (value % capacity != 0 || parts.size() != value / capacity ||
      res.at("level").get<std::uint64_t>() != value / capacity) {
    if (why) *why = "level or part count inconsistent";
    return false;
  }
  return check_parts_sum(weights, capacity, element, parts, why);
}

std::vector<std::uint64_t> diag_weight_of(const json& in,
                                          const std::vector<std::uint64_t>& exponents) {
  const auto orders = in.at("orders").get<std::vector<std::uint64_t>>();
  std::vector<std::uint64_t> acc(orders.size(), 0);
  const auto& weights = in.at("weights");
  for (std::size_t v = 0; v < exponents.size(); ++v) {
    for (std::size_t j = 0; j < orders.size(); ++j) {
      const auto m = static_cast<std::int64_t>(orders[j]);
      std::int64_t w = weights[v][j].get<std::int64_t>() % m;
      if (w < 0) w += m;
      acc[j] = (acc[j] + exponents[v] % orders[j] * static_cast<std::uint64_t>(w)) % orders[j];
    }
  }
  return acc;
}

bool diag_parts_ok(const json& in, const std::vector<std::uint64_t>& monomial,
                   const json& parts, std::string* why) {
  const auto orders = in.at("orders").get<std::vector<std::uint64_t>>();
  std::uint64_t g = 1;
  for (auto m : orders) g *= m;
  std::vector<std::uint64_t> acc(monomial.size(), 0);
  for (const auto& pj : parts) {
    const auto p = pj.get<std::vector<std::uint64_t>>();
    std::uint64_t degree = 0;
    for (std::size_t v = 0; v < p.size(); ++v) {
      degree += p[v];
      acc[v] += p[v];
    }
    if (degree != g) {
      if (why) *why = "a factor does not have degree |G|";
      return false;
    }
    for (auto c : diag_weight_of(in, p)) {
      if (c != 0) {
        if (why) *why = "a factor is not invariant";
        return false;
      }
    }
  }
  if (acc != monomial) {
    if (why) *why = "factors do not multiply to the monomial";
    return false;
  }
  return true;
}

bool check_diag_factor(const json& in, const json& res, std::string* why) {
  return diag_parts_ok(in, in.at("monomial").get<std::vector<std::uint64_t>>(),
                       res.at("parts"), why);
}

bool check_diag_check(const json& in, const json& res, std::string* why) {
  for (const auto& rep : res.at("reports")) {
    const auto d = rep.at("d").get<std::uint64_t>();
    const bool all = rep.at("all_factorable").get<bool>();
    const auto& witnesses = rep.at("witnesses");
    const auto& counterexamples = rep.at("counterexamples");
    if (all != counterexamples.empty()) {
      if (why) *why = "all_factorable disagrees with the counterexample list";
      return false;
    }
    if (witnesses.size() + counterexamples.size() != rep.at("dim").get<std::uint64_t>()) {
      if (why) *why = "dimension does not match witness plus counterexample count";
      return false;
    }
    for (const auto& w : witnesses) {
      const auto mono = w.at("monomial").get<std::vector<std::uint64_t>>();
      if (w.at("parts").size() != d) {
        if (why) *why = "witness part count differs from d";
        return false;
      }
      if (!diag_parts_ok(in, mono, w.at("parts"), why)) return false;
    }
  }
  return true;
}

bool check_reflection_catalog(const json&, const json& res, std::string* why) {
  for (const auto& e : res.at("entries")) {
    std::uint64_t prod = 1;
    for (const auto& d : e.at("degrees")) prod *= d.get<std::uint64_t>();
    if (prod != e.at("order").get<std::uint64_t>()) {
      if (why) *why = "catalog entry fails the degree product check";
      return false;
    }
  }
  return true;
}

bool check_reflection_factor(const json& in, const json& res, std::string* why) {
  const auto name = in.at("entry").get<std::string>();
  const auto* entry = reflection::find_entry(name);
  if (entry == nullptr) {
    if (why) *why = "entry vanished from the catalog";
    return false;
  }
  const auto exponent = in.at("exponent").get<std::vector<std::uint64_t>>();
  const auto parts = res.at("parts").get<std::vector<std::vector<std::uint64_t>>>();
  std::uint64_t value = 0;
  for (std::size_t j = 0; j < exponent.size(); ++j) value += exponent[j] * entry->degrees[j];
  if (parts.size() * entry->order != value) {
    if (why) *why = "part count differs from the level";
    return false;
  }
  return check_parts_sum(entry->degrees, entry->order, exponent, parts, why);
}

// Dimension of the invariant linear forms: the common kernel of (g^T - I)
// over all generators, by a small self-contained elimination.
std::uint64_t invariant_linear_rank(const BuiltGroup& built) {
  const std::size_t n = built.group.dimension;
  const std::uint64_t p = built.prime;
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& g : built.group.generators) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::uint64_t> row(n);
      for (std::size_t i = 0; i < n; ++i) {
        row[i] = (g.at(i, j) + (i == j ? p - 1 : 0)) % p;
      }
      rows.push_back(std::move(row));
    }
  }
  // rank of the stacked rows
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot >= rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    // normalize via Fermat inverse
    std::uint64_t inv = 1, base = rows[rank][col] % p, e = p - 2;
    while (e > 0) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (auto& x : rows[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const std::uint64_t f = rows[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        rows[r][c] = (rows[r][c] + (p - f) * rows[rank][c]) % p;
      }
    }
    ++rank;
    if (rank == n) break;
  }
  return n - rank;  // kernel dimension = invariant linear forms
}

bool check_verify(const json& in, const json& res, std::string* why) {
  for (const auto& rep : res.at("reports")) {
    const auto rank = rep.at("rank").get<std::uint64_t>();
    const auto dim_rd = rep.at("dim_rd").get<std::uint64_t>();
    if (rep.at("surjective").get<bool>() != (rank == dim_rd) || rank > dim_rd) {
      if (why) *why = "surjectivity flag inconsistent with the rank";
      return false;
    }
    if (!rep.at("surjective").get<bool>() && !rep.contains("missing")) {
      if (why) *why = "rank deficiency reported without a missing invariant";
      return false;
    }
  }
  // Independent dimension route: lattice-point counts for diagonal inputs,
  // the Molien series for integer matrix groups.
  if (in.contains("diagonal")) {
    const auto action = action_from(in.at("diagonal"));
    for (const auto& rep : res.at("reports")) {
      const auto dim = diagonal::dimension(action, rep.at("d").get<std::uint64_t>());
      if (dim != rep.at("dim_rd").get<std::uint64_t>()) {
        if (why) *why = "dimension disagrees with the lattice-point count";
        return false;
      }
    }
  } else {
    try {
      BuiltGroup built = build_matrix_group(in.at("group"));
      const std::uint64_t g = built.group.order();
      std::uint64_t dmax = 0;
      for (const auto& rep : res.at("reports")) {
        dmax = std::max(dmax, rep.at("d").get<std::uint64_t>());
      }
      auto series = linverify::molien(built.group, dmax * g);
      for (const auto& rep : res.at("reports")) {
        const auto d = rep.at("d").get<std::uint64_t>();
        if (series[static_cast<std::size_t>(d * g)] !=
            rep.at("dim_rd").get<std::uint64_t>()) {
          if (why) *why = "dimension disagrees with the Molien coefficient";
          return false;
        }
      }
    } catch (const Error& e) {
      if (e.code() != errc::non_integer_entries) throw;
      // no integer lift; the structural checks above remain
    }
  }
  return true;
}

bool check_molien(const json& in, const json& res, std::string* why) {
  const auto& coeffs = res.at("coefficients");
  if (coeffs.empty() || coeffs[0].get<std::string>() != "1") {
    if (why) *why = "constant coefficient is not 1";
    return false;
  }
  for (const auto& c : coeffs) {
    const auto s = c.get<std::string>();
    if (!s.empty() && s[0] == '-') {
      if (why) *why = "negative coefficient";
      return false;
    }
  }
  // c_1 equals the count of invariant linear forms, computable directly.
  if (coeffs.size() >= 2) {
    BuiltGroup built = build_from_input(in);
    if (std::to_string(invariant_linear_rank(built)) != coeffs[1].get<std::string>()) {
      if (why) *why = "degree-one coefficient disagrees with the fixed-space dimension";
      return false;
    }
  }
  return true;
}

// ---- text rendering --------------------------------------------------------

std::string join_u64(const json& arr) {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += ",";
    out += arr[i].dump();
  }
  return out;
}

}  // namespace

JobSpec parse(int argc, const char* const* argv) {
  CLI::App app{"veronese: exact certificates for zero-sum extraction and degree-one "
               "generation of invariant rings"};
  app.require_subcommand(1);

  bool machine = false;
  std::string out_path;
  app.add_flag("--machine", machine, "emit the certificate as JSON on standard output");
  app.add_option("--out", out_path, "write the output to a file instead of standard output");

  std::string seq_text, weights_text, element_text, orders_text, tuple_weights_text;
  std::string monomial_text, entry_name, exponent_text, input_path;
  std::uint64_t modulus = 0, max_d = 1, max_degree = 0;

  auto* egz_cmd = app.add_subcommand("egz", "zero-sum subsequence of length m");
  egz_cmd->add_option("--modulus", modulus)->required();
  egz_cmd->add_option("--seq", seq_text, "comma-separated integers")->required();

  auto* part_cmd = app.add_subcommand("partition", "partition into zero-sum blocks");
  part_cmd->add_option("--modulus", modulus)->required();
  part_cmd->add_option("--seq", seq_text)->required();

  auto* atoms_cmd = app.add_subcommand("monoid-atoms", "atom set of the weighted monoid");
  atoms_cmd->add_option("--weights", weights_text)->required();

  auto* dec_cmd = app.add_subcommand("monoid-decompose", "decompose into atoms");
  dec_cmd->add_option("--weights", weights_text)->required();
  dec_cmd->add_option("--element", element_text)->required();

  auto* dfac_cmd = app.add_subcommand("diag-factor", "factor an invariant monomial");
  dfac_cmd->add_option("--orders", orders_text);
  dfac_cmd->add_option("--weights", tuple_weights_text, "semicolon-separated weight tuples");
  dfac_cmd->add_option("--input", input_path, "diagonal action as a JSON file");
  dfac_cmd->add_option("--monomial", monomial_text)->required();

  auto* dchk_cmd = app.add_subcommand("diag-check", "degree-one generation for a diagonal action");
  dchk_cmd->add_option("--orders", orders_text);
  dchk_cmd->add_option("--weights", tuple_weights_text);
  dchk_cmd->add_option("--input", input_path);
  dchk_cmd->add_option("--max-d", max_d)->required();

  app.add_subcommand("reflection-catalog", "list the built-in reflection groups");

  auto* rfac_cmd = app.add_subcommand("reflection-factor", "factor over fundamental degrees");
  rfac_cmd->add_option("--entry", entry_name)->required();
  rfac_cmd->add_option("--exponent", exponent_text)->required();

  auto* verify_cmd = app.add_subcommand("verify", "rank certificates over a prime field");
  verify_cmd->add_option("--input", input_path)->required();
  verify_cmd->add_option("--max-d", max_d)->required();

  auto* molien_cmd = app.add_subcommand("molien", "exact Hilbert series coefficients");
  molien_cmd->add_option("--input", input_path)->required();
  molien_cmd->add_option("--max-degree", max_degree)->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    throw UsageExit{app.exit(e), ""};
  } catch (const CLI::ParseError& e) {
    fail(errc::usage_error, e.what());
  }

  JobSpec spec;
  spec.machine = machine;
  spec.out_path = out_path;
  spec.command = app.get_subcommands().front()->get_name();

  auto diag_params = [&]() {
    json params;
    if (!input_path.empty()) {
      if (!orders_text.empty() || !tuple_weights_text.empty()) {
        fail(errc::usage_error, "--input excludes --orders/--weights");
      }
      params = validate_diagonal_document(load_json_file(input_path), input_path);
      params.erase("name");
    } else {
      if (orders_text.empty() || tuple_weights_text.empty()) {
        fail(errc::usage_error, "need either --input or both --orders and --weights");
      }
      params["orders"] = parse_int_list(orders_text);
      for (const auto& m : params["orders"]) {
        if (m.get<std::int64_t>() < 1) fail(errc::schema_error, "orders must be positive");
      }
      params["weights"] = parse_tuple_list(tuple_weights_text);
      for (const auto& w : params["weights"]) {
        if (w.size() != params["orders"].size()) {
          fail(errc::schema_error, "weight tuple arity does not match the orders");
        }
      }
    }
    return params;
  };

  if (spec.command == "egz" || spec.command == "partition") {
    spec.params = json{{"modulus", modulus}, {"seq", parse_int_list(seq_text)}};
  } else if (spec.command == "monoid-atoms") {
    spec.params = json{{"weights", parse_int_list(weights_text)}};
  } else if (spec.command == "monoid-decompose") {
    spec.params = json{{"weights", parse_int_list(weights_text)},
                       {"element", parse_int_list(element_text)}};
  } else if (spec.command == "diag-factor") {
    spec.params = diag_params();
    spec.params["monomial"] = parse_int_list(monomial_text);
  } else if (spec.command == "diag-check") {
    spec.params = diag_params();
    spec.params["max_d"] = max_d;
  } else if (spec.command == "reflection-catalog") {
    spec.params = json::object();
  } else if (spec.command == "reflection-factor") {
    spec.params = json{{"entry", entry_name}, {"exponent", parse_int_list(exponent_text)}};
  } else if (spec.command == "verify") {
    spec.params = classify_input_document(load_json_file(input_path), input_path);
    spec.params["max_d"] = max_d;
  } else if (spec.command == "molien") {
    spec.params = classify_input_document(load_json_file(input_path), input_path);
    spec.params["max_degree"] = max_degree;
  }

  // negative values where only non-negative ones make sense
  for (const char* key : {"weights", "element", "monomial", "exponent"}) {
    if (spec.params.contains(key) && spec.params[key].is_array() &&
        !spec.params[key].empty() && spec.params[key][0].is_number()) {
      for (const auto& v : spec.params[key]) {
        if (v.get<std::int64_t>() < 0) {
          fail(errc::schema_error, std::string("'") + key + "' entries must be non-negative");
        }
      }
    }
  }
  return spec;
}

nlohmann::json run(const JobSpec& spec) {
  json result;
  if (spec.command == "egz") {
    result = run_egz(spec.params);
  } else if (spec.command == "partition") {
    result = run_partition(spec.params);
  } else if (spec.command == "monoid-atoms") {
    result = run_monoid_atoms(spec.params);
  } else if (spec.command == "monoid-decompose") {
    result = run_monoid_decompose(spec.params);
  } else if (spec.command == "diag-factor") {
    result = run_diag_factor(spec.params);
  } else if (spec.command == "diag-check") {
    result = run_diag_check(spec.params);
  } else if (spec.command == "reflection-catalog") {
    result = run_reflection_catalog(spec.params);
  } else if (spec.command == "reflection-factor") {
    result = run_reflection_factor(spec.params);
  } else if (spec.command == "verify") {
    result = run_verify(spec.params);
  } else if (spec.command == "molien") {
    result = run_molien(spec.params);
  } else {
    fail(errc::usage_error, "unknown command '" + spec.command + "'");
  }

  json cert{{"schema_version", 1},
            {"command", spec.command},
            {"inputs", spec.params},
            {"result", result},
            {"valid", false}};
  std::string why;
  cert["valid"] = check_certificate(cert, &why);
  if (!cert["valid"].get<bool>()) {
    cert["invalid_reason"] = why;
  }
  return cert;
}

JobSpec jobspec_from_certificate(const nlohmann::json& certificate) {
  if (!certificate.is_object() || !certificate.contains("command") ||
      !certificate.contains("inputs") ||
      certificate.value("schema_version", 0) != 1) {
    fail(errc::schema_error, "not a schema_version-1 certificate");
  }
  JobSpec spec;
  spec.command = certificate.at("command").get<std::string>();
  spec.params = certificate.at("inputs");
  spec.machine = true;
  return spec;
}

bool check_certificate(const nlohmann::json& cert, std::string* why) {
  const std::string command = cert.at("command").get<std::string>();
  const json& in = cert.at("inputs");
  const json& res = cert.at("result");
  try {
    if (command == "egz") return check_egz(in, res, why);
    if (command == "partition") return check_partition(in, res, why);
    if (command == "monoid-atoms") return check_monoid_atoms(in, res, why);
    if (command == "monoid-decompose") return check_monoid_decompose(in, res, why);
    if (command == "diag-factor") return check_diag_factor(in, res, why);
    if (command == "diag-check") return check_diag_check(in, res, why);
    if (command == "reflection-catalog") return check_reflection_catalog(in, res, why);
    if (command == "reflection-factor") return check_reflection_factor(in, res, why);
    if (command == "verify") return check_verify(in, res, why);
    if (command == "molien") return check_molien(in, res, why);
  } catch (const std::exception& e) {
    if (why) *why = std::string("checker raised: ") + e.what();
    return false;
  }
  if (why) *why = "unknown command";
  return false;
}

std::string render_text(const nlohmann::json& cert) {
  const std::string command = cert.at("command").get<std::string>();
  const json& res = cert.at("result");
  std::ostringstream out;
  out << command << ": ";
  if (command == "egz") {
    out << "indices {" << join_u64(res.at("indices")) << "}\n";
  } else if (command == "partition") {
    out << res.at("blocks").size() << " blocks\n";
    for (const auto& b : res.at("blocks")) out << "  {" << join_u64(b) << "}\n";
  } else if (command == "monoid-atoms") {
    out << res.at("atoms").size() << " atoms of value " << res.at("capacity") << "\n";
    for (const auto& a : res.at("atoms")) out << "  (" << join_u64(a) << ")\n";
  } else if (command == "monoid-decompose") {
    out << "level " << res.at("level") << "\n";
    for (const auto& p : res.at("parts")) out << "  (" << join_u64(p) << ")\n";
  } else if (command == "diag-factor") {
    out << res.at("parts").size() << " factors\n";
    for (const auto& p : res.at("parts")) out << "  (" << join_u64(p) << ")\n";
  } else if (command == "diag-check") {
    out << "\n";
    for (const auto& r : res.at("reports")) {
      out << "  d=" << r.at("d") << " dim=" << r.at("dim") << " all_factorable="
          << (r.at("all_factorable").get<bool>() ? "yes" : "no") << "\n";
    }
  } else if (command == "reflection-catalog") {
    out << res.at("entries").size() << " entries\n";
    for (const auto& e : res.at("entries")) {
      out << "  " << e.at("name").get<std::string>() << " order " << e.at("order")
          << " degrees (" << join_u64(e.at("degrees")) << ")\n";
    }
  } else if (command == "reflection-factor") {
    out << res.at("parts").size() << " parts\n";
    for (const auto& p : res.at("parts")) out << "  (" << join_u64(p) << ")\n";
  } else if (command == "verify") {
    out << "prime " << res.at("prime") << ", order " << res.at("order") << "\n";
    for (const auto& r : res.at("reports")) {
      out << "  d=" << r.at("d") << " dim_r1=" << r.at("dim_r1") << " dim_rd="
          << r.at("dim_rd") << " rank=" << r.at("rank") << " surjective="
          << (r.at("surjective").get<bool>() ? "yes" : "no") << "\n";
    }
  } else if (command == "molien") {
    out << "coefficients";
    for (const auto& c : res.at("coefficients")) out << " " << c.get<std::string>();
    out << "\n";
  }
  out << "valid: " << (cert.at("valid").get<bool>() ? "yes" : "no") << "\n";
  return out.str();
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  JobSpec spec;
  try {
    spec = parse(argc, argv);
  } catch (const UsageExit& e) {
    return e.code;
  } catch (const Error& e) {
    err << errc_name(e.code()) << ": " << e.what() << "\n";
    return 2;
  }

  json cert;
  try {
    cert = run(spec);
  } catch (const Error& e) {
    err << errc_name(e.code()) << ": " << e.what() << "\n";
    return (e.code() == errc::usage_error || e.code() == errc::schema_error) ? 2 : 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }

  if (!cert.at("valid").get<bool>()) {
    err << "certificate failed its independent check: "
        << cert.value("invalid_reason", std::string("unknown")) << "\n";
    return 4;
  }

  const std::string payload = spec.machine ? cert.dump(2) + "\n" : render_text(cert);
  if (!spec.out_path.empty()) {
    std::ofstream f(spec.out_path);
    if (!f) {
      err << "cannot write to '" << spec.out_path << "'\n";
      return 3;
    }
    f << payload;
  } else {
    out << payload;
  }

  if (spec.command.rfind("diag-", 0) == 0 && cert["result"].contains("faithful") &&
      !cert["result"]["faithful"].get<bool>()) {
    err << "warning: the action is not faithful; the group acts through a proper quotient\n";
  }
  return 0;
}

}  // namespace veronese::cli
