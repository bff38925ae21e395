#include "atnlab/harness.hpp"

#include "atnlab/factor.hpp"
#include "atnlab/orient.hpp"
#include "atnlab/poly.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <iomanip>
#include <sstream>

namespace atnlab {

namespace {

using json = nlohmann::ordered_json;

constexpr std::array<std::pair<ClaimId, std::string_view>, 9> kClaimNames{{
    {ClaimId::lemma1, "lemma1"},
    {ClaimId::thm1, "thm1"},
    {ClaimId::cor2, "cor2"},
    {ClaimId::thm2, "thm2"},
    {ClaimId::thm3, "thm3"},
    {ClaimId::thm4, "thm4"},
    {ClaimId::thm5, "thm5"},
    {ClaimId::thm6, "thm6"},
    {ClaimId::cor_total, "cor_total"},
}};

int require(const Params& params, std::string_view name, ClaimId id) {
  if (auto v = param(params, name)) return *v;
  throw HypothesisViolation(std::string(claim_name(id)) + ": missing parameter '" + std::string(name) + "'");
}

[[noreturn]] void violated(ClaimId id, const std::string& why) {
  throw HypothesisViolation(std::string(claim_name(id)) + ": " + why);
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

bool holds(Relation r, int computed, int claimed) {
  switch (r) {
    case Relation::equal: return computed == claimed;
    case Relation::at_most: return computed <= claimed;
    case Relation::at_least: return computed >= claimed;
  }
  return false;
}

std::string family_label(std::string_view stem, std::initializer_list<int> parts) {
  std::string s(stem);
  s += "_{";
  bool first = true;
  for (int p : parts) {
    if (!first) s += ',';
    s += std::to_string(p);
    first = false;
  }
  return s + "}";
}

std::string complete_label(int n) { return "K_" + std::to_string(n); }

// ---- catalogs -------------------------------------------------------------

void add_lemma1(std::vector<SuiteInstance>& out, std::string name, Graph g) {
  Params p{{"order", g.order()}, {"size", g.size()}};
  out.push_back({std::move(name), std::move(p), std::move(g), std::nullopt});
}

std::vector<SuiteInstance> lemma1_catalog(int max_order) {
  std::vector<SuiteInstance> out;
  for (int n = 2; n <= max_order; ++n) add_lemma1(out, "P_" + std::to_string(n), path_graph(n));
  for (int n = 3; n <= max_order; ++n) add_lemma1(out, "C_" + std::to_string(n), cycle_graph(n));
  for (int n = 2; n <= std::min(max_order, 6); ++n) add_lemma1(out, complete_label(n), complete_graph(n));
  for (int m = 1; 2 * m <= max_order; ++m)
    for (int n = m; m + n <= max_order && m * n <= 16; ++n)
      add_lemma1(out, family_label("K", {m, n}), complete_bipartite(m, n));
  if (max_order >= 6) {
    const std::array<int, 3> parts{2, 2, 2};
    add_lemma1(out, "K_{2,2,2}", complete_multipartite(parts));
  }
  const int rn = std::min(max_order, 8);
  if (rn >= 4) {
    const int rm = std::min(rn * (rn - 1) / 2, (3 * rn) / 2);
    for (std::uint64_t seed = 1; seed <= 4; ++seed)
      add_lemma1(out, "G(" + std::to_string(rn) + "," + std::to_string(rm) + ";seed=" + std::to_string(seed) + ")",
                 random_graph(rn, rm, seed));
  }
  return out;
}

std::vector<SuiteInstance> thm3_catalog(int max_n) {
  std::vector<SuiteInstance> out;
  for (int n = 2; n <= max_n; n += 2) {
    for (int d = 2; d <= n; d += 2) {
      out.push_back({"circulant_bipartite[" + std::to_string(n) + "," + std::to_string(d) + "]",
                     {{"n", n}, {"delta", d}},
                     circulant_bipartite(n, d),
                     std::nullopt});
      if (d < n) {
        out.push_back({"random_regular_bipartite[" + std::to_string(n) + "," + std::to_string(d) + ";seed=1]",
                       {{"n", n}, {"delta", d}, {"seed", 1}},
                       random_regular_bipartite(n, d, 1),
                       std::nullopt});
      }
    }
  }
  return out;
}

std::vector<SuiteInstance> thm4_catalog(int max_order) {
  std::vector<SuiteInstance> out;
  for (int k = 2; 2 * k <= max_order; ++k) {
    for (int n = 2; k * n <= max_order; n += 2) {
      const std::vector<int> parts(static_cast<std::size_t>(k), n);
      std::string name = "K_{";
      for (int i = 0; i < k; ++i) name += (i ? "," : "") + std::to_string(n);
      out.push_back({name + "}", {{"k", k}, {"n", n}}, complete_multipartite(parts), std::nullopt});
    }
  }
  return out;
}

void add_line(std::vector<SuiteInstance>& out, const std::string& base_name, Graph base) {
  const int n = base.order();
  const int d = base.max_degree();
  Graph lg = line_graph(base);
  out.push_back({"L(" + base_name + ")", {{"n", n}, {"delta", d}}, std::move(lg), std::move(base)});
}

std::vector<SuiteInstance> thm6_catalog(int max_order) {
  std::vector<SuiteInstance> out;
  for (int n = 4; n <= max_order; n += 4) {
    add_line(out, "C_" + std::to_string(n), cycle_graph(n));
    add_line(out, family_label("K", {n / 2, n / 2}), complete_bipartite(n / 2, n / 2));
    add_line(out, complete_label(n), complete_graph(n));
  }
  return out;
}

std::vector<SuiteInstance> cor_total_catalog(int max_order) {
  std::vector<SuiteInstance> out;
  auto add = [&](const std::string& name, Graph base) {
    bool factorizable = true;
    try {
      (void)one_factorize(base);
    } catch (const std::invalid_argument&) {
      factorizable = false;
    }
    Params p{{"order", base.order()}, {"delta", base.max_degree()}, {"one_factorizable", factorizable ? 1 : 0}};
    Graph tg = total_graph(base);
    out.push_back({"T(" + name + ")", std::move(p), std::move(tg), std::move(base)});
  };
  for (int n = 2; n <= max_order; ++n) {
    if (n >= 4) add("C_" + std::to_string(n), cycle_graph(n));
    add(complete_label(n), complete_graph(n));
  }
  return out;
}

// ---- per-suite diagnostics ------------------------------------------------

void record_parity(Diagnostics& diag, const std::string& key, const Orientation& o, const Budget& budget,
                   WorkStats& work) {
  try {
    const ParityDiff d = eulerian_parity_diff(o, budget, &work);
    diag.emplace_back(key, std::int64_t{d.diff()});
  } catch (const BudgetExceeded& e) {
    work += e.progress();
    diag.emplace_back(key, std::string("budget-exceeded"));
  }
}

void record_orientation(Diagnostics& diag, const Orientation& o, std::span<const int> classes, const Budget& budget,
                        WorkStats& work) {
  diag.emplace_back("paper_orientation_max_outdegree", std::int64_t{max_outdegree(o)});
  const CheckResult balance = check_pairwise_balance(o, classes);
  diag.emplace_back("paper_orientation_pairwise_balanced", balance.ok);
  if (!balance.ok) diag.emplace_back("paper_orientation_balance_diagnostic", balance.diagnostic);
  record_parity(diag, "paper_orientation_parity_diff", o, budget, work);
}

void line_graph_diagnostics(Diagnostics& diag, const Graph& base, const Graph& lg, const Budget& budget,
                            WorkStats& work) {
  Factorization f;
  try {
    f = one_factorize(base);
  } catch (const std::invalid_argument& e) {
    diag.emplace_back("factorization", std::string(e.what()));
    return;
  }
  const CheckResult valid = validate_factorization(f);
  diag.emplace_back("factorization_valid", valid.ok);
  if (!valid.ok) {
    diag.emplace_back("factorization_diagnostic", valid.diagnostic);
    return;
  }
  const Orientation o = paper_orientation_linegraph(f);
  if (!(o.base() == lg)) {
    diag.emplace_back("paper_orientation", std::string("base of orientation differs from instance graph"));
    return;
  }
  const std::vector<int> classes = factor_classes(f);
  record_orientation(diag, o, classes, budget, work);
}

void suite_diagnostics(ClaimId id, const SuiteInstance& inst, const Budget& budget, Diagnostics& diag,
                       WorkStats& work) {
  const Rational bound = atn_lower_bound(inst.graph);
  std::string text = std::to_string(bound.numerator());
  if (bound.denominator() != 1) text += "/" + std::to_string(bound.denominator());
  diag.emplace_back("edge_density", text);

  switch (id) {
    case ClaimId::thm3: {
      const Orientation o = eulerian_orientation(inst.graph);
      diag.emplace_back("eulerian_max_outdegree", std::int64_t{max_outdegree(o)});
      record_parity(diag, "eulerian_parity_diff", o, budget, work);
      break;
    }
    case ClaimId::thm4: {
      const int k = *param(inst.params, "k");
      const int n = *param(inst.params, "n");
      const Orientation o = paper_orientation_multipartite(k, n);
      std::vector<int> classes(static_cast<std::size_t>(k * n));
      for (int v = 0; v < k * n; ++v) classes[static_cast<std::size_t>(v)] = v / n;
      record_orientation(diag, o, classes, budget, work);
      break;
    }
    case ClaimId::thm5:
    case ClaimId::thm6:
      if (inst.base) line_graph_diagnostics(diag, *inst.base, inst.graph, budget, work);
      break;
    default:
      break;
  }
}

// ---- oracles ----------------------------------------------------------------

struct OracleRun {
  MethodOutcome outcome;
  std::optional<OrientationAtn> witness;
};

// `bound` limits the search to AT <= bound; nullopt runs the exact search.
OracleRun run_poly(const Graph& g, std::optional<int> bound, const Budget& budget, WorkStats& work) {
  OracleRun r;
  try {
    if (bound) {
      r.outcome.value = atn_via_polynomial_bounded(g, *bound, budget, &work);
      if (!r.outcome.value) r.outcome.proven_lower_bound = *bound + 1;
    } else {
      r.outcome.value = atn_via_polynomial(g, budget, &work);
    }
  } catch (const BudgetExceeded& e) {
    work += e.progress();
    r.outcome.proven_lower_bound = e.proven_lower_bound();
  }
  return r;
}

OracleRun run_orient(const Graph& g, std::optional<int> bound, const Budget& budget, WorkStats& work) {
  OracleRun r;
  try {
    if (bound) {
      r.witness = atn_via_orientations_bounded(g, *bound, budget, &work);
      if (!r.witness) r.outcome.proven_lower_bound = *bound + 1;
    } else {
      r.witness = atn_via_orientations(g, budget, &work);
    }
    if (r.witness) r.outcome.value = r.witness->atn;
  } catch (const BudgetExceeded& e) {
    work += e.progress();
    r.outcome.proven_lower_bound = e.proven_lower_bound();
  }
  return r;
}

void check_consistent(const MethodOutcome& a, const MethodOutcome& b, const SuiteInstance& inst) {
  auto fail = [&](const std::string& why) {
    throw InconsistencyError("inconsistent oracles on " + inst.name + ": " + why, to_edge_list(inst.graph));
  };
  if (a.value && b.value && *a.value != *b.value)
    fail("poly=" + std::to_string(*a.value) + " orient=" + std::to_string(*b.value));
  if (a.value && b.proven_lower_bound && *b.proven_lower_bound > *a.value)
    fail("poly=" + std::to_string(*a.value) + " but orient proved >= " + std::to_string(*b.proven_lower_bound));
  if (b.value && a.proven_lower_bound && *a.proven_lower_bound > *b.value)
    fail("orient=" + std::to_string(*b.value) + " but poly proved >= " + std::to_string(*a.proven_lower_bound));
}

// ---- JSON -------------------------------------------------------------------

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json outcome_to_json(const MethodOutcome& m) {
  json j;
  j["value"] = opt(m.value);
  j["proven_lower_bound"] = opt(m.proven_lower_bound);
  return j;
}

json work_to_json(const WorkStats& w) {
  json j;
  j["term_mults"] = w.term_mults;
  j["peak_terms"] = w.peak_terms;
  j["subsets"] = w.subsets;
  j["search_nodes"] = w.search_nodes;
  j["parity_evaluations"] = w.parity_evaluations;
  return j;
}

json diagnostics_to_json(const Diagnostics& d) {
  json j = json::object();
  for (const auto& [key, value] : d) std::visit([&, k = key](const auto& v) { j[k] = v; }, value);
  return j;
}

json params_to_json(const Params& p) {
  json j = json::object();
  for (const auto& [k, v] : p) j[k] = v;
  return j;
}

json report_to_json(const VerificationReport& r) {
  json j;
  j["suite"] = r.suite;
  j["instance"] = r.instance;
  j["params"] = params_to_json(r.claim.params);
  j["order"] = r.order;
  j["size"] = r.size;
  j["relation"] = relation_name(r.claim.relation);
  j["in_hypothesis"] = r.claim.in_hypothesis;
  j["claimed"] = r.claim.claimed;
  j["claimed_alt"] = opt(r.claim.claimed_alt);
  j["claimed_proof"] = opt(r.claim.claimed_proof);
  j["computed"] = r.computed ? json(*r.computed) : json("budget-exceeded");
  j["proven_lower_bound"] = opt(r.proven_lower_bound);
  j["match"] = opt(r.match);
  j["match_alt"] = opt(r.match_alt);
  j["match_proof"] = opt(r.match_proof);
  j["lower_bound_ok"] = r.lower_bound_ok;
  j["method"] = method_name(r.method);
  json methods = json::object();
  if (r.poly) methods["poly"] = outcome_to_json(*r.poly);
  if (r.orient) methods["orient"] = outcome_to_json(*r.orient);
  j["methods"] = std::move(methods);
  if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  j["work"] = work_to_json(r.work);
  j["diagnostics"] = diagnostics_to_json(r.diagnostics);
  return j;
}

[[noreturn]] void schema(const std::string& why) { throw std::invalid_argument("report JSON: " + why); }

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) schema(std::string("missing field '") + key + "'");
  return *it;
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) schema(std::string("'") + what + "' must be an integer");
  return j.get<int>();
}

std::uint64_t as_u64(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    schema(std::string("'") + what + "' must be a non-negative integer");
  return j.get<std::uint64_t>();
}

bool as_bool(const json& j, const char* what) {
  if (!j.is_boolean()) schema(std::string("'") + what + "' must be a boolean");
  return j.get<bool>();
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) schema(std::string("'") + what + "' must be a string");
  return j.get<std::string>();
}

std::optional<int> opt_int(const json& j, const char* key) {
  const json& v = field(j, key);
  if (v.is_null()) return std::nullopt;
  return as_int(v, key);
}

std::optional<bool> opt_bool(const json& j, const char* key) {
  const json& v = field(j, key);
  if (v.is_null()) return std::nullopt;
  return as_bool(v, key);
}

MethodOutcome outcome_from_json(const json& j) {
  if (!j.is_object()) schema("method outcome must be an object");
  return {opt_int(j, "value"), opt_int(j, "proven_lower_bound")};
}

VerificationReport report_from_json(const json& j) {
  if (!j.is_object()) schema("instance must be an object");
  VerificationReport r;
  r.suite = as_string(field(j, "suite"), "suite");
  const auto id = parse_claim(r.suite);
  if (!id) schema("unknown suite '" + r.suite + "'");
  r.claim.id = *id;
  r.instance = as_string(field(j, "instance"), "instance");
  const json& params = field(j, "params");
  if (!params.is_object()) schema("'params' must be an object");
  for (const auto& [k, v] : params.items()) r.claim.params.emplace_back(k, as_int(v, "params"));
  r.order = as_int(field(j, "order"), "order");
  r.size = as_int(field(j, "size"), "size");
  const std::string rel = as_string(field(j, "relation"), "relation");
  if (rel == relation_name(Relation::equal)) r.claim.relation = Relation::equal;
  else if (rel == relation_name(Relation::at_most)) r.claim.relation = Relation::at_most;
  else if (rel == relation_name(Relation::at_least)) r.claim.relation = Relation::at_least;
  else schema("unknown relation '" + rel + "'");
  r.claim.in_hypothesis = as_bool(field(j, "in_hypothesis"), "in_hypothesis");
  r.claim.claimed = as_int(field(j, "claimed"), "claimed");
  r.claim.claimed_alt = opt_int(j, "claimed_alt");
  r.claim.claimed_proof = opt_int(j, "claimed_proof");
  const json& computed = field(j, "computed");
  if (computed.is_string()) {
    if (computed.get<std::string>() != "budget-exceeded") schema("'computed' must be an integer or \"budget-exceeded\"");
  } else {
    r.computed = as_int(computed, "computed");
  }
  r.proven_lower_bound = opt_int(j, "proven_lower_bound");
  r.match = opt_bool(j, "match");
  r.match_alt = opt_bool(j, "match_alt");
  r.match_proof = opt_bool(j, "match_proof");
  r.lower_bound_ok = as_bool(field(j, "lower_bound_ok"), "lower_bound_ok");
  const std::string method = as_string(field(j, "method"), "method");
  const auto m = parse_method(method);
  if (!m) schema("unknown method '" + method + "'");
  r.method = *m;
  const json& methods = field(j, "methods");
  if (!methods.is_object()) schema("'methods' must be an object");
  if (auto it = methods.find("poly"); it != methods.end()) r.poly = outcome_from_json(*it);
  if (auto it = methods.find("orient"); it != methods.end()) r.orient = outcome_from_json(*it);
  if (auto it = j.find("elapsed_ms"); it != j.end()) {
    if (!it->is_number_integer()) schema("'elapsed_ms' must be an integer");
    r.elapsed_ms = it->get<std::int64_t>();
  }
  const json& work = field(j, "work");
  if (!work.is_object()) schema("'work' must be an object");
  r.work.term_mults = as_u64(field(work, "term_mults"), "term_mults");
  r.work.peak_terms = as_u64(field(work, "peak_terms"), "peak_terms");
  r.work.subsets = as_u64(field(work, "subsets"), "subsets");
  r.work.search_nodes = as_u64(field(work, "search_nodes"), "search_nodes");
  r.work.parity_evaluations = as_u64(field(work, "parity_evaluations"), "parity_evaluations");
  const json& diag = field(j, "diagnostics");
  if (!diag.is_object()) schema("'diagnostics' must be an object");
  for (const auto& [k, v] : diag.items()) {
    if (v.is_boolean()) r.diagnostics.emplace_back(k, v.get<bool>());
    else if (v.is_number_integer()) r.diagnostics.emplace_back(k, v.get<std::int64_t>());
    else if (v.is_string()) r.diagnostics.emplace_back(k, v.get<std::string>());
    else schema("diagnostic '" + k + "' must be a boolean, integer or string");
  }
  return r;
}

// ---- CSV / table --------------------------------------------------------------

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols{
      "suite",  "instance",   "params",      "order",          "size",          "relation",
      "in_hypothesis", "claimed", "claimed_alt", "claimed_proof", "computed", "proven_lower_bound",
      "match",  "match_alt",  "match_proof", "lower_bound_ok", "method",        "methods",
      "elapsed_ms", "work",   "diagnostics"};
  return cols;
}

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.is_null() ? std::string() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string cell(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }
std::string cell(const std::optional<bool>& v) { return v ? (*v ? "yes" : "no") : "-"; }

}  // namespace

std::string_view claim_name(ClaimId id) {
  for (const auto& [c, name] : kClaimNames)
    if (c == id) return name;
  return "?";
}

std::optional<ClaimId> parse_claim(std::string_view name) {
  for (const auto& [c, n] : kClaimNames)
    if (n == name) return c;
  if (name == "cor-total") return ClaimId::cor_total;
  return std::nullopt;
}

const std::vector<ClaimId>& all_claims() {
  static const std::vector<ClaimId> ids = [] {
    std::vector<ClaimId> v;
    for (const auto& [c, n] : kClaimNames) v.push_back(c);
    return v;
  }();
  return ids;
}

std::string_view relation_name(Relation r) {
  switch (r) {
    case Relation::equal: return "eq";
    case Relation::at_most: return "le";
    case Relation::at_least: return "ge";
  }
  return "?";
}

std::optional<int> param(const Params& params, std::string_view name) {
  for (const auto& [k, v] : params)
    if (k == name) return v;
  return std::nullopt;
}

TheoremClaim claimed_value(ClaimId id, const Params& params) {
  TheoremClaim c;
  c.id = id;
  c.params = params;
  switch (id) {
    case ClaimId::lemma1: {
      const int order = require(params, "order", id);
      const int size = require(params, "size", id);
      if (order < 1 || size < 0) violated(id, "order must be positive and size non-negative");
      c.claimed = ceil_div(size, order);
      c.relation = Relation::at_least;
      break;
    }
    case ClaimId::thm1: {
      const int n = require(params, "n", id);
      if (n < 2 || n % 2 != 0) violated(id, "n must be even and positive (got " + std::to_string(n) + ")");
      c.claimed = n / 2 + 1;
      break;
    }
    case ClaimId::cor2: {
      const int n = require(params, "n", id);
      if (n < 1) violated(id, "n must be positive");
      c.claimed = 1 + ceil_div(n, 2);
      break;
    }
    case ClaimId::thm2: {
      const int m = require(params, "m", id);
      const int n = require(params, "n", id);
      if (m < 1 || m >= n) violated(id, "requires 1 <= m < n");
      if (n % 2 != 0) violated(id, "requires n even");
      if ((m * n) % (m + n) != 0) violated(id, "requires (m+n) | mn");
      c.claimed = m * n / (m + n) + 1;
      break;
    }
    case ClaimId::thm3: {
      const int d = require(params, "delta", id);
      if (d < 2 || d % 2 != 0) violated(id, "delta must be even and positive");
      if (auto n = param(params, "n"); n && (*n % 2 != 0 || d > *n))
        violated(id, "requires n even and delta <= n");
      c.claimed = d / 2;
      c.claimed_alt = d / 2 + 1;
      break;
    }
    case ClaimId::thm4: {
      const int k = require(params, "k", id);
      const int n = require(params, "n", id);
      if (k < 2) violated(id, "requires k >= 2");
      if (n < 2 || n % 2 != 0) violated(id, "requires n even and positive");
      c.claimed = (k - 1) * n / 2;
      c.claimed_alt = c.claimed + 1;
      break;
    }
    case ClaimId::thm5: {
      const int n = require(params, "n", id);
      if (n < 4 || n % 4 != 0) violated(id, "requires n = 4k (got " + std::to_string(n) + ")");
      c.claimed = n - 1;
      break;
    }
    case ClaimId::thm6: {
      const int n = require(params, "n", id);
      const int d = require(params, "delta", id);
      if (n < 4 || n % 4 != 0) violated(id, "requires order n = 4k (got " + std::to_string(n) + ")");
      if (d < 1 || d >= n) violated(id, "requires 1 <= delta < n");
      c.claimed = n - 1;
      c.claimed_alt = d;
      c.claimed_proof = d - 1;
      break;
    }
    case ClaimId::cor_total: {
      const int order = require(params, "order", id);
      const int d = require(params, "delta", id);
      const int factorizable = param(params, "one_factorizable").value_or(0);
      if (order < 1 || d < 0) violated(id, "order must be positive and delta non-negative");
      c.claimed = d + 2;
      c.relation = Relation::at_most;
      c.in_hypothesis = order % 4 == 0 && factorizable != 0;
      break;
    }
  }
  return c;
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::poly: return "poly";
    case Method::orient: return "orient";
    case Method::both: return "both";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "poly") return Method::poly;
  if (name == "orient") return Method::orient;
  if (name == "both") return Method::both;
  return std::nullopt;
}

int default_max_size(ClaimId id) {
  switch (id) {
    case ClaimId::lemma1: return 8;
    case ClaimId::thm1: return 4;
    case ClaimId::cor2: return 4;
    case ClaimId::thm2: return 6;
    case ClaimId::thm3: return 4;
    case ClaimId::thm4: return 8;
    case ClaimId::thm5: return 4;
    case ClaimId::thm6: return 4;
    case ClaimId::cor_total: return 4;
  }
  return 4;
}

std::vector<SuiteInstance> suite_instances(ClaimId id, int max_size) {
  std::vector<SuiteInstance> out;
  switch (id) {
    case ClaimId::lemma1:
      return lemma1_catalog(max_size);
    case ClaimId::thm1:
      for (int n = 2; n <= max_size; n += 2)
        out.push_back({family_label("K", {n, n}), {{"n", n}}, complete_bipartite(n, n), std::nullopt});
      return out;
    case ClaimId::cor2:
      for (int n = 1; n <= max_size; ++n)
        out.push_back({family_label("K", {n, n}), {{"n", n}}, complete_bipartite(n, n), std::nullopt});
      return out;
    case ClaimId::thm2:
      for (int n = 2; n <= max_size; n += 2)
        for (int m = 1; m < n; ++m)
          if ((m * n) % (m + n) == 0)
            out.push_back({family_label("K", {m, n}), {{"m", m}, {"n", n}}, complete_bipartite(m, n), std::nullopt});
      return out;
    case ClaimId::thm3:
      return thm3_catalog(max_size);
    case ClaimId::thm4:
      return thm4_catalog(max_size);
    case ClaimId::thm5:
      for (int n = 4; n <= max_size; n += 4) {
        Graph base = complete_graph(n);
        Graph lg = line_graph(base);
        out.push_back({"L(" + complete_label(n) + ")", {{"n", n}}, std::move(lg), std::move(base)});
      }
      return out;
    case ClaimId::thm6:
      return thm6_catalog(max_size);
    case ClaimId::cor_total:
      return cor_total_catalog(max_size);
  }
  return out;
}

VerificationReport verify_instance(ClaimId id, const SuiteInstance& inst, const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Graph& g = inst.graph;

  VerificationReport r;
  r.suite = std::string(claim_name(id));
  r.instance = inst.name;
  r.claim = claimed_value(id, inst.params);
  r.order = g.order();
  r.size = g.size();
  r.method = options.method;

  // cor_total only needs a certificate at or below the stated bound.
  const std::optional<int> bound =
      id == ClaimId::cor_total ? std::optional<int>(r.claim.claimed) : std::nullopt;

  std::optional<OracleRun> poly, orient;
  if (options.method != Method::orient) poly = run_poly(g, bound, options.budget, r.work);
  if (options.method != Method::poly) orient = run_orient(g, bound, options.budget, r.work);
  if (poly) r.poly = poly->outcome;
  if (orient) r.orient = orient->outcome;
  if (poly && orient) check_consistent(poly->outcome, orient->outcome, inst);

  for (const MethodOutcome* m : {r.poly ? &*r.poly : nullptr, r.orient ? &*r.orient : nullptr}) {
    if (!m) continue;
    if (m->value && !r.computed) r.computed = m->value;
    if (m->proven_lower_bound)
      r.proven_lower_bound = std::max(r.proven_lower_bound.value_or(0), *m->proven_lower_bound);
  }
  if (r.computed) r.proven_lower_bound.reset();

  const int floor_bound = ceil_edge_density(g);
  if (r.computed) {
    r.match = holds(r.claim.relation, *r.computed, r.claim.claimed);
    if (r.claim.claimed_alt) r.match_alt = holds(r.claim.relation, *r.computed, *r.claim.claimed_alt);
    if (r.claim.claimed_proof) r.match_proof = holds(r.claim.relation, *r.computed, *r.claim.claimed_proof);
    r.lower_bound_ok = *r.computed >= floor_bound;
  } else {
    r.lower_bound_ok = r.proven_lower_bound.value_or(floor_bound) >= floor_bound;
  }

  if (orient && orient->witness) {
    r.diagnostics.emplace_back("witness_max_outdegree", std::int64_t{max_outdegree(orient->witness->witness)});
    r.diagnostics.emplace_back("witness_parity_diff", std::int64_t{orient->witness->parity.diff()});
  }
  if (id == ClaimId::cor_total) {
    if (r.computed) r.diagnostics.emplace_back("strengthening", *r.computed < r.claim.claimed);
    else if (r.proven_lower_bound && *r.proven_lower_bound > r.claim.claimed)
      r.diagnostics.emplace_back("bound_refuted", true);
  }
  suite_diagnostics(id, inst, options.budget, r.diagnostics, r.work);

  if (options.timing) {
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                       .count();
  }
  return r;
}

std::vector<VerificationReport> run_suite(ClaimId id, const SuiteOptions& options) {
  const int max_size = options.max_size.value_or(default_max_size(id));
  std::vector<VerificationReport> out;
  for (const SuiteInstance& inst : suite_instances(id, max_size)) out.push_back(verify_instance(id, inst, options));
  return out;
}

std::string reports_to_json(std::string_view suite, const std::vector<VerificationReport>& reports) {
  json doc;
  doc["suite"] = suite;
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  doc["instances"] = std::move(arr);
  return doc.dump(2) + "\n";
}

ReportDocument reports_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    schema(e.what());
  }
  if (!doc.is_object()) schema("document must be an object");
  ReportDocument out;
  out.suite = as_string(field(doc, "suite"), "suite");
  const json& arr = field(doc, "instances");
  if (!arr.is_array()) schema("'instances' must be an array");
  for (const json& j : arr) out.reports.push_back(report_from_json(j));
  return out;
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  const auto& cols = csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << "\n";
  for (const auto& r : reports) {
    const json j = report_to_json(r);
    for (std::size_t i = 0; i < cols.size(); ++i) {
      auto it = j.find(cols[i]);
      os << (i ? "," : "") << (it == j.end() ? std::string() : csv_cell(*it));
    }
    os << "\n";
  }
  return os.str();
}

std::string reports_to_table(const std::vector<VerificationReport>& reports) {
  std::vector<std::string> header{"suite", "instance", "V", "E", "claimed", "alt", "proof",
                                  "computed", "match", "match_alt", "match_proof", "lb_ok", "method"};
  const bool timing = std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.elapsed_ms; });
  if (timing) header.push_back("ms");
  std::vector<std::vector<std::string>> rows{header};
  for (const auto& r : reports) {
    std::string computed = r.computed ? std::to_string(*r.computed) : "budget-exceeded";
    if (!r.computed && r.proven_lower_bound) computed += " (>=" + std::to_string(*r.proven_lower_bound) + ")";
    std::string claimed = std::string(r.claim.relation == Relation::at_most    ? "<="
                                      : r.claim.relation == Relation::at_least ? ">="
                                                                               : "") +
                          std::to_string(r.claim.claimed);
    std::vector<std::string> row{r.suite,
                                 r.instance,
                                 std::to_string(r.order),
                                 std::to_string(r.size),
                                 claimed,
                                 cell(r.claim.claimed_alt),
                                 cell(r.claim.claimed_proof),
                                 computed,
                                 cell(r.match),
                                 cell(r.match_alt),
                                 cell(r.match_proof),
                                 r.lower_bound_ok ? "yes" : "no",
                                 std::string(method_name(r.method))};
    if (timing) row.push_back(r.elapsed_ms ? std::to_string(*r.elapsed_ms) : "-");
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i + 1 == row.size()) os << row[i];
      else os << std::left << std::setw(static_cast<int>(width[i] + 2)) << row[i];
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace atnlab
