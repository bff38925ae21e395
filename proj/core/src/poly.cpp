#include "atnlab/poly.hpp"

#include "packed.hpp"

#include <absl/container/flat_hash_map.h>

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace atnlab {

ExponentVector::ExponentVector(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw std::invalid_argument("exponent vector entries must be non-negative");
  }
}

int ExponentVector::total() const noexcept {
  int sum = 0;
  for (int e : exps_) sum += e;
  return sum;
}

int ExponentVector::max() const noexcept {
  int best = 0;
  for (int e : exps_) best = std::max(best, e);
  return best;
}

SparsePoly::SparsePoly(int nvars, std::vector<Term> terms) : nvars_(nvars) {
  for (const Term& t : terms) {
    if (t.exps.size() != nvars) throw std::invalid_argument("term arity does not match nvars");
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exps < b.exps; });
  for (Term& t : terms) {
    if (!terms_.empty() && terms_.back().exps == t.exps) {
      terms_.back().coef += t.coef;
    } else {
      terms_.push_back(std::move(t));
    }
    if (terms_.back().coef == 0) terms_.pop_back();
  }
}

Coefficient SparsePoly::coefficient_of(const ExponentVector& exps) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exps,
                             [](const Term& t, const ExponentVector& e) { return t.exps < e; });
  if (it == terms_.end() || it->exps != exps) return 0;
  return it->coef;
}

Coefficient SparsePoly::evaluate(std::span<const long long> point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("evaluation point has wrong arity");
  Coefficient sum = 0;
  for (const Term& t : terms_) {
    Coefficient product = t.coef;
    for (int v = 0; v < nvars_; ++v) {
      for (int i = 0; i < t.exps[v]; ++i) product *= point[static_cast<std::size_t>(v)];
    }
    sum += product;
  }
  return sum;
}

int min_max_exponent(const SparsePoly& p) {
  if (p.is_zero()) throw std::domain_error("min_max_exponent: zero polynomial");
  int best = p.terms().front().exps.max();
  for (const Term& t : p.terms()) best = std::min(best, t.exps.max());
  return best;
}

std::vector<int> expansion_edge_order(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<char> taken(static_cast<std::size_t>(g.size()), 0);
  std::vector<int> done(n, 0);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(g.size()));
  while (static_cast<int>(order.size()) < g.size()) {
    // Prefer the vertex with most edges already multiplied in, then the one
    // with fewest left, then the smallest index.
    int pick = -1;
    for (int v = 0; v < g.order(); ++v) {
      int left = g.degree(v) - done[static_cast<std::size_t>(v)];
      if (left == 0) continue;
      if (pick < 0) { pick = v; continue; }
      int pick_left = g.degree(pick) - done[static_cast<std::size_t>(pick)];
      int dv = done[static_cast<std::size_t>(v)], dp = done[static_cast<std::size_t>(pick)];
      if (dv > dp || (dv == dp && left < pick_left)) pick = v;
    }
    for (int e : g.incident_edges(pick)) {
      if (taken[static_cast<std::size_t>(e)]) continue;
      taken[static_cast<std::size_t>(e)] = 1;
      order.push_back(e);
      ++done[static_cast<std::size_t>(g.edge(e).u)];
      ++done[static_cast<std::size_t>(g.edge(e).v)];
    }
  }
  return order;
}

namespace {

constexpr int kMaxVars = detail::kMaxPackedVertices;

// Expands the graph polynomial keeping only terms that can still end with
// exps[v] <= caps[v] for every v. A partial term is viable iff
//   sum_v min(caps[v], exps[v] + remaining[v]) >= |E|,
// since every remaining factor adds exactly one to some endpoint.
template <int Words>
SparsePoly expand_capped(const Graph& g, const std::vector<int>& caps, const Budget& budget, WorkStats& work) {
  using Key = detail::PackedCounts<Words>;
  const int n = g.order();
  const int m = g.size();
  std::vector<int> remaining(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) remaining[static_cast<std::size_t>(v)] = g.degree(v);

  auto reach = [&](int v, int exp, int rem) { return std::min(caps[static_cast<std::size_t>(v)], exp + rem); };

  absl::flat_hash_map<Key, Coefficient> current;
  {
    long long slack = 0;
    for (int v = 0; v < n; ++v) slack += reach(v, 0, remaining[static_cast<std::size_t>(v)]);
    if (slack >= m) current.emplace(Key{}, Coefficient(1));
  }
  work.peak_terms = std::max<std::uint64_t>(work.peak_terms, current.size());

  const Deadline deadline(budget.wall_clock);
  absl::flat_hash_map<Key, Coefficient> next;
  for (int e : expansion_edge_order(g)) {
    if (current.empty()) break;
    const int u = g.edge(e).u;
    const int v = g.edge(e).v;
    const int ru = remaining[static_cast<std::size_t>(u)];
    const int rv = remaining[static_cast<std::size_t>(v)];
    next.clear();
    next.reserve(current.size() * 2);

    for (auto& [key, coef] : current) {
      work.term_mults += 2;
      if (work.term_mults > budget.max_term_mults) {
        throw BudgetExceeded("polynomial expansion exceeded " + std::to_string(budget.max_term_mults) +
                                 " term multiplications",
                             work);
      }
      if ((work.term_mults & 0xffff) == 0 && deadline.expired()) {
        throw BudgetExceeded("polynomial expansion exceeded the wall-clock budget", work);
      }
      const int eu = key.get(u);
      const int ev = key.get(v);
      long long slack = 0;
      for (int x = 0; x < n; ++x) slack += reach(x, key.get(x), remaining[static_cast<std::size_t>(x)]);
      const long long base = slack - reach(u, eu, ru) - reach(v, ev, rv);

      // Pick x_u (coefficient +1): u keeps its reach, v loses one remaining edge.
      if (eu + 1 <= caps[static_cast<std::size_t>(u)] && base + reach(u, eu, ru) + reach(v, ev, rv - 1) >= m) {
        Key child = key;
        child.bump(u);
        auto [it, fresh] = next.try_emplace(child, coef);
        if (!fresh) it->second += coef;
      }
      // Pick -x_v.
      if (ev + 1 <= caps[static_cast<std::size_t>(v)] && base + reach(u, eu, ru - 1) + reach(v, ev, rv) >= m) {
        Key child = key;
        child.bump(v);
        auto [it, fresh] = next.try_emplace(child);
        it->second -= coef;
      }
    }
    for (auto it = next.begin(); it != next.end();) {
      if (it->second == 0) {
        next.erase(it++);
      } else {
        ++it;
      }
    }
    --remaining[static_cast<std::size_t>(u)];
    --remaining[static_cast<std::size_t>(v)];
    std::swap(current, next);
    work.peak_terms = std::max<std::uint64_t>(work.peak_terms, current.size());
  }

  std::vector<Term> terms;
  terms.reserve(current.size());
  for (auto& [key, coef] : current) {
    std::vector<int> exps(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) exps[static_cast<std::size_t>(x)] = key.get(x);
    terms.push_back({std::move(coef), ExponentVector(std::move(exps))});
  }
  return SparsePoly(n, std::move(terms));
}

SparsePoly expand(const Graph& g, const std::vector<int>& caps, const Budget& budget, WorkStats& work) {
  if (g.order() > kMaxVars) {
    throw std::invalid_argument("graph polynomial expansion supports at most " + std::to_string(kMaxVars) +
                                " vertices, got " + std::to_string(g.order()));
  }
  return detail::dispatch_packed(g.order(), [&]<int Words>() { return expand_capped<Words>(g, caps, budget, work); });
}

std::vector<int> uniform_caps(const Graph& g, int cap) {
  std::vector<int> caps(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) caps[static_cast<std::size_t>(v)] = std::min(cap, g.degree(v));
  return caps;
}

}  // namespace

SparsePoly graph_polynomial(const Graph& g, std::optional<int> cap, const Budget& budget, WorkStats* work) {
  if (cap && *cap < 0) throw std::invalid_argument("graph_polynomial: cap must be non-negative");
  WorkStats local;
  WorkStats& stats = work ? *work : local;
  return expand(g, uniform_caps(g, cap.value_or(g.max_degree())), budget, stats);
}

Coefficient coefficient(const Graph& g, const ExponentVector& target, const Budget& budget, WorkStats* work) {
  if (target.size() != g.order()) {
    throw std::invalid_argument("coefficient: target has " + std::to_string(target.size()) + " entries, graph has " +
                                std::to_string(g.order()) + " vertices");
  }
  if (target.total() != g.size()) return 0;
  for (int v = 0; v < g.order(); ++v) {
    if (target[v] > g.degree(v)) return 0;
  }
  WorkStats local;
  WorkStats& stats = work ? *work : local;
  std::vector<int> caps(target.values().begin(), target.values().end());
  return expand(g, caps, budget, stats).coefficient_of(target);
}

std::optional<int> atn_via_polynomial_bounded(const Graph& g, int max_atn, const Budget& budget, WorkStats* work) {
  if (g.size() == 0) return max_atn >= 1 ? std::optional<int>(1) : std::nullopt;
  WorkStats local;
  WorkStats& stats = work ? *work : local;
  const int top = std::min(max_atn - 1, g.max_degree());
  for (int k = ceil_edge_density(g); k <= top; ++k) {
    try {
      if (!expand(g, uniform_caps(g, k), budget, stats).is_zero()) return k + 1;
    } catch (const BudgetExceeded& ex) {
      throw BudgetExceeded(std::string(ex.what()) + " at cap " + std::to_string(k), stats, k + 1);
    }
  }
  return std::nullopt;
}

int atn_via_polynomial(const Graph& g, const Budget& budget, WorkStats* work) {
  // The full polynomial is nonzero and has max exponent <= max degree, so the
  // search always ends by cap = max degree.
  auto result = atn_via_polynomial_bounded(g, g.max_degree() + 1, budget, work);
  if (!result) throw std::logic_error("atn_via_polynomial: graph polynomial vanished");
  return *result;
}

std::string to_dump(const SparsePoly& p) {
  std::ostringstream out;
  for (const Term& t : p.terms()) {
    out << t.coef;
    for (int e : t.exps.values()) out << ' ' << e;
    out << '\n';
  }
  return out.str();
}

SparsePoly parse_dump(int nvars, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Term> terms;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    std::string coef;
    row >> coef;
    std::vector<int> exps;
    int e = 0;
    while (row >> e) exps.push_back(e);
    if (!row.eof() || static_cast<int>(exps.size()) != nvars) {
      throw std::invalid_argument("polynomial dump: malformed term line \"" + line + "\"");
    }
    const bool numeric = coef.find_first_not_of("0123456789", coef.starts_with('-') ? 1 : 0) == std::string::npos &&
                         coef.size() > (coef.starts_with('-') ? 1u : 0u);
    if (!numeric) throw std::invalid_argument("polynomial dump: bad coefficient \"" + coef + "\"");
    terms.push_back({Coefficient(coef), ExponentVector(std::move(exps))});
  }
  return SparsePoly(nvars, std::move(terms));
}

}  // namespace atnlab
