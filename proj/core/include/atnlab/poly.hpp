#pragma once

#include "atnlab/budget.hpp"
#include "atnlab/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace atnlab {

using Coefficient = boost::multiprecision::cpp_int;

/// Exponent of each variable x_0..x_{n-1} in a monomial.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<int> exps);

  int size() const noexcept { return static_cast<int>(exps_.size()); }
  int operator[](int v) const { return exps_.at(static_cast<std::size_t>(v)); }
  std::span<const int> values() const noexcept { return exps_; }
  int total() const noexcept;
  int max() const noexcept;

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<int> exps_;
};

struct Term {
  Coefficient coef;
  ExponentVector exps;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Integer polynomial with terms in ascending lexicographic exponent order,
/// no repeated exponent vectors and no zero coefficients.
class SparsePoly {
 public:
  explicit SparsePoly(int nvars = 0) : nvars_(nvars) {}
  /// Merges like terms, drops zeros and sorts.
  SparsePoly(int nvars, std::vector<Term> terms);

  int nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Coefficient coefficient_of(const ExponentVector& exps) const;
  Coefficient evaluate(std::span<const long long> point) const;

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  int nvars_ = 0;
  std::vector<Term> terms_;
};

/// Minimum over terms of the largest exponent. Throws std::domain_error for
/// the zero polynomial.
int min_max_exponent(const SparsePoly& p);

/// Expansion of prod_{(u,v) in E, u<v} (x_u - x_v).
///
/// With `cap`, terms whose largest exponent exceeds it are discarded as soon
/// as they appear, together with partial terms that can no longer complete
/// within the cap. Retained terms are exact. Throws BudgetExceeded rather
/// than returning a truncated polynomial. At most 32 vertices.
SparsePoly graph_polynomial(const Graph& g, std::optional<int> cap, const Budget& budget = {},
                            WorkStats* work = nullptr);

/// Coefficient of prod x_v^{target_v} in the graph polynomial. Returns 0
/// without expansion when the target is not of degree |E|.
Coefficient coefficient(const Graph& g, const ExponentVector& target, const Budget& budget = {},
                        WorkStats* work = nullptr);

/// One plus the least cap k (from ceil(|E|/n) upward) that leaves a nonzero
/// term. Edgeless graphs give 1. On budget exhaustion the exception carries
/// the lower bound proven by the caps already shown empty.
int atn_via_polynomial(const Graph& g, const Budget& budget = {}, WorkStats* work = nullptr);

/// As atn_via_polynomial, but stops once `max_atn` is ruled out; returns
/// nullopt when every cap below `max_atn` leaves nothing.
std::optional<int> atn_via_polynomial_bounded(const Graph& g, int max_atn, const Budget& budget = {},
                                              WorkStats* work = nullptr);

/// Edge indices in the order the expansion multiplies factors: vertex by
/// vertex, so each vertex's exponent is settled as early as possible.
std::vector<int> expansion_edge_order(const Graph& g);

/// One term per line, "coef e_0 e_1 ... e_{n-1}", in canonical order.
std::string to_dump(const SparsePoly& p);
SparsePoly parse_dump(int nvars, std::string_view text);

}  // namespace atnlab
