#pragma once

#include "atnlab/budget.hpp"
#include "atnlab/graph.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace atnlab {

enum class ClaimId { lemma1, thm1, cor2, thm2, thm3, thm4, thm5, thm6, cor_total };

std::string_view claim_name(ClaimId id);
std::optional<ClaimId> parse_claim(std::string_view name);
const std::vector<ClaimId>& all_claims();

/// How a computed AT is compared with the claimed value.
enum class Relation { equal, at_most, at_least };

std::string_view relation_name(Relation r);

/// Named integer parameters in insertion order.
using Params = std::vector<std::pair<std::string, int>>;

std::optional<int> param(const Params& params, std::string_view name);

/// A stated formula evaluated on one instance.
///
/// `claimed_alt` is the reading under AT = 1 + (least max exponent) where the
/// literal statement drops the +1. `claimed_proof` is thm6's max-outdegree
/// reading (Δ - 1).
struct TheoremClaim {
  ClaimId id = ClaimId::lemma1;
  Params params;
  int claimed = 0;
  std::optional<int> claimed_alt;
  std::optional<int> claimed_proof;
  Relation relation = Relation::equal;
  bool in_hypothesis = true;
};

class HypothesisViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluates the formula for `id`. Throws HypothesisViolation when the
/// parameters fall outside the statement's hypotheses (cor_total instead
/// records `in_hypothesis = false`).
///
///   lemma1    {order, size}            AT >= ceil(size/order)
///   thm1      {n}, n even              n/2 + 1
///   cor2      {n}                      1 + ceil(n/2)
///   thm2      {m, n}, m<n, n even, (m+n) | mn   mn/(m+n) + 1
///   thm3      {delta[, n]}, even       delta/2        (alt delta/2 + 1)
///   thm4      {k, n}, n even           (k-1)n/2       (alt (k-1)n/2 + 1)
///   thm5      {n}, n = 4k              n - 1
///   thm6      {n, delta}, n = 4k       n - 1          (alt delta, proof delta - 1)
///   cor_total {order, delta, one_factorizable}   AT <= delta + 2
TheoremClaim claimed_value(ClaimId id, const Params& params);

enum class Method { poly, orient, both };

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

using DiagnosticValue = std::variant<bool, std::int64_t, std::string>;
using Diagnostics = std::vector<std::pair<std::string, DiagnosticValue>>;

/// Result of one oracle on one instance.
struct MethodOutcome {
  std::optional<int> value;
  std::optional<int> proven_lower_bound;  // set when the budget ran out

  friend bool operator==(const MethodOutcome&, const MethodOutcome&) = default;
};

struct VerificationReport {
  std::string suite;
  std::string instance;
  TheoremClaim claim;
  int order = 0;
  int size = 0;
  std::optional<int> computed;  // nullopt: budget exceeded
  std::optional<int> proven_lower_bound;
  std::optional<bool> match;
  std::optional<bool> match_alt;
  std::optional<bool> match_proof;
  bool lower_bound_ok = true;
  Method method = Method::both;
  std::optional<MethodOutcome> poly;
  std::optional<MethodOutcome> orient;
  std::optional<std::int64_t> elapsed_ms;
  WorkStats work;
  Diagnostics diagnostics;
};

/// Both oracles finished and disagree (or one's proven bound exceeds the
/// other's value). `dump()` holds the instance's edge list.
class InconsistencyError : public std::runtime_error {
 public:
  InconsistencyError(std::string what, std::string dump)
      : std::runtime_error(std::move(what)), dump_(std::move(dump)) {}
  const std::string& dump() const noexcept { return dump_; }

 private:
  std::string dump_;
};

struct SuiteOptions {
  /// Bound on the suite's size parameter: part size n for thm1, cor2, thm2
  /// and thm3; total order k*n for thm4; base order for thm5, thm6 and
  /// cor_total; vertex count for lemma1. nullopt selects the suite default.
  std::optional<int> max_size;
  Method method = Method::both;
  Budget budget;
  bool timing = false;
};

int default_max_size(ClaimId id);

/// One graph under test, with the parameters its claim is evaluated on.
struct SuiteInstance {
  std::string name;
  Params params;
  Graph graph;
  /// Graph whose line graph is `graph` (thm5, thm6) or whose total graph is
  /// `graph` (cor_total).
  std::optional<Graph> base;
};

/// Catalog of instances for a suite, ordered by parameters.
std::vector<SuiteInstance> suite_instances(ClaimId id, int max_size);

/// Builds each instance, runs the requested oracles and compares against the
/// claim. Budget exhaustion is reported in-band; InconsistencyError is not.
std::vector<VerificationReport> run_suite(ClaimId id, const SuiteOptions& options);

/// Runs one instance (exposed for tests and custom corpora).
VerificationReport verify_instance(ClaimId id, const SuiteInstance& instance, const SuiteOptions& options);

// {"suite": ..., "instances": [...]}; `suite` labels the document.
std::string reports_to_json(std::string_view suite, const std::vector<VerificationReport>& reports);
std::string reports_to_csv(const std::vector<VerificationReport>& reports);
std::string reports_to_table(const std::vector<VerificationReport>& reports);

struct ReportDocument {
  std::string suite;
  std::vector<VerificationReport> reports;
};

/// Inverse of reports_to_json. Throws std::invalid_argument on schema errors.
ReportDocument reports_from_json(std::string_view text);

}  // namespace atnlab
