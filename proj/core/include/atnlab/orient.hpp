#pragma once

#include "atnlab/budget.hpp"
#include "atnlab/factor.hpp"
#include "atnlab/graph.hpp"
#include "atnlab/poly.hpp"

#include <cstdint>
#include <string>

namespace atnlab {

/// Spanning Eulerian sub-digraphs of an orientation, split by arc-count
/// parity. The empty arc set always counts as even.
struct ParityDiff {
  std::uint64_t even_count = 0;
  std::uint64_t odd_count = 0;

  std::int64_t diff() const noexcept {
    return static_cast<std::int64_t>(even_count) - static_cast<std::int64_t>(odd_count);
  }
  friend bool operator==(const ParityDiff&, const ParityDiff&) = default;
};

/// Counts arc subsets with in == out at every vertex.
///
/// Arcs at sources and sinks are peeled first and the rest is split into
/// strongly connected components; each component is enumerated in Gray-code
/// order with O(1) balance updates. `budget.max_subsets` bounds the total
/// number of subsets enumerated by one call.
ParityDiff eulerian_parity_diff(const Orientation& o, const Budget& budget = {}, WorkStats* work = nullptr);

/// {"even":E,"odd":O,"diff":D}
std::string to_json(const ParityDiff& d);

/// (-1)^r, r = number of arcs running high index -> low index.
int orientation_sign(const Orientation& o);

/// Sum of orientation_sign over all orientations with outdegree vector
/// `target`; equal to the graph-polynomial coefficient by construction of the
/// product expansion.
Coefficient coefficient_via_orientations(const Graph& g, const ExponentVector& target,
                                         const Budget& budget = {}, WorkStats* work = nullptr);

struct OrientationAtn {
  int atn = 1;
  Orientation witness;  // max outdegree atn - 1, nonzero parity difference
  ParityDiff parity;
};

/// Least k (from ceil(|E|/n)) such that some orientation with max outdegree
/// <= k has a nonzero parity difference; returns k + 1 with a witness.
/// Orientations are enumerated edge by edge and pruned by committed
/// outdegree; partial states with equal outdegrees are explored once, since
/// |EE - EO| depends only on the outdegree vector.
OrientationAtn atn_via_orientations(const Graph& g, const Budget& budget = {}, WorkStats* work = nullptr);

/// Upper-bound search: stops once `max_atn` is ruled out.
std::optional<OrientationAtn> atn_via_orientations_bounded(const Graph& g, int max_atn, const Budget& budget = {},
                                                           WorkStats* work = nullptr);

struct CorrespondenceReport {
  Coefficient coefficient;  // of x^{outdeg(o)} in the graph polynomial
  std::int64_t diff = 0;     // EE - EO of o
  int sign = 1;              // orientation_sign(o)
  bool abs_match = false;    // |coefficient| == |diff|
  bool signed_match = false; // coefficient == sign * diff
};

CorrespondenceReport verify_correspondence(const Orientation& o, const Budget& budget = {});

}  // namespace atnlab
