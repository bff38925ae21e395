#pragma once

#include "atnlab/budget.hpp"
#include "atnlab/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace atnlab {

/// One list of allowed colors per vertex.
struct ListAssignment {
  std::vector<std::vector<int>> lists;

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;
};

/// Coloring from the lists, found by backtracking on the vertex with the
/// fewest remaining options. Colors must lie in 0..63.
std::optional<std::vector<int>> proper_coloring_exists(const Graph& g, const ListAssignment& lists);

enum class Verdict { yes, no, unknown };

std::string_view verdict_name(Verdict v);

struct ChoosabilityResult {
  Verdict verdict = Verdict::unknown;
  std::optional<ListAssignment> witness;  // set when verdict == no
  std::uint64_t assignments = 0;          // complete assignments tested
};

/// Searches k-list assignments, canonical up to color relabeling, for one
/// that admits no coloring.
///
/// Colors are introduced in first-use order, so the first vertex always gets
/// {0..k-1}. Only assignments in which every color's holders span an edge
/// are tested: a color whose holders are independent can be given to all of
/// them, and swapping it out of their lists preserves non-colorability. Such
/// assignments use at most floor(k*n/2) colors; `universe_cap` lowers that.
/// k above the degeneracy answers yes at once, and disconnected graphs are
/// decided component by component.
ChoosabilityResult is_k_choosable(const Graph& g, int k, const Budget& budget = {}, int universe_cap = 64);

/// Smallest k <= max_k with an is_k_choosable "yes"; nullopt if some k is
/// unknown before that or none up to max_k is choosable.
std::optional<int> choice_number(const Graph& g, int max_k, const Budget& budget = {});

/// Exact chromatic number by backtracking from a greedy clique bound. At most
/// 16 vertices.
int chromatic_number(const Graph& g);

/// {"lists":[[...],...],"colorable":false}
std::string witness_json(const ListAssignment& lists, bool colorable);

}  // namespace atnlab
