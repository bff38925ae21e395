#pragma once

#include <array>
#include <cstdint>
#include <utility>

namespace atnlab::detail {

// Small non-negative counters (< 256) packed one byte per vertex.
template <int Words>
struct PackedCounts {
  std::array<std::uint64_t, Words> word{};

  int get(int v) const { return static_cast<int>((word[v >> 3] >> ((v & 7) * 8)) & 0xffu); }
  void bump(int v) { word[v >> 3] += std::uint64_t{1} << ((v & 7) * 8); }

  friend bool operator==(const PackedCounts&, const PackedCounts&) = default;

  template <typename H>
  friend H AbslHashValue(H h, const PackedCounts& p) {
    return H::combine_contiguous(std::move(h), p.word.data(), p.word.size());
  }
};

inline constexpr int kMaxPackedVertices = 32;

// Calls fn.template operator()<Words>() with the narrowest packing for n.
template <typename Fn>
decltype(auto) dispatch_packed(int n, Fn&& fn) {
  if (n <= 8) return fn.template operator()<1>();
  if (n <= 16) return fn.template operator()<2>();
  return fn.template operator()<4>();
}

}  // namespace atnlab::detail
