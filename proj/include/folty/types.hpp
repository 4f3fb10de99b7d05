#pragma once

#include <cstdint>
#include <limits>

namespace folty {

/// Dense internal vertex id in [0, n).
using VertexId = std::uint32_t;
/// Dense temporal-edge id in [0, m); equal to the edge's position in (t, input-order).
using EdgeId = std::uint32_t;
/// Index of a directed pair (x, y) with at least one temporal edge x -> y.
using PairId = std::uint32_t;
/// Index of an undirected edge of the static projection.
using StaticEdgeId = std::uint32_t;

/// Vertex id as it appeared in the input file.
using OriginalId = std::uint64_t;

/// Timestamps and windows share one unit (seconds for SNAP data).
using Timestamp = std::int64_t;
using Duration = std::int64_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr PairId kNoPair = std::numeric_limits<PairId>::max();
inline constexpr StaticEdgeId kNoStaticEdge = std::numeric_limits<StaticEdgeId>::max();

/// True iff later - earlier <= window, for later >= earlier, without signed overflow.
constexpr bool within_window(Timestamp earlier, Timestamp later, Duration window) noexcept {
  const auto gap = static_cast<std::uint64_t>(later) - static_cast<std::uint64_t>(earlier);
  return gap <= static_cast<std::uint64_t>(window);
}

}  // namespace folty
