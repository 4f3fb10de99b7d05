#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "folty/temporal_graph.hpp"
#include "folty/types.hpp"

namespace folty {

/// Undirected edge {u, v} of the static projection, u < v.
/// `forward` indexes the pair list u -> v and `backward` the list v -> u; either may be
/// kNoPair but not both.
struct StaticEdge {
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
  PairId forward = kNoPair;
  PairId backward = kNoPair;

  VertexId other(VertexId x) const noexcept { return x == u ? v : u; }
  /// Pair id for the direction x -> other(x).
  PairId from(VertexId x) const noexcept { return x == u ? forward : backward; }
};

/// The static projection G_S: directions, timestamps and multiplicities erased.
///
/// Adjacency is stored CSR-style; `neighbors(v)` is sorted ascending and
/// `incident_edges(v)[i]` is the static edge joining v and `neighbors(v)[i]`.
class StaticGraph {
 public:
  StaticGraph() = default;

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const VertexId> neighbors(VertexId v) const {
    return std::span<const VertexId>(neighbors_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
  }
  std::span<const StaticEdgeId> incident_edges(VertexId v) const {
    return std::span<const StaticEdgeId>(incident_).subspan(offsets_[v],
                                                             offsets_[v + 1] - offsets_[v]);
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  std::span<const StaticEdge> edges() const noexcept { return edges_; }
  const StaticEdge& edge(StaticEdgeId e) const { return edges_[e]; }

  /// d_e: degree of the lower-degree endpoint.
  std::uint32_t edge_degree(StaticEdgeId e) const { return edge_degree_[e]; }
  /// c_uv = |N(u) ∩ N(v)|.
  std::uint32_t common_count(StaticEdgeId e) const { return common_count_[e]; }

  std::optional<StaticEdgeId> find_edge(VertexId a, VertexId b) const;
  bool adjacent(VertexId a, VertexId b) const { return find_edge(a, b).has_value(); }

  /// Static edge carrying a directed pair.
  StaticEdgeId edge_of_pair(PairId p) const { return edge_of_pair_[p]; }

  friend StaticGraph build_static(const TemporalGraph& graph);

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> neighbors_;
  std::vector<StaticEdgeId> incident_;
  std::vector<StaticEdge> edges_;
  std::vector<std::uint32_t> edge_degree_;
  std::vector<std::uint32_t> common_count_;
  std::vector<StaticEdgeId> edge_of_pair_;
};

StaticGraph build_static(const TemporalGraph& graph);

/// Degeneracy ordering from min-degree peeling, ties broken by smallest vertex id.
///
/// `order[i]` is the i-th removed vertex and `rank[v]` its position; the oriented graph
/// keeps each static edge as low rank -> high rank.
class DegeneracyOrdering {
 public:
  DegeneracyOrdering() = default;

  std::span<const VertexId> order() const noexcept { return order_; }
  std::uint32_t rank(VertexId v) const { return rank_[v]; }
  std::uint32_t alpha() const noexcept { return alpha_; }

  bool precedes(VertexId a, VertexId b) const { return rank_[a] < rank_[b]; }
  /// s_e: endpoint of the static edge with the smaller rank.
  VertexId source(const StaticEdge& e) const { return precedes(e.u, e.v) ? e.u : e.v; }

  /// N+(v), ascending by vertex id.
  std::span<const VertexId> out_neighbors(VertexId v) const {
    return std::span<const VertexId>(out_).subspan(out_offsets_[v],
                                                   out_offsets_[v + 1] - out_offsets_[v]);
  }
  /// Static edges parallel to `out_neighbors(v)`.
  std::span<const StaticEdgeId> out_edges(VertexId v) const {
    return std::span<const StaticEdgeId>(out_edges_).subspan(out_offsets_[v],
                                                             out_offsets_[v + 1] - out_offsets_[v]);
  }

  friend DegeneracyOrdering degeneracy_order(const StaticGraph& graph);

 private:
  std::vector<VertexId> order_;
  std::vector<std::uint32_t> rank_;
  std::uint32_t alpha_ = 0;
  std::vector<std::size_t> out_offsets_;
  std::vector<VertexId> out_;
  std::vector<StaticEdgeId> out_edges_;
};

DegeneracyOrdering degeneracy_order(const StaticGraph& graph);

struct GraphStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t static_edges = 0;
  std::uint32_t alpha = 0;
  std::size_t sigma_max = 0;
  /// Sum of d_e over static edges; O(m alpha) by Chiba-Nishizeki.
  std::uint64_t sum_edge_degree = 0;
  std::size_t self_loops_dropped = 0;

  friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

GraphStats stats(const TemporalGraph& graph, const StaticGraph& projection,
                 const DegeneracyOrdering& ordering);

}  // namespace folty
