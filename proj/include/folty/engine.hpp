#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "folty/segment_tree.hpp"
#include "folty/static_graph.hpp"
#include "folty/temporal_graph.hpp"
#include "folty/types.hpp"

namespace folty {

/// Per-temporal-edge tallies of triangle-forming common neighbours, split by whether the
/// neighbour is an out- or in-neighbour of the edge's source in the degeneracy orientation.
///
/// The triangle predicate: for e = (x, y, t), vertex w counts iff there are edges
/// (x, w, t2) and (y, w, t3) with t <= t2 <= t3 <= t + delta.
struct CountTable {
  std::vector<std::uint32_t> in_count;
  std::vector<std::uint32_t> out_count;
  Duration delta = 0;

  std::uint32_t total(EdgeId e) const { return in_count[e] + out_count[e]; }
  std::vector<std::uint32_t> totals() const;
};

/// Case 1 for an oriented edge (u, v) and w in N+(u) ∩ N(v): `first` = E_{u,v},
/// `second` = E_{u,w} times, `third` = E_{v,w} times.
void out_case1(const PairView& first, std::span<const Timestamp> second,
               std::span<const Timestamp> third, Duration delta,
               std::span<std::uint32_t> out_count);

/// Case 2, same (u, v, w): `first` = E_{v,u}, `second` = E_{v,w} times,
/// `third` = E_{u,w} times.
void out_case2(const PairView& first, std::span<const Timestamp> second,
               std::span<const Timestamp> third, Duration delta,
               std::span<std::uint32_t> out_count);

/// Intervals of start times t for which an edge (b, c, t) closes a delta-triangle through
/// the common neighbour `owner` = a, built from E_{b,a} and E_{c,a} alone.
struct IntervalSet {
  VertexId owner = kNoVertex;
  DirectedPair target;
  std::vector<Interval> intervals;
};

/// For each f in `to_owner_from_b` (E_{b,a}) whose first E_{c,a} entry g at or after t(f)
/// satisfies t(g) <= t(f) + delta, emits [t(g) - delta, t(f)].
IntervalSet build_interval_set(std::span<const Timestamp> to_owner_from_b,
                               std::span<const Timestamp> to_owner_from_c, Duration delta,
                               VertexId owner, DirectedPair target);

struct EngineOptions {
  unsigned threads = 1;
};

std::vector<std::uint32_t> out_pass(const TemporalGraph& graph, const StaticGraph& projection,
                                    const DegeneracyOrdering& ordering, Duration delta,
                                    const EngineOptions& options = {});

std::vector<std::uint32_t> in_pass(const TemporalGraph& graph, const StaticGraph& projection,
                                   const DegeneracyOrdering& ordering, Duration delta,
                                   const EngineOptions& options = {});

CountTable compute_counts(const TemporalGraph& graph, const StaticGraph& projection,
                          const DegeneracyOrdering& ordering, Duration delta,
                          const EngineOptions& options = {});

/// Convenience overload that builds the projection and ordering itself.
CountTable compute_counts(const TemporalGraph& graph, Duration delta,
                          const EngineOptions& options = {});

/// Baseline engine: per static edge, scan the lower-degree endpoint's neighbours and run
/// the linear-scan chain check on every static triangle. Returns in_count + out_count
/// equivalents (one total per temporal edge).
std::vector<std::uint32_t> practical_counts(const TemporalGraph& graph,
                                            const StaticGraph& projection, Duration delta,
                                            const EngineOptions& options = {});

}  // namespace folty
