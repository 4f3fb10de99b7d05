#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "folty/temporal_graph.hpp"

namespace folty::testing {

struct RandomGraphParams {
  std::uint32_t max_vertices = 30;
  std::uint32_t max_edges = 300;
  Timestamp max_time = 100;
  std::uint32_t max_multiplicity = 5;
};

/// Random directed temporal multigraph. Parallel copies of one (src, dst) get
/// independent timestamps; self-loops are never produced.
inline std::vector<RawEdge> random_records(std::mt19937_64& rng, const RandomGraphParams& p = {}) {
  std::uniform_int_distribution<std::uint32_t> nv(3, p.max_vertices);
  const std::uint32_t n = nv(rng);
  std::uniform_int_distribution<std::uint32_t> vert(0, n - 1);
  std::uniform_int_distribution<Timestamp> time(0, p.max_time);
  std::uniform_int_distribution<std::uint32_t> mult(1, p.max_multiplicity);
  std::uniform_int_distribution<std::uint32_t> budget_dist(1, p.max_edges);
  const std::uint32_t budget = budget_dist(rng);

  std::vector<RawEdge> out;
  while (out.size() < budget) {
    const auto a = vert(rng);
    const auto b = vert(rng);
    if (a == b) continue;
    const auto copies = std::min<std::uint32_t>(mult(rng), budget - out.size());
    for (std::uint32_t i = 0; i < copies; ++i) out.push_back({a * 7 + 3, b * 7 + 3, time(rng)});
  }
  return out;
}

inline TemporalGraph random_graph(std::mt19937_64& rng, const RandomGraphParams& p = {}) {
  const auto records = random_records(rng, p);
  return TemporalGraph::from_records(records);
}

}  // namespace folty::testing
