#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "folty/query.hpp"
#include "folty/temporal_graph.hpp"
#include "folty/types.hpp"

namespace folty {

inline constexpr std::size_t kDefaultOracleCeiling = 10000;

class OracleCeilingExceeded : public std::runtime_error {
 public:
  OracleCeilingExceeded(std::size_t edges, std::size_t ceiling);
  std::size_t edges() const noexcept { return edges_; }
  std::size_t ceiling() const noexcept { return ceiling_; }

 private:
  std::size_t edges_;
  std::size_t ceiling_;
};

struct Witness {
  OriginalId w = 0;
  Timestamp t2 = 0;
  Timestamp t3 = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// count[e] is the number of distinct w, not of (e2, e3) pairs. When requested,
/// witnesses[e] holds the earliest (t2, t3) per w, ascending by w.
struct OracleCounts {
  std::vector<std::uint32_t> count;
  std::vector<std::vector<Witness>> witnesses;
};

/// Exhaustive scan straight from the edge list.
OracleCounts oracle_counts(const TemporalGraph& graph, Duration delta,
                           std::size_t ceiling = kDefaultOracleCeiling,
                           bool with_witnesses = false);

SolutionSet oracle_solutions(const TemporalGraph& graph, const QuerySpec& spec,
                             std::size_t ceiling = kDefaultOracleCeiling);

/// Same, thresholding counts already produced by oracle_counts for spec.delta.
SolutionSet oracle_solutions(const TemporalGraph& graph, const QuerySpec& spec,
                             const OracleCounts& counts);

}  // namespace folty
