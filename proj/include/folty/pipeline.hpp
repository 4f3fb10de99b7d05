#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "folty/engine.hpp"
#include "folty/oracle.hpp"
#include "folty/query.hpp"
#include "folty/static_graph.hpp"
#include "folty/temporal_graph.hpp"

namespace folty {

enum class EngineKind { Folty, Practical, Oracle };

EngineKind parse_engine(std::string_view text);
std::string to_string(EngineKind engine);

/// Wall-clock milliseconds, accumulated over every call made through one Pipeline.
struct PhaseTimings {
  double load_ms = 0;
  double orient_ms = 0;
  double out_pass_ms = 0;
  double in_pass_ms = 0;
  double threshold_ms = 0;

  friend bool operator==(const PhaseTimings&, const PhaseTimings&) = default;
};

/// Owns a loaded graph and its orientation; counts are computed once per delta and
/// reused for every threshold evaluated at that delta.
class Pipeline {
 public:
  Pipeline(TemporalGraph graph, EngineKind engine, EngineOptions options = {},
           std::size_t oracle_ceiling = kDefaultOracleCeiling);

  static Pipeline load(const std::string& path, EngineKind engine, EngineOptions options = {},
                       std::size_t oracle_ceiling = kDefaultOracleCeiling);

  const TemporalGraph& graph() const noexcept { return graph_; }
  const StaticGraph& projection() const noexcept { return projection_; }
  const DegeneracyOrdering& ordering() const noexcept { return ordering_; }
  GraphStats graph_stats() const { return stats(graph_, projection_, ordering_); }
  EngineKind engine() const noexcept { return engine_; }

  /// Per-edge totals for `delta`; recomputed only when delta changes.
  const std::vector<std::uint32_t>& totals(Duration delta);

  SolutionSet run(const QuerySpec& spec);

  /// Number of times per-edge counts were computed.
  std::size_t count_passes() const noexcept { return passes_; }
  const PhaseTimings& timings() const noexcept { return timings_; }

 private:
  TemporalGraph graph_;
  StaticGraph projection_;
  DegeneracyOrdering ordering_;
  EngineKind engine_;
  EngineOptions options_;
  std::size_t oracle_ceiling_;
  std::optional<Duration> cached_delta_;
  std::vector<std::uint32_t> cached_totals_;
  std::size_t passes_ = 0;
  PhaseTimings timings_;
};

}  // namespace folty
