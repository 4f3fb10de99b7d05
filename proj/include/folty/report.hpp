#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "folty/pipeline.hpp"
#include "folty/query.hpp"
#include "folty/static_graph.hpp"

namespace folty {

struct RunReport {
  /// Absent for `stats` runs.
  std::optional<QuerySpec> query;
  EngineKind engine = EngineKind::Folty;
  std::size_t num_solutions = 0;
  SolutionSet solutions;
  GraphStats stats;
  PhaseTimings timings;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

std::string to_json(const RunReport& report, int indent = 2);
/// Throws ParameterError on malformed input.
RunReport report_from_json(std::string_view text);

inline constexpr std::string_view kCsvHeader =
    "kind,delta_s,tau,tau2,universe,engine,num_solutions,elapsed_ms";

/// One row in the fixed CSV schema; tau2 is empty unless kind is EAA, where tau holds tau1.
std::string csv_row(const QuerySpec& spec, EngineKind engine, std::size_t num_solutions,
                    double elapsed_ms);

void write_text(std::ostream& out, const RunReport& report);
void write_stats_text(std::ostream& out, const GraphStats& stats);

/// Full solution listing, one line per certificate or vertex.
void write_solutions(std::ostream& out, const SolutionSet& solutions);

}  // namespace folty
