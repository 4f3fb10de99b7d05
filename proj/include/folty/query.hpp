#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "folty/engine.hpp"
#include "folty/rational.hpp"
#include "folty/static_graph.hpp"
#include "folty/temporal_graph.hpp"
#include "folty/types.hpp"

namespace folty {

/// EEA: exists u, exists v, for-at-least-tau w.  EAE: exists u, for-at-least-tau v,
/// exists w.  EAA: exists u, for-at-least-tau1 v, for-at-least-tau2 w.
enum class QueryKind { Eea, Eae, Eaa };

/// Set quantified by the innermost universal: N(v), or N(u) ∩ N(v).
enum class Universe { Destination, Common };

/// Accepts "eea", "eae", "eaa" in any case. Quantifier strings that start with a
/// universal ("a..") are rejected with a hint to rewrite them via negation.
QueryKind parse_query_kind(std::string_view text);
Universe parse_universe(std::string_view text);
std::string to_string(QueryKind kind);
std::string to_string(Universe universe);

struct QuerySpec {
  QueryKind kind = QueryKind::Eea;
  Duration delta = 0;
  Rational tau{1, 4};
  Rational tau1{1, 4};
  Rational tau2{1, 4};
  Universe universe = Universe::Destination;

  /// Throws ParameterError if a threshold used by `kind` is outside (0, 1].
  void validate() const;

  friend bool operator==(const QuerySpec&, const QuerySpec&) = default;
};

struct Certificate {
  EdgeId eid = 0;
  OriginalId src = 0;
  OriginalId dst = 0;
  Timestamp t = 0;
  std::uint32_t count = 0;
  std::uint32_t universe_size = 0;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct VertexSolution {
  OriginalId vertex = 0;
  std::uint32_t satisfied = 0;
  std::uint32_t degree = 0;

  friend bool operator==(const VertexSolution&, const VertexSolution&) = default;
};

/// EEA fills `certificates` (ordered by (t, eid)); EAE and EAA fill `vertices`
/// (ascending vertex).
struct SolutionSet {
  QueryKind kind = QueryKind::Eea;
  std::vector<Certificate> certificates;
  std::vector<VertexSolution> vertices;

  std::size_t total() const noexcept {
    return kind == QueryKind::Eea ? certificates.size() : vertices.size();
  }

  friend bool operator==(const SolutionSet&, const SolutionSet&) = default;
};

/// |U| for temporal edge e under `universe`.
std::uint32_t universe_size(const TemporalGraph& graph, const StaticGraph& projection, EdgeId e,
                            Universe universe);

/// `totals[e]` = number of distinct common neighbours closing a window triangle with e.
SolutionSet eval_eea(const TemporalGraph& graph, const StaticGraph& projection,
                     std::span<const std::uint32_t> totals, const Rational& tau,
                     Universe universe);

SolutionSet eval_eae(const TemporalGraph& graph, const StaticGraph& projection,
                     std::span<const std::uint32_t> totals, const Rational& tau);

SolutionSet eval_eaa(const TemporalGraph& graph, const StaticGraph& projection,
                     std::span<const std::uint32_t> totals, const Rational& tau1,
                     const Rational& tau2, Universe universe);

/// Dispatch on spec.kind.
SolutionSet evaluate(const TemporalGraph& graph, const StaticGraph& projection,
                     std::span<const std::uint32_t> totals, const QuerySpec& spec);

SolutionSet practical_eea(const TemporalGraph& graph, const StaticGraph& projection,
                          Duration delta, const Rational& tau, Universe universe,
                          const EngineOptions& options = {});

}  // namespace folty
