#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "folty/types.hpp"

namespace folty {

/// Malformed edge-list input. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& detail);
  ParseError(const std::string& path, std::size_t line, const std::string& detail);
  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

/// The file could not be opened or read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One input record, in original ids.
struct RawEdge {
  OriginalId src = 0;
  OriginalId dst = 0;
  Timestamp t = 0;
};

struct TemporalEdge {
  VertexId src = kNoVertex;
  VertexId dst = kNoVertex;
  Timestamp t = 0;
  EdgeId eid = 0;

  friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

struct DirectedPair {
  VertexId src = kNoVertex;
  VertexId dst = kNoVertex;

  friend auto operator<=>(const DirectedPair&, const DirectedPair&) = default;
};

/// The temporal edges x -> y of one directed pair, ascending by (t, eid).
/// `times[i]` is the timestamp of `eids[i]`.
struct PairView {
  std::span<const EdgeId> eids;
  std::span<const Timestamp> times;

  std::size_t size() const noexcept { return eids.size(); }
  bool empty() const noexcept { return eids.empty(); }
};

/// Immutable temporal multigraph.
///
/// Vertices are remapped to dense ids in ascending order of their original id, so
/// comparing dense ids compares original ids. Edges are stored sorted by (t, input line)
/// and an edge's eid is its position in that order. Self-loops are dropped; parallel
/// edges, including exact duplicates, are kept.
class TemporalGraph {
 public:
  TemporalGraph() = default;

  /// Builds from records in input order.
  static TemporalGraph from_records(std::span<const RawEdge> records);

  std::size_t num_vertices() const noexcept { return labels_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::size_t self_loops_dropped() const noexcept { return self_loops_dropped_; }

  std::span<const TemporalEdge> edges() const noexcept { return edges_; }
  const TemporalEdge& edge(EdgeId e) const { return edges_[e]; }

  OriginalId label(VertexId v) const { return labels_[v]; }
  std::span<const OriginalId> labels() const noexcept { return labels_; }
  std::optional<VertexId> find_vertex(OriginalId original) const;

  std::size_t num_pairs() const noexcept { return pairs_.size(); }
  const DirectedPair& pair(PairId p) const { return pairs_[p]; }
  PairView pair_view(PairId p) const;
  /// Empty view when there is no x -> y edge.
  PairView pair_view(VertexId x, VertexId y) const;
  std::optional<PairId> find_pair(VertexId x, VertexId y) const;
  PairId pair_of_edge(EdgeId e) const { return pair_of_edge_[e]; }

  /// sigma(x, y): number of temporal edges x -> y.
  std::size_t multiplicity(VertexId x, VertexId y) const { return pair_view(x, y).size(); }
  /// Maximum over unordered pairs {x, y} of sigma(x, y) + sigma(y, x).
  std::size_t max_multiplicity() const;

 private:
  std::vector<OriginalId> labels_;
  std::vector<TemporalEdge> edges_;
  std::vector<DirectedPair> pairs_;
  std::vector<std::size_t> pair_offsets_;
  std::vector<EdgeId> pair_eids_;
  std::vector<Timestamp> pair_times_;
  std::vector<PairId> pair_of_edge_;
  std::size_t self_loops_dropped_ = 0;
};

/// Parses "src dst t" lines. Blank lines and lines starting with '#' are ignored;
/// CRLF line endings are accepted.
TemporalGraph parse_edge_list(std::istream& in);
TemporalGraph parse_edge_list(std::string_view text);
TemporalGraph load_edge_list(const std::string& path);

/// Writes one "src dst t" line per edge in eid order using original ids.
void write_edge_list(std::ostream& out, const TemporalGraph& graph);

}  // namespace folty
