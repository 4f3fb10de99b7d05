#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "folty/types.hpp"

namespace folty {

/// Closed interval [lo, hi].
struct Interval {
  Timestamp lo = 0;
  Timestamp hi = 0;

  bool contains(Timestamp t) const noexcept { return lo <= t && t <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Segment tree over the distinct timestamps t_1 < ... < t_r of one directed pair.
///
/// The 2r - 1 leaves are, in order, (t_1,t_1], (t_1,t_2], (t_2,t_2], ..., (t_r,t_r]:
/// point leaves for each timestamp interleaved with the gaps between them. Intervals are
/// never stored; inserting a list simulates the canonical-subset descent and updates
/// per-node counter/color/vertex fields so that `lookup(t)` returns the number of
/// distinct vertex labels whose lists have an interval containing t.
class IntervalSegmentTree {
 public:
  /// Left-open, right-closed segment (left, right].
  struct Segment {
    Timestamp left = 0;
    Timestamp right = 0;
    friend bool operator==(const Segment&, const Segment&) = default;
  };

  IntervalSegmentTree() = default;
  explicit IntervalSegmentTree(std::span<const Timestamp> timestamps) { rebuild(timestamps); }

  /// Resets to a fresh tree over `timestamps` (sorted, strictly increasing), reusing storage.
  void rebuild(std::span<const Timestamp> timestamps);

  bool empty() const noexcept { return times_.empty(); }
  std::span<const Timestamp> timestamps() const noexcept { return times_; }
  std::size_t num_leaves() const noexcept { return leaves_; }
  Segment leaf_segment(std::size_t leaf) const;
  /// Height of the tree in edges; 0 for a single leaf.
  std::size_t height() const noexcept;

  /// Largest sub-interval of `interval` with both endpoints in the timestamp set, or
  /// nullopt when it contains none of them.
  std::optional<Interval> snap(const Interval& interval) const;

  /// Inserts one vertex's interval list in three passes (mark, prune nested, count).
  /// Intervals are snapped first; unsnappable ones are skipped. Labels are expected to be
  /// distinct across calls on the same tree; repeating a label merges with its last use.
  void insert_list(std::span<const Interval> intervals, VertexId vertex);

  /// Sum of counters on the root-to-leaf path of segments containing t.
  std::uint32_t lookup(Timestamp t) const;

  /// True when no node is GREY; holds between insert_list calls.
  bool all_white() const;

  /// Nodes touched by the most recent insert_list / lookup call.
  std::size_t last_insert_visits() const noexcept { return insert_visits_; }
  std::size_t last_lookup_visits() const noexcept { return lookup_visits_; }

 private:
  struct Node {
    std::uint32_t counter = 0;
    VertexId vertex = kNoVertex;
    bool grey = false;
  };
  using LeafRange = std::pair<std::size_t, std::size_t>;

  std::optional<LeafRange> to_leaves(const Interval& interval) const;
  void phase1(std::size_t node, std::size_t lo, std::size_t hi, LeafRange q);
  void phase2(std::size_t node, std::size_t lo, std::size_t hi, LeafRange q, bool grey_above);
  void phase3(std::size_t node, std::size_t lo, std::size_t hi, LeafRange q, VertexId vertex);

  std::vector<Timestamp> times_;
  std::size_t leaves_ = 0;
  std::vector<Node> nodes_;
  std::vector<LeafRange> scratch_;
  std::size_t insert_visits_ = 0;
  mutable std::size_t lookup_visits_ = 0;
};

}  // namespace folty
