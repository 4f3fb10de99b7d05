#include "folty/segment_tree.hpp"

#include <algorithm>
#include <bit>

namespace folty {

// Nodes use heap numbering (root 1, children 2k and 2k+1) over the leaf index range
// [0, leaves_). Leaf 2i is the point t_i, leaf 2i+1 the gap (t_i, t_{i+1}).

void IntervalSegmentTree::rebuild(std::span<const Timestamp> timestamps) {
  times_.assign(timestamps.begin(), timestamps.end());
  leaves_ = times_.empty() ? 0 : 2 * times_.size() - 1;
  nodes_.assign(leaves_ == 0 ? 0 : 4 * leaves_, Node{});
  insert_visits_ = 0;
  lookup_visits_ = 0;
}

IntervalSegmentTree::Segment IntervalSegmentTree::leaf_segment(std::size_t leaf) const {
  const std::size_t i = leaf / 2;
  if (leaf % 2 == 0) return {times_[i], times_[i]};
  return {times_[i], times_[i + 1]};
}

std::size_t IntervalSegmentTree::height() const noexcept {
  if (leaves_ <= 1) return 0;
  return static_cast<std::size_t>(std::bit_width(leaves_ - 1));
}

std::optional<Interval> IntervalSegmentTree::snap(const Interval& interval) const {
  if (interval.lo > interval.hi) return std::nullopt;
  auto first = std::lower_bound(times_.begin(), times_.end(), interval.lo);
  auto last = std::upper_bound(times_.begin(), times_.end(), interval.hi);
  if (first == last) return std::nullopt;
  return Interval{*first, *(last - 1)};
}

std::optional<IntervalSegmentTree::LeafRange> IntervalSegmentTree::to_leaves(
    const Interval& interval) const {
  if (interval.lo > interval.hi) return std::nullopt;
  const auto first = static_cast<std::size_t>(
      std::lower_bound(times_.begin(), times_.end(), interval.lo) - times_.begin());
  const auto last = static_cast<std::size_t>(
      std::upper_bound(times_.begin(), times_.end(), interval.hi) - times_.begin());
  if (first == last) return std::nullopt;
  return LeafRange{2 * first, 2 * (last - 1)};
}

void IntervalSegmentTree::insert_list(std::span<const Interval> intervals, VertexId vertex) {
  insert_visits_ = 0;
  if (leaves_ == 0) return;
  scratch_.clear();
  for (const auto& interval : intervals) {
    if (auto range = to_leaves(interval)) scratch_.push_back(*range);
  }
  for (const auto& q : scratch_) phase1(1, 0, leaves_ - 1, q);
  for (const auto& q : scratch_) phase2(1, 0, leaves_ - 1, q, false);
  for (const auto& q : scratch_) phase3(1, 0, leaves_ - 1, q, vertex);
}

// Phase 1: grey every canonical node not already covered by a grey node on its path.
void IntervalSegmentTree::phase1(std::size_t node, std::size_t lo, std::size_t hi, LeafRange q) {
  ++insert_visits_;
  auto& nd = nodes_[node];
  if (nd.grey) return;
  if (q.first <= lo && hi <= q.second) {
    nd.grey = true;
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  if (q.first <= mid) phase1(2 * node, lo, mid, q);
  if (q.second > mid) phase1(2 * node + 1, mid + 1, hi, q);
}

// Phase 2: whiten canonical nodes that sit below another grey node. What stays grey is the
// set of topmost grey nodes, an antichain that covers the union of the list.
void IntervalSegmentTree::phase2(std::size_t node, std::size_t lo, std::size_t hi, LeafRange q,
                                 bool grey_above) {
  ++insert_visits_;
  auto& nd = nodes_[node];
  if (q.first <= lo && hi <= q.second) {
    if (grey_above) nd.grey = false;
    return;
  }
  const bool below = grey_above || nd.grey;
  const std::size_t mid = lo + (hi - lo) / 2;
  if (q.first <= mid) phase2(2 * node, lo, mid, q, below);
  if (q.second > mid) phase2(2 * node + 1, mid + 1, hi, q, below);
}

// Phase 3: count once at each surviving grey node. Descents stop at grey nodes (counted
// when their own interval arrives) and at nodes this vertex has already counted.
void IntervalSegmentTree::phase3(std::size_t node, std::size_t lo, std::size_t hi, LeafRange q,
                                 VertexId vertex) {
  ++insert_visits_;
  auto& nd = nodes_[node];
  if (q.first <= lo && hi <= q.second) {
    if (nd.grey) {
      nd.grey = false;
      ++nd.counter;
      nd.vertex = vertex;
    }
    return;
  }
  if (nd.grey) return;
  if (nd.counter > 0 && nd.vertex == vertex) return;
  const std::size_t mid = lo + (hi - lo) / 2;
  if (q.first <= mid) phase3(2 * node, lo, mid, q, vertex);
  if (q.second > mid) phase3(2 * node + 1, mid + 1, hi, q, vertex);
}

std::uint32_t IntervalSegmentTree::lookup(Timestamp t) const {
  lookup_visits_ = 0;
  if (leaves_ == 0 || t < times_.front() || t > times_.back()) return 0;
  const auto i = static_cast<std::size_t>(
      std::lower_bound(times_.begin(), times_.end(), t) - times_.begin());
  const std::size_t leaf = times_[i] == t ? 2 * i : 2 * i - 1;

  std::uint32_t sum = 0;
  std::size_t node = 1;
  std::size_t lo = 0;
  std::size_t hi = leaves_ - 1;
  while (true) {
    ++lookup_visits_;
    sum += nodes_[node].counter;
    if (lo == hi) break;
    const std::size_t mid = lo + (hi - lo) / 2;
    if (leaf <= mid) {
      node = 2 * node;
      hi = mid;
    } else {
      node = 2 * node + 1;
      lo = mid + 1;
    }
  }
  return sum;
}

bool IntervalSegmentTree::all_white() const {
  return std::none_of(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.grey; });
}

}  // namespace folty
