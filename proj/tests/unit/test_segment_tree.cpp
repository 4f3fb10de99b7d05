#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "folty/segment_tree.hpp"

using namespace folty;

namespace {

using Times = std::vector<Timestamp>;
using Lists = std::vector<std::vector<Interval>>;

std::optional<Interval> brute_snap(const Times& ts, const Interval& in) {
  std::optional<Timestamp> lo;
  std::optional<Timestamp> hi;
  for (Timestamp t : ts) {
    if (t >= in.lo && t <= in.hi) {
      if (!lo) lo = t;
      hi = t;
    }
  }
  if (!lo) return std::nullopt;
  return Interval{*lo, *hi};
}

// Labels whose snapped intervals cover the leaf holding t.
std::uint32_t brute_stab(const Times& ts, const Lists& lists, Timestamp t) {
  if (ts.empty() || t < ts.front() || t > ts.back()) return 0;
  const auto it = std::lower_bound(ts.begin(), ts.end(), t);
  const Timestamp right = *it;
  const Timestamp left = *it == t ? t : *(it - 1);
  std::uint32_t n = 0;
  for (const auto& list : lists) {
    bool hit = false;
    for (const auto& in : list) {
      const auto s = brute_snap(ts, in);
      if (s && s->lo <= left && right <= s->hi) hit = true;
    }
    n += hit;
  }
  return n;
}

}  // namespace

TEST_CASE("leaves interleave points and gaps") {
  const Times ts{6, 8, 9, 10, 13};
  IntervalSegmentTree tree(ts);
  REQUIRE(tree.num_leaves() == 9);
  const std::vector<IntervalSegmentTree::Segment> expected{
      {6, 6}, {6, 8}, {8, 8}, {8, 9}, {9, 9}, {9, 10}, {10, 10}, {10, 13}, {13, 13}};
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(tree.leaf_segment(i) == expected[i]);

  IntervalSegmentTree single(Times{5});
  CHECK(single.num_leaves() == 1);
  CHECK(single.leaf_segment(0) == IntervalSegmentTree::Segment{5, 5});
  CHECK(single.height() == 0);
}

TEST_CASE("empty tree answers zero") {
  IntervalSegmentTree tree(Times{});
  CHECK(tree.empty());
  const std::vector<Interval> list{{0, 100}};
  tree.insert_list(list, 1);
  CHECK(tree.lookup(0) == 0);
  CHECK(tree.lookup(50) == 0);
}

TEST_CASE("snap") {
  IntervalSegmentTree tree(Times{6, 8, 9, 10, 13});
  CHECK(tree.snap({8, 14}) == Interval{8, 13});
  CHECK_FALSE(tree.snap({7, 7}).has_value());
  CHECK(tree.snap({9, 9}) == Interval{9, 9});
  CHECK(tree.snap({-50, 6}) == Interval{6, 6});
  CHECK_FALSE(tree.snap({14, 20}).has_value());
}

TEST_CASE("nested intervals of one vertex count once, distinct vertices add") {
  const Times ts{6, 8, 9, 10, 13};
  for (bool reversed : {false, true}) {
    IntervalSegmentTree tree(ts);
    std::vector<Interval> w{{6, 13}, {8, 10}};
    if (reversed) std::reverse(w.begin(), w.end());
    tree.insert_list(w, 1);
    CHECK(tree.lookup(9) == 1);
    CHECK(tree.all_white());
    const std::vector<Interval> z{{8, 14}};
    tree.insert_list(z, 2);
    CHECK(tree.lookup(9) == 2);
    CHECK(tree.lookup(6) == 1);
    CHECK(tree.lookup(5) == 0);
    CHECK(tree.lookup(14) == 0);
    CHECK(tree.all_white());
  }
}

TEST_CASE("random insertion sequences match brute-force stabbing") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<Timestamp> coord(-5, 45);
  std::uniform_int_distribution<int> count(0, 8);
  for (int round = 0; round < 300; ++round) {
    std::set<Timestamp> uniq;
    const int r = std::uniform_int_distribution<int>(0, 12)(rng);
    for (int i = 0; i < r; ++i) uniq.insert(std::uniform_int_distribution<Timestamp>(0, 40)(rng));
    const Times ts(uniq.begin(), uniq.end());
    Lists lists(count(rng));
    for (auto& list : lists) {
      list.resize(count(rng));
      for (auto& in : list) {
        Timestamp a = coord(rng);
        Timestamp b = coord(rng);
        in = {std::min(a, b), std::max(a, b)};
      }
    }
    IntervalSegmentTree tree(ts);
    for (std::size_t i = 0; i < lists.size(); ++i) {
      tree.insert_list(lists[i], static_cast<VertexId>(i));
      REQUIRE(tree.all_white());
    }
    for (Timestamp t = -6; t <= 46; ++t) REQUIRE(tree.lookup(t) == brute_stab(ts, lists, t));
  }
}

TEST_CASE("visits stay logarithmic") {
  std::mt19937_64 rng(19);
  for (std::size_t r : {1u, 2u, 7u, 64u, 1000u}) {
    Times ts(r);
    for (std::size_t i = 0; i < r; ++i) ts[i] = static_cast<Timestamp>(3 * i);
    IntervalSegmentTree tree(ts);
    const double levels = 1 + std::ceil(std::log2(static_cast<double>(2 * r - 1)));
    CHECK(tree.height() + 1 <= levels);
    std::uniform_int_distribution<Timestamp> c(0, static_cast<Timestamp>(3 * r));
    for (int k = 0; k < 50; ++k) {
      std::vector<Interval> list(4);
      for (auto& in : list) {
        const Timestamp a = c(rng);
        const Timestamp b = c(rng);
        in = {std::min(a, b), std::max(a, b)};
      }
      tree.insert_list(list, static_cast<VertexId>(k));
      CHECK(tree.last_insert_visits() <= 3 * 4 * list.size() * levels);
      tree.lookup(c(rng));
      CHECK(tree.last_lookup_visits() <= levels);
    }
  }
}
