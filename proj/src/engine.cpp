#include "folty/engine.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "folty/scan.hpp"
#include "parallel.hpp"

namespace folty {

std::vector<std::uint32_t> CountTable::totals() const {
  std::vector<std::uint32_t> out(in_count.size());
  for (std::size_t e = 0; e < out.size(); ++e) out[e] = in_count[e] + out_count[e];
  return out;
}

namespace {

// t <= second[j] <= third[k] <= t + delta, with NONE (== list length) failing.
bool chain_holds(Timestamp t, std::span<const Timestamp> second, std::uint32_t j,
                 std::span<const Timestamp> third, std::uint32_t k, Duration delta) {
  if (j >= second.size() || k >= third.size()) return false;
  return t <= second[j] && second[j] <= third[k] && within_window(t, third[k], delta);
}

PairView view_from(const TemporalGraph& graph, const StaticEdge& edge, VertexId from) {
  const PairId p = edge.from(from);
  return p == kNoPair ? PairView{} : graph.pair_view(p);
}

// Every static triangle a < b < c (by rank) rooted at `a`, once each.
// `marks` has one slot per vertex, all kNoStaticEdge on entry and on exit.
template <typename Fn>
void for_each_triangle_at(VertexId a, const DegeneracyOrdering& ordering,
                          std::vector<StaticEdgeId>& marks, Fn&& fn) {
  const auto outs = ordering.out_neighbors(a);
  const auto out_ids = ordering.out_edges(a);
  for (std::size_t i = 0; i < outs.size(); ++i) marks[outs[i]] = out_ids[i];
  for (std::size_t i = 0; i < outs.size(); ++i) {
    const VertexId b = outs[i];
    const auto b_outs = ordering.out_neighbors(b);
    const auto b_ids = ordering.out_edges(b);
    for (std::size_t j = 0; j < b_outs.size(); ++j) {
      const VertexId c = b_outs[j];
      if (marks[c] != kNoStaticEdge) fn(b, c, out_ids[i], marks[c], b_ids[j]);
    }
  }
  for (VertexId v : outs) marks[v] = kNoStaticEdge;
}

void build_intervals_into(std::span<const Timestamp> from_b, std::span<const Timestamp> from_c,
                          Duration delta, IndexList& scratch, std::vector<Interval>& out) {
  out.clear();
  find_exceeding_entry_ls(from_b, from_c, scratch);
  for (std::size_t i = 0; i < from_b.size(); ++i) {
    const std::uint32_t k = scratch[i];
    if (k >= from_c.size()) continue;
    const Timestamp t2 = from_b[i];
    const Timestamp t3 = from_c[k];
    if (!within_window(t2, t3, delta)) continue;
    constexpr Timestamp kMin = std::numeric_limits<Timestamp>::min();
    const Timestamp lo = t3 < kMin + delta ? kMin : t3 - delta;
    out.push_back({lo, t2});
  }
}

}  // namespace

void out_case1(const PairView& first, std::span<const Timestamp> second,
               std::span<const Timestamp> third, Duration delta,
               std::span<std::uint32_t> out_count) {
  if (first.empty() || second.empty() || third.empty()) return;
  thread_local IndexList first_to_second;
  thread_local IndexList second_to_third;
  find_exceeding_entry_ls(first.times, second, first_to_second);
  find_exceeding_entry_bs(second, third, second_to_third);
  for (std::size_t i = 0; i < first.size(); ++i) {
    const std::uint32_t j = first_to_second[i];
    if (j >= second.size()) continue;
    if (chain_holds(first.times[i], second, j, third, second_to_third[j], delta)) {
      ++out_count[first.eids[i]];
    }
  }
}

void out_case2(const PairView& first, std::span<const Timestamp> second,
               std::span<const Timestamp> third, Duration delta,
               std::span<std::uint32_t> out_count) {
  if (first.empty() || second.empty() || third.empty()) return;
  thread_local IndexList first_to_third;
  thread_local IndexList first_to_second;
  find_bounding_entry(first.times, third, delta, first_to_third);
  find_exceeding_entry_bs(first.times, second, first_to_second);
  for (std::size_t i = 0; i < first.size(); ++i) {
    if (chain_holds(first.times[i], second, first_to_second[i], third, first_to_third[i], delta)) {
      ++out_count[first.eids[i]];
    }
  }
}

IntervalSet build_interval_set(std::span<const Timestamp> to_owner_from_b,
                               std::span<const Timestamp> to_owner_from_c, Duration delta,
                               VertexId owner, DirectedPair target) {
  IntervalSet set{owner, target, {}};
  IndexList scratch;
  build_intervals_into(to_owner_from_b, to_owner_from_c, delta, scratch, set.intervals);
  return set;
}

std::vector<std::uint32_t> out_pass(const TemporalGraph& graph, const StaticGraph& projection,
                                    const DegeneracyOrdering& ordering, Duration delta,
                                    const EngineOptions& options) {
  std::vector<std::uint32_t> out_count(graph.num_edges(), 0);
  const std::size_t n = graph.num_vertices();
  std::vector<std::vector<StaticEdgeId>> marks(std::max(1u, options.threads));

  // Rooting work at the lowest-ranked vertex a means every write lands on a static edge
  // whose source is a, so workers never share an output slot.
  detail::parallel_for(n, options.threads, [&](std::size_t index, unsigned worker) {
    auto& mark = marks[worker];
    if (mark.empty()) mark.assign(n, kNoStaticEdge);
    const auto a = static_cast<VertexId>(index);
    for_each_triangle_at(a, ordering, mark,
                         [&](VertexId b, VertexId c, StaticEdgeId ab, StaticEdgeId ac,
                             StaticEdgeId bc) {
                           const auto& e_ab = projection.edge(ab);
                           const auto& e_ac = projection.edge(ac);
                           const auto& e_bc = projection.edge(bc);
                           // Oriented edge (a, b) with w = c.
                           out_case1(view_from(graph, e_ab, a), view_from(graph, e_ac, a).times,
                                     view_from(graph, e_bc, b).times, delta, out_count);
                           out_case2(view_from(graph, e_ab, b), view_from(graph, e_bc, b).times,
                                     view_from(graph, e_ac, a).times, delta, out_count);
                           // Oriented edge (a, c) with w = b.
                           out_case1(view_from(graph, e_ac, a), view_from(graph, e_ab, a).times,
                                     view_from(graph, e_bc, c).times, delta, out_count);
                           out_case2(view_from(graph, e_ac, c), view_from(graph, e_bc, c).times,
                                     view_from(graph, e_ab, a).times, delta, out_count);
                         });
  });
  return out_count;
}

namespace {

// One in-neighbour contribution to the static edge {u, v}: the owner a sits below both
// endpoints in the ordering, `to_owner_u` = {u, a}, `to_owner_v` = {v, a}.
struct InTask {
  StaticEdgeId target;
  StaticEdgeId to_owner_u;
  StaticEdgeId to_owner_v;
};

}  // namespace

std::vector<std::uint32_t> in_pass(const TemporalGraph& graph, const StaticGraph& projection,
                                   const DegeneracyOrdering& ordering, Duration delta,
                                   const EngineOptions& options) {
  std::vector<std::uint32_t> in_count(graph.num_edges(), 0);
  const std::size_t n = graph.num_vertices();
  const unsigned threads = std::max(1u, options.threads);

  std::vector<std::vector<InTask>> per_worker(threads);
  std::vector<std::vector<StaticEdgeId>> marks(threads);
  detail::parallel_for(n, threads, [&](std::size_t index, unsigned worker) {
    auto& mark = marks[worker];
    if (mark.empty()) mark.assign(n, kNoStaticEdge);
    const auto a = static_cast<VertexId>(index);
    for_each_triangle_at(
        a, ordering, mark,
        [&](VertexId b, VertexId, StaticEdgeId ab, StaticEdgeId ac, StaticEdgeId bc) {
          const bool b_is_u = projection.edge(bc).u == b;
          per_worker[worker].push_back({bc, b_is_u ? ab : ac, b_is_u ? ac : ab});
        });
  });

  // Bucket tasks by target static edge so each edge's two trees have a single owner.
  const std::size_t num_static = projection.num_edges();
  std::vector<std::size_t> offsets(num_static + 1, 0);
  for (const auto& tasks : per_worker)
    for (const auto& t : tasks) ++offsets[t.target + 1];
  for (std::size_t s = 0; s < num_static; ++s) offsets[s + 1] += offsets[s];
  std::vector<InTask> bucketed(offsets[num_static]);
  {
    std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
    for (auto& tasks : per_worker) {
      for (const auto& t : tasks) bucketed[fill[t.target]++] = t;
      std::vector<InTask>().swap(tasks);
    }
  }
  std::vector<StaticEdgeId> targets;
  for (StaticEdgeId s = 0; s < num_static; ++s)
    if (offsets[s + 1] > offsets[s]) targets.push_back(s);

  struct Scratch {
    IntervalSegmentTree tree;
    std::vector<Timestamp> distinct;
    std::vector<Interval> intervals;
    IndexList index;
  };
  std::vector<Scratch> scratch(threads);

  detail::parallel_for(
      targets.size(), threads,
      [&](std::size_t index, unsigned worker) {
        auto& sc = scratch[worker];
        const StaticEdgeId s = targets[index];
        const auto& target = projection.edge(s);
        const std::span<const InTask> tasks(bucketed.data() + offsets[s],
                                            offsets[s + 1] - offsets[s]);
        for (const bool forward : {true, false}) {
          const VertexId x = forward ? target.u : target.v;
          const VertexId y = target.other(x);
          const PairView edges = view_from(graph, target, x);
          if (edges.empty()) continue;

          sc.distinct.assign(edges.times.begin(), edges.times.end());
          sc.distinct.erase(std::unique(sc.distinct.begin(), sc.distinct.end()),
                            sc.distinct.end());
          sc.tree.rebuild(sc.distinct);

          for (const auto& task : tasks) {
            const auto& x_owner = projection.edge(forward ? task.to_owner_u : task.to_owner_v);
            const auto& y_owner = projection.edge(forward ? task.to_owner_v : task.to_owner_u);
            const auto from_x = view_from(graph, x_owner, x).times;
            const auto from_y = view_from(graph, y_owner, y).times;
            if (from_x.empty() || from_y.empty()) continue;
            build_intervals_into(from_x, from_y, delta, sc.index, sc.intervals);
            if (!sc.intervals.empty()) sc.tree.insert_list(sc.intervals, x_owner.other(x));
          }
          for (std::size_t i = 0; i < edges.size(); ++i) {
            in_count[edges.eids[i]] = sc.tree.lookup(edges.times[i]);
          }
        }
      },
      16);
  return in_count;
}

CountTable compute_counts(const TemporalGraph& graph, const StaticGraph& projection,
                          const DegeneracyOrdering& ordering, Duration delta,
                          const EngineOptions& options) {
  CountTable table;
  table.delta = delta;
  table.out_count = out_pass(graph, projection, ordering, delta, options);
  table.in_count = in_pass(graph, projection, ordering, delta, options);
  return table;
}

CountTable compute_counts(const TemporalGraph& graph, Duration delta,
                          const EngineOptions& options) {
  const StaticGraph projection = build_static(graph);
  const DegeneracyOrdering ordering = degeneracy_order(projection);
  return compute_counts(graph, projection, ordering, delta, options);
}

std::vector<std::uint32_t> practical_counts(const TemporalGraph& graph,
                                            const StaticGraph& projection, Duration delta,
                                            const EngineOptions& options) {
  std::vector<std::uint32_t> count(graph.num_edges(), 0);
  struct Scratch {
    IndexList first_to_second;
    IndexList second_to_third;
  };
  std::vector<Scratch> scratch(std::max(1u, options.threads));

  auto scan = [&](const PairView& first, std::span<const Timestamp> second,
                  std::span<const Timestamp> third, Scratch& sc) {
    if (first.empty() || second.empty() || third.empty()) return;
    find_exceeding_entry_ls(first.times, second, sc.first_to_second);
    find_exceeding_entry_ls(second, third, sc.second_to_third);
    for (std::size_t i = 0; i < first.size(); ++i) {
      const std::uint32_t j = sc.first_to_second[i];
      if (j >= second.size()) continue;
      if (chain_holds(first.times[i], second, j, third, sc.second_to_third[j], delta)) {
        ++count[first.eids[i]];
      }
    }
  };

  // Each static edge only writes the counts of its own temporal edges.
  detail::parallel_for(projection.num_edges(), options.threads,
                       [&](std::size_t index, unsigned worker) {
                         auto& sc = scratch[worker];
                         const auto& edge = projection.edge(static_cast<StaticEdgeId>(index));
                         const VertexId u = edge.u;
                         const VertexId v = edge.v;
                         const bool u_lower = projection.degree(u) <= projection.degree(v);
                         const VertexId low = u_lower ? u : v;
                         const VertexId high = u_lower ? v : u;
                         const auto low_adj = projection.neighbors(low);
                         const auto low_ids = projection.incident_edges(low);
                         const PairView uv = view_from(graph, edge, u);
                         const PairView vu = view_from(graph, edge, v);
                         for (std::size_t i = 0; i < low_adj.size(); ++i) {
                           const VertexId w = low_adj[i];
                           if (w == high) continue;
                           const auto high_w = projection.find_edge(high, w);
                           if (!high_w) continue;
                           const auto& low_edge = projection.edge(low_ids[i]);
                           const auto& high_edge = projection.edge(*high_w);
                           const auto& uw = u_lower ? low_edge : high_edge;
                           const auto& vw = u_lower ? high_edge : low_edge;
                           scan(uv, view_from(graph, uw, u).times, view_from(graph, vw, v).times,
                                sc);
                           scan(vu, view_from(graph, vw, v).times, view_from(graph, uw, u).times,
                                sc);
                         }
                       });
  return count;
}

}  // namespace folty
