#include "folty/static_graph.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace folty {

StaticGraph build_static(const TemporalGraph& graph) {
  StaticGraph s;
  const std::size_t n = graph.num_vertices();

  struct Keyed {
    VertexId lo;
    VertexId hi;
    PairId pair;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(graph.num_pairs());
  for (PairId p = 0; p < graph.num_pairs(); ++p) {
    const auto& [x, y] = graph.pair(p);
    keyed.push_back({std::min(x, y), std::max(x, y), p});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(a.lo, a.hi) < std::tie(b.lo, b.hi);
  });

  s.edge_of_pair_.assign(graph.num_pairs(), kNoStaticEdge);
  for (const auto& k : keyed) {
    if (s.edges_.empty() || s.edges_.back().u != k.lo || s.edges_.back().v != k.hi) {
      s.edges_.push_back({k.lo, k.hi, kNoPair, kNoPair});
    }
    auto& e = s.edges_.back();
    if (graph.pair(k.pair).src == k.lo) {
      e.forward = k.pair;
    } else {
      e.backward = k.pair;
    }
    s.edge_of_pair_[k.pair] = static_cast<StaticEdgeId>(s.edges_.size() - 1);
  }

  s.offsets_.assign(n + 1, 0);
  for (const auto& e : s.edges_) {
    ++s.offsets_[e.u + 1];
    ++s.offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) s.offsets_[v + 1] += s.offsets_[v];
  s.neighbors_.resize(s.offsets_[n]);
  s.incident_.resize(s.offsets_[n]);
  std::vector<std::size_t> fill(s.offsets_.begin(), s.offsets_.end() - 1);
  // Edges are sorted by (u, v), so every neighbor list comes out ascending.
  for (StaticEdgeId id = 0; id < s.edges_.size(); ++id) {
    const auto& e = s.edges_[id];
    s.neighbors_[fill[e.u]] = e.v;
    s.incident_[fill[e.u]++] = id;
    s.neighbors_[fill[e.v]] = e.u;
    s.incident_[fill[e.v]++] = id;
  }

  s.edge_degree_.resize(s.edges_.size());
  s.common_count_.resize(s.edges_.size());
  for (StaticEdgeId id = 0; id < s.edges_.size(); ++id) {
    const auto& e = s.edges_[id];
    const bool u_lower = s.degree(e.u) <= s.degree(e.v);
    const VertexId low = u_lower ? e.u : e.v;
    const VertexId high = u_lower ? e.v : e.u;
    s.edge_degree_[id] = static_cast<std::uint32_t>(s.degree(low));
    auto high_adj = s.neighbors(high);
    std::uint32_t common = 0;
    for (VertexId w : s.neighbors(low)) {
      if (std::binary_search(high_adj.begin(), high_adj.end(), w)) ++common;
    }
    s.common_count_[id] = common;
  }
  return s;
}

std::optional<StaticEdgeId> StaticGraph::find_edge(VertexId a, VertexId b) const {
  if (a >= num_vertices() || b >= num_vertices()) return std::nullopt;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto adj = neighbors(a);
  auto it = std::lower_bound(adj.begin(), adj.end(), b);
  if (it == adj.end() || *it != b) return std::nullopt;
  return incident_edges(a)[static_cast<std::size_t>(it - adj.begin())];
}

DegeneracyOrdering degeneracy_order(const StaticGraph& graph) {
  DegeneracyOrdering ord;
  const std::size_t n = graph.num_vertices();
  ord.order_.reserve(n);
  ord.rank_.assign(n, 0);

  // One min-heap of vertex ids per residual degree. Stale entries (vertex already removed
  // or degree since lowered) are skipped on pop.
  std::vector<std::uint32_t> residual(n);
  std::vector<std::vector<VertexId>> buckets;
  std::size_t max_degree = 0;
  for (VertexId v = 0; v < n; ++v) max_degree = std::max(max_degree, graph.degree(v));
  buckets.resize(max_degree + 1);
  for (VertexId v = 0; v < n; ++v) {
    residual[v] = static_cast<std::uint32_t>(graph.degree(v));
    buckets[residual[v]].push_back(v);
  }
  // Pushed in ascending id order, so each bucket already satisfies the heap property.
  std::vector<bool> removed(n, false);
  std::size_t low = 0;
  while (ord.order_.size() < n) {
    while (buckets[low].empty()) ++low;
    auto& bucket = buckets[low];
    std::pop_heap(bucket.begin(), bucket.end(), std::greater<>{});
    const VertexId v = bucket.back();
    bucket.pop_back();
    if (removed[v] || residual[v] != low) continue;

    removed[v] = true;
    ord.rank_[v] = static_cast<std::uint32_t>(ord.order_.size());
    ord.order_.push_back(v);
    ord.alpha_ = std::max(ord.alpha_, residual[v]);
    for (VertexId w : graph.neighbors(v)) {
      if (removed[w]) continue;
      auto& target = buckets[--residual[w]];
      target.push_back(w);
      std::push_heap(target.begin(), target.end(), std::greater<>{});
      low = std::min<std::size_t>(low, residual[w]);
    }
  }

  ord.out_offsets_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    std::size_t out = 0;
    for (VertexId w : graph.neighbors(v)) out += ord.rank_[w] > ord.rank_[v];
    ord.out_offsets_[v + 1] = ord.out_offsets_[v] + out;
  }
  ord.out_.reserve(ord.out_offsets_[n]);
  ord.out_edges_.reserve(ord.out_offsets_[n]);
  for (VertexId v = 0; v < n; ++v) {
    auto adj = graph.neighbors(v);
    auto ids = graph.incident_edges(v);
    for (std::size_t i = 0; i < adj.size(); ++i) {
      if (ord.rank_[adj[i]] > ord.rank_[v]) {
        ord.out_.push_back(adj[i]);
        ord.out_edges_.push_back(ids[i]);
      }
    }
  }
  return ord;
}

GraphStats stats(const TemporalGraph& graph, const StaticGraph& projection,
                 const DegeneracyOrdering& ordering) {
  GraphStats st;
  st.n = graph.num_vertices();
  st.m = graph.num_edges();
  st.static_edges = projection.num_edges();
  st.alpha = ordering.alpha();
  st.sigma_max = graph.max_multiplicity();
  for (StaticEdgeId e = 0; e < projection.num_edges(); ++e) {
    st.sum_edge_degree += projection.edge_degree(e);
  }
  st.self_loops_dropped = graph.self_loops_dropped();
  return st;
}

}  // namespace folty
