#include "folty/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace folty {

OracleCeilingExceeded::OracleCeilingExceeded(std::size_t edges, std::size_t ceiling)
    : std::runtime_error("oracle refuses " + std::to_string(edges) + " temporal edges (limit " +
                         std::to_string(ceiling) + ")"),
      edges_(edges),
      ceiling_(ceiling) {}

namespace {

struct Index {
  std::vector<std::set<VertexId>> nbrs;
  std::map<std::pair<VertexId, VertexId>, std::vector<Timestamp>> times;
};

Index index_edges(const TemporalGraph& graph) {
  Index idx;
  idx.nbrs.resize(graph.num_vertices());
  for (const auto& e : graph.edges()) {
    idx.nbrs[e.src].insert(e.dst);
    idx.nbrs[e.dst].insert(e.src);
    idx.times[{e.src, e.dst}].push_back(e.t);
  }
  return idx;
}

const std::vector<Timestamp>& times_of(const Index& idx, VertexId x, VertexId y) {
  static const std::vector<Timestamp> none;
  auto it = idx.times.find({x, y});
  return it == idx.times.end() ? none : it->second;
}

bool at_least(std::uint64_t count, std::uint64_t size, const Rational& tau) {
  return static_cast<__int128>(count) * tau.den() >= static_cast<__int128>(tau.num()) * size;
}

void check_ceiling(const TemporalGraph& graph, std::size_t ceiling) {
  if (graph.num_edges() > ceiling) throw OracleCeilingExceeded(graph.num_edges(), ceiling);
}

}  // namespace

OracleCounts oracle_counts(const TemporalGraph& graph, Duration delta, std::size_t ceiling,
                           bool with_witnesses) {
  check_ceiling(graph, ceiling);
  const Index idx = index_edges(graph);
  OracleCounts out;
  out.count.assign(graph.num_edges(), 0);
  if (with_witnesses) out.witnesses.resize(graph.num_edges());

  for (EdgeId id = 0; id < graph.num_edges(); ++id) {
    const auto& e = graph.edge(id);
    for (VertexId w : idx.nbrs[e.src]) {
      if (w == e.dst || !idx.nbrs[e.dst].count(w)) continue;
      const auto& second = times_of(idx, e.src, w);
      const auto& third = times_of(idx, e.dst, w);
      bool found = false;
      Witness best{};
      for (Timestamp t2 : second) {
        for (Timestamp t3 : third) {
          if (e.t <= t2 && t2 <= t3 && static_cast<__int128>(t3) - e.t <= delta) {
            const Witness cand{graph.label(w), t2, t3};
            if (!found || std::pair(t2, t3) < std::pair(best.t2, best.t3)) best = cand;
            found = true;
          }
        }
      }
      if (!found) continue;
      ++out.count[id];
      if (with_witnesses) out.witnesses[id].push_back(best);
    }
  }
  return out;
}

SolutionSet oracle_solutions(const TemporalGraph& graph, const QuerySpec& spec,
                             std::size_t ceiling) {
  spec.validate();
  return oracle_solutions(graph, spec, oracle_counts(graph, spec.delta, ceiling));
}

SolutionSet oracle_solutions(const TemporalGraph& graph, const QuerySpec& spec,
                             const OracleCounts& counts) {
  spec.validate();
  const Index idx = index_edges(graph);

  auto universe = [&](const TemporalEdge& e) -> std::uint64_t {
    if (spec.universe == Universe::Destination) return idx.nbrs[e.dst].size();
    std::uint64_t common = 0;
    for (VertexId w : idx.nbrs[e.src]) common += idx.nbrs[e.dst].count(w);
    return common;
  };
  auto certifies = [&](EdgeId id, const Rational& tau) {
    const std::uint64_t c = counts.count[id];
    return c >= 1 && at_least(c, universe(graph.edge(id)), tau);
  };

  SolutionSet out;
  out.kind = spec.kind;
  if (spec.kind == QueryKind::Eea) {
    std::vector<EdgeId> ids;
    for (EdgeId id = 0; id < graph.num_edges(); ++id)
      if (certifies(id, spec.tau)) ids.push_back(id);
    std::sort(ids.begin(), ids.end(), [&](EdgeId a, EdgeId b) {
      return std::pair(graph.edge(a).t, a) < std::pair(graph.edge(b).t, b);
    });
    for (EdgeId id : ids) {
      const auto& e = graph.edge(id);
      out.certificates.push_back({id, graph.label(e.src), graph.label(e.dst), e.t,
                                  counts.count[id], static_cast<std::uint32_t>(universe(e))});
    }
    return out;
  }

  const Rational& outer = spec.kind == QueryKind::Eae ? spec.tau : spec.tau1;
  for (VertexId u = 0; u < graph.num_vertices(); ++u) {
    std::set<VertexId> hit;
    for (EdgeId id = 0; id < graph.num_edges(); ++id) {
      const auto& e = graph.edge(id);
      if (e.src != u) continue;
      if (spec.kind == QueryKind::Eae ? counts.count[id] >= 1 : certifies(id, spec.tau2))
        hit.insert(e.dst);
    }
    const auto satisfied = static_cast<std::uint32_t>(hit.size());
    const auto degree = static_cast<std::uint32_t>(idx.nbrs[u].size());
    if (satisfied >= 1 && at_least(satisfied, degree, outer))
      out.vertices.push_back({graph.label(u), satisfied, degree});
  }
  return out;
}

}  // namespace folty
