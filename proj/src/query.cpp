#include "folty/query.hpp"

#include <algorithm>
#include <cctype>

namespace folty {

namespace {

std::string lowercase(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// Vertices u for which the number of neighbours v with some qualifying edge u -> v
// reaches tau * |N(u)|. `qualifies(e)` decides single temporal edges.
template <typename Qualifies>
std::vector<VertexSolution> vertex_solutions(const TemporalGraph& graph,
                                             const StaticGraph& projection, const Rational& tau,
                                             Qualifies&& qualifies) {
  std::vector<std::uint32_t> satisfied(graph.num_vertices(), 0);
  for (PairId p = 0; p < graph.num_pairs(); ++p) {
    const auto view = graph.pair_view(p);
    if (std::any_of(view.eids.begin(), view.eids.end(), qualifies)) ++satisfied[graph.pair(p).src];
  }
  std::vector<VertexSolution> out;
  for (VertexId u = 0; u < graph.num_vertices(); ++u) {
    const auto degree = static_cast<std::uint32_t>(projection.degree(u));
    if (satisfied[u] > 0 && tau.met_by(satisfied[u], degree))
      out.push_back({graph.label(u), satisfied[u], degree});
  }
  return out;
}

}  // namespace

QueryKind parse_query_kind(std::string_view text) {
  const std::string k = lowercase(text);
  if (k == "eea") return QueryKind::Eea;
  if (k == "eae") return QueryKind::Eae;
  if (k == "eaa") return QueryKind::Eaa;
  if (!k.empty() && k.front() == 'a')
    throw ParameterError("queries starting with a universal quantifier are not supported; "
                         "negate and apply de Morgan to get an existential prefix");
  throw ParameterError("unknown query kind '" + std::string(text) + "' (expected eea, eae, eaa)");
}

Universe parse_universe(std::string_view text) {
  const std::string u = lowercase(text);
  if (u == "dst") return Universe::Destination;
  if (u == "common") return Universe::Common;
  throw ParameterError("unknown universe '" + std::string(text) + "' (expected dst or common)");
}

std::string to_string(QueryKind kind) {
  switch (kind) {
    case QueryKind::Eea: return "eea";
    case QueryKind::Eae: return "eae";
    case QueryKind::Eaa: return "eaa";
  }
  return "?";
}

std::string to_string(Universe universe) {
  return universe == Universe::Destination ? "dst" : "common";
}

void QuerySpec::validate() const {
  if (delta < 0) throw ParameterError("delta must be non-negative");
  if (kind == QueryKind::Eaa) {
    require_threshold(tau1, "tau1");
    require_threshold(tau2, "tau2");
  } else {
    require_threshold(tau, "tau");
  }
}

std::uint32_t universe_size(const TemporalGraph& graph, const StaticGraph& projection, EdgeId e,
                            Universe universe) {
  if (universe == Universe::Destination)
    return static_cast<std::uint32_t>(projection.degree(graph.edge(e).dst));
  return projection.common_count(projection.edge_of_pair(graph.pair_of_edge(e)));
}

SolutionSet eval_eea(const TemporalGraph& graph, const StaticGraph& projection,
                     std::span<const std::uint32_t> totals, const Rational& tau,
                     Universe universe) {
  require_threshold(tau, "tau");
  SolutionSet out;
  out.kind = QueryKind::Eea;
  // eids already follow (t, input order).
  for (EdgeId e = 0; e < graph.num_edges(); ++e) {
    if (totals[e] == 0) continue;
    const std::uint32_t size = universe_size(graph, projection, e, universe);
    if (!tau.met_by(totals[e], size)) continue;
    const auto& edge = graph.edge(e);
    out.certificates.push_back(
        {e, graph.label(edge.src), graph.label(edge.dst), edge.t, totals[e], size});
  }
  return out;
}

SolutionSet eval_eae(const TemporalGraph& graph, const StaticGraph& projection,
                     std::span<const std::uint32_t> totals, const Rational& tau) {
  require_threshold(tau, "tau");
  SolutionSet out;
  out.kind = QueryKind::Eae;
  out.vertices = vertex_solutions(graph, projection, tau,
                                  [&](EdgeId e) { return totals[e] > 0; });
  return out;
}

SolutionSet eval_eaa(const TemporalGraph& graph, const StaticGraph& projection,
                     std::span<const std::uint32_t> totals, const Rational& tau1,
                     const Rational& tau2, Universe universe) {
  require_threshold(tau1, "tau1");
  require_threshold(tau2, "tau2");
  const SolutionSet inner = eval_eea(graph, projection, totals, tau2, universe);
  std::vector<bool> certified(graph.num_edges(), false);
  for (const auto& c : inner.certificates) certified[c.eid] = true;
  SolutionSet out;
  out.kind = QueryKind::Eaa;
  out.vertices = vertex_solutions(graph, projection, tau1,
                                  [&](EdgeId e) { return certified[e]; });
  return out;
}

SolutionSet evaluate(const TemporalGraph& graph, const StaticGraph& projection,
                     std::span<const std::uint32_t> totals, const QuerySpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case QueryKind::Eea: return eval_eea(graph, projection, totals, spec.tau, spec.universe);
    case QueryKind::Eae: return eval_eae(graph, projection, totals, spec.tau);
    case QueryKind::Eaa:
      return eval_eaa(graph, projection, totals, spec.tau1, spec.tau2, spec.universe);
  }
  return {};
}

SolutionSet practical_eea(const TemporalGraph& graph, const StaticGraph& projection,
                          Duration delta, const Rational& tau, Universe universe,
                          const EngineOptions& options) {
  require_threshold(tau, "tau");
  const auto totals = practical_counts(graph, projection, delta, options);
  return eval_eea(graph, projection, totals, tau, universe);
}

}  // namespace folty
