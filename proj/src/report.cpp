#include "folty/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "folty/duration.hpp"
#include "json.hpp"

namespace folty {

using nlohmann::json;

namespace {

json stats_json(const GraphStats& s) {
  return {{"n", s.n},
          {"m", s.m},
          {"static_edges", s.static_edges},
          {"alpha", s.alpha},
          {"sigma_max", s.sigma_max},
          {"sum_edge_degree", s.sum_edge_degree},
          {"self_loops_dropped", s.self_loops_dropped}};
}

GraphStats stats_from(const json& j) {
  GraphStats s;
  s.n = j.at("n").get<std::size_t>();
  s.m = j.at("m").get<std::size_t>();
  s.static_edges = j.at("static_edges").get<std::size_t>();
  s.alpha = j.at("alpha").get<std::uint32_t>();
  s.sigma_max = j.at("sigma_max").get<std::size_t>();
  s.sum_edge_degree = j.at("sum_edge_degree").get<std::uint64_t>();
  s.self_loops_dropped = j.at("self_loops_dropped").get<std::size_t>();
  return s;
}

json query_json(const QuerySpec& q) {
  json j{{"kind", to_string(q.kind)},
         {"delta_s", q.delta},
         {"universe", to_string(q.universe)}};
  if (q.kind == QueryKind::Eaa) {
    j["tau1"] = q.tau1.to_string();
    j["tau2"] = q.tau2.to_string();
  } else {
    j["tau"] = q.tau.to_string();
  }
  return j;
}

QuerySpec query_from(const json& j) {
  QuerySpec q;
  q.kind = parse_query_kind(j.at("kind").get<std::string>());
  q.delta = j.at("delta_s").get<Duration>();
  q.universe = parse_universe(j.at("universe").get<std::string>());
  if (q.kind == QueryKind::Eaa) {
    q.tau1 = Rational::parse(j.at("tau1").get<std::string>());
    q.tau2 = Rational::parse(j.at("tau2").get<std::string>());
  } else {
    q.tau = Rational::parse(j.at("tau").get<std::string>());
  }
  return q;
}

json solutions_json(const SolutionSet& s) {
  json items = json::array();
  if (s.kind == QueryKind::Eea) {
    for (const auto& c : s.certificates)
      items.push_back({{"eid", c.eid},
                       {"src", c.src},
                       {"dst", c.dst},
                       {"t", c.t},
                       {"count", c.count},
                       {"universe_size", c.universe_size}});
  } else {
    for (const auto& v : s.vertices)
      items.push_back({{"vertex", v.vertex}, {"satisfied", v.satisfied}, {"degree", v.degree}});
  }
  return items;
}

SolutionSet solutions_from(QueryKind kind, const json& items) {
  SolutionSet s;
  s.kind = kind;
  for (const auto& it : items) {
    if (kind == QueryKind::Eea) {
      s.certificates.push_back({it.at("eid").get<EdgeId>(), it.at("src").get<OriginalId>(),
                                it.at("dst").get<OriginalId>(), it.at("t").get<Timestamp>(),
                                it.at("count").get<std::uint32_t>(),
                                it.at("universe_size").get<std::uint32_t>()});
    } else {
      s.vertices.push_back({it.at("vertex").get<OriginalId>(),
                            it.at("satisfied").get<std::uint32_t>(),
                            it.at("degree").get<std::uint32_t>()});
    }
  }
  return s;
}

std::string decimal(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

}  // namespace

std::string to_json(const RunReport& r, int indent) {
  json j;
  j["engine"] = to_string(r.engine);
  j["stats"] = stats_json(r.stats);
  j["elapsed_ms"] = {{"load", r.timings.load_ms},
                     {"orient", r.timings.orient_ms},
                     {"out_pass", r.timings.out_pass_ms},
                     {"in_pass", r.timings.in_pass_ms},
                     {"threshold", r.timings.threshold_ms}};
  if (r.query) {
    j["query"] = query_json(*r.query);
    j["num_solutions"] = r.num_solutions;
    j["solutions"] = solutions_json(r.solutions);
  }
  return j.dump(indent);
}

RunReport report_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    RunReport r;
    r.engine = parse_engine(j.at("engine").get<std::string>());
    r.stats = stats_from(j.at("stats"));
    const auto& t = j.at("elapsed_ms");
    r.timings = {t.at("load").get<double>(), t.at("orient").get<double>(),
                 t.at("out_pass").get<double>(), t.at("in_pass").get<double>(),
                 t.at("threshold").get<double>()};
    if (j.contains("query")) {
      r.query = query_from(j.at("query"));
      r.num_solutions = j.at("num_solutions").get<std::size_t>();
      r.solutions = solutions_from(r.query->kind, j.at("solutions"));
    }
    return r;
  } catch (const json::exception& e) {
    throw ParameterError(std::string("malformed report: ") + e.what());
  }
}

std::string csv_row(const QuerySpec& spec, EngineKind engine, std::size_t num_solutions,
                    double elapsed_ms) {
  std::ostringstream os;
  const bool eaa = spec.kind == QueryKind::Eaa;
  os << to_string(spec.kind) << ',' << spec.delta << ','
     << decimal((eaa ? spec.tau1 : spec.tau).to_double()) << ','
     << (eaa ? decimal(spec.tau2.to_double()) : std::string()) << ','
     << to_string(spec.universe) << ',' << to_string(engine) << ',' << num_solutions << ','
     << std::fixed << std::setprecision(3) << elapsed_ms;
  return os.str();
}

void write_stats_text(std::ostream& out, const GraphStats& s) {
  out << std::left << std::setw(20) << "vertices" << s.n << '\n'
      << std::setw(20) << "temporal edges" << s.m << '\n'
      << std::setw(20) << "static edges" << s.static_edges << '\n'
      << std::setw(20) << "degeneracy" << s.alpha << '\n'
      << std::setw(20) << "max multiplicity" << s.sigma_max << '\n'
      << std::setw(20) << "sum edge degree" << s.sum_edge_degree << '\n'
      << std::setw(20) << "self loops dropped" << s.self_loops_dropped << '\n';
}

void write_text(std::ostream& out, const RunReport& r) {
  write_stats_text(out, r.stats);
  if (!r.query) return;
  const auto& q = *r.query;
  out << std::left << std::setw(20) << "query" << to_string(q.kind) << '\n'
      << std::setw(20) << "delta" << format_duration(q.delta) << " (" << q.delta << " s)\n";
  if (q.kind == QueryKind::Eaa) {
    out << std::setw(20) << "tau1" << q.tau1.to_string() << '\n'
        << std::setw(20) << "tau2" << q.tau2.to_string() << '\n';
  } else {
    out << std::setw(20) << "tau" << q.tau.to_string() << '\n';
  }
  out << std::setw(20) << "universe" << to_string(q.universe) << '\n'
      << std::setw(20) << "engine" << to_string(r.engine) << '\n'
      << std::setw(20) << "solutions" << r.num_solutions << '\n'
      << std::fixed << std::setprecision(3) << std::setw(20) << "load ms" << r.timings.load_ms
      << '\n'
      << std::setw(20) << "orient ms" << r.timings.orient_ms << '\n'
      << std::setw(20) << "out-pass ms" << r.timings.out_pass_ms << '\n'
      << std::setw(20) << "in-pass ms" << r.timings.in_pass_ms << '\n'
      << std::setw(20) << "threshold ms" << r.timings.threshold_ms << '\n';
}

void write_solutions(std::ostream& out, const SolutionSet& s) {
  if (s.kind == QueryKind::Eea) {
    out << "# src dst t count universe_size\n";
    for (const auto& c : s.certificates)
      out << c.src << ' ' << c.dst << ' ' << c.t << ' ' << c.count << ' ' << c.universe_size
          << '\n';
  } else {
    out << "# vertex satisfied degree\n";
    for (const auto& v : s.vertices) out << v.vertex << ' ' << v.satisfied << ' ' << v.degree << '\n';
  }
}

}  // namespace folty
