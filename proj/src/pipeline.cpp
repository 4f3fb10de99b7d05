#include "folty/pipeline.hpp"

#include <chrono>

namespace folty {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

EngineKind parse_engine(std::string_view text) {
  if (text == "folty") return EngineKind::Folty;
  if (text == "practical") return EngineKind::Practical;
  if (text == "oracle") return EngineKind::Oracle;
  throw ParameterError("unknown engine '" + std::string(text) +
                       "' (expected folty, practical, oracle)");
}

std::string to_string(EngineKind engine) {
  switch (engine) {
    case EngineKind::Folty: return "folty";
    case EngineKind::Practical: return "practical";
    case EngineKind::Oracle: return "oracle";
  }
  return "?";
}

Pipeline::Pipeline(TemporalGraph graph, EngineKind engine, EngineOptions options,
                   std::size_t oracle_ceiling)
    : graph_(std::move(graph)), engine_(engine), options_(options), oracle_ceiling_(oracle_ceiling) {
  if (engine_ == EngineKind::Oracle && graph_.num_edges() > oracle_ceiling_)
    throw OracleCeilingExceeded(graph_.num_edges(), oracle_ceiling_);
  const auto start = Clock::now();
  projection_ = build_static(graph_);
  ordering_ = degeneracy_order(projection_);
  timings_.orient_ms = ms_since(start);
}

Pipeline Pipeline::load(const std::string& path, EngineKind engine, EngineOptions options,
                        std::size_t oracle_ceiling) {
  const auto start = Clock::now();
  TemporalGraph graph = load_edge_list(path);
  const double load_ms = ms_since(start);
  Pipeline p(std::move(graph), engine, options, oracle_ceiling);
  p.timings_.load_ms = load_ms;
  return p;
}

const std::vector<std::uint32_t>& Pipeline::totals(Duration delta) {
  if (cached_delta_ == delta) return cached_totals_;
  ++passes_;
  switch (engine_) {
    case EngineKind::Folty: {
      auto start = Clock::now();
      auto out = out_pass(graph_, projection_, ordering_, delta, options_);
      timings_.out_pass_ms += ms_since(start);
      start = Clock::now();
      auto in = in_pass(graph_, projection_, ordering_, delta, options_);
      timings_.in_pass_ms += ms_since(start);
      for (std::size_t e = 0; e < out.size(); ++e) out[e] += in[e];
      cached_totals_ = std::move(out);
      break;
    }
    case EngineKind::Practical: {
      const auto start = Clock::now();
      cached_totals_ = practical_counts(graph_, projection_, delta, options_);
      timings_.out_pass_ms += ms_since(start);
      break;
    }
    case EngineKind::Oracle: {
      const auto start = Clock::now();
      cached_totals_ = oracle_counts(graph_, delta, oracle_ceiling_).count;
      timings_.out_pass_ms += ms_since(start);
      break;
    }
  }
  cached_delta_ = delta;
  return cached_totals_;
}

SolutionSet Pipeline::run(const QuerySpec& spec) {
  spec.validate();
  if (engine_ == EngineKind::Oracle) {
    const auto start = Clock::now();
    ++passes_;
    SolutionSet out = oracle_solutions(graph_, spec, oracle_ceiling_);
    timings_.threshold_ms += ms_since(start);
    return out;
  }
  const auto& counts = totals(spec.delta);
  const auto start = Clock::now();
  SolutionSet out = evaluate(graph_, projection_, counts, spec);
  timings_.threshold_ms += ms_since(start);
  return out;
}

}  // namespace folty
