#include "folty/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "folty/duration.hpp"
#include "folty/pipeline.hpp"
#include "folty/report.hpp"

namespace folty {

namespace {

struct Flags {
  std::string kind;
  std::string path;
  std::string delta = "0";
  std::string tau;
  std::string tau1;
  std::string tau2;
  std::string universe = "dst";
  std::string engine = "folty";
  std::string format;
  std::string solutions_out;
  unsigned threads = 1;
  std::size_t oracle_limit = kDefaultOracleCeiling;
  std::vector<std::string> tau_list;
  std::string tau_range;
  std::vector<std::string> delta_list;
  std::vector<std::string> tau2_list;
};

std::vector<Rational> parse_rationals(const std::vector<std::string>& items, const char* name) {
  std::vector<Rational> out;
  for (const auto& s : items) {
    out.push_back(Rational::parse(s));
    require_threshold(out.back(), name);
  }
  return out;
}

std::vector<Rational> expand_range(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 3) throw ParameterError("--tau-range expects lo:hi:step");
  const Rational lo = Rational::parse(parts[0]);
  const Rational hi = Rational::parse(parts[1]);
  const Rational step = Rational::parse(parts[2]);
  if (step.num() == 0) throw ParameterError("--tau-range step must be positive");
  std::vector<Rational> out;
  for (Rational r = lo; r <= hi;
       r = Rational(r.num() * step.den() + step.num() * r.den(), r.den() * step.den())) {
    require_threshold(r, "tau");
    out.push_back(r);
    if (out.size() > 100000) throw ParameterError("--tau-range produces too many values");
  }
  return out;
}

QuerySpec spec_from(const Flags& f) {
  QuerySpec q;
  q.kind = parse_query_kind(f.kind);
  q.delta = parse_duration(f.delta);
  q.universe = parse_universe(f.universe);
  if (q.kind == QueryKind::Eaa) {
    if (f.tau1.empty() || f.tau2.empty()) throw ParameterError("eaa needs --tau1 and --tau2");
    q.tau1 = Rational::parse(f.tau1);
    q.tau2 = Rational::parse(f.tau2);
  } else {
    if (f.tau.empty()) throw ParameterError(to_string(q.kind) + " needs --tau");
    q.tau = Rational::parse(f.tau);
  }
  q.validate();
  return q;
}

int cmd_stats(const Flags& f, std::ostream& out) {
  Pipeline p = Pipeline::load(f.path, EngineKind::Folty);
  RunReport r;
  r.stats = p.graph_stats();
  r.timings = p.timings();
  if (f.format == "json") {
    out << to_json(r) << '\n';
  } else {
    write_stats_text(out, r.stats);
  }
  return kExitOk;
}

int cmd_query(const Flags& f, std::ostream& out) {
  const QuerySpec q = spec_from(f);
  Pipeline p = Pipeline::load(f.path, parse_engine(f.engine), {f.threads}, f.oracle_limit);
  RunReport r;
  r.query = q;
  r.engine = p.engine();
  r.solutions = p.run(q);
  r.num_solutions = r.solutions.total();
  r.stats = p.graph_stats();
  r.timings = p.timings();

  if (!f.solutions_out.empty()) {
    std::ofstream file(f.solutions_out);
    if (!file) throw IoError("cannot write '" + f.solutions_out + "'");
    write_solutions(file, r.solutions);
  }
  if (f.format == "csv") {
    const auto& t = r.timings;
    out << kCsvHeader << '\n'
        << csv_row(q, r.engine, r.num_solutions,
                   t.load_ms + t.orient_ms + t.out_pass_ms + t.in_pass_ms + t.threshold_ms)
        << '\n';
  } else if (f.format == "text") {
    write_text(out, r);
  } else {
    out << to_json(r) << '\n';
  }
  return kExitOk;
}

int cmd_sweep(const Flags& f, std::ostream& out) {
  const QueryKind kind = parse_query_kind(f.kind);
  const Universe universe = parse_universe(f.universe);
  if (!f.tau_list.empty() && !f.tau_range.empty())
    throw ParameterError("give either --tau-list or --tau-range, not both");
  std::vector<Rational> taus =
      f.tau_range.empty() ? parse_rationals(f.tau_list, "tau") : expand_range(f.tau_range);
  std::vector<Rational> tau2s = parse_rationals(f.tau2_list, "tau2");
  std::vector<Duration> deltas;
  for (const auto& d : f.delta_list) deltas.push_back(parse_duration(d));
  if (taus.empty() || deltas.empty()) throw ParameterError("empty sweep grid");
  if (kind == QueryKind::Eaa && tau2s.empty()) throw ParameterError("eaa sweep needs --tau2-list");
  if (kind != QueryKind::Eaa) tau2s = {Rational(1, 1)};
  std::sort(deltas.begin(), deltas.end());
  std::sort(taus.begin(), taus.end());
  std::sort(tau2s.begin(), tau2s.end());

  Pipeline p = Pipeline::load(f.path, parse_engine(f.engine), {f.threads}, f.oracle_limit);
  out << kCsvHeader << '\n';
  for (Duration delta : deltas) {
    for (const Rational& tau : taus) {
      for (const Rational& tau2 : tau2s) {
        QuerySpec q;
        q.kind = kind;
        q.delta = delta;
        q.universe = universe;
        q.tau = tau;
        q.tau1 = tau;
        q.tau2 = tau2;
        const auto start = std::chrono::steady_clock::now();
        const SolutionSet s = p.run(q);
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
        out << csv_row(q, p.engine(), s.total(), ms) << '\n';
      }
    }
  }
  return kExitOk;
}

unsigned threads_from_env() {
  const char* raw = std::getenv("FOLTY_THREADS");
  if (!raw || !*raw) return 1;
  const std::string_view text(raw);
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1 || value > 1024)
    throw ParameterError("FOLTY_THREADS must be an integer in [1, 1024], got '" +
                         std::string(text) + "'");
  return value;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thresholded first-order queries over temporal triangles"};
  app.require_subcommand(1);
  Flags f;

  auto* stats = app.add_subcommand("stats", "Graph statistics");
  stats->add_option("path", f.path, "Edge list: src dst t per line")->required();
  stats->add_option("--format", f.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");

  auto add_common = [&f](CLI::App* cmd) {
    cmd->add_option("kind", f.kind, "eea, eae or eaa")->required();
    cmd->add_option("path", f.path, "Edge list: src dst t per line")->required();
    cmd->add_option("--universe", f.universe, "dst or common")
        ->check(CLI::IsMember({"dst", "common"}));
    cmd->add_option("--engine", f.engine, "folty, practical or oracle")
        ->check(CLI::IsMember({"folty", "practical", "oracle"}));
    cmd->add_option("--threads", f.threads, "Worker threads (default: $FOLTY_THREADS or 1)")
        ->check(CLI::Range(1u, 1024u));
    cmd->add_option("--oracle-limit", f.oracle_limit, "Largest edge count the oracle accepts");
  };

  auto* query = app.add_subcommand("query", "Evaluate one query");
  add_common(query);
  query->add_option("--delta", f.delta, "Window, e.g. 3600, 30m, 4w");
  query->add_option("--tau", f.tau, "Threshold for eea/eae: 0.25, 25% or 1/4");
  query->add_option("--tau1", f.tau1, "Outer threshold for eaa");
  query->add_option("--tau2", f.tau2, "Inner threshold for eaa");
  query->add_option("--format", f.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->default_val("json");
  query->add_option("--solutions-out", f.solutions_out, "Write every solution to this file");

  auto* sweep = app.add_subcommand("sweep", "Evaluate a parameter grid as CSV");
  add_common(sweep);
  sweep->add_option("--tau-list", f.tau_list, "Thresholds (tau1 for eaa)")->delimiter(',');
  sweep->add_option("--tau-range", f.tau_range, "lo:hi:step");
  sweep->add_option("--delta-list", f.delta_list, "Windows")->delimiter(',')->required();
  sweep->add_option("--tau2-list", f.tau2_list, "Inner thresholds for eaa")->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    const auto* threads_opt = app.get_subcommands().front()->get_option_no_throw("--threads");
    if (threads_opt && threads_opt->count() == 0) f.threads = threads_from_env();
    if (stats->parsed()) return cmd_stats(f, out);
    if (query->parsed()) return cmd_query(f, out);
    return cmd_sweep(f, out);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OracleCeilingExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitOracleCeiling;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace folty
