#include "folty/temporal_graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <sstream>

namespace folty {

ParseError::ParseError(std::size_t line, const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ": " + detail),
      line_(line),
      detail_(detail) {}

ParseError::ParseError(const std::string& path, std::size_t line, const std::string& detail)
    : std::runtime_error(path + ":" + std::to_string(line) + ": " + detail),
      line_(line),
      detail_(detail) {}

TemporalGraph TemporalGraph::from_records(std::span<const RawEdge> records) {
  TemporalGraph g;

  std::vector<OriginalId> labels;
  labels.reserve(records.size() * 2);
  for (const auto& r : records) {
    if (r.src == r.dst) {
      ++g.self_loops_dropped_;
      continue;
    }
    labels.push_back(r.src);
    labels.push_back(r.dst);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  g.labels_ = std::move(labels);

  auto dense = [&g](OriginalId id) {
    return static_cast<VertexId>(std::lower_bound(g.labels_.begin(), g.labels_.end(), id) -
                                 g.labels_.begin());
  };

  g.edges_.reserve(records.size() - g.self_loops_dropped_);
  for (const auto& r : records) {
    if (r.src == r.dst) continue;
    g.edges_.push_back({dense(r.src), dense(r.dst), r.t, 0});
  }
  // Equal timestamps keep input order.
  std::stable_sort(g.edges_.begin(), g.edges_.end(),
                   [](const TemporalEdge& a, const TemporalEdge& b) { return a.t < b.t; });
  for (std::size_t i = 0; i < g.edges_.size(); ++i) g.edges_[i].eid = static_cast<EdgeId>(i);

  const std::size_t m = g.edges_.size();
  std::vector<EdgeId> by_pair(m);
  std::iota(by_pair.begin(), by_pair.end(), EdgeId{0});
  std::sort(by_pair.begin(), by_pair.end(), [&g](EdgeId a, EdgeId b) {
    const auto& ea = g.edges_[a];
    const auto& eb = g.edges_[b];
    if (ea.src != eb.src) return ea.src < eb.src;
    if (ea.dst != eb.dst) return ea.dst < eb.dst;
    return a < b;
  });

  g.pair_eids_ = by_pair;
  g.pair_times_.resize(m);
  g.pair_of_edge_.resize(m);
  g.pair_offsets_.push_back(0);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& e = g.edges_[by_pair[i]];
    if (i == 0 || g.pairs_.back() != DirectedPair{e.src, e.dst}) {
      if (i != 0) g.pair_offsets_.push_back(i);
      g.pairs_.push_back({e.src, e.dst});
    }
    g.pair_times_[i] = e.t;
    g.pair_of_edge_[e.eid] = static_cast<PairId>(g.pairs_.size() - 1);
  }
  if (m != 0) g.pair_offsets_.push_back(m);
  return g;
}

std::optional<VertexId> TemporalGraph::find_vertex(OriginalId original) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), original);
  if (it == labels_.end() || *it != original) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

PairView TemporalGraph::pair_view(PairId p) const {
  const auto begin = pair_offsets_[p];
  const auto len = pair_offsets_[p + 1] - begin;
  return {std::span<const EdgeId>(pair_eids_).subspan(begin, len),
          std::span<const Timestamp>(pair_times_).subspan(begin, len)};
}

PairView TemporalGraph::pair_view(VertexId x, VertexId y) const {
  if (auto p = find_pair(x, y)) return pair_view(*p);
  return {};
}

std::optional<PairId> TemporalGraph::find_pair(VertexId x, VertexId y) const {
  const DirectedPair key{x, y};
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), key);
  if (it == pairs_.end() || *it != key) return std::nullopt;
  return static_cast<PairId>(it - pairs_.begin());
}

std::size_t TemporalGraph::max_multiplicity() const {
  std::size_t best = 0;
  for (PairId p = 0; p < pairs_.size(); ++p) {
    const auto& [x, y] = pairs_[p];
    std::size_t total = pair_view(p).size();
    if (auto back = find_pair(y, x)) {
      // Each unordered pair is visited from both sides; count it once.
      if (y < x) continue;
      total += pair_view(*back).size();
    }
    best = std::max(best, total);
  }
  return best;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

template <typename Int>
Int parse_field(std::string_view& rest, std::size_t line_no, const char* name) {
  std::size_t i = 0;
  while (i < rest.size() && is_space(rest[i])) ++i;
  rest.remove_prefix(i);
  if (rest.empty()) throw ParseError(line_no, std::string("missing ") + name + " field");
  const char* first = rest.data();
  const char* last = rest.data() + rest.size();
  // from_chars rejects a leading '+'.
  if (*first == '+') ++first;
  Int value{};
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range)
    throw ParseError(line_no, std::string(name) + " out of range");
  if (ec != std::errc() || (ptr != last && !is_space(*ptr)))
    throw ParseError(line_no, std::string("invalid ") + name + " field");
  rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
  return value;
}

}  // namespace

TemporalGraph parse_edge_list(std::string_view text) {
  std::vector<RawEdge> records;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);

    std::size_t i = 0;
    while (i < line.size() && is_space(line[i])) ++i;
    if (i == line.size() || line[i] == '#') continue;

    std::string_view rest = line;
    RawEdge r;
    r.src = parse_field<OriginalId>(rest, line_no, "src");
    r.dst = parse_field<OriginalId>(rest, line_no, "dst");
    r.t = parse_field<Timestamp>(rest, line_no, "timestamp");
    while (!rest.empty() && is_space(rest.front())) rest.remove_prefix(1);
    if (!rest.empty()) throw ParseError(line_no, "expected exactly three fields");
    records.push_back(r);
  }
  return TemporalGraph::from_records(records);
}

TemporalGraph parse_edge_list(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError("read failure");
  return parse_edge_list(std::string_view(text));
}

TemporalGraph load_edge_list(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  try {
    return parse_edge_list(in);
  } catch (const ParseError& e) {
    throw ParseError(path, e.line(), e.detail());
  }
}

void write_edge_list(std::ostream& out, const TemporalGraph& graph) {
  for (const auto& e : graph.edges()) {
    out << graph.label(e.src) << ' ' << graph.label(e.dst) << ' ' << e.t << '\n';
  }
}

}  // namespace folty
