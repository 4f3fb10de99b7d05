#include <random>

#include "../support/random_graphs.hpp"
#include "doctest.h"
#include "folty/duration.hpp"
#include "folty/engine.hpp"
#include "folty/oracle.hpp"
#include "folty/query.hpp"

using namespace folty;

namespace {

struct Fixture {
  TemporalGraph g = parse_edge_list("1 2 10\n1 3 12\n2 3 15\n");
  StaticGraph s = build_static(g);
  std::vector<std::uint32_t> totals = compute_counts(g, 10).totals();
};

std::vector<OriginalId> vertex_ids(const SolutionSet& s) {
  std::vector<OriginalId> out;
  for (const auto& v : s.vertices) out.push_back(v.vertex);
  return out;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("25%") == Rational(1, 4));
  CHECK(Rational::parse("1/4") == Rational(1, 4));
  CHECK(Rational::parse("12.5%") == Rational(1, 8));
  CHECK(Rational::parse("1") == Rational(1, 1));
  CHECK(Rational::parse(".5") == Rational(1, 2));
  CHECK(Rational::parse("2/6").num() == 1);
  CHECK_THROWS_AS(Rational::parse(""), ParameterError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParameterError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParameterError);
  CHECK_THROWS_AS(Rational::parse("-0.5"), ParameterError);
  CHECK_THROWS_AS(Rational::parse("0.5x"), ParameterError);
}

TEST_CASE("thresholds outside (0, 1] are rejected") {
  CHECK_THROWS_AS(require_threshold(Rational::parse("0"), "tau"), ParameterError);
  CHECK_THROWS_AS(require_threshold(Rational::parse("1.01"), "tau"), ParameterError);
  CHECK_NOTHROW(require_threshold(Rational::parse("100%"), "tau"));
  Fixture f;
  CHECK_THROWS_AS(eval_eea(f.g, f.s, f.totals, Rational(0, 1), Universe::Destination),
                  ParameterError);
  CHECK_THROWS_AS(eval_eae(f.g, f.s, f.totals, Rational(3, 2)), ParameterError);
}

TEST_CASE("threshold comparison is exact") {
  const Rational third(1, 3);
  CHECK(third.met_by(1, 3));
  CHECK(third.met_by(33, 99));
  CHECK_FALSE(third.met_by(32, 97));
  CHECK_FALSE(Rational::parse("0.333333").met_by(333332, 1000000));
  CHECK(Rational(1, 4).met_by(1, 4));
  const std::uint64_t huge = std::numeric_limits<std::uint32_t>::max();
  CHECK(Rational(1, 1).met_by(huge, huge));
  CHECK_FALSE(Rational(1, 1).met_by(huge - 1, huge));
}

TEST_CASE("durations") {
  CHECK(parse_duration("0") == 0);
  CHECK(parse_duration("3600") == 3600);
  CHECK(parse_duration("90s") == 90);
  CHECK(parse_duration("30m") == 1800);
  CHECK(parse_duration("2h") == 7200);
  CHECK(parse_duration("1d") == 86400);
  CHECK(parse_duration("4w") == 2419200);
  CHECK_THROWS_AS(parse_duration(""), ParameterError);
  CHECK_THROWS_AS(parse_duration("w"), ParameterError);
  CHECK_THROWS_AS(parse_duration("-5"), ParameterError);
  CHECK_THROWS_AS(parse_duration("5y"), ParameterError);
  CHECK_THROWS_AS(parse_duration("99999999999999999w"), ParameterError);
  CHECK(format_duration(2419200) == "4w");
  CHECK(format_duration(90) == "90s");
}

TEST_CASE("query kinds") {
  CHECK(parse_query_kind("EEA") == QueryKind::Eea);
  CHECK(parse_query_kind("eae") == QueryKind::Eae);
  CHECK(parse_query_kind("eaa") == QueryKind::Eaa);
  CHECK_THROWS_WITH_AS(parse_query_kind("aee"), doctest::Contains("de Morgan"), ParameterError);
  CHECK_THROWS_AS(parse_query_kind("eee"), ParameterError);
  CHECK(parse_universe("common") == Universe::Common);
  CHECK_THROWS_AS(parse_universe("src"), ParameterError);
}

TEST_CASE("eea on one triangle") {
  Fixture f;
  const auto half = eval_eea(f.g, f.s, f.totals, Rational(1, 2), Universe::Destination);
  REQUIRE(half.total() == 1);
  const auto& c = half.certificates[0];
  CHECK(c.src == 1);
  CHECK(c.dst == 2);
  CHECK(c.t == 10);
  CHECK(c.count == 1);
  CHECK(c.universe_size == 2);
  CHECK(eval_eea(f.g, f.s, f.totals, Rational(1, 1), Universe::Destination).total() == 0);
  // the common universe of (1,2) is {3}
  CHECK(eval_eea(f.g, f.s, f.totals, Rational(1, 1), Universe::Common).total() == 1);
  CHECK(practical_eea(f.g, f.s, 10, Rational(1, 2), Universe::Destination) == half);
}

TEST_CASE("eae and eaa on one triangle") {
  Fixture f;
  CHECK(vertex_ids(eval_eae(f.g, f.s, f.totals, Rational(1, 2))) == std::vector<OriginalId>{1});
  CHECK(eval_eae(f.g, f.s, f.totals, Rational(1, 1)).total() == 0);
  CHECK(vertex_ids(eval_eaa(f.g, f.s, f.totals, Rational(1, 2), Rational(1, 2),
                            Universe::Destination)) == std::vector<OriginalId>{1});
  const auto v = eval_eae(f.g, f.s, f.totals, Rational(1, 2)).vertices.at(0);
  CHECK(v.satisfied == 1);
  CHECK(v.degree == 2);
}

TEST_CASE("vacuous universes never certify") {
  // (1,2) has no common neighbour; a zero count never meets a threshold.
  const auto g = parse_edge_list("1 2 1\n");
  const auto s = build_static(g);
  const auto totals = compute_counts(g, 10).totals();
  CHECK(eval_eea(g, s, totals, Rational(1, 4), Universe::Common).total() == 0);
  CHECK(eval_eea(g, s, totals, Rational(1, 2), Universe::Destination).total() == 0);
}

TEST_CASE("triangle-free graph has no certificates") {
  const auto g = parse_edge_list("1 2 1\n2 3 2\n3 4 3\n");
  const auto s = build_static(g);
  CHECK(practical_eea(g, s, 100, Rational(1, 4), Universe::Destination).total() == 0);
}

TEST_CASE("certificates come in (t, eid) order and vertices ascend") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 30; ++i) {
    const auto g = testing::random_graph(rng);
    const auto s = build_static(g);
    const auto totals = compute_counts(g, 50).totals();
    const auto eea = eval_eea(g, s, totals, Rational(1, 4), Universe::Destination);
    for (std::size_t k = 1; k < eea.certificates.size(); ++k) {
      const auto& a = eea.certificates[k - 1];
      const auto& b = eea.certificates[k];
      CHECK(std::pair(a.t, a.eid) < std::pair(b.t, b.eid));
    }
    const auto eae = eval_eae(g, s, totals, Rational(1, 4));
    for (std::size_t k = 1; k < eae.vertices.size(); ++k)
      CHECK(eae.vertices[k - 1].vertex < eae.vertices[k].vertex);
  }
}

TEST_CASE("query layer agrees with the oracle") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 30; ++i) {
    const auto g = testing::random_graph(rng);
    const auto s = build_static(g);
    const auto totals = compute_counts(g, 20).totals();
    for (Universe u : {Universe::Destination, Universe::Common}) {
      for (const Rational& tau : {Rational(1, 4), Rational(1, 2), Rational(1, 1)}) {
        QuerySpec q;
        q.delta = 20;
        q.universe = u;
        q.tau = tau;
        q.tau1 = tau;
        q.tau2 = Rational(1, 4);
        for (QueryKind k : {QueryKind::Eea, QueryKind::Eae, QueryKind::Eaa}) {
          q.kind = k;
          CHECK(evaluate(g, s, totals, q) == oracle_solutions(g, q));
        }
      }
    }
  }
}
