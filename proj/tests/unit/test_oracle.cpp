#include <algorithm>
#include <random>

#include "../support/random_graphs.hpp"
#include "doctest.h"
#include "folty/oracle.hpp"

using namespace folty;

TEST_CASE("oracle on one triangle") {
  const auto g = parse_edge_list("1 2 10\n1 3 12\n2 3 15\n");
  const auto c = oracle_counts(g, 10, kDefaultOracleCeiling, true);
  CHECK(c.count == std::vector<std::uint32_t>{1, 0, 0});
  REQUIRE(c.witnesses[0].size() == 1);
  CHECK(c.witnesses[0][0] == Witness{3, 12, 15});
}

TEST_CASE("oracle counts distinct neighbours") {
  const auto g = parse_edge_list(
      "1 2 0\n1 3 1\n1 3 1\n1 3 2\n2 3 2\n2 3 3\n1 4 5\n2 4 6\n1 5 5\n2 5 4\n");
  const auto c = oracle_counts(g, 10, kDefaultOracleCeiling, true);
  CHECK(c.count[0] == 2);
  REQUIRE(c.witnesses[0].size() == 2);
  CHECK(c.witnesses[0][0] == Witness{3, 1, 2});
  CHECK(c.witnesses[0][1] == Witness{4, 5, 6});
}

TEST_CASE("oracle on a triangle-free graph") {
  const auto g = parse_edge_list("1 2 1\n2 3 2\n");
  const auto c = oracle_counts(g, 100);
  CHECK(std::all_of(c.count.begin(), c.count.end(), [](auto x) { return x == 0; }));
}

TEST_CASE("oracle ceiling") {
  const auto g = parse_edge_list("1 2 1\n2 3 2\n3 1 3\n");
  CHECK_THROWS_AS(oracle_counts(g, 10, 2), OracleCeilingExceeded);
  CHECK_NOTHROW(oracle_counts(g, 10, 3));
}

TEST_CASE("oracle solutions on one triangle") {
  const auto g = parse_edge_list("1 2 10\n1 3 12\n2 3 15\n");
  QuerySpec q;
  q.delta = 10;
  q.tau = Rational(1, 2);
  CHECK(oracle_solutions(g, q).total() == 1);
  q.tau = Rational(1, 1);
  CHECK(oracle_solutions(g, q).total() == 0);
  q.kind = QueryKind::Eae;
  q.tau = Rational(1, 2);
  const auto eae = oracle_solutions(g, q);
  REQUIRE(eae.total() == 1);
  CHECK(eae.vertices[0].vertex == 1);
  q.kind = QueryKind::Eaa;
  q.tau1 = Rational(1, 2);
  q.tau2 = Rational(1, 2);
  const auto eaa = oracle_solutions(g, q);
  REQUIRE(eaa.total() == 1);
  CHECK(eaa.vertices[0].vertex == 1);
}

TEST_CASE("oracle counts ignore input order") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 50; ++i) {
    auto records = testing::random_records(rng);
    const auto g = TemporalGraph::from_records(records);
    std::shuffle(records.begin(), records.end(), rng);
    const auto h = TemporalGraph::from_records(records);
    // eids can move among equal timestamps, so compare per (src, dst, t) multiset.
    auto keyed = [](const TemporalGraph& x, const std::vector<std::uint32_t>& c) {
      std::vector<std::tuple<OriginalId, OriginalId, Timestamp, std::uint32_t>> out;
      for (const auto& e : x.edges())
        out.emplace_back(x.label(e.src), x.label(e.dst), e.t, c[e.eid]);
      std::sort(out.begin(), out.end());
      return out;
    };
    CHECK(keyed(g, oracle_counts(g, 15).count) == keyed(h, oracle_counts(h, 15).count));
  }
}
