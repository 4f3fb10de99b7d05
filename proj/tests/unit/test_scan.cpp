#include <random>

#include "doctest.h"
#include "folty/scan.hpp"

using namespace folty;

namespace {

using Times = std::vector<Timestamp>;

IndexList brute_exceeding(const Times& src, const Times& tgt) {
  IndexList out;
  for (Timestamp s : src) {
    std::uint32_t j = 0;
    while (j < tgt.size() && tgt[j] < s) ++j;
    out.push_back(j);
  }
  return out;
}

IndexList brute_bounding(const Times& src, const Times& tgt, Duration y) {
  IndexList out;
  for (Timestamp s : src) {
    std::uint32_t best = static_cast<std::uint32_t>(tgt.size());
    for (std::uint32_t j = 0; j < tgt.size(); ++j)
      if (tgt[j] <= s + y) best = j;
    out.push_back(best);
  }
  return out;
}

Times sorted_list(std::mt19937_64& rng, std::size_t max_len, Timestamp max_t) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<Timestamp> t(0, max_t);
  Times out(len(rng));
  for (auto& x : out) x = t(rng);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("exceeding entry on the reference lists") {
  const Times l1{1, 5, 9};
  const Times l2{2, 3, 10};
  CHECK(find_exceeding_entry_ls(l1, l2) == IndexList{0, 2, 2});
  CHECK(find_exceeding_entry_bs(l1, l2) == IndexList{0, 2, 2});
  CHECK(find_bounding_entry(l1, l2, 4) == IndexList{1, 1, 2});
}

TEST_CASE("equal timestamps count as exceeding") {
  const Times l1{3, 3, 7};
  const Times l2{3, 7};
  CHECK(find_exceeding_entry_ls(l1, l2) == IndexList{0, 0, 1});
  CHECK(find_exceeding_entry_bs(l1, l2) == IndexList{0, 0, 1});
}

TEST_CASE("NONE is the target length") {
  const Times l1{5, 20};
  const Times l2{1, 2};
  CHECK(find_exceeding_entry_ls(l1, l2) == IndexList{2, 2});
  CHECK(find_bounding_entry(Times{0}, Times{10, 11}, 5) == IndexList{2});
  CHECK(find_exceeding_entry_ls(l1, Times{}) == IndexList{0, 0});
  CHECK(find_exceeding_entry_bs(Times{}, l2).empty());
  CHECK(find_bounding_entry(Times{0}, Times{0}, 0) == IndexList{0});
}

TEST_CASE("primitives agree with brute force on random lists") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Duration> window(0, 30);
  for (int i = 0; i < 2000; ++i) {
    const Times a = sorted_list(rng, 12, 40);
    const Times b = sorted_list(rng, 12, 40);
    const Duration y = window(rng);
    const auto expected = brute_exceeding(a, b);
    CHECK(find_exceeding_entry_ls(a, b) == expected);
    CHECK(find_exceeding_entry_bs(a, b) == expected);
    CHECK(find_bounding_entry(a, b, y) == brute_bounding(a, b, y));
  }
}

TEST_CASE("bounding entry does not overflow near the timestamp limit") {
  const Timestamp big = std::numeric_limits<Timestamp>::max() - 1;
  const Times a{big};
  const Times b{big, big + 1};
  CHECK(find_bounding_entry(a, b, std::numeric_limits<Duration>::max()) == IndexList{1});
}
