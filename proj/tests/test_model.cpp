#include "doctest.h"

#include <hotplug/model.hpp>

#include <set>
#include <vector>
#include <stdexcept>

using namespace hotplug;

namespace {

SystemParams params322(int symbols = 2, std::uint32_t q = 5) {
  return SystemParams{3, 2, 2, symbols, PrimeField(q)};
}

}  // namespace

TEST_CASE("system params validate ranges and derived quantities") {
  auto p = params322();
  CHECK_NOTHROW(p.validate());
  CHECK(p.max_distinct_demands() == 2);
  CHECK(p.library_dim() == 4);

  SystemParams many{4, 2, 7, 3, PrimeField(11)};
  CHECK(many.max_distinct_demands() == 2);  // min(N, K')

  CHECK_THROWS_AS((SystemParams{0, 1, 1, 1, PrimeField(2)}.validate()),
                  std::invalid_argument);
  CHECK_THROWS_AS((SystemParams{3, 0, 2, 2, PrimeField(2)}.validate()),
                  std::invalid_argument);
  CHECK_THROWS_AS((SystemParams{3, 4, 2, 2, PrimeField(2)}.validate()),
                  std::invalid_argument);  // K' > K
  CHECK_THROWS_AS((SystemParams{3, 2, 0, 2, PrimeField(2)}.validate()),
                  std::invalid_argument);
  CHECK_THROWS_AS((SystemParams{3, 2, 2, 0, PrimeField(2)}.validate()),
                  std::invalid_argument);
}

TEST_CASE("library flattening is file-major") {
  FileLibrary lib{{{1, 2}, {3, 4}}};
  CHECK(lib.flat() == std::vector<Fe>{1, 2, 3, 4});
}

TEST_CASE("generated libraries are deterministic in the seed and in range") {
  auto p = params322(8, 7);
  auto a = generate_library(p, 42);
  auto b = generate_library(p, 42);
  auto c = generate_library(p, 43);
  REQUIRE(a.files.size() == 2);
  REQUIRE(a.files[0].size() == 8);
  CHECK(a.files == b.files);
  CHECK(a.files != c.files);
  for (const auto& file : a.files)
    for (Fe s : file) CHECK(s < 7);
}

TEST_CASE("realize applies packet coefficients to the flat library") {
  auto p = params322(2, 5);
  FileLibrary lib{{{1, 2}, {3, 4}}};
  // Two rows over (F1[0], F1[1], F2[0], F2[1]).
  LinearPacket pkt{"x", FieldMatrix::from_rows({{1, 0, 1, 0}, {0, 2, 0, 3}},
                                               p.field)};
  auto vals = realize(pkt, lib.flat());
  REQUIRE(vals.size() == 2);
  CHECK(vals[0] == 4);  // 1 + 3
  CHECK(vals[1] == 1);  // 2*2 + 3*4 = 16 = 1 mod 5
}

TEST_CASE("cache plans and transmissions count rows") {
  auto p = params322(2, 5);
  LinearPacket one{"a", FieldMatrix(1, 4, p.field)};
  LinearPacket two{"b", FieldMatrix(2, 4, p.field)};
  CachePlan plan{{{one}, {one, two}, {}}, rat(3, 2)};
  CHECK(plan.user_rows(1) == 1);
  CHECK(plan.user_rows(2) == 3);
  CHECK(plan.user_rows(3) == 0);
  Transmission tx{{one, two}, rat(3, 2)};
  CHECK(tx.total_rows() == 3);
}

TEST_CASE("demand scenarios enumerate active sets lex, demands odometer") {
  auto p = params322();
  auto all = enumerate_scenarios(p);
  CHECK(count_scenarios(p) == 12);  // C(3,2) * 2^2
  REQUIRE(all.size() == 12);
  CHECK(all.front().active == std::vector<int>{1, 2});
  CHECK(all.front().demands == std::vector<int>{1, 1});
  CHECK(all[1].demands == std::vector<int>{1, 2});  // last coordinate fastest
  CHECK(all[2].demands == std::vector<int>{2, 1});
  CHECK(all.back().active == std::vector<int>{2, 3});
  CHECK(all.back().demands == std::vector<int>{2, 2});
  std::set<std::pair<std::vector<int>, std::vector<int>>> unique;
  for (const auto& s : all) unique.insert({s.active, s.demands});
  CHECK(unique.size() == all.size());

  const auto& s = all[1];
  CHECK(s.demand_of(1) == 1);
  CHECK(s.demand_of(2) == 2);
  CHECK_THROWS_AS(s.demand_of(3), std::invalid_argument);
}

TEST_CASE("choose_symbol_count returns the least common multiple") {
  CHECK(choose_symbol_count({1}) == 1);
  CHECK(choose_symbol_count({2, 3}) == 6);
  CHECK(choose_symbol_count({4, 6}) == 12);
  CHECK(choose_symbol_count({5}) == 5);
}
