#include "doctest.h"

#include <hotplug/combinat.hpp>

#include <vector>
#include <stdexcept>

using namespace hotplug;

namespace {

// Pascal-triangle oracle, independent of the multiplicative formula.
long long pascal(int a, int b) {
  if (b < 0 || b > a) return 0;
  std::vector<std::vector<long long>> c(a + 1);
  for (int i = 0; i <= a; ++i) {
    c[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c[a][b];
}

}  // namespace

TEST_CASE("binom matches Pascal's triangle and the zero convention") {
  for (int a = 0; a <= 40; ++a)
    for (int b = 0; b <= a; ++b) CHECK(binom(a, b) == pascal(a, b));
  CHECK(binom(5, -1) == 0);
  CHECK(binom(3, 7) == 0);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(52, 5) == 2598960);
  CHECK(binom(62, 31) > 0);  // largest admissible row stays in range
  CHECK_THROWS_AS(binom(63, 1), std::invalid_argument);
}

TEST_CASE("subset family enumerates t-subsets in lex order with rank lookups") {
  SubsetFamily fam({1, 2, 3, 4, 5}, 2);
  CHECK(fam.size() == 10);
  CHECK(fam.subset_size() == 2);
  CHECK(fam.member(0) == std::vector<int>{1, 2});
  CHECK(fam.member(1) == std::vector<int>{1, 3});
  CHECK(fam.member(9) == std::vector<int>{4, 5});
  for (long long i = 0; i < fam.size(); ++i) {
    CHECK(fam.index_of(fam.member(i)) == i);
    if (i > 0) CHECK(fam.member(i - 1) < fam.member(i));  // lex order
  }
  std::vector<int> not_member = {1, 6};
  CHECK_THROWS_AS(fam.index_of(not_member), std::invalid_argument);

  SubsetFamily empty({2, 5, 7}, 0);
  CHECK(empty.size() == 1);
  CHECK(empty.member(0).empty());

  SubsetFamily sparse({2, 5, 7}, 2);
  CHECK(sparse.member(0) == std::vector<int>{2, 5});
  CHECK(sparse.member(2) == std::vector<int>{5, 7});

  CHECK(subsets_lex({1, 2, 3}, 2) ==
        std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("demand rank counts distinct files") {
  std::vector<int> d1 = {3, 1, 3};
  CHECK(demand_rank(d1) == 2);
  std::vector<int> d2 = {2, 2, 2, 2};
  CHECK(demand_rank(d2) == 1);
  std::vector<int> d3 = {1, 2, 3};
  CHECK(demand_rank(d3) == 3);
  CHECK(demand_rank(std::vector<int>{}) == 0);
}

TEST_CASE("fill_demands copies the lowest active user's demand to offline users") {
  std::vector<int> active = {2, 4};
  std::vector<int> demands = {3, 1};
  CHECK(fill_demands(active, demands, 5) == std::vector<int>{3, 3, 3, 1, 3});
  std::vector<int> all = {1, 2, 3};
  std::vector<int> d = {2, 1, 2};
  CHECK(fill_demands(all, d, 3) == d);  // nothing to fill
}

TEST_CASE("leaders: lowest-indexed user per distinct demanded file") {
  std::vector<int> users = {2, 4, 5};
  std::vector<int> demands = {3, 1, 3};
  CHECK(leaders(users, demands) == std::vector<int>{2, 4});
  std::vector<int> users2 = {1, 2, 3, 4};
  std::vector<int> demands2 = {2, 2, 2, 2};
  CHECK(leaders(users2, demands2) == std::vector<int>{1});
  std::vector<int> users3 = {1, 2, 3};
  std::vector<int> demands3 = {1, 2, 3};
  CHECK(leaders(users3, demands3) == users3);
}
