#include <doctest.h>

#include "stabrange/ranges.hpp"

using namespace stabrange;

TEST_CASE("max_regularity") {
  CHECK(max_regularity(0, 0) == -2);
  CHECK(max_regularity(2, 3) == 4);
  CHECK(max_regularity(5, 3) == 4);
  CHECK_THROWS_AS(max_regularity(-1, 0), Error);
}

TEST_CASE("regularity_bound") {
  CHECK(regularity_bound(HypTriple(-1, 5)) == -2);
  CHECK(regularity_bound(HypTriple(3, -1)) == 3);
  CHECK(regularity_bound(HypTriple(3, 1)) == 4);
  CHECK(regularity_bound(HypTriple(3, 4)) == 6);
  CHECK_THROWS_AS(HypTriple(-2, 0), Error);
}

TEST_CASE("t_bounds") {
  CHECK(t_bounds(HypTriple(-1, 3)) == std::pair<long, long>(3, -1));
  CHECK(t_bounds(HypTriple(2, -1)) == std::pair<long, long>(2, 3));
  CHECK(t_bounds(HypTriple(2, 3)) == std::pair<long, long>(5, 6));
  for (long c = 0; c <= 12; ++c)
    for (long g = -1; g <= 12; ++g)
      CHECK(t_bounds(HypTriple(c, g)).second - 1 ==
            regularity_bound(HypTriple(c, g)));
}

TEST_CASE("complex_generation_bound") {
  CHECK(complex_generation_bound(1, 3) == 5);
  CHECK(complex_generation_bound(3, 3) == 6);
  CHECK(complex_generation_bound(0, 0) == 0);
}

TEST_CASE("ranges_from_cg") {
  CHECK(ranges_from_cg(HypTriple(-1, 2)) == StableRanges{2, -1, 3, -1, 2, 4});
  CHECK(ranges_from_cg(HypTriple(2, 1)) == StableRanges{3, 4, 3, 2, 1, 3});
  CHECK(ranges_from_cg(HypTriple(2, 3)) == StableRanges{5, 6, 5, 2, 3, 6});
  for (long c = -1; c <= 15; ++c)
    for (long g = -1; g <= 15; ++g)
      CHECK_NOTHROW(ranges_from_cg(HypTriple(c, g)).validate());
}

TEST_CASE("hyper_invariants") {
  CHECK(hyper_invariants(-1, 2).is_zero);

  auto inv = hyper_invariants(2, 1);
  CHECK_FALSE(inv.is_zero);
  CHECK(inv.delta_bound == 2);
  CHECK(inv.t0_bound == 4);
  CHECK(inv.h_bound(0) == 2);
  CHECK(inv.h_bound(1) == 0);
  CHECK(inv.h_bound(2) == 2);
  CHECK(inv.h_bound(3) == 0);
  CHECK(inv.h_bound(4) == -1);
  CHECK(inv.reg_bound == 4);

  CHECK(hyper_invariants(0, 0).reg_bound == -2);
}

TEST_CASE("ranges_from_hyper") {
  CHECK(ranges_from_hyper(0, 0) == StableRanges{0, -1, 0, -1, 0, 0});
  CHECK(ranges_from_hyper(2, 1) == StableRanges{4, 5, 3, 2, 2, 4});
  CHECK(ranges_from_hyper(1, 3) == StableRanges{2, 5, 5, 4, 1, 5});
  for (long t = 1; t <= 10; ++t)
    for (long t1 = -1; t1 <= t; ++t1)
      CHECK(ranges_from_hyper(t, t1) == ranges_from_hyper(t, 0));
}

TEST_CASE("ranges_from_hyper_chain") {
  CHECK(ranges_from_hyper_chain({1, 2}, 0) == StableRanges{1, 2, 3, 2, 1, 3});
  CHECK(ranges_from_hyper_chain({0, 2, 4}, 1) ==
        StableRanges{4, 5, 7, 6, 2, 7});
  CHECK(ranges_from_hyper_chain({0, 1, 4}, 1) ==
        StableRanges{2, 4, 6, 5, 1, 6});
  CHECK_THROWS_AS(ranges_from_hyper_chain({2, 2, 4}, 0), Error);
  CHECK_THROWS_AS(ranges_from_hyper_chain({1, 2}, 1), Error);
}

TEST_CASE("ranges_coinv") {
  CHECK(ranges_coinv(1) == StableRanges{2, 3, 1, 0, 1, 2});
  CHECK(ranges_coinv(4) == StableRanges{8, 9, 7, 6, 4, 8});
  CHECK(ranges_coinv(3) == ranges_from_cg(HypTriple(4, 3)));
  CHECK_THROWS_AS(ranges_coinv(0), Error);
}

TEST_CASE("ranges_congruence") {
  CHECK(ranges_congruence(1, 0) == StableRanges{0, -1, 0, -1, 0, 0});
  CHECK(ranges_congruence(1, 1) == StableRanges{2, 4, 6, 5, 2, 6});
  CHECK(ranges_congruence(2, 2) == StableRanges{9, 10, 13, 12, 4, 13});
  CHECK(ranges_congruence(1, 3) == StableRanges{12, 13, 15, 14, 6, 15});
}

TEST_CASE("literature tuples") {
  auto lit = literature_cg(HypTriple(2, 3));
  CHECK(lit.t0 == 6);
  CHECK(lit.t1 == 9);
  CHECK(lit.A == 17);
  CHECK(lit.hmax == 2);
  CHECK(lit.delta == 3);
  CHECK_FALSE(lit.M.has_value());

  auto cong = literature_congruence(1, 1, false);
  CHECK(cong.t0 == 2);
  CHECK(cong.t1 == 4);
  CHECK(cong.A == 7);
  CHECK(cong.hmax == 5);
  CHECK(cong.delta == 2);
  CHECK_FALSE(cong.M.has_value());
  CHECK(literature_congruence(1, 1, true).M == 9);    // 2s+7
  CHECK(literature_congruence(1, 2, true).M == 17);   // 4s+13
  CHECK(literature_congruence(1, 3, true).M == 37);   // 8k+4s+9
  CHECK_THROWS_AS(literature_congruence(1, 0, false), Error);
}

TEST_CASE("dominance over the literature") {
  for (long c = -1; c <= 20; ++c) {
    for (long g = -1; g <= 20; ++g) {
      auto mine = ranges_from_cg(HypTriple(c, g));
      auto lit = literature_cg(HypTriple(c, g));
      CHECK(mine.t0 <= lit.t0);
      CHECK(mine.t1 <= lit.t1);
      CHECK(mine.A <= lit.A);
      CHECK(mine.hmax <= lit.hmax);
      CHECK(mine.delta <= lit.delta);
    }
  }
}
