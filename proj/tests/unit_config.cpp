#include <doctest.h>

#include "stabrange/config_spaces.hpp"
#include "stabrange/oracles.hpp"
#include "stabrange/partition.hpp"

using namespace stabrange;

TEST_CASE("config_delta") {
  for (int d = 3; d <= 6; ++d)
    for (int k = d - 1; k <= 9; ++k)
      CHECK(config_delta({d, 0, k, false}) == k);

  CHECK(config_delta({2, 0, 3, true}) == 5);   // plane reset 2k-1
  CHECK(config_delta({2, 0, 3, false}) == 6);  // otherwise 2k

  for (int d = 4; d <= 8; d += 2)
    CHECK(config_delta({d, d - 2, d - 1, false}) == 2);

  CHECK_THROWS_AS(config_delta({4, 2, 1, false}), Error);     // low degrees
  CHECK_THROWS_AS(config_delta({4, 3, 4, false}), Error);     // u > d-2
  CHECK_THROWS_AS(config_delta({3, 0, 3, true}), Error);      // exception, d != 2
  try {
    config_delta({4, 2, 1, false});
  } catch (const Error& e) {
    CHECK(e.code() == errc::low_degree_regime);
  }
}

TEST_CASE("config_ranges") {
  CHECK(config_ranges({4, 2, 3, false}) == StableRanges{4, 5, 3, 2, 2, 4});
  CHECK(config_ranges({3, 1, 2, false}) == StableRanges{4, 5, 3, 2, 2, 4});
  CHECK(config_ranges({2, 0, 1, true}) == StableRanges{2, 3, 1, 0, 1, 2});
  // R^d: u = d-2, k = i(d-1) forces delta = 2i
  for (int d = 2; d <= 5; ++d)
    for (int i = 1; i <= 3; ++i)
      CHECK(config_delta({d, d - 2, i * (d - 1), false}) == 2 * i);
}

TEST_CASE("derangement counts") {
  CHECK(derangement_count(2, 1) == 1);
  CHECK(derangement_count(4, 2) == 3);
  CHECK(derangement_count(5, 3) == 0);  // l > floor(r/2)
  CHECK(derangement_count(0, 0) == 1);
  CHECK(derangement_count(3, 1) == 2);
  // recurrence handoff above the brute-force window stays consistent:
  // D(r) = sum_l D(r,l) is the derangement number
  long long d10 = 0;
  for (int l = 0; l <= 5; ++l) d10 += derangement_count(10, l);
  CHECK(d10 == 1334961);
  // both paths agree where they overlap
  for (int r = 0; r <= 8; ++r)
    for (int l = 0; l <= r / 2; ++l)
      CHECK(derangement_count(r, l) ==
            oracles::derangements_by_cycles_bruteforce(r, l));
}

TEST_CASE("hersh_reiner_dim") {
  CHECK(hersh_reiner_dim(1, 5) == 10);
  CHECK(hersh_reiner_dim(2, 4) == 11);
  CHECK(hersh_reiner_dim(2, 2) == 0);
  for (int i = 1; i <= 4; ++i) {
    for (int n = 0; n <= 10; ++n) {
      auto coeffs = oracles::stirling_product_coeffs(n);
      long long expect = static_cast<size_t>(i) < coeffs.size() ? coeffs[i] : 0;
      CHECK(hersh_reiner_dim(i, n) == expect);
    }
  }
}

TEST_CASE("sphere dimensions") {
  CHECK(sphere_dim(4) == 2);
  CHECK(sphere_dim(3) == 0);
  CHECK(sphere_dim(6) == 9);
  CHECK(sphere_dim(0) == 0);
  CHECK(sphere_dim(2) == 0);
  for (long long n = 3; n <= 12; ++n) CHECK(sphere_dim(n) == n * (n - 3) / 2);
  for (int n = 4; n <= 8; ++n)
    CHECK(sphere_dim(n) == specht_dim(Partition({n - 2, 2})));
}

TEST_CASE("R^d sharp fixtures") {
  for (int i = 1; i <= 10; ++i) {
    auto odd = rd_sharp_ranges(i, false);
    CHECK(odd == StableRanges{2 * i, -1, 4 * i - 1, -1, 2 * i, 3 * i});
    auto even = rd_sharp_ranges(i, true);
    CHECK(even == StableRanges{2 * i, -1, 4 * i - 1, -1, 2 * i, 3 * i + 1});
    CHECK_NOTHROW(odd.validate());
    CHECK_NOTHROW(even.validate());
  }
}
