#include <doctest.h>

#include "stabrange/oracles.hpp"
#include "stabrange/partition.hpp"

using namespace stabrange;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
}  // namespace

TEST_CASE("partitions_of counts and canonical order") {
  auto none = partitions_of(0);
  REQUIRE(none.size() == 1);
  CHECK(none[0].empty());

  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(7).size() == 15);

  auto four = partitions_of(4);
  CHECK(four[0] == P({4}));
  CHECK(four[1] == P({3, 1}));
  CHECK(four[2] == P({2, 2}));
  CHECK(four[3] == P({2, 1, 1}));
  CHECK(four[4] == P({1, 1, 1, 1}));

  for (int n = 0; n <= 9; ++n)
    CHECK(static_cast<long long>(partitions_of(n).size()) ==
          oracles::partition_count_recursive(n));
}

TEST_CASE("pad") {
  CHECK(pad(P({2, 1}), 6) == P({3, 2, 1}));
  CHECK(pad(Partition{}, 5) == P({5}));
  CHECK(pad(P({3}), 6) == P({3, 3}));
  CHECK_THROWS_AS(pad(P({3}), 5), Error);
  try {
    pad(P({3}), 5);
  } catch (const Error& e) {
    CHECK(e.code() == errc::pad_too_small);
  }
}

TEST_CASE("regularity of partitions") {
  CHECK(is_regular(P({5, 5, 5, 1}), 0));
  CHECK_FALSE(is_regular(P({1, 1}), 2));
  CHECK(is_regular(P({2, 1}), 2));
  CHECK_THROWS_AS(is_regular(P({2, 1}), 4), Error);
}

TEST_CASE("part_counts") {
  auto counts = part_counts(P({3, 1, 1}));
  CHECK(counts == std::map<int, int>{{3, 1}, {1, 2}});
  CHECK(part_counts(Partition{}).empty());
  CHECK(part_counts(P({2, 2, 2})) == std::map<int, int>{{2, 3}});
  CHECK(part_count(P({3, 1, 1}), 1) == 2);
  CHECK(part_count(P({3, 1, 1}), 2) == 0);
}

TEST_CASE("specht_dim by hook lengths") {
  CHECK(specht_dim(P({2, 2})) == 2);
  CHECK(specht_dim(P({5})) == 1);
  CHECK(specht_dim(P({2, 1})) == 2);
  CHECK(specht_dim(Partition{}) == 1);

  long long sq = 0;
  for (const auto& mu : partitions_of(6)) {
    CHECK(specht_dim(mu) == oracles::syt_count_corners(mu));
    sq += specht_dim(mu) * specht_dim(mu);
  }
  CHECK(sq == 720);
}

TEST_CASE("syt_major_counts") {
  auto row = syt_major_counts(P({4}));
  CHECK(row == std::map<int, long long>{{0, 1}});

  auto hook = syt_major_counts(P({2, 1}));
  CHECK(hook == std::map<int, long long>{{1, 1}, {2, 1}});

  // two-row rectangle: the tableau with descent set {j} contributes at j
  auto rect = syt_major_counts(P({3, 3}));
  REQUIRE(rect.count(3) == 1);
  CHECK(rect.at(3) >= 1);

  for (const auto& mu : partitions_of(7)) {
    long long total = 0;
    for (auto [maj, cnt] : syt_major_counts(mu)) total += cnt;
    CHECK(total == specht_dim(mu));
  }

  CHECK_THROWS_AS(syt_major_counts(P({7, 6})), Error);
  CHECK_NOTHROW(syt_major_counts(P({7, 6}), /*override_caps=*/true));
}
