#include "stabrange/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace stabrange {
namespace oracles {

namespace {

long long count_with_max(int n, int max_part,
                         std::map<std::pair<int, int>, long long>& memo) {
  if (n == 0) return 1;
  if (max_part == 0) return 0;
  auto key = std::make_pair(n, max_part);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  long long total = 0;
  for (int p = std::min(n, max_part); p >= 1; --p)
    total += count_with_max(n - p, p, memo);
  memo[key] = total;
  return total;
}

}  // namespace

long long partition_count_recursive(int n) {
  std::map<std::pair<int, int>, long long> memo;
  return count_with_max(n, n, memo);
}

long long syt_count_corners(const Partition& mu) {
  if (mu.empty()) return 1;
  std::map<std::vector<int>, long long> memo;
  // f(shape) = sum over removable corners of f(shape - corner).
  auto count = [&](auto&& self, const std::vector<int>& shape) -> long long {
    if (shape.empty()) return 1;
    auto it = memo.find(shape);
    if (it != memo.end()) return it->second;
    long long total = 0;
    for (size_t r = 0; r < shape.size(); ++r) {
      if (r + 1 < shape.size() && shape[r] == shape[r + 1]) continue;
      std::vector<int> next = shape;
      if (--next[r] == 0) next.pop_back();
      total += self(self, next);
    }
    memo[shape] = total;
    return total;
  };
  return count(count, mu.parts());
}

std::vector<long long> qfactorial_coeffs(int n) {
  std::vector<long long> poly{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<long long> next(poly.size() + i - 1, 0);
    for (size_t d = 0; d < poly.size(); ++d)
      for (int e = 0; e < i; ++e) next[d + e] += poly[d];
    poly = std::move(next);
  }
  return poly;
}

std::vector<long long> stirling_product_coeffs(int n) {
  std::vector<long long> poly{1};
  for (int m = 1; m <= n - 1; ++m) {
    std::vector<long long> next(poly.size() + 1, 0);
    for (size_t d = 0; d < poly.size(); ++d) {
      next[d] += poly[d];
      next[d + 1] += m * poly[d];
    }
    poly = std::move(next);
  }
  return poly;
}

std::vector<long long> sym_trace_series(const Partition& lambda, int J) {
  std::vector<long long> series(J + 1, 0);
  series[0] = 1;
  // Multiplying by 1/(1 - t^i) is a strided prefix sum.
  for (int part : lambda.parts())
    for (int d = part; d <= J; ++d) series[d] += series[d - part];
  return series;
}

long long derangements_by_cycles_bruteforce(int r, int l) {
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  long long count = 0;
  do {
    bool fixed_point = false;
    for (int i = 0; i < r; ++i)
      if (perm[i] == i) { fixed_point = true; break; }
    if (fixed_point) continue;
    std::vector<bool> seen(r, false);
    int cycles = 0;
    for (int i = 0; i < r; ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    if (cycles == l) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

long long stable_subset_count_gf(const Partition& lambda, int g) {
  if (g < 0) return 0;
  std::vector<long long> poly(g + 1, 0);
  poly[0] = 1;
  for (int j : lambda.parts()) {
    // multiply by (1 + y^j)
    for (int d = g; d >= j; --d) poly[d] += poly[d - j];
  }
  return poly[g];
}

}  // namespace oracles
}  // namespace stabrange
