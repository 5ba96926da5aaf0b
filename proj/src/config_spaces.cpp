#include "stabrange/config_spaces.hpp"

#include <map>
#include <mutex>
#include <string>

#include "stabrange/oracles.hpp"
#include "stabrange/symchar.hpp"

namespace stabrange {

namespace {

void validate_params(const ConfigParams& p) {
  if (p.d < 2) fail(errc::invalid_params, "manifold dimension must be >= 2");
  if (p.u < 0 || p.u > p.d - 2)
    fail(errc::invalid_params, "connectivity must satisfy 0 <= u <= d-2");
  if (p.plane_exception && p.d != 2)
    fail(errc::invalid_params, "the plane exception asserts d = 2");
  if (p.k < 0) fail(errc::invalid_params, "cohomological degree must be >= 0");
}

}  // namespace

long config_delta(const ConfigParams& p) {
  validate_params(p);
  if (p.k < p.d - 1)
    fail(errc::low_degree_regime,
         "k = " + std::to_string(p.k) + " < d-1 = " + std::to_string(p.d - 1) +
             ": in this range H^k of the configuration space is isomorphic "
             "to H^k(M^bullet) and is handled by classical means");
  if (p.plane_exception) return 2L * p.k - 1;
  int q = p.k / (p.d - 1);
  int r = p.k - q * (p.d - 1);  // 0 <= r <= d-2
  if (2 * (p.u + 1) < p.d) return p.k / (p.u + 1);
  // now u+1 >= d/2
  if (p.u + 1 <= r) return 2L * q + 1;
  return 2L * q;
}

StableRanges config_ranges(const ConfigParams& p) {
  long delta = config_delta(p);
  StableRanges r{2 * delta, 2 * delta + 1, 2 * delta - 1, 2 * delta - 2,
                 delta, 2 * delta};
  r.validate();
  return r;
}

namespace {

long long derangement_no_memo(int r, int l,
                              std::map<std::pair<int, int>, long long>& memo) {
  if (r == 0) return l == 0 ? 1 : 0;
  if (r == 1 || l <= 0) return 0;
  auto key = std::make_pair(r, l);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  long long value = static_cast<long long>(r - 1) *
                    (derangement_no_memo(r - 2, l - 1, memo) +
                     derangement_no_memo(r - 1, l, memo));
  memo[key] = value;
  return value;
}

// D(r,l) = (r-1) (D(r-2,l-1) + D(r-1,l)), D(0,0) = 1.
long long derangement_recurrence(int r, int l) {
  static std::map<std::pair<int, int>, long long> memo;
  static std::mutex memo_mutex;
  std::lock_guard<std::mutex> lock(memo_mutex);
  return derangement_no_memo(r, l, memo);
}

}  // namespace

long long derangement_count(int r, int l) {
  if (r < 0 || l < 0)
    fail(errc::invalid_params, "derangement_count needs r, l >= 0");
  if (l > r / 2) return 0;  // every cycle has length >= 2
  if (r <= 9) return oracles::derangements_by_cycles_bruteforce(r, l);
  return derangement_recurrence(r, l);
}

long long hersh_reiner_dim(int i, long long n) {
  if (i < 1) fail(errc::invalid_params, "hersh_reiner_dim needs i >= 1");
  if (n < 0) fail(errc::invalid_params, "hersh_reiner_dim needs n >= 0");
  long long total = 0;
  for (int r = i + 1; r <= 2 * i; ++r)
    total += derangement_count(r, r - i) *
             binomial(static_cast<int>(n), r);
  return total;
}

long long sphere_dim(long long n) {
  if (n < 0) fail(errc::invalid_params, "sphere_dim needs n >= 0");
  if (n <= 2) return 0;
  return binomial(static_cast<int>(n - 1), 2) - 1;
}

StableRanges rd_sharp_ranges(int i, bool d_even) {
  if (i < 1) fail(errc::invalid_params, "rd_sharp_ranges needs i >= 1");
  StableRanges r{2L * i, -1, 4L * i - 1, -1, 2L * i,
                 d_even ? 3L * i + 1 : 3L * i};
  r.validate();
  return r;
}

}  // namespace stabrange
