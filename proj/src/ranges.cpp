#include "stabrange/ranges.hpp"

#include <algorithm>
#include <string>

namespace stabrange {

namespace {

// Only reached with c >= 0; c = -1 is routed by its own guard and anything
// below -1 is rejected at HypTriple construction.
long floor_half(long c) { return c / 2; }
long ceil_half(long c) { return (c + 1) / 2; }

}  // namespace

void StableRanges::validate() const {
  if (t0 < -1 || t1 < -1 || hmax < -1 || delta < -1)
    fail(errc::invalid_params, "stable-range coordinates must be >= -1");
  if (A < std::max(0L, 2 * delta - 1))
    fail(errc::invalid_params, "stable ranges need A >= max(0, 2*delta - 1)");
  if (M < 0) fail(errc::invalid_params, "stable ranges need M >= 0");
}

HypTriple::HypTriple(long c_, long g_) : c(c_), g(g_) {
  if (c < -1 || g < -1)
    fail(errc::invalid_params, "local/stable degrees must be >= -1");
}

long max_regularity(long a, long b) {
  if (a < 0 || b < 0)
    fail(errc::invalid_params, "max_regularity needs a, b >= 0");
  return a < b ? a + b - 1 : 2 * b - 2;
}

long regularity_bound(const HypTriple& t) {
  if (t.c == -1) return -2;
  if (t.g == -1) return t.c;
  if (t.g <= ceil_half(t.c)) return t.c + 1;
  return t.g + floor_half(t.c) + 1;
}

std::pair<long, long> t_bounds(const HypTriple& t) {
  if (t.c == -1) return {t.g, -1};
  if (t.g == -1) return {t.c, t.c + 1};
  if (t.g <= ceil_half(t.c)) return {t.c + 1, t.c + 2};
  return {t.g + floor_half(t.c) + 1, t.g + floor_half(t.c) + 2};
}

long complex_generation_bound(long g_prev, long g_k) {
  if (g_prev < 0 || g_k < 0)
    fail(errc::invalid_params, "complex_generation_bound needs degrees >= 0");
  return g_k > g_prev ? g_prev + g_k + 1 : 2 * g_k;
}

StableRanges ranges_from_cg(const HypTriple& t) {
  StableRanges r;
  if (t.c == -1) {
    r = {t.g, -1, std::max(0L, 2 * t.g - 1), -1, t.g, std::max(0L, 2 * t.g)};
  } else if (t.g == -1) {
    r = {t.c, t.c + 1, t.c + 1, t.c, -1, t.c + 1};
  } else if (t.g <= ceil_half(t.c)) {
    r = {t.c + 1, t.c + 2, t.c + 1, t.c, t.g, t.c + 1};
  } else {
    long f = floor_half(t.c);
    r = {t.g + f + 1, t.g + f + 2, 2 * t.g - 1, t.c, t.g, 2 * t.g};
  }
  r.validate();
  return r;
}

long HyperInvariants::h_bound(int j) const {
  if (is_zero || j < 0) return -1;
  if (j == 0) return h0_bound;
  if (j == 1) return h1_bound;
  return std::max(-1L, 2 * delta_bound - 2 * j + 2);
}

HyperInvariants hyper_invariants(long theta_k, long theta_k1) {
  if (theta_k < -1 || theta_k1 < -1)
    fail(errc::invalid_params, "hyperhomology degrees must be >= -1");
  HyperInvariants inv;
  if (theta_k == -1) {
    inv.is_zero = true;
    return inv;
  }
  long n_k = std::max(theta_k, theta_k1);
  inv.delta_bound = theta_k;
  inv.t0_bound = 2 * theta_k;
  inv.h0_bound = std::max(-1L, 2 * n_k - 2);
  inv.h1_bound = std::max(-1L, 2 * n_k - 4);
  inv.reg_bound = theta_k == 0
                      ? 2 * n_k - 2
                      : std::max(2 * inv.delta_bound, 2 * n_k - 2);
  return inv;
}

StableRanges ranges_from_hyper(long theta_k, long theta_k1) {
  if (theta_k < 0)
    fail(errc::invalid_params, "ranges_from_hyper needs theta_k >= 0");
  if (theta_k1 < -1)
    fail(errc::invalid_params, "theta_{k+1} must be >= -1");
  StableRanges r;
  if (theta_k == 0 && theta_k1 <= 0) {
    // theta_{k+1} = -1 is absorbed by the weaker bound 0.
    r = {0, -1, 0, -1, 0, 0};
  } else if (theta_k >= std::max(1L, theta_k1)) {
    r = {2 * theta_k, 2 * theta_k + 1, 2 * theta_k - 1, 2 * theta_k - 2,
         theta_k, 2 * theta_k};
  } else {
    r = {2 * theta_k, 2 * theta_k1 - 1, 2 * theta_k1 - 1, 2 * theta_k1 - 2,
         theta_k, 2 * theta_k1 - 1};
  }
  r.validate();
  return r;
}

StableRanges ranges_from_hyper_chain(const std::vector<long>& theta, int k) {
  if (k < 0 || static_cast<size_t>(k + 1) >= theta.size())
    fail(errc::invalid_params, "need k >= 0 and k+1 < len(theta)");
  if (theta[0] < 0)
    fail(errc::invalid_params, "theta_0 must be >= 0");
  for (size_t i = 0; i + 1 < theta.size(); ++i)
    if (theta[i] >= theta[i + 1])
      fail(errc::not_strictly_increasing,
           "theta must be strictly increasing");
  long tk = theta[k], tk1 = theta[k + 1];
  StableRanges r;
  if (k == 0 && 2 * tk + 1 >= tk1) {
    r = {tk1 - 1, tk1, 2 * tk1 - 1, 2 * tk1 - 2, tk, 2 * tk1 - 1};
  } else if (k >= 1 && 2 * tk + 1 >= tk1) {
    r = {2 * tk, 2 * tk + 1, 2 * tk1 - 1, 2 * tk1 - 2, tk, 2 * tk1 - 1};
  } else {
    r = {2 * tk, tk1, 2 * tk + tk1, 2 * tk + tk1 - 1, tk, 2 * tk + tk1};
  }
  r.validate();
  return r;
}

StableRanges ranges_coinv(long total_degree) {
  if (total_degree == 0)
    fail(errc::zero_degree, "coinvariant ranges need total degree >= 1");
  if (total_degree < 0)
    fail(errc::invalid_params, "total degree must be >= 1");
  long j = total_degree;
  StableRanges r{2 * j, 2 * j + 1, 2 * j - 1, 2 * j - 2, j, 2 * j};
  r.validate();
  return r;
}

StableRanges ranges_congruence(long s, long k) {
  if (s < 1) fail(errc::invalid_params, "stable rank bound s must be >= 1");
  if (k < 0) fail(errc::invalid_params, "homological degree k must be >= 0");
  StableRanges r;
  if (k == 0) {
    r = {0, -1, 0, -1, 0, 0};  // H_0 is the constant module
  } else if (k == 1) {
    r = {s + 1, s + 3, 2 * s + 4, 2 * s + 3, 2, 2 * s + 4};
  } else if (k == 2) {
    r = {2 * s + 5, 2 * s + 6, 2 * s + 9, 2 * s + 8, 4, 2 * s + 9};
  } else {
    r = {4 * k + 2 * s - 2, 4 * k + 2 * s - 1, 4 * k + 2 * s + 1,
         4 * k + 2 * s, 2 * k, 4 * k + 2 * s + 1};
  }
  r.validate();
  return r;
}

LitRanges literature_cg(const HypTriple& t) {
  LitRanges r;
  r.t0 = t.g + t.c + 1;
  r.t1 = t.g + 2 * t.c + 2;
  // Any stable-range assertion carries A >= max(0, 2*delta - 1); the formula
  // dips below that floor only at the degenerate corners c = -1, g <= 0.
  r.A = std::max(2 * t.g + 4 * t.c + 3, std::max(0L, 2 * t.g - 1));
  r.hmax = t.c;
  r.delta = t.g;
  r.M = std::nullopt;  // undetermined in general
  return r;
}

LitRanges literature_congruence(long s, long k, bool char_zero_or_large) {
  if (s < 1) fail(errc::invalid_params, "stable rank bound s must be >= 1");
  if (k < 1)
    fail(errc::invalid_params,
         "literature congruence tuples start at degree k = 1");
  LitRanges r;
  if (k == 1) {
    r = {s + 1, s + 3, 2 * s + 5, 2 * s + 3, 2, std::nullopt};
    if (char_zero_or_large) r.M = 2 * s + 7;
  } else if (k == 2) {
    r = {2 * s + 5, 2 * s + 6, 4 * s + 11, 4 * s + 10, 4, std::nullopt};
    if (char_zero_or_large) r.M = 4 * s + 13;
  } else {
    r = {4 * k + 2 * s - 1, 4 * k + 2 * s + 4, 8 * k + 4 * s + 7,
         8 * k + 4 * s + 2, 2 * k, std::nullopt};
    if (char_zero_or_large) r.M = 8 * k + 4 * s + 9;
  }
  return r;
}

}  // namespace stabrange
