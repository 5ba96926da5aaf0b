#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "stabrange/errors.hpp"

namespace stabrange {

// Six-coordinate stable-range tuple (t0, t1, A, h^max, delta, M):
// surjectivity/injectivity thresholds of the inductive description, the
// additive-decomposition threshold, the character-polynomiality threshold,
// the polynomial degree, and the virtual Specht stability threshold.
struct StableRanges {
  long t0 = -1;
  long t1 = -1;
  long A = 0;
  long hmax = -1;
  long delta = -1;
  long M = 0;

  bool operator==(const StableRanges&) const = default;
  void validate() const;
};

// Literature comparison tuple; M may be undetermined.
struct LitRanges {
  long t0 = -1;
  long t1 = -1;
  long A = 0;
  long hmax = -1;
  long delta = -1;
  std::optional<long> M;

  bool operator==(const LitRanges&) const = default;
};

// (local degree c, stable degree g), both >= -1.
struct HypTriple {
  long c = -1;
  long g = -1;

  HypTriple(long c_, long g_);
  bool operator==(const HypTriple&) const = default;
};

// Largest possible regularity over FI-modules with 0 <= t0 <= a, 0 <= t1 <= b.
long max_regularity(long a, long b);

// Regularity bound from the (c, g) pair.
long regularity_bound(const HypTriple& t);

// (t0 bound, t1 bound) from the (c, g) pair.
std::pair<long, long> t_bounds(const HypTriple& t);

// Generation bound for the homology of a complex of H0-acyclic FI-modules
// generated in degrees <= g_prev (one below) and <= g_k (at the spot).
long complex_generation_bound(long g_prev, long g_k);

// The four-row tuple from (c, g).
StableRanges ranges_from_cg(const HypTriple& t);

// Invariant bounds for the homology of a chain complex with hyperhomology
// degrees t_k <= theta_k, t_{k+1} <= theta_k1.
struct HyperInvariants {
  bool is_zero = false;
  long delta_bound = -1;
  long t0_bound = -1;
  long h0_bound = -1;
  long h1_bound = -1;
  long reg_bound = -2;

  long h_bound(int j) const;  // j >= 0
};

HyperInvariants hyper_invariants(long theta_k, long theta_k1);

// Two-parameter hyperhomology tuple (theta_k >= 0, theta_k1 >= -1).
StableRanges ranges_from_hyper(long theta_k, long theta_k1);

// Strictly-increasing-sequence variant; theta[0] >= 0, k+1 < theta.size().
StableRanges ranges_from_hyper_chain(const std::vector<long>& theta, int k);

// Tuple for the dual graded piece of a diagonal coinvariant algebra in total
// degree >= 1.
StableRanges ranges_coinv(long total_degree);

// Tuple for H_k of an I-congruence subgroup over a ring of stable rank <= s;
// k = 0 is the constant-module case.
StableRanges ranges_congruence(long s, long k);

// Best previously established tuples under the same hypotheses.
LitRanges literature_cg(const HypTriple& t);
LitRanges literature_congruence(long s, long k, bool char_zero_or_large);

}  // namespace stabrange
