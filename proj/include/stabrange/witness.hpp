#pragma once

#include <array>
#include <string>
#include <vector>

#include "stabrange/ranges.hpp"
#include "stabrange/symchar.hpp"

namespace stabrange {

// The four sharpness-witness FI-module families: I(g) (induced from the
// trivial module in degree g), T(c) (torsion spike at degree c), S(c)
// (eventually-constant module switching on at c+1), V(g) (the two-row Specht
// submodule of I(g)).
enum class WitnessKind { I, T, S, V };

struct WitnessFamily {
  WitnessKind kind;
  long param;  // g or c according to kind; >= -1
};

const char* witness_kind_name(WitnessKind k);
WitnessKind witness_kind_from_name(const std::string& name);

// dim over Q of the family evaluated at n.
long long witness_dim(const WitnessFamily& w, long n);

struct WitnessProfile {
  long t0;
  bool ti_all_minus1;  // I(g): t_i = -1 for i >= 1
  long ti_offset;      // otherwise t_i = i + ti_offset for i >= 0
  long regularity;
  HypTriple triple{-1, -1};
  StableRanges ranges;
  std::array<bool, 6> sharp{};  // per coordinate (t0, t1, A, hmax, delta, M)

  long t(int i) const;
};

// Exact homological profile per the witnessing propositions; errors with
// ParamOutOfTheoremRange outside the stipulated parameter range
// (T, S need c >= 0; V needs g >= 1).
WitnessProfile witness_profile(const WitnessFamily& w);

// Character of the family at degree n (zero class function where the module
// vanishes).
ClassFunction witness_character(const WitnessFamily& w, int n,
                                bool override_caps = false);

struct SharpnessReport {
  WitnessFamily family;
  bool poly_fit_ok = false;        // dims fit one degree-delta polynomial
                                   // from hmax+1 through the horizon
  bool below_threshold_ok = false; // the fit fails one step below (or the
                                   // family has no step below)
  bool specht_stable_ok = false;   // padded decomposition constant from M on
  bool specht_below_ok = false;    // and different at M-1
  bool negative_value_below = false;  // V(g): fitted polynomial < 0 at 2g-2
  std::vector<std::string> notes;

  bool passed() const {
    return poly_fit_ok && below_threshold_ok && specht_stable_ok &&
           specht_below_ok;
  }
};

// Verifies the sharpness data of the family from its dimension sequence and
// characters alone; see the report fields.
SharpnessReport sharpness_check(const WitnessFamily& w,
                                bool override_caps = false);

}  // namespace stabrange
