#include "stabrange/witness.hpp"

#include <algorithm>

#include "stabrange/caps.hpp"

namespace stabrange {

const char* witness_kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::I: return "I";
    case WitnessKind::T: return "T";
    case WitnessKind::S: return "S";
    case WitnessKind::V: return "V";
  }
  return "?";
}

WitnessKind witness_kind_from_name(const std::string& name) {
  if (name == "I") return WitnessKind::I;
  if (name == "T") return WitnessKind::T;
  if (name == "S") return WitnessKind::S;
  if (name == "V") return WitnessKind::V;
  fail(errc::invalid_params, "unknown witness family '" + name + "'");
}

long long witness_dim(const WitnessFamily& w, long n) {
  if (n < 0) fail(errc::invalid_params, "witness_dim needs n >= 0");
  switch (w.kind) {
    case WitnessKind::I:
      return binomial(static_cast<int>(n), static_cast<int>(w.param));
    case WitnessKind::T:
      return n == w.param ? 1 : 0;
    case WitnessKind::S:
      return n <= w.param ? 0 : 1;
    case WitnessKind::V: {
      long g = w.param;
      if (g <= 0 || n <= 2 * g - 2) return 0;
      Int value = (n - (2 * g - 1)) *
                  Int(static_cast<long>(
                      binomial(static_cast<int>(n), static_cast<int>(g - 1))));
      if (!mpz_divisible_ui_p(value.get_mpz_t(), static_cast<unsigned long>(g)))
        fail(errc::invalid_params, "two-row dimension is not integral");
      mpz_divexact_ui(value.get_mpz_t(), value.get_mpz_t(),
                      static_cast<unsigned long>(g));
      return value.get_si();
    }
  }
  return 0;
}

long WitnessProfile::t(int i) const {
  if (i == 0) return t0;
  if (ti_all_minus1) return -1;
  return i + ti_offset;
}

WitnessProfile witness_profile(const WitnessFamily& w) {
  if (w.param < -1)
    fail(errc::param_out_of_theorem_range, "family parameter must be >= -1");
  WitnessProfile p;
  switch (w.kind) {
    case WitnessKind::I:
      p.t0 = w.param;
      p.ti_all_minus1 = true;
      p.ti_offset = 0;
      p.regularity = -2;
      p.triple = HypTriple(-1, w.param);
      break;
    case WitnessKind::T:
      if (w.param < 0)
        fail(errc::param_out_of_theorem_range, "T(c) needs c >= 0");
      p.t0 = w.param;
      p.ti_all_minus1 = false;
      p.ti_offset = w.param;
      p.regularity = w.param;
      p.triple = HypTriple(w.param, -1);
      break;
    case WitnessKind::S:
      if (w.param < 0)
        fail(errc::param_out_of_theorem_range, "S(c) needs c >= 0");
      p.t0 = w.param + 1;
      p.ti_all_minus1 = false;
      p.ti_offset = w.param + 1;
      p.regularity = w.param + 1;
      p.triple = HypTriple(w.param, 0);
      break;
    case WitnessKind::V:
      if (w.param < 1)
        fail(errc::param_out_of_theorem_range, "V(g) needs g >= 1");
      p.t0 = 2 * w.param;
      p.ti_all_minus1 = false;
      p.ti_offset = 2 * w.param;
      p.regularity = 2 * w.param;
      p.triple = HypTriple(2 * w.param - 2, w.param);
      break;
  }
  p.ranges = ranges_from_cg(p.triple);
  p.sharp.fill(true);
  return p;
}

ClassFunction witness_character(const WitnessFamily& w, int n,
                                bool override_caps) {
  if (n < 0) fail(errc::invalid_params, "witness_character needs n >= 0");
  check_cap(n, kOracleCapN, override_caps, errc::size_cap_exceeded,
            "oracle degree n");
  switch (w.kind) {
    case WitnessKind::I:
      if (w.param < 0 || w.param > n) return zero_class_function(n);
      return induced_trivial_character(static_cast<int>(w.param), n,
                                       override_caps);
    case WitnessKind::T:
      return n == w.param ? trivial_character(n) : zero_class_function(n);
    case WitnessKind::S:
      return n >= w.param + 1 ? trivial_character(n) : zero_class_function(n);
    case WitnessKind::V: {
      long g = w.param;
      if (g <= 0 || n < 2 * g) return zero_class_function(n);
      std::vector<int> parts{static_cast<int>(n - g), static_cast<int>(g)};
      return specht_class_function(Partition(parts));
    }
  }
  return zero_class_function(n);
}

namespace {

// Exact Lagrange evaluation of the polynomial through
// (x0, y0), ..., (xd, yd) at x.
Rat lagrange_eval(const std::vector<long>& xs, const std::vector<long long>& ys,
                  long x) {
  Rat total(0);
  for (size_t i = 0; i < xs.size(); ++i) {
    Rat term(static_cast<long>(ys[i]));
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      term *= Rat(x - xs[j]);
      term /= Rat(xs[i] - xs[j]);
    }
    total += term;
  }
  return total;
}

// Multiplicities keyed by the padding label: mu |- n maps to mu minus its
// first row, which is the lambda with pad(lambda, n) = mu.
std::map<Partition, long long> padded_decomposition(const WitnessFamily& w,
                                                    int n, bool override_caps) {
  auto decomp =
      decompose_class_function(witness_character(w, n, override_caps),
                               override_caps);
  std::map<Partition, long long> labeled;
  for (const auto& [mu, mult] : decomp) {
    std::vector<int> rest(mu.parts().begin() + (mu.length() > 0 ? 1 : 0),
                          mu.parts().end());
    labeled[Partition(rest)] = mult;
  }
  return labeled;
}

}  // namespace

SharpnessReport sharpness_check(const WitnessFamily& w, bool override_caps) {
  WitnessProfile profile = witness_profile(w);
  SharpnessReport report;
  report.family = w;

  const long hmax = profile.ranges.hmax;
  const long delta = profile.ranges.delta;
  const long fit_start = hmax + 1;
  const long horizon = 2 * hmax + 2 * delta + 4;

  // (a) one polynomial of degree delta matches the dimensions on
  // [hmax+1, horizon].
  std::vector<long> xs;
  std::vector<long long> ys;
  for (long n = fit_start; n <= fit_start + std::max(delta, -1L); ++n) {
    xs.push_back(n);
    ys.push_back(witness_dim(w, n));
  }
  bool fit_ok = true;
  for (long n = fit_start; n <= horizon; ++n) {
    Rat predicted = delta < 0 ? Rat(0) : lagrange_eval(xs, ys, n);
    if (predicted != Rat(static_cast<long>(witness_dim(w, n)))) {
      fit_ok = false;
      report.notes.push_back("polynomial fit fails at n = " +
                             std::to_string(n));
    }
  }
  report.poly_fit_ok = fit_ok;

  // (b) the threshold is sharp: the same polynomial misses one step below.
  if (hmax < 0) {
    report.below_threshold_ok = true;
    report.notes.push_back("h^max = -1: the polynomial regime starts at 0, "
                           "no step below exists");
  } else {
    Rat below = delta < 0 ? Rat(0) : lagrange_eval(xs, ys, hmax);
    Rat actual(static_cast<long>(witness_dim(w, hmax)));
    report.below_threshold_ok = below != actual;
    if (w.kind == WitnessKind::V) {
      report.negative_value_below = below < 0;
      report.below_threshold_ok =
          report.below_threshold_ok && report.negative_value_below;
      report.notes.push_back("range polynomial at n = 2g-2 evaluates to " +
                             rat_to_string(below));
    }
  }

  // Specht stability from M on, and failure at M-1.
  const long M = profile.ranges.M;
  const long top = override_caps ? M + 2 : kOracleCapN;
  if (M > top)
    fail(errc::size_cap_exceeded,
         "Specht stability threshold M exceeds the oracle cap");
  auto stable = padded_decomposition(w, static_cast<int>(M), override_caps);
  bool stable_ok = true;
  for (long n = M; n <= top; ++n)
    if (padded_decomposition(w, static_cast<int>(n), override_caps) != stable)
      stable_ok = false;
  report.specht_stable_ok = stable_ok;
  if (M == 0) {
    report.specht_below_ok = true;
    report.notes.push_back("M = 0: no degree below the stability threshold");
  } else {
    report.specht_below_ok =
        padded_decomposition(w, static_cast<int>(M - 1), override_caps) !=
        stable;
  }
  return report;
}

}  // namespace stabrange
