// Acceptance suite: one criterion per check, each printed as a PASS/FAIL
// line with its runtime. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "stabrange/charpoly.hpp"
#include "stabrange/coinv.hpp"
#include "stabrange/config_spaces.hpp"
#include "stabrange/oracles.hpp"
#include "stabrange/partition.hpp"
#include "stabrange/ranges.hpp"
#include "stabrange/symchar.hpp"
#include "stabrange/witness.hpp"

using namespace stabrange;

namespace {

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

bool eq(const StableRanges& got, long t0, long t1, long A, long hmax,
        long delta, long M, std::string& why, const std::string& label) {
  StableRanges want{t0, t1, A, hmax, delta, M};
  if (got == want) return true;
  why = label + ": got (" + std::to_string(got.t0) + "," +
        std::to_string(got.t1) + "," + std::to_string(got.A) + "," +
        std::to_string(got.hmax) + "," + std::to_string(got.delta) + "," +
        std::to_string(got.M) + ")";
  return false;
}

// 1. The displayed degree-4 coinvariant character polynomial, term for term
// in the binomial basis.
bool criterion_c4(std::string& why) {
  using E = CharPoly::Exponents;
  const std::vector<std::pair<E, Rat>> display = {
      {E{0, 0, 0, 1}, Rat(1)},  // X4
      {E{1, 0, 1}, Rat(1)},     // X3 X1
      {E{0, 2}, Rat(1)},        // C(X2,2)
      {E{2, 1}, Rat(1)},        // X2 C(X1,2)
      {E{4}, Rat(1)},           // C(X1,4)
      {E{0, 0, 1}, Rat(-1)},    // -X3
      {E{3}, Rat(2)},           // 2 C(X1,3)
      {E{1}, Rat(-1)},          // -X1
  };
  auto basis = coinv_series(4)[4].to_binomial_basis();
  std::map<E, Rat> got(basis.begin(), basis.end());
  std::map<E, Rat> want(display.begin(), display.end());
  if (got != want) {
    why = "binomial-basis terms differ from the displayed form";
    return false;
  }
  return true;
}

// 2. Every displayed stable-range tuple, over the stated parameter cases.
bool criterion_tuples(std::string& why) {
  // four rows from (c, g)
  for (long c = -1; c <= 12; ++c) {
    for (long g = -1; g <= 12; ++g) {
      StableRanges r = ranges_from_cg(HypTriple(c, g));
      bool ok;
      if (c == -1)
        ok = eq(r, g, -1, std::max(0L, 2 * g - 1), -1, g,
                std::max(0L, 2 * g), why, "cg row 1");
      else if (g == -1)
        ok = eq(r, c, c + 1, c + 1, c, -1, c + 1, why, "cg row 2");
      else if (g <= (c + 1) / 2)
        ok = eq(r, c + 1, c + 2, c + 1, c, g, c + 1, why, "cg row 3");
      else
        ok = eq(r, g + c / 2 + 1, g + c / 2 + 2, 2 * g - 1, c, g, 2 * g, why,
                "cg row 4");
      if (!ok) return false;
    }
  }
  // witness-family rows of the same theorem
  for (long g = -1; g <= 8; ++g) {
    auto prof = witness_profile({WitnessKind::I, g});
    if (!eq(prof.ranges, g, -1, std::max(0L, 2 * g - 1), -1, g,
            std::max(0L, 2 * g), why, "I(g) tuple"))
      return false;
  }
  for (long c = 0; c <= 8; ++c) {
    auto prof = witness_profile({WitnessKind::T, c});
    if (!eq(prof.ranges, c, c + 1, c + 1, c, -1, c + 1, why, "T(c) tuple"))
      return false;
  }
  for (long g = 1; g <= 8; ++g) {
    auto prof = witness_profile({WitnessKind::V, g});
    if (!eq(prof.ranges, 2 * g, 2 * g + 1, 2 * g - 1, 2 * g - 2, g, 2 * g,
            why, "V(g) tuple"))
      return false;
  }
  // hyperhomology, two-parameter form
  for (long tk = 0; tk <= 10; ++tk) {
    for (long tk1 = -1; tk1 <= 10; ++tk1) {
      StableRanges r = ranges_from_hyper(tk, tk1);
      bool ok;
      if (tk == 0 && tk1 <= 0)
        ok = eq(r, 0, -1, 0, -1, 0, 0, why, "hyper row 1");
      else if (tk >= std::max(1L, tk1))
        ok = eq(r, 2 * tk, 2 * tk + 1, 2 * tk - 1, 2 * tk - 2, tk, 2 * tk,
                why, "hyper row 2");
      else
        ok = eq(r, 2 * tk, 2 * tk1 - 1, 2 * tk1 - 1, 2 * tk1 - 2, tk,
                2 * tk1 - 1, why, "hyper row 3");
      if (!ok) return false;
    }
  }
  // hyperhomology, strictly increasing sequence form
  for (long t0 = 0; t0 <= 6; ++t0) {
    for (long t1 = t0 + 1; t1 <= 8; ++t1) {
      for (long t2 = t1 + 1; t2 <= 10; ++t2) {
        std::vector<long> theta{t0, t1, t2};
        StableRanges r0 = ranges_from_hyper_chain(theta, 0);
        bool ok;
        if (2 * t0 + 1 >= t1)
          ok = eq(r0, t1 - 1, t1, 2 * t1 - 1, 2 * t1 - 2, t0, 2 * t1 - 1,
                  why, "chain row 1");
        else
          ok = eq(r0, 2 * t0, t1, 2 * t0 + t1, 2 * t0 + t1 - 1, t0,
                  2 * t0 + t1, why, "chain row 3 (k=0)");
        if (!ok) return false;
        StableRanges r1 = ranges_from_hyper_chain(theta, 1);
        if (2 * t1 + 1 >= t2)
          ok = eq(r1, 2 * t1, 2 * t1 + 1, 2 * t2 - 1, 2 * t2 - 2, t1,
                  2 * t2 - 1, why, "chain row 2");
        else
          ok = eq(r1, 2 * t1, t2, 2 * t1 + t2, 2 * t1 + t2 - 1, t1,
                  2 * t1 + t2, why, "chain row 3 (k=1)");
        if (!ok) return false;
      }
    }
  }
  // coinvariant tuple
  for (long j = 1; j <= 20; ++j)
    if (!eq(ranges_coinv(j), 2 * j, 2 * j + 1, 2 * j - 1, 2 * j - 2, j, 2 * j,
            why, "coinv tuple"))
      return false;
  // congruence tuples, including the degree-0 constant case
  for (long s = 1; s <= 6; ++s) {
    if (!eq(ranges_congruence(s, 0), 0, -1, 0, -1, 0, 0, why, "cong k=0"))
      return false;
    if (!eq(ranges_congruence(s, 1), s + 1, s + 3, 2 * s + 4, 2 * s + 3, 2,
            2 * s + 4, why, "cong k=1"))
      return false;
    if (!eq(ranges_congruence(s, 2), 2 * s + 5, 2 * s + 6, 2 * s + 9,
            2 * s + 8, 4, 2 * s + 9, why, "cong k=2"))
      return false;
    for (long k = 3; k <= 8; ++k)
      if (!eq(ranges_congruence(s, k), 4 * k + 2 * s - 2, 4 * k + 2 * s - 1,
              4 * k + 2 * s + 1, 4 * k + 2 * s, 2 * k, 4 * k + 2 * s + 1,
              why, "cong k>=3"))
        return false;
  }
  // sphere example: H^{d-1} of configurations in S^d
  for (int d = 2; d <= 6; ++d) {
    ConfigParams sphere{d, std::max(0, d - 2), d - 1, false};
    if (!eq(config_ranges(sphere), 4, 5, 3, 2, 2, 4, why,
            "sphere tuple d=" + std::to_string(d)))
      return false;
  }
  // R^d example: delta = 2i at k = i(d-1), tuple from the main theorem, and
  // the sharp fixtures
  for (int d = 2; d <= 5; ++d) {
    for (int i = 1; i <= 4; ++i) {
      ConfigParams rd{d, d - 2, i * (d - 1), false};
      if (config_delta(rd) != 2 * i) {
        why = "R^d delta is not 2i";
        return false;
      }
      if (!eq(config_ranges(rd), 4L * i, 4L * i + 1, 4L * i - 1, 4L * i - 2,
              2L * i, 4L * i, why, "R^d tuple"))
        return false;
    }
  }
  for (int i = 1; i <= 10; ++i) {
    if (!eq(rd_sharp_ranges(i, false), 2L * i, -1, 4L * i - 1, -1, 2L * i,
            3L * i, why, "R^d sharp odd"))
      return false;
    if (!eq(rd_sharp_ranges(i, true), 2L * i, -1, 4L * i - 1, -1, 2L * i,
            3L * i + 1, why, "R^d sharp even"))
      return false;
  }
  // plane exception
  if (!eq(config_ranges({2, 0, 1, true}), 2, 3, 1, 0, 1, 2, why,
          "plane exception tuple"))
    return false;
  return true;
}

// 3. Dominance over the previously established tuples.
bool criterion_dominance(std::string& why) {
  for (long c = -1; c <= 20; ++c) {
    for (long g = -1; g <= 20; ++g) {
      auto mine = ranges_from_cg(HypTriple(c, g));
      auto lit = literature_cg(HypTriple(c, g));
      if (mine.t0 > lit.t0 || mine.t1 > lit.t1 || mine.A > lit.A ||
          mine.hmax > lit.hmax || mine.delta > lit.delta) {
        why = "not dominated at c=" + std::to_string(c) +
              ", g=" + std::to_string(g);
        return false;
      }
    }
  }
  return true;
}

// 4. S^(j) evaluations match the per-cycle-type series oracle.
bool criterion_trace(std::string& why) {
  auto S = sym_series(5);
  for (int n = 0; n <= 7; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      auto oracle = oracles::sym_trace_series(lambda, 5);
      for (int j = 0; j <= 5; ++j) {
        if (S[j].evaluate(lambda) != Rat(static_cast<long>(oracle[j]))) {
          why = "mismatch at n=" + std::to_string(n) +
                ", j=" + std::to_string(j);
          return false;
        }
      }
    }
  }
  return true;
}

// 5. C^(j) computes the coinvariant characters exactly on n >= j, and the
// range is sharp.
bool criterion_coinv_char(std::string& why) {
  auto C = coinv_series(4);
  for (int j = 2; j <= 4; ++j) {
    for (int n = j; n <= 7; ++n) {
      ClassFunction truth(n);
      for (const auto& mu : partitions_of(n)) {
        auto counts = syt_major_counts(mu);
        auto it = counts.find(j);
        if (it == counts.end()) continue;
        ClassFunction chi = specht_class_function(mu);
        chi *= Rat(static_cast<long>(it->second));
        truth += chi;
      }
      for (const auto& lambda : partitions_of(n)) {
        if (C[j].evaluate(lambda) != truth.value(lambda)) {
          why = "in-range mismatch at j=" + std::to_string(j) +
                ", n=" + std::to_string(n);
          return false;
        }
      }
    }
    bool fails_below = false;
    for (int n = 0; n < j && !fails_below; ++n) {
      for (const auto& lambda : partitions_of(n)) {
        Rat truth(0);
        for (const auto& mu : partitions_of(n)) {
          auto counts = syt_major_counts(mu);
          auto it = counts.find(j);
          if (it == counts.end()) continue;
          truth += Rat(static_cast<long>(it->second)) *
                   Rat(static_cast<long>(specht_character(mu, lambda)));
        }
        if (C[j].evaluate(lambda) != truth) fails_below = true;
      }
    }
    if (!fails_below) {
      why = "no failure below the range for j=" + std::to_string(j);
      return false;
    }
  }
  return true;
}

// 6. The exact-linear-algebra oracle: q-factorial coefficients, n! totals,
// and the diagonal total 16 at n = 3.
bool criterion_linear_algebra(std::string& why) {
  for (int n = 1; n <= 5; ++n) {
    int top = n * (n - 1) / 2;
    auto dims = coinv_graded_dims(n, 1, top, /*override_caps=*/true);
    auto coeffs = oracles::qfactorial_coeffs(n);
    long long total = 0;
    for (const auto& [J, d] : dims) {
      long long expect = static_cast<size_t>(J.total()) < coeffs.size()
                             ? coeffs[J.total()]
                             : 0;
      if (d != expect) {
        why = "graded dim mismatch at n=" + std::to_string(n) + ", degree " +
              std::to_string(J.total());
        return false;
      }
      total += d;
    }
    if (total != factorial(n)) {
      why = "total is not n! at n=" + std::to_string(n);
      return false;
    }
  }
  auto diag = coinv_graded_dims(3, 2, 4);
  long long total = 0;
  for (const auto& [J, d] : diag) total += d;
  if (total != 16) {
    why = "diagonal n=3 total is " + std::to_string(total) + ", want 16";
    return false;
  }
  return true;
}

// 7. Orbit counts stabilize exactly at n = |J|.
bool criterion_orbits(std::string& why) {
  for (int b = 1; b <= 2; ++b) {
    std::vector<std::vector<int>> degree_lists;
    for (int j1 = 0; j1 <= 4; ++j1) {
      if (b == 1) {
        degree_lists.push_back({j1});
      } else {
        for (int j2 = 0; j1 + j2 <= 4; ++j2)
          degree_lists.push_back({j1, j2});
      }
    }
    for (const auto& degs : degree_lists) {
      MultiDegree J(degs);
      int total = J.total();
      if (total < 1) continue;
      long long stable = orbit_count(J, total);
      for (int n = total; n <= total + 4; ++n) {
        if (orbit_count(J, n) != stable) {
          why = "orbit count not constant past |J|";
          return false;
        }
      }
      if (orbit_count(J, total - 1) >= stable) {
        why = "orbit count not strictly smaller at |J| - 1";
        return false;
      }
    }
  }
  return true;
}

// 8. Witness sharpness for all four families, parameters <= 4.
bool criterion_witness(std::string& why) {
  for (long p = 0; p <= 4; ++p) {
    for (WitnessKind kind :
         {WitnessKind::I, WitnessKind::T, WitnessKind::S, WitnessKind::V}) {
      if (kind == WitnessKind::V && p == 0) continue;
      WitnessFamily w{kind, p};
      auto report = sharpness_check(w);
      if (!report.passed()) {
        why = std::string("sharpness fails for ") + witness_kind_name(kind) +
              "(" + std::to_string(p) + ")";
        return false;
      }
      if (kind == WitnessKind::V && !report.negative_value_below) {
        why = "V(g) polynomial not negative at n = 2g-2";
        return false;
      }
    }
  }
  // I(g): padded Specht decomposition settles exactly at n = 2g
  for (long g = 1; g <= 4; ++g) {
    auto labels = [&](int n) {
      auto decomp =
          decompose_class_function(witness_character({WitnessKind::I, g}, n));
      std::map<Partition, long long> out;
      for (const auto& [mu, m] : decomp) {
        std::vector<int> rest(mu.parts().begin() + 1, mu.parts().end());
        out[Partition(rest)] = m;
      }
      return out;
    };
    auto at_2g = labels(static_cast<int>(2 * g));
    for (int n = static_cast<int>(2 * g); n <= 8; ++n) {
      if (labels(n) != at_2g) {
        why = "I(g) decomposition moves past 2g";
        return false;
      }
    }
    if (labels(static_cast<int>(2 * g - 1)) == at_2g) {
      why = "I(g) decomposition already stable at 2g-1";
      return false;
    }
  }
  return true;
}

// 9. Hersh-Reiner dimensions against the Stirling product oracle, with the
// derangement counts cross-validated by permutation enumeration.
bool criterion_hersh_reiner(std::string& why) {
  for (int i = 1; i <= 4; ++i) {
    for (int n = 0; n <= 10; ++n) {
      auto coeffs = oracles::stirling_product_coeffs(n);
      long long expect =
          static_cast<size_t>(i) < coeffs.size() ? coeffs[i] : 0;
      if (hersh_reiner_dim(i, n) != expect) {
        why = "Stirling mismatch at i=" + std::to_string(i) +
              ", n=" + std::to_string(n);
        return false;
      }
    }
  }
  for (int r = 0; r <= 8; ++r) {
    for (int l = 0; l <= r; ++l) {
      if (derangement_count(r, l) !=
          oracles::derangements_by_cycles_bruteforce(r, l)) {
        why = "derangement mismatch at r=" + std::to_string(r);
        return false;
      }
    }
  }
  return true;
}

// 10. The umbral fixture.
bool criterion_umbral(std::string& why) {
  CharPoly x1 = CharPoly::variable(1), x2 = CharPoly::variable(2);
  CharPoly one = CharPoly::constant(Rat(1));
  CharPoly half = CharPoly::constant(Rat(1, 2));
  CharPoly arg =
      half * (x1 - one) * (x1 - one) + half * (x2 * Rat(2) - one);
  CharPoly expect = binom_poly(x1 - CharPoly::constant(Rat(3)), 2) + x2 +
                    (x1 - CharPoly::constant(Rat(3))) * Rat(2);
  if (umbral_down(arg) != expect) {
    why = "umbral image differs from the expanded fixture";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "C^(4) binomial-basis reproduction", 1.0, criterion_c4},
      {2, "displayed stable-range tuples", 1.0, criterion_tuples},
      {3, "dominance over literature tuples", 1.0, criterion_dominance},
      {4, "character-polynomial trace identity", 10.0, criterion_trace},
      {5, "coinvariant character range sharpness", 30.0,
       criterion_coinv_char},
      {6, "univariate/diagonal linear-algebra oracle", 60.0,
       criterion_linear_algebra},
      {7, "orbit stabilization", 5.0, criterion_orbits},
      {8, "witness sharpness", 30.0, criterion_witness},
      {9, "Hersh-Reiner/Stirling identity", 10.0, criterion_hersh_reiner},
      {10, "umbral fixture", 1.0, criterion_umbral},
  };
  int failures = 0;
  for (auto& criterion : criteria) {
    std::string why;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    bool in_budget = seconds < criterion.budget_seconds;
    if (ok && !in_budget) why = "over the runtime budget";
    bool pass = ok && in_budget;
    std::printf("%s %2d  %-45s (%.2fs / %.0fs)%s%s\n",
                pass ? "PASS" : "FAIL", criterion.id, criterion.name.c_str(),
                seconds, criterion.budget_seconds, why.empty() ? "" : "  -- ",
                why.c_str());
    if (!pass) ++failures;
  }
  return failures;
}
