#include "stabrange/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "stabrange/charpoly.hpp"
#include "stabrange/coinv.hpp"
#include "stabrange/config_spaces.hpp"
#include "stabrange/oracles.hpp"
#include "stabrange/partition.hpp"
#include "stabrange/ranges.hpp"
#include "stabrange/symchar.hpp"
#include "stabrange/witness.hpp"

namespace stabrange {

namespace {

struct Checker {
  SuiteResult result;

  explicit Checker(std::string name) { result.name = std::move(name); }

  void check(bool condition, const std::string& what) {
    if (condition)
      ++result.passed;
    else
      result.failures.push_back(what);
  }
};

std::string part_str(const Partition& p) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < p.length(); ++i)
    os << (i ? "," : "") << p.parts()[i];
  os << ")";
  return os.str();
}

}  // namespace

SuiteResult suite_partition(int max_n) {
  Checker c("partition");
  for (int n = 0; n <= std::min(max_n + 2, 8); ++n) {
    auto parts = partitions_of(n);
    c.check(static_cast<long long>(parts.size()) ==
                oracles::partition_count_recursive(n),
            "partition count mismatch at n=" + std::to_string(n));
    std::set<Partition> unique(parts.begin(), parts.end());
    c.check(unique.size() == parts.size(),
            "duplicate partitions at n=" + std::to_string(n));
    for (const auto& p : parts)
      c.check(p.size() == n, "partition size invariant at n=" +
                                 std::to_string(n));
  }
  for (int n = 0; n <= std::min(max_n + 1, 7); ++n) {
    long long sq_sum = 0;
    for (const auto& mu : partitions_of(n)) {
      long long dim = specht_dim(mu);
      sq_sum += dim * dim;
      c.check(dim == oracles::syt_count_corners(mu),
              "hook-length dim vs tableau count at mu=" + part_str(mu));
      long long total = 0;
      for (auto [maj, cnt] : syt_major_counts(mu)) total += cnt;
      c.check(total == dim, "major index counts sum at mu=" + part_str(mu));
    }
    c.check(sq_sum == factorial(n),
            "sum of squared dims vs n! at n=" + std::to_string(n));
  }
  for (int n = 0; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      int lo = lambda.size() + lambda.part(1);
      for (int m = lo; m <= lo + 3; ++m) {
        Partition padded = pad(lambda, m);
        c.check(padded.size() == m, "pad size at " + part_str(lambda));
        bool strict = m - lambda.size() > lambda.part(1);
        c.check(lambda.empty() ||
                    (strict ? padded.part(1) > padded.part(2)
                            : padded.part(1) == lambda.part(1)),
                "pad boundary at " + part_str(lambda));
      }
      if (lo >= 1) {
        bool threw = false;
        try {
          pad(lambda, lo - 1);
        } catch (const Error& e) {
          threw = e.code() == errc::pad_too_small;
        }
        c.check(threw, "pad below bound must fail at " + part_str(lambda));
      }
    }
  }
  return c.result;
}

SuiteResult suite_symchar(int max_n) {
  Checker c("symchar");
  int top = std::min(max_n + 1, 7);
  for (int n = 0; n <= top; ++n) {
    auto mus = partitions_of(n);
    for (const auto& mu : mus) {
      // identity column = dimension
      std::vector<int> ones(n, 1);
      c.check(specht_character(mu, Partition(ones)) == specht_dim(mu),
              "chi at identity vs dim, mu=" + part_str(mu));
      for (const auto& nu : mus) {
        long long inner = 0;
        for (const auto& lambda : mus)
          inner += class_size(lambda) * specht_character(mu, lambda) *
                   specht_character(nu, lambda);
        c.check(inner == (mu == nu ? factorial(n) : 0),
                "orthogonality at mu=" + part_str(mu) + ", nu=" +
                    part_str(nu));
      }
    }
  }
  for (int n = 1; n <= top; ++n) {
    for (int g = 0; g <= n; ++g) {
      auto f = induced_trivial_character(g, n);
      auto decomp = decompose_class_function(f);
      int r_max = std::min(g, n - g);
      c.check(static_cast<int>(decomp.size()) == r_max + 1,
              "Pieri support size, g=" + std::to_string(g) +
                  ", n=" + std::to_string(n));
      for (const auto& [mu, mult] : decomp) {
        bool two_row = mu.length() <= 2;
        int r = mu.length() == 2 ? mu.parts()[1] : 0;
        c.check(two_row && mult == 1 && r <= r_max,
                "Pieri multiplicity-free two-row support");
      }
      // round trip
      ClassFunction rebuilt(n);
      for (const auto& [mu, mult] : decomp) {
        ClassFunction chi = specht_class_function(mu);
        chi *= Rat(static_cast<long>(mult));
        rebuilt += chi;
      }
      c.check(rebuilt == f, "decomposition round trip");
    }
  }
  return c.result;
}

SuiteResult suite_charpoly(int max_n) {
  Checker c("charpoly");
  int top = std::min(max_n + 1, 7);
  auto S = sym_series(5);
  auto C = coinv_series(5);
  for (int n = 0; n <= top; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      auto oracle = oracles::sym_trace_series(lambda, 5);
      for (int j = 0; j <= 5; ++j)
        c.check(S[j].evaluate(lambda) == Rat(static_cast<long>(oracle[j])),
                "trace identity j=" + std::to_string(j) + " at " +
                    part_str(lambda));
    }
  }
  // coinvariant character identity, in range and sharply below
  for (int j = 1; j <= 5; ++j) {
    for (int n = j; n <= top; ++n) {
      for (const auto& lambda : partitions_of(n)) {
        Rat rhs(0);
        for (const auto& mu : partitions_of(n)) {
          auto counts = syt_major_counts(mu);
          auto it = counts.find(j);
          if (it == counts.end()) continue;
          rhs += Rat(static_cast<long>(it->second)) *
                 Rat(static_cast<long>(specht_character(mu, lambda)));
        }
        c.check(C[j].evaluate(lambda) == rhs,
                "C^(j) identity j=" + std::to_string(j) + " at " +
                    part_str(lambda));
      }
    }
    bool fails_below = false;
    for (int n = 0; n < j; ++n) {
      for (const auto& lambda : partitions_of(n)) {
        Rat rhs(0);
        for (const auto& mu : partitions_of(n)) {
          auto counts = syt_major_counts(mu);
          auto it = counts.find(j);
          if (it == counts.end()) continue;
          rhs += Rat(static_cast<long>(it->second)) *
                 Rat(static_cast<long>(specht_character(mu, lambda)));
        }
        if (C[j].evaluate(lambda) != rhs) fails_below = true;
      }
    }
    c.check(fails_below,
            "C^(j) range is sharp for j=" + std::to_string(j));
  }
  // product consistency after evaluation: S = C * (invariant dims)
  for (int n = 5; n <= top; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (int m = 0; m <= 5; ++m) {
        Rat rhs(0);
        for (int a = 0; a <= m; ++a)
          rhs += C[a].evaluate(lambda) *
                 Rat(static_cast<long>(
                     oracles::partition_count_recursive(m - a)));
        c.check(S[m].evaluate(lambda) == rhs,
                "graded product identity at order " + std::to_string(m));
      }
    }
  }
  // def_poly with trivial coefficients counts stabilized subsets
  for (int g = 0; g <= 3; ++g) {
    std::vector<ClassFunction> W;
    for (int r = 0; r <= g; ++r) W.push_back(trivial_character(r));
    CharPoly P = def_poly(W, -1);
    for (int n = g; n <= top; ++n) {
      for (const auto& lambda : partitions_of(n)) {
        Rat rhs(0);
        for (int r = 0; r <= g; ++r)
          rhs += induced_trivial_character(r, n).value(lambda);
        c.check(P.evaluate(lambda) == rhs,
                "def_poly vs induced sums, g=" + std::to_string(g));
      }
    }
  }
  // umbral: linear, and multiplicative across distinct variables
  {
    CharPoly x1 = CharPoly::variable(1), x2 = CharPoly::variable(2);
    for (int a = 0; a <= 3; ++a) {
      for (int b = 0; b <= 3; ++b) {
        CharPoly xa = CharPoly::constant(Rat(1));
        for (int t = 0; t < a; ++t) xa = xa * x1;
        CharPoly xb = CharPoly::constant(Rat(1));
        for (int t = 0; t < b; ++t) xb = xb * x2;
        c.check(umbral_down(xa * xb) == umbral_down(xa) * umbral_down(xb),
                "umbral multiplicative on X1^a X2^b");
        // direct falling factorial expansion
        CharPoly fall = CharPoly::constant(Rat(1));
        for (int t = 0; t < a; ++t)
          fall = fall * (x1 - CharPoly::constant(Rat(t)));
        for (int t = 0; t < b; ++t)
          fall = fall * (x2 - CharPoly::constant(Rat(t)));
        c.check(umbral_down(xa * xb) == fall,
                "umbral equals falling factorials");
        CharPoly p = xa * xb;
        CharPoly q = xa + xb;
        c.check(umbral_down(p + q) == umbral_down(p) + umbral_down(q),
                "umbral additive");
        c.check(umbral_down(p * Rat(3, 2)) == umbral_down(p) * Rat(3, 2),
                "umbral scalar");
      }
    }
  }
  return c.result;
}

SuiteResult suite_ranges(int) {
  Checker c("ranges");
  for (long cc = -1; cc <= 20; ++cc) {
    for (long g = -1; g <= 20; ++g) {
      HypTriple t(cc, g);
      StableRanges mine = ranges_from_cg(t);
      LitRanges lit = literature_cg(t);
      bool dominated = mine.t0 <= lit.t0 && mine.t1 <= lit.t1 &&
                       mine.A <= lit.A && mine.hmax <= lit.hmax &&
                       mine.delta <= lit.delta;
      c.check(dominated, "dominance fails at c=" + std::to_string(cc) +
                             ", g=" + std::to_string(g));
      auto [t0b, t1b] = t_bounds(t);
      if (cc >= 0)
        c.check(t1b - 1 == regularity_bound(t),
                "t1 bound vs regularity at c=" + std::to_string(cc));
      c.check(t0b == mine.t0 && t1b == mine.t1,
              "tuple agrees with t_bounds");
    }
  }
  for (long delta = 1; delta <= 20; ++delta) {
    StableRanges expect{2 * delta, 2 * delta + 1, 2 * delta - 1,
                        2 * delta - 2, delta, 2 * delta};
    c.check(ranges_from_cg(HypTriple(2 * delta - 2, delta)) == expect,
            "ranges_from_cg(2d-2, d) closed form at delta=" +
                std::to_string(delta));
    c.check(ranges_coinv(delta) == expect, "ranges_coinv closed form");
  }
  for (long tk = 0; tk <= 8; ++tk) {
    for (long tk1 = -1; tk1 <= 8; ++tk1) {
      StableRanges r = ranges_from_hyper(tk, tk1);
      r.validate();
      if (tk >= std::max(1L, tk1))
        c.check(r == ranges_from_hyper(tk, -1),
                "hyper tuple independent of theta' when theta dominates");
      ++c.result.passed;
    }
  }
  for (long s = 1; s <= 5; ++s)
    for (long k = 0; k <= 8; ++k) ranges_congruence(s, k).validate();
  c.check(true, "congruence tuples satisfy the type invariant");
  for (long t0 = 0; t0 <= 6; ++t0) {
    for (long t1 = t0 + 1; t1 <= 7; ++t1) {
      for (long t2 = t1 + 1; t2 <= 8; ++t2) {
        std::vector<long> theta{t0, t1, t2};
        ranges_from_hyper_chain(theta, 0).validate();
        ranges_from_hyper_chain(theta, 1).validate();
        ++c.result.passed;
      }
    }
  }
  return c.result;
}

SuiteResult suite_witness(int max_n) {
  Checker c("witness");
  int top = std::min(max_n + 1, 7);
  std::vector<WitnessFamily> families;
  for (long p = -1; p <= 4; ++p) families.push_back({WitnessKind::I, p});
  for (long p = 0; p <= 4; ++p) {
    families.push_back({WitnessKind::T, p});
    families.push_back({WitnessKind::S, p});
  }
  for (long p = 1; p <= 4; ++p) families.push_back({WitnessKind::V, p});
  for (const auto& w : families) {
    for (int n = 0; n <= top; ++n) {
      std::vector<int> ones(n, 1);
      c.check(witness_character(w, n).value(Partition(ones)) ==
                  Rat(static_cast<long>(witness_dim(w, n))),
              std::string("dim vs character at identity, family ") +
                  witness_kind_name(w.kind));
    }
    WitnessProfile prof = witness_profile(w);
    c.check(prof.ranges == ranges_from_cg(prof.triple),
            "profile tuple equals ranges_from_cg");
    if (prof.ti_all_minus1) {
      c.check(prof.regularity == -2, "acyclic family has regularity -2");
      for (int i = 1; i <= 6; ++i)
        c.check(prof.t(i) == -1, "acyclic family has t_i = -1");
    } else {
      for (int i = 1; i < 6; ++i)
        c.check(prof.t(i) - i <= prof.t(i + 1) - (i + 1),
                "t_i - i chain is weakly increasing");
      c.check(prof.t(6) - 6 == prof.regularity,
              "t_i - i chain stabilizes at the regularity");
    }
  }
  for (long p = 5; p <= 10; ++p) {
    WitnessProfile prof = witness_profile({WitnessKind::V, p});
    c.check(prof.ranges == ranges_from_cg(prof.triple),
            "profile tuple equals ranges_from_cg (large params)");
  }
  for (long g = 1; g <= 10; ++g) {
    for (long n = 0; n <= 40; ++n) {
      long long dim = witness_dim({WitnessKind::V, g}, n);  // integrality
      if (n >= 2 * g) {
        std::vector<int> shape{static_cast<int>(g)};
        c.check(dim == specht_dim(pad(Partition(shape),
                                      static_cast<int>(n))),
                "two-row dim formula vs hook lengths");
      }
    }
  }
  for (const auto& w : families) {
    if (w.param < 0) continue;
    SharpnessReport rep = sharpness_check(w);
    c.check(rep.passed(), std::string("sharpness_check for ") +
                              witness_kind_name(w.kind) + "(" +
                              std::to_string(w.param) + ")");
  }
  return c.result;
}

SuiteResult suite_coinv(int max_n) {
  Checker c("coinv");
  // orbit stabilization and the brute-force cross-check
  for (int b = 1; b <= 2; ++b) {
    std::function<void(std::vector<int>&, int)> sweep =
        [&](std::vector<int>& J, int pos) {
          if (pos == b) {
            MultiDegree md(J);
            int total = md.total();
            if (total == 0) return;
            long long prev = -1;
            for (int n = 0; n <= total + 3; ++n) {
              long long cnt = orbit_count(md, n);
              c.check(cnt >= prev, "orbit count weakly increasing");
              if (n <= 6)
                c.check(cnt == orbit_count_bruteforce(md, n),
                        "orbit count vs brute force");
              prev = cnt;
            }
            long long at_total = orbit_count(md, total);
            for (int n = total; n <= total + 4; ++n)
              c.check(orbit_count(md, n) == at_total,
                      "orbit count constant for n >= |J|");
            if (total >= 1)
              c.check(orbit_count(md, total - 1) < at_total,
                      "orbit count strictly smaller one below |J|");
            return;
          }
          for (int v = 0; v + std::accumulate(J.begin(), J.begin() + pos, 0) <=
                          4;
               ++v) {
            J[pos] = v;
            sweep(J, pos + 1);
          }
        };
    std::vector<int> J(b, 0);
    sweep(J, 0);
  }
  // univariate Hilbert series vs the q-factorial
  int coinv_top = std::min(max_n, 5);
  for (int n = 1; n <= coinv_top; ++n) {
    int topdeg = n * (n - 1) / 2;
    auto dims = coinv_graded_dims(n, 1, topdeg, /*override=*/true);
    auto coeffs = oracles::qfactorial_coeffs(n);
    long long total = 0;
    for (const auto& [J, dim] : dims) {
      size_t d = static_cast<size_t>(J.total());
      long long expect =
          d < coeffs.size() ? coeffs[d] : 0;
      c.check(dim == expect, "univariate graded dim at degree " +
                                 std::to_string(J.total()));
      total += dim;
    }
    c.check(total == factorial(n), "univariate dims sum to n!");
  }
  // p_{<= n}(j) against direct partition enumeration
  for (int j = 0; j <= 8; ++j) {
    for (int n = 0; n <= 8; ++n) {
      long long direct = 0;
      for (const auto& p : partitions_of(j))
        if (p.length() <= n) ++direct;
      c.check(univariate_invariant_dim(j, n) == direct,
              "p_{<=n}(j) vs enumeration");
    }
  }
  // character consistency with the series polynomials
  auto C = coinv_series(4);
  for (int j = 0; j <= 4; ++j) {
    for (int n = std::max(1, j); n <= coinv_top; ++n) {
      auto cf = coinv_character_univariate(j, n);
      for (const auto& lambda : partitions_of(n))
        c.check(cf.value(lambda) == C[j].evaluate(lambda),
                "coinvariant character vs C^(j) in range, j=" +
                    std::to_string(j));
    }
  }
  for (int j = 2; j <= 4; ++j) {
    bool violated = false;
    for (int n = 1; n < j; ++n) {
      auto cf = coinv_character_univariate(j, n);
      for (const auto& lambda : partitions_of(n))
        if (cf.value(lambda) != C[j].evaluate(lambda)) violated = true;
    }
    c.check(violated, "C^(j) fails below the range for j=" +
                          std::to_string(j));
  }
  // Specht stability of the dual through padding
  for (int j = 0; j <= 3; ++j) {
    std::map<Partition, long long> stable;
    bool first = true;
    for (int n = 2 * j; n <= std::min(max_n + 1, 7); ++n) {
      if (n < 1) continue;
      auto decomp =
          decompose_class_function(coinv_character_univariate(j, n));
      std::map<Partition, long long> labels;
      for (const auto& [mu, mult] : decomp) {
        std::vector<int> rest(mu.parts().begin() + (mu.length() ? 1 : 0),
                              mu.parts().end());
        labels[Partition(rest)] = mult;
      }
      if (first) {
        stable = labels;
        first = false;
        if (j >= 1) {
          std::vector<int> row{j};
          auto it = labels.find(Partition(row));
          c.check(it != labels.end() && it->second > 0,
                  "m^j((j)) > 0 at n = 2j for j=" + std::to_string(j));
        }
      } else {
        c.check(labels == stable,
                "padded decomposition independent of n for n >= 2j");
      }
    }
  }
  // the claimed polynomial range is consistent with the oracle dims
  for (int b = 1; b <= 2; ++b) {
    std::vector<std::vector<int>> targets;
    if (b == 1)
      targets = {{1}, {2}};
    else
      targets = {{1, 0}, {1, 1}, {0, 2}};
    for (const auto& t : targets) {
      MultiDegree J(t);
      long total = J.total();
      StableRanges claim = ranges_coinv(total);
      std::vector<long> xs;
      std::vector<long long> ys;
      std::vector<std::pair<long, long long>> samples;
      for (int n = 1; n <= coinv_top; ++n) {
        auto dims = coinv_graded_dims(n, b, static_cast<int>(total));
        samples.emplace_back(n, dims.at(J));
      }
      // fit on the first delta+1 points at or past hmax+1, check the rest
      for (auto [n, dim] : samples) {
        if (n >= claim.hmax + 1 &&
            static_cast<long>(xs.size()) <= claim.delta) {
          xs.push_back(n);
          ys.push_back(dim);
        }
      }
      bool consistent = true;
      for (auto [n, dim] : samples) {
        if (n < claim.hmax + 1 ||
            static_cast<long>(xs.size()) < claim.delta + 1)
          continue;
        Rat predicted(0);
        for (size_t i = 0; i < xs.size(); ++i) {
          Rat term(static_cast<long>(ys[i]));
          for (size_t jj = 0; jj < xs.size(); ++jj) {
            if (jj == i) continue;
            term *= Rat(n - xs[jj]);
            term /= Rat(xs[i] - xs[jj]);
          }
          predicted += term;
        }
        if (predicted != Rat(static_cast<long>(dim))) consistent = false;
      }
      c.check(consistent, "graded dims fit a degree-|J| polynomial in the "
                          "claimed range");
    }
  }
  return c.result;
}

SuiteResult suite_config(int) {
  Checker c("config");
  for (int i = 1; i <= 4; ++i) {
    for (int n = 0; n <= 10; ++n) {
      auto coeffs = oracles::stirling_product_coeffs(n);
      long long expect =
          static_cast<size_t>(i) < coeffs.size() ? coeffs[i] : 0;
      c.check(hersh_reiner_dim(i, n) == expect,
              "Hersh-Reiner vs Stirling at i=" + std::to_string(i) +
                  ", n=" + std::to_string(n));
    }
  }
  for (int r = 0; r <= 9; ++r)
    for (int l = 0; l <= r / 2 + 1; ++l)
      c.check(oracles::derangements_by_cycles_bruteforce(r, l) ==
                  derangement_count(r, l),
              "derangement brute force agrees at r=" + std::to_string(r));
  for (int i = 1; i <= 10; ++i) {
    rd_sharp_ranges(i, true).validate();
    rd_sharp_ranges(i, false).validate();
    ++c.result.passed;
  }
  for (long long n = 3; n <= 30; ++n)
    c.check(sphere_dim(n) == n * (n - 3) / 2, "sphere dim closed form");
  for (int n = 4; n <= 8; ++n) {
    std::vector<int> shape{n - 2, 2};
    c.check(sphere_dim(n) == specht_dim(Partition(shape)),
            "sphere dim vs two-row Specht dim");
  }
  for (int d = 2; d <= 6; ++d) {
    for (int u = 0; u <= d - 2; ++u) {
      for (int k = d - 1; k <= 8; ++k) {
        ConfigParams p{d, u, k, false};
        long delta = config_delta(p);
        c.check(delta >= 1, "delta >= 1 in the applicable range");
        c.check(config_ranges(p) ==
                    ranges_from_cg(HypTriple(2 * delta - 2, delta)),
                "config tuple equals ranges_from_cg");
      }
    }
  }
  return c.result;
}

std::vector<SuiteResult> run_all_suites(int max_n, bool parallel) {
  using SuiteFn = SuiteResult (*)(int);
  std::vector<SuiteFn> suites{suite_partition, suite_symchar, suite_charpoly,
                              suite_ranges,    suite_witness, suite_coinv,
                              suite_config};
  std::vector<SuiteResult> results(suites.size());
#ifdef STABRANGE_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (long i = 0; i < static_cast<long>(suites.size()); ++i)
    results[i] = suites[i](max_n);
  (void)parallel;
  std::sort(results.begin(), results.end(),
            [](const SuiteResult& a, const SuiteResult& b) {
              return a.name < b.name;
            });
  return results;
}

}  // namespace stabrange
