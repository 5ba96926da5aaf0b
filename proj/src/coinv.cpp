#include "stabrange/coinv.hpp"

#include <algorithm>
#include <numeric>

#include "stabrange/caps.hpp"
#include "stabrange/partition.hpp"

namespace stabrange {

MultiDegree::MultiDegree(std::vector<int> degrees)
    : degrees_(std::move(degrees)) {
  if (degrees_.empty())
    fail(errc::invalid_params, "multidegree needs a nonempty basis");
  for (int d : degrees_)
    if (d < 0) fail(errc::invalid_params, "multidegree entries must be >= 0");
}

int MultiDegree::total() const {
  return std::accumulate(degrees_.begin(), degrees_.end(), 0);
}

bool MultiDegree::contains(const MultiDegree& other) const {
  if (other.basis_size() != basis_size()) return false;
  for (int x = 0; x < basis_size(); ++x)
    if (degrees_[x] < other.degrees_[x]) return false;
  return true;
}

MultiDegree MultiDegree::minus(const MultiDegree& other) const {
  if (!contains(other))
    fail(errc::invalid_params, "multidegree subtraction underflow");
  std::vector<int> d(degrees_);
  for (int x = 0; x < basis_size(); ++x) d[x] -= other.degrees_[x];
  return MultiDegree(d);
}

namespace {

// Exponent layout: entry x*n + s is the exponent of basis variable x in
// slot s.
using Monomial = std::vector<unsigned char>;

void compositions_of(int total, int slots, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(slots, 0);
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == slots - 1) {
      cur[pos] = rest;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      cur[pos] = v;
      self(self, pos + 1, rest - v);
    }
  };
  if (slots > 0) rec(rec, 0, total);
}

std::vector<Monomial> enumerate_monomials(const MultiDegree& J, int n) {
  int b = J.basis_size();
  if (n == 0) {
    if (J.total() == 0) return {Monomial{}};
    return {};
  }
  std::vector<Monomial> mons{Monomial(static_cast<size_t>(b) * n, 0)};
  for (int x = 0; x < b; ++x) {
    std::vector<std::vector<int>> comps;
    compositions_of(J.degrees()[x], n, comps);
    std::vector<Monomial> next;
    next.reserve(mons.size() * comps.size());
    for (const auto& m : mons) {
      for (const auto& comp : comps) {
        Monomial ext = m;
        for (int s = 0; s < n; ++s)
          ext[static_cast<size_t>(x) * n + s] =
              static_cast<unsigned char>(comp[s]);
        next.push_back(std::move(ext));
      }
    }
    mons = std::move(next);
  }
  std::sort(mons.begin(), mons.end());
  return mons;
}

// Canonical orbit representative: the multiset of slot columns, sorted.
Monomial canonical_form(const Monomial& m, int b, int n) {
  std::vector<std::vector<unsigned char>> cols(n,
                                               std::vector<unsigned char>(b));
  for (int s = 0; s < n; ++s)
    for (int x = 0; x < b; ++x) cols[s][x] = m[static_cast<size_t>(x) * n + s];
  std::sort(cols.begin(), cols.end(), std::greater<>());
  Monomial key(static_cast<size_t>(b) * n, 0);
  for (int s = 0; s < n; ++s)
    for (int x = 0; x < b; ++x) key[static_cast<size_t>(x) * n + s] = cols[s][x];
  return key;
}

std::vector<std::vector<Monomial>> enumerate_orbits(const MultiDegree& J,
                                                    int n) {
  std::map<Monomial, std::vector<Monomial>> groups;
  for (auto& m : enumerate_monomials(J, n))
    groups[canonical_form(m, J.basis_size(), n)].push_back(m);
  std::vector<std::vector<Monomial>> orbits;
  orbits.reserve(groups.size());
  for (auto& [key, members] : groups) orbits.push_back(std::move(members));
  return orbits;
}

void enumerate_multidegrees(int b, int max_total,
                            std::vector<MultiDegree>& out) {
  std::vector<int> cur(b, 0);
  auto rec = [&](auto&& self, int pos, int budget) -> void {
    if (pos == b) {
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= budget; ++v) {
      cur[pos] = v;
      self(self, pos + 1, budget - v);
    }
  };
  rec(rec, 0, max_total);
}

}  // namespace

long long orbit_count(const MultiDegree& J, int n, bool override_caps) {
  if (n < 0) fail(errc::invalid_params, "orbit_count needs n >= 0");
  check_cap(J.total(), kOrbitCap, override_caps, errc::size_cap_exceeded,
            "|J| for orbit counting");
  check_cap(n, kOrbitCap, override_caps, errc::size_cap_exceeded,
            "n for orbit counting");
  if (J.total() == 0) return 1;
  if (n == 0) return 0;
  // Count multisets of at most n nonzero column vectors summing to J, walking
  // columns in non-increasing lexicographic order.
  int b = J.basis_size();
  std::vector<int> rest = J.degrees();
  std::vector<int> bound(b);  // lex upper bound for the next column
  for (int x = 0; x < b; ++x) bound[x] = rest[x];
  long long count = 0;
  auto rec = [&](auto&& self, std::vector<int> remaining,
                 std::vector<int> lex_bound, int slots) -> void {
    if (std::accumulate(remaining.begin(), remaining.end(), 0) == 0) {
      ++count;
      return;
    }
    if (slots == 0) return;
    // Enumerate nonzero columns <= remaining componentwise and <= lex_bound
    // lexicographically.
    std::vector<int> c(b, 0);
    auto gen = [&](auto&& gen_self, int pos, bool tight) -> void {
      if (pos == b) {
        bool zero = std::all_of(c.begin(), c.end(), [](int v) { return !v; });
        if (zero) return;
        std::vector<int> rem2 = remaining;
        for (int x = 0; x < b; ++x) rem2[x] -= c[x];
        self(self, rem2, c, slots - 1);
        return;
      }
      int hi = tight ? std::min(remaining[pos], lex_bound[pos])
                     : remaining[pos];
      for (int v = hi; v >= 0; --v) {
        c[pos] = v;
        gen_self(gen_self, pos + 1, tight && v == lex_bound[pos]);
      }
    };
    gen(gen, 0, true);
  };
  rec(rec, rest, bound, n);
  return count;
}

long long orbit_count_bruteforce(const MultiDegree& J, int n) {
  if (J.total() > 0 && n == 0) return 0;
  std::map<Monomial, long long> groups;
  for (const auto& m : enumerate_monomials(J, n))
    ++groups[canonical_form(m, J.basis_size(), n)];
  return static_cast<long long>(groups.size());
}

long long univariate_invariant_dim(int j, int n) {
  if (j < 0 || n < 0)
    fail(errc::invalid_params, "univariate_invariant_dim needs j, n >= 0");
  // partitions of j into at most n parts
  std::vector<std::vector<long long>> p(j + 1,
                                        std::vector<long long>(n + 1, 0));
  for (int k = 0; k <= n; ++k) p[0][k] = 1;
  for (int d = 1; d <= j; ++d)
    for (int k = 1; k <= n; ++k)
      p[d][k] = p[d][k - 1] + (d >= k ? p[d - k][k] : 0);
  return p[j][n];
}

// --- exact rank kernel ---------------------------------------------------

namespace {

// row -= factor * pivot  (sorted sparse merge)
SparseRow merge_subtract(const SparseRow& row, const Rat& factor,
                         const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() ||
        (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -factor * pivot[j].second);
      ++j;
    } else {
      Rat v = row[i].second - factor * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

struct Echelon {
  std::vector<SparseRow> pivot_rows;      // mutually reduced, pivot value 1
  std::vector<int> pivot_cols;            // pivot column of each row
  std::map<int, int> col_to_pivot;        // column -> index in pivot_rows

  // Fully reduces a candidate against the current pivot rows. Pivot rows are
  // kept mutually reduced, so eliminating one pivot column never changes the
  // candidate's coefficient at another pivot column and never introduces new
  // pivot columns: one collection pass suffices.
  SparseRow reduce(SparseRow row) const {
    std::vector<std::pair<Rat, int>> hits;  // (coefficient, pivot index)
    for (const auto& [c, v] : row) {
      auto it = col_to_pivot.find(c);
      if (it != col_to_pivot.end()) hits.emplace_back(v, it->second);
    }
    for (const auto& [factor, p] : hits)
      row = merge_subtract(row, factor, pivot_rows[p]);
    return row;
  }

  // Inserts a fully reduced nonzero row. Pivot choice: smallest numerator+
  // denominator bit size, ties to the smallest column.
  void insert(SparseRow row, ExecutionMode mode) {
    size_t best = 0;
    size_t best_bits = rat_bit_size(row[0].second);
    for (size_t i = 1; i < row.size(); ++i) {
      size_t bits = rat_bit_size(row[i].second);
      if (bits < best_bits) {
        best = i;
        best_bits = bits;
      }
    }
    int col = row[best].first;
    Rat inv = 1 / row[best].second;
    for (auto& [c, v] : row) v *= inv;
    // Keep earlier pivot rows reduced against the new one.
    int npiv = static_cast<int>(pivot_rows.size());
#ifdef STABRANGE_OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (mode == ExecutionMode::parallel)
#endif
    for (int p = 0; p < npiv; ++p) {
      auto& q = pivot_rows[p];
      auto it = std::lower_bound(
          q.begin(), q.end(), col,
          [](const std::pair<int, Rat>& e, int c) { return e.first < c; });
      if (it == q.end() || it->first != col) continue;
      Rat factor = it->second;
      q = merge_subtract(q, factor, row);
    }
    (void)mode;
    col_to_pivot[col] = static_cast<int>(pivot_rows.size());
    pivot_cols.push_back(col);
    pivot_rows.push_back(std::move(row));
  }
};

}  // namespace

long rank_of_span(std::vector<SparseRow> rows, ExecutionMode mode) {
  Echelon ech;
  if (mode == ExecutionMode::serial) {
    for (auto& row : rows) {
      SparseRow reduced = ech.reduce(std::move(row));
      if (!reduced.empty()) ech.insert(std::move(reduced), mode);
    }
    return static_cast<long>(ech.pivot_rows.size());
  }
  // Parallel: pre-reduce batches against a fixed snapshot of the pivots, then
  // finish serially (a survivor may need another pass against pivots added
  // by earlier survivors in the same batch).
  const size_t batch = 128;
  for (size_t start = 0; start < rows.size(); start += batch) {
    size_t stop = std::min(rows.size(), start + batch);
    std::vector<SparseRow> reduced(stop - start);
#ifdef STABRANGE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < static_cast<long>(stop - start); ++i)
      reduced[i] = ech.reduce(std::move(rows[start + i]));
    for (auto& row : reduced) {
      SparseRow again = ech.reduce(std::move(row));
      if (!again.empty()) ech.insert(std::move(again), mode);
    }
  }
  return static_cast<long>(ech.pivot_rows.size());
}

namespace {

struct DegreeData {
  std::vector<Monomial> monomials;               // sorted
  std::vector<std::vector<Monomial>> orbits;
};

int monomial_index(const std::vector<Monomial>& sorted, const Monomial& m) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), m);
  return static_cast<int>(it - sorted.begin());
}

std::vector<SparseRow> build_rows(const MultiDegree& J,
                                  const std::map<MultiDegree, DegreeData>& data) {
  std::vector<SparseRow> rows;
  const auto& target = data.at(J).monomials;
  // Sub-multidegrees by ascending total degree: sparser generators first.
  std::vector<MultiDegree> subs;
  for (const auto& [K, dd] : data)
    if (!K.is_zero() && J.contains(K) && K != J) subs.push_back(K);
  std::vector<MultiDegree> all = subs;
  all.push_back(J);  // I = J contributes the plain orbit sums
  std::sort(all.begin(), all.end(), [](const MultiDegree& a,
                                       const MultiDegree& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a < b;
  });
  for (const auto& I : all) {
    if (I.is_zero() || !J.contains(I)) continue;
    const auto& cof = data.at(J.minus(I)).monomials;
    const auto& orbs = data.at(I).orbits;
    for (const auto& m : cof) {
      for (const auto& orbit : orbs) {
        SparseRow row;
        row.reserve(orbit.size());
        for (const auto& mem : orbit) {
          Monomial prod = m;
          for (size_t t = 0; t < prod.size(); ++t)
            prod[t] = static_cast<unsigned char>(prod[t] + mem[t]);
          row.emplace_back(monomial_index(target, prod), Rat(1));
        }
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::map<MultiDegree, long long> graded_dims_impl(int n, int b_size,
                                                  int j_bound,
                                                  bool override_caps,
                                                  ExecutionMode mode) {
  if (n < 0 || b_size < 1 || j_bound < 0)
    fail(errc::invalid_params, "need n >= 0, b_size >= 1, j_bound >= 0");
  check_cap(n, kCoinvCapN, override_caps, errc::size_cap_exceeded,
            "coinvariant oracle slots n");
  check_cap(b_size, kCoinvCapB, override_caps, errc::size_cap_exceeded,
            "coinvariant oracle basis size");
  check_cap(j_bound, kCoinvCapJ, override_caps, errc::size_cap_exceeded,
            "coinvariant oracle total degree");

  std::vector<MultiDegree> degrees;
  enumerate_multidegrees(b_size, j_bound, degrees);
  std::map<MultiDegree, DegreeData> data;
  for (const auto& K : degrees) {
    DegreeData dd;
    dd.monomials = enumerate_monomials(K, n);
    dd.orbits = enumerate_orbits(K, n);
    data.emplace(K, std::move(dd));
  }

  std::vector<long long> dims(degrees.size(), 0);
#ifdef STABRANGE_OPENMP
#pragma omp parallel for schedule(dynamic) if (mode == ExecutionMode::parallel)
#endif
  for (long idx = 0; idx < static_cast<long>(degrees.size()); ++idx) {
    const MultiDegree& J = degrees[idx];
    long long total = static_cast<long long>(data.at(J).monomials.size());
    if (J.is_zero()) {
      dims[idx] = 1;
      continue;
    }
    auto rows = build_rows(J, data);
    dims[idx] = total - rank_of_span(std::move(rows), mode);
  }

  std::map<MultiDegree, long long> out;
  for (size_t i = 0; i < degrees.size(); ++i) out[degrees[i]] = dims[i];
  return out;
}

}  // namespace

std::map<MultiDegree, long long> coinv_graded_dims(int n, int b_size,
                                                   int j_bound,
                                                   bool override_caps,
                                                   ExecutionMode mode) {
  return graded_dims_impl(n, b_size, j_bound, override_caps, mode);
}

std::map<MultiDegree, long long> coinv_graded_dims_serial(int n, int b_size,
                                                          int j_bound,
                                                          bool override_caps) {
  return graded_dims_impl(n, b_size, j_bound, override_caps,
                          ExecutionMode::serial);
}

ClassFunction coinv_character_univariate(int j, int n, bool override_caps) {
  if (j < 0) fail(errc::invalid_params, "degree j must be >= 0");
  check_cap(n, kOracleCapN, override_caps, errc::size_cap_exceeded,
            "oracle degree n");
  ClassFunction f(n);
  for (const auto& mu : partitions_of(n)) {
    auto counts = syt_major_counts(mu, override_caps);
    auto it = counts.find(j);
    if (it == counts.end() || it->second == 0) continue;
    ClassFunction chi = specht_class_function(mu);
    chi *= Rat(static_cast<long>(it->second));
    f += chi;
  }
  return f;
}

}  // namespace stabrange
