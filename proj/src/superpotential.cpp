#include "ellipsoidal/superpotential.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "ellipsoidal/combinatorics.hpp"
#include "ellipsoidal/errors.hpp"

namespace ellipsoidal {

namespace {

std::int64_t cp2_degree(const HomologyClass& A) {
  require(A.size() == 1, "a CP2 class is a single degree");
  return A[0];
}

}  // namespace

std::int64_t CP2Target::c1(const HomologyClass& A) const { return 3 * cp2_degree(A); }

Rational CP2Target::area(const HomologyClass& A) const { return Rational(cp2_degree(A)); }

Rational CP2Target::closed_descendant(const HomologyClass& A) const {
  const std::int64_t d = cp2_degree(A);
  require(d >= 1, "degree must be positive");
  const std::int64_t degrees[] = {d, d, d};
  return closed_descendant_toric(degrees);
}

std::vector<std::vector<HomologyClass>> CP2Target::decompositions(const HomologyClass& A) const {
  const std::int64_t d = cp2_degree(A);
  require(d >= 1 && d <= 200, "degree out of range");
  std::vector<std::vector<HomologyClass>> out;
  for (const auto& part : partitions(static_cast<int>(d))) {
    std::vector<HomologyClass> classes;
    for (auto it = part.parts.rbegin(); it != part.parts.rend(); ++it) classes.push_back(degree(*it));
    out.push_back(std::move(classes));
  }
  return out;
}

Rational closed_descendant_toric(std::span<const std::int64_t> divisor_degrees) {
  require(!divisor_degrees.empty(), "no toric divisors given");
  BigInt denom = 1;
  for (auto d : divisor_degrees) {
    require(d >= 1, "closed descendant formula needs every A.D_i > 0");
    denom *= factorial(static_cast<unsigned long>(d));
  }
  return {BigInt(1), denom};
}

namespace {

using MemoKey = std::tuple<std::string, HomologyClass, SpectrumParams>;

std::mutex memo_mutex;
std::map<MemoKey, Rational>& memo() {
  static std::map<MemoKey, Rational> table;
  return table;
}

}  // namespace

Rational wt_T(const TargetSpace& target, const HomologyClass& A, const SpectrumParams& p) {
  const std::int64_t c = target.c1(A);
  if (c < 2) return {};
  MemoKey key{target.name(), A, p};
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = memo().find(key); it != memo().end()) return it->second;
  }

  Rational correction;
  for (const auto& parts : target.decompositions(A)) {
    if (parts.size() < 2) continue;
    Rational product(1);
    LatticePoint gsum(p.dimension());
    for (const auto& part : parts) {
      const std::int64_t cp = target.c1(part);
      ensure(cp >= 2, "decomposition produced a class with c1 < 2");
      product *= wt_T(target, part, p);
      if (product.is_zero()) break;
      gsum += gamma(p, static_cast<std::size_t>(cp - 1));
    }
    if (product.is_zero()) continue;
    const BigInt aut = multiset_automorphisms(std::span<const HomologyClass>(parts));
    correction += product / Rational(aut * vec_factorial(gsum));
  }
  const Rational lead(vec_factorial(gamma(p, static_cast<std::size_t>(c - 1))));
  Rational value = lead * (target.closed_descendant(A) - correction);

  std::lock_guard lock(memo_mutex);
  memo().emplace(std::move(key), value);
  return value;
}

Rational T(const TargetSpace& target, const HomologyClass& A, const SpectrumParams& p) {
  const std::int64_t c = target.c1(A);
  if (c < 2) return {};
  const OrbitId o = orbit(p, static_cast<std::size_t>(c - 1));
  return wt_T(target, A, p) / Rational(o.multiplicity);
}

Rational wt_T_infinity(int d) {
  require(d >= 1, "degree must be positive");
  static std::mutex mutex;
  static std::vector<Rational> known{Rational(0)};
  std::lock_guard lock(mutex);
  for (int n = static_cast<int>(known.size()); n <= d; ++n) {
    Rational correction;
    for (const auto& part : partitions(n)) {
      const auto k = part.parts.size();
      if (k < 2) continue;
      Rational product(1);
      for (int s : part.parts) product *= known[static_cast<std::size_t>(s)];
      correction += product / Rational(part.automorphisms * factorial(static_cast<unsigned long>(3 * n) - k));
    }
    const BigInt dfact = factorial(static_cast<unsigned long>(n));
    known.push_back(Rational(factorial(static_cast<unsigned long>(3 * n - 1))) *
                    (Rational(BigInt(1), dfact * dfact * dfact) - correction));
  }
  return known[static_cast<std::size_t>(d)];
}

bool PiecewiseTable::nondecreasing() const {
  for (std::size_t i = 1; i < intervals.size(); ++i) {
    if (intervals[i].value < intervals[i - 1].value) return false;
  }
  return true;
}

PiecewiseTable piecewise_table(const CP2Target& target, int d, const Rational& lo,
                               const std::optional<Rational>& hi, TableQuantity quantity,
                               bool refine_orbit_id) {
  require(d >= 1, "degree must be positive");
  require(lo >= Rational(1), "the sweep starts at a >= 1");
  require(!hi || *hi > lo, "empty range");

  const HomologyClass A = CP2Target::degree(d);
  auto value_at = [&](const Rational& a, Side side) {
    const auto p = SpectrumParams::normalized(a, side);
    return quantity == TableQuantity::WtT ? wt_T(target, A, p) : T(target, A, p);
  };

  const std::vector<Rational> allowed = candidate_discontinuities(d, lo);
  std::vector<Rational> points = allowed;
  if (refine_orbit_id && 3 * d - 2 >= 1) {
    for (auto& r : jump_set(3 * d - 2)) {
      if (r > lo) points.push_back(std::move(r));
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
  }
  // Every candidate lies at or below 3d - 1; past that point the value is final.
  const bool unbounded =
      !hi || std::none_of(points.begin(), points.end(), [&](const Rational& r) { return r >= *hi; });
  if (hi) std::erase_if(points, [&](const Rational& r) { return r >= *hi; });

  PiecewiseTable table;
  Rational left = lo;
  for (std::size_t i = 0; i <= points.size(); ++i) {
    const bool last = i == points.size();
    std::optional<Rational> right;
    if (!last) {
      right = points[i];
    } else if (!unbounded) {
      right = hi;
    }
    const Rational sample = right ? (left + *right) / Rational(2) : left + Rational(1);
    const Rational value = value_at(sample, Side::Canonical);

    if (!table.intervals.empty()) {
      const Rational& at = left;
      const Rational minus_value = value_at(at, Side::Minus);
      const Rational plus_value = value_at(at, Side::Plus);
      ensure(minus_value == table.intervals.back().value, "value at a- disagrees with the interval to its left");
      ensure(plus_value == value, "value at a+ disagrees with the interval to its right");
      if (minus_value == plus_value) {
        table.intervals.back().hi = right;
        left = right.value_or(left);
        continue;
      }
      ensure(quantity == TableQuantity::T || std::binary_search(allowed.begin(), allowed.end(), at),
             "jump found outside the candidate discontinuities");
      table.breakpoints.push_back({at, minus_value, plus_value});
    }
    table.intervals.push_back({left, right, value});
    if (right) left = *right;
  }
  return table;
}

GenfunReport genfun_check(int dmax) {
  require(dmax >= 1, "dmax must be positive");
  const auto n = static_cast<std::size_t>(dmax);
  std::vector<Rational> f(n + 1);
  f[0] = Rational(1);
  for (int d = 1; d <= dmax; ++d) f[static_cast<std::size_t>(d)] = wt_T_infinity(d);

  auto multiply = [n](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    std::vector<Rational> z(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; i + j <= n; ++j) z[i + j] += x[i] * y[j];
    }
    return z;
  };

  GenfunReport report;
  std::vector<Rational> power(n + 1);
  power[0] = Rational(1);
  int exponent = 0;
  for (int d = 1; d <= dmax; ++d) {
    while (exponent < 3 * d) {
      power = multiply(power, f);
      ++exponent;
    }
    const BigInt df = factorial(static_cast<unsigned long>(d));
    GenfunRow row{d, power[static_cast<std::size_t>(d)],
                  Rational(factorial(static_cast<unsigned long>(3 * d)), df * df * df), false};
    row.ok = row.coefficient == row.expected;
    report.ok = report.ok && row.ok;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::optional<Rational> embedding_bound(const TargetSpace& target, const HomologyClass& A,
                                        const SpectrumParams& p) {
  const std::int64_t c = target.c1(A);
  require(c >= 2, "the class needs c1 >= 2");
  if (wt_T(target, A, p).is_zero()) return std::nullopt;
  return target.area(A) / action(p, static_cast<std::size_t>(c - 1));
}

}  // namespace ellipsoidal
