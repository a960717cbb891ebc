#include "ellipsoidal/jumps.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <utility>

#include "ellipsoidal/combinatorics.hpp"
#include "ellipsoidal/errors.hpp"
#include "ellipsoidal/sft.hpp"

namespace ellipsoidal {

namespace {

SpectrumParams minus_side(const Rational& a) { return SpectrumParams::normalized(a, Side::Minus); }
SpectrumParams plus_side(const Rational& a) { return SpectrumParams::normalized(a, Side::Plus); }

Rational fact(const LatticePoint& v) { return Rational(vec_factorial(v)); }

LatticePoint gamma_of(const SpectrumParams& p, int i) { return gamma(p, static_cast<std::size_t>(i)); }

void check_indices(std::span<const int> indices) {
  require(!indices.empty(), "a jump needs at least one input");
  for (int i : indices) require(i >= 1, "orbit indices start at 1");
}

int output_index(std::span<const int> indices) {
  int n = static_cast<int>(indices.size()) - 1;
  for (int i : indices) n += i;
  return n;
}

/// Calls f with each set partition of {0..k-1}, as block-membership labels.
void for_each_set_partition(std::size_t k, const std::function<void(const std::vector<int>&, int)>& f) {
  std::vector<int> label(k, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int blocks) {
    if (pos == k) {
      f(label, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      label[pos] = b;
      rec(pos + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
}

}  // namespace

Rational jump_cylinder(const Rational& a, int i) {
  require(a.sign() > 0, "a must be positive");
  require(i >= 1, "orbit indices start at 1");
  return fact(gamma_of(plus_side(a), i)) / fact(gamma_of(minus_side(a), i));
}

Rational jump_pants(const Rational& a, int i, int j) {
  require(a.sign() > 0, "a must be positive");
  require(i >= 1 && j >= 1, "orbit indices start at 1");
  const auto pp = plus_side(a);
  const auto pm = minus_side(a);
  const LatticePoint gi = gamma_of(pp, i);
  const LatticePoint gj = gamma_of(pp, j);
  const LatticePoint gn = gamma_of(pp, i + j + 1);
  const LatticePoint mi = gamma_of(pm, i);
  const LatticePoint mj = gamma_of(pm, j);
  return -(fact(gi) * fact(gj) * fact(gn)) / (fact(gi + gj) * fact(mi) * fact(mj)) + fact(gn) / fact(mi + mj);
}

Rational jump_general(const Rational& a, std::span<const int> indices) {
  require(a.sign() > 0, "a must be positive");
  check_indices(indices);
  std::vector<int> sorted(indices.begin(), indices.end());
  std::sort(sorted.begin(), sorted.end());

  static std::mutex mutex;
  static std::map<std::pair<Rational, std::vector<int>>, Rational> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find({a, sorted}); it != memo.end()) return it->second;
  }

  const auto pp = plus_side(a);
  const auto pm = minus_side(a);
  const Rational lead = fact(gamma_of(pp, output_index(sorted)));

  LatticePoint minus_sum(2);
  for (int i : sorted) minus_sum += gamma_of(pm, i);
  Rational value = lead / fact(minus_sum);

  for_each_set_partition(sorted.size(), [&](const std::vector<int>& label, int blocks) {
    if (blocks < 2) return;
    std::vector<std::vector<int>> parts(static_cast<std::size_t>(blocks));
    for (std::size_t s = 0; s < label.size(); ++s) parts[static_cast<std::size_t>(label[s])].push_back(sorted[s]);
    Rational product(1);
    LatticePoint plus_sum(2);
    for (const auto& block : parts) {
      product *= jump_general(a, block);
      if (product.is_zero()) return;
      plus_sum += gamma_of(pp, output_index(block));
    }
    value -= lead * product / fact(plus_sum);
  });

  std::lock_guard lock(mutex);
  memo.emplace(std::pair{a, std::move(sorted)}, value);
  return value;
}

Rational jump_via_xi(const Rational& a, std::span<const int> indices) {
  require(a.sign() > 0, "a must be positive");
  check_indices(indices);
  const auto source = minus_side(a);
  const auto map = sft::xi(source, plus_side(a), indices.size());
  std::vector<linf::Generator> letters;
  for (int i : indices) letters.push_back(sft::orbit_generator(i));
  const auto word = linf::normalize(std::move(letters), map.source());
  return Rational(word.sign) * map.level(word.word).coefficient(sft::orbit_generator(output_index(indices)));
}

std::vector<JumpHit> support_scan(int total_index_bound) {
  require(total_index_bound >= 2, "the scan bound must be at least 2");
  std::vector<Rational> values;
  for (int s = 1; s <= total_index_bound; ++s) {
    for (auto& r : jump_set(s)) values.push_back(std::move(r));
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  // Sorted tuples with k >= 2 and i_1 + ... + i_k + k - 1 <= bound.
  std::vector<std::vector<int>> tuples;
  std::vector<int> current;
  std::function<void(int, int)> grow = [&](int min_index, int sum) {
    if (current.size() >= 2) tuples.push_back(current);
    for (int i = min_index; sum + i + static_cast<int>(current.size()) <= total_index_bound; ++i) {
      current.push_back(i);
      grow(i, sum + i);
      current.pop_back();
    }
  };
  grow(1, 0);

  std::vector<JumpHit> hits;
  for (const auto& a : values) {
    const auto p = SpectrumParams::normalized(a);
    for (const auto& t : tuples) {
      Rational value = jump_general(a, t);
      if (value.is_zero()) continue;
      Rational energy;
      for (int i : t) energy += action(p, static_cast<std::size_t>(i));
      ensure(energy >= action(p, static_cast<std::size_t>(output_index(t))),
             "nonzero jump violates the energy inequality");
      hits.push_back({a, t, std::move(value)});
    }
  }
  return hits;
}

namespace {

linf::Combination exp_o2(int d, const linf::GeneratorSet& set) {
  std::vector<linf::Generator> letters(static_cast<std::size_t>(d), sft::orbit_generator(2));
  const auto word = linf::normalize(std::move(letters), set);
  return {word.word, Rational(BigInt(word.sign), factorial(static_cast<unsigned long>(d)))};
}

}  // namespace

Rational wt_T_via_cobordism(int d, const SpectrumParams& p) {
  require(d >= 1, "degree must be positive");
  require(p.dimension() == 2, "this route is for CP^2 with a four-dimensional ellipsoid");
  const auto start = SpectrumParams::normalized(Rational(1), Side::Plus);
  const auto map = sft::xi(start, p, static_cast<std::size_t>(d));
  const auto image = linf::extend_morphism(map, exp_o2(d, map.source()));
  return linf::project_length_one(image).coefficient(sft::orbit_generator(3 * d - 1));
}

Rational wt_T_via_infinitesimal_cobordisms(int d, const SpectrumParams& p) {
  require(d >= 1, "degree must be positive");
  require(p.dimension() == 2 && p.a(0) == Rational(1), "expects normalized parameters (1, a)");
  const Rational& a = p.a(1);
  require(a > Rational(1), "expects a > 1");

  std::vector<Rational> breakpoints;
  for (int s = 1; s <= 3 * d - 1; ++s) {
    for (auto& r : jump_set(s)) {
      if (r > Rational(1) && (r < a || (r == a && p.side() != Side::Minus))) breakpoints.push_back(std::move(r));
    }
  }
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

  const auto bound = static_cast<std::size_t>(d);
  SpectrumParams current = SpectrumParams::normalized(Rational(1), Side::Plus);
  linf::Combination state = exp_o2(d, sft::ellipsoid_generators(current));
  auto push = [&](const SpectrumParams& next) {
    if (next == current) return;
    state = linf::extend_morphism(sft::xi(current, next, bound), state);
    current = next;
  };
  for (const auto& b : breakpoints) {
    push(minus_side(b));
    push(plus_side(b));
  }
  push(p);
  return linf::project_length_one(state).coefficient(sft::orbit_generator(3 * d - 1));
}

}  // namespace ellipsoidal
