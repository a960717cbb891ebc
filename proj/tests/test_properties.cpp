#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellipsoidal/combinatorics.hpp"
#include "ellipsoidal/oracle.hpp"
#include "ellipsoidal/orbits.hpp"

using namespace ellipsoidal;

namespace {

Rational random_positive(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(1, 60);
  std::uniform_int_distribution<int> den(1, 12);
  return {BigInt(num(rng)), BigInt(den(rng))};
}

SpectrumParams random_params(std::mt19937& rng, std::size_t n) {
  std::vector<Rational> a;
  for (std::size_t i = 0; i < n; ++i) a.push_back(random_positive(rng));
  if (n == 2) {
    std::uniform_int_distribution<int> s(0, 2);
    return {a, static_cast<Side>(s(rng))};
  }
  return {a};
}

// max_i a_i v_i with the same perturbation as the path.
DualRational perturbed_max(const SpectrumParams& p, const LatticePoint& v) {
  DualRational best{Rational(0), Rational(0)};
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (v[i] == 0) continue;
    best = std::max(best, perturbed_value(p, i + 1, v[i]));
  }
  return best;
}

}  // namespace

TEST_CASE("each step adds one unit vector") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_params(rng, 2 + static_cast<std::size_t>(trial % 3));
    for (std::size_t k = 1; k <= 30; ++k) {
      const LatticePoint step = gamma(p, k) - gamma(p, k - 1);
      CHECK(step.total() == 1);
      for (std::size_t i = 0; i < p.dimension(); ++i) CHECK(step[i] >= 0);
    }
  }
}

TEST_CASE("greedy walk agrees with the brute-force minimiser") {
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_int_distribution<int> kk(0, 25);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_params(rng, static_cast<std::size_t>(dim(rng)));
    const int k = kk(rng);
    CHECK(gamma(p, static_cast<std::size_t>(k)) == oracle::gamma_bruteforce(p, k));
  }
}

TEST_CASE("scaling invariance") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_params(rng, 2 + static_cast<std::size_t>(trial % 2));
    const Rational c = random_positive(rng);
    std::vector<Rational> scaled;
    for (const auto& x : p.a()) scaled.push_back(x * c);
    const SpectrumParams s(scaled, p.side());
    for (std::size_t k = 1; k <= 20; ++k) {
      CHECK(gamma(s, k) == gamma(p, k));
      CHECK(action(s, k) == c * action(p, k));
    }
  }
}

TEST_CASE("the path records the axis counts of the first k orbits") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = random_params(rng, 1 + static_cast<std::size_t>(trial % 4));
    const auto spectrum = oracle::merge_spectrum(p, 40);
    LatticePoint counts(p.dimension());
    for (std::size_t k = 1; k <= 40; ++k) {
      counts[spectrum[k - 1].orbit.axis - 1] += 1;
      CHECK(gamma(p, k) == counts);
      CHECK(orbit(p, k) == spectrum[k - 1].orbit);
      CHECK(action(p, k) == spectrum[k - 1].action.main);
    }
  }
}

TEST_CASE("the path point minimises the perturbed maximum") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = random_params(rng, 2 + static_cast<std::size_t>(trial % 2));
    for (int k = 1; k <= 12; ++k) {
      const auto best = perturbed_max(p, gamma(p, static_cast<std::size_t>(k)));
      for (const auto& v : compositions(k, p.dimension())) {
        if (v == gamma(p, static_cast<std::size_t>(k))) continue;
        CHECK(best < perturbed_max(p, v));
      }
    }
  }
}

TEST_CASE("the two sides differ by one step exactly on the jump set") {
  for (int k = 1; k <= 20; ++k) {
    for (const auto& a : jump_set(k)) {
      const auto minus = gamma(SpectrumParams::normalized(a, Side::Minus), static_cast<std::size_t>(k));
      const auto plus = gamma(SpectrumParams::normalized(a, Side::Plus), static_cast<std::size_t>(k));
      CHECK(minus == plus + LatticePoint{-1, 1});
    }
    for (const auto& a : jump_set(k + 1)) {
      // Off J_k the two sides agree.
      const auto on = jump_set(k);
      if (std::binary_search(on.begin(), on.end(), a)) continue;
      CHECK(gamma(SpectrumParams::normalized(a, Side::Minus), static_cast<std::size_t>(k)) ==
            gamma(SpectrumParams::normalized(a, Side::Plus), static_cast<std::size_t>(k)));
    }
  }
}
