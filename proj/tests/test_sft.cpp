#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "ellipsoidal/combinatorics.hpp"
#include "ellipsoidal/errors.hpp"
#include "ellipsoidal/oracle.hpp"
#include "ellipsoidal/sft.hpp"
#include "ellipsoidal/superpotential.hpp"

using namespace ellipsoidal;
using namespace ellipsoidal::sft;
using linf::Combination;
using linf::Word;

namespace {

Rational q(const char* text) { return Rational::parse(text); }

Word orbits(std::initializer_list<int> indices) {
  std::vector<linf::Generator> letters;
  for (int i : indices) letters.push_back(orbit_generator(i));
  std::sort(letters.begin(), letters.end());
  return Word::from_sorted(letters);
}

// eps^k from the brute-force lattice path, independent of the greedy walk.
Rational eps_oracle(const SpectrumParams& p, std::initializer_list<int> indices) {
  LatticePoint sum(p.dimension());
  for (int i : indices) sum += oracle::gamma_bruteforce(p, i);
  return {BigInt(1), vec_factorial(sum)};
}

}  // namespace

TEST_CASE("epsilon structure coefficients") {
  const auto low = SpectrumParams::normalized(q("3/2"));
  const auto high = SpectrumParams::normalized(Rational(3));
  const auto e_low = epsilon(low);
  CHECK(e_low.level(orbits({2})) == Combination(Word(descendant_generator(2)), eps_oracle(low, {2})));
  CHECK(e_low.level(orbits({2})).coefficient(descendant_generator(2)) == Rational(1));
  CHECK(epsilon(high).level(orbits({2})).coefficient(descendant_generator(2)) == q("1/2"));
  CHECK(e_low.level(orbits({1, 1})) == Combination(Word(descendant_generator(3)), q("1/2")));
  CHECK(e_low.level(orbits({2, 5, 5})).coefficient(descendant_generator(14)) == eps_oracle(low, {2, 5, 5}));
}

TEST_CASE("algebras are graded as expected") {
  const auto ca = ellipsoid_generators(SpectrumParams::normalized(q("3/2")));
  CHECK(ca.degree(orbit_generator(3)) == -8);
  CHECK(ca.action(orbit_generator(5)) == Rational(3));
  CHECK(descendant_generators().degree(descendant_generator(1)) == -4);
  CHECK_FALSE(descendant_generators().has_actions());
  CHECK_THROWS_AS(ca.degree(descendant_generator(1)), UnknownGenerator);
}

TEST_CASE("eta inverts epsilon") {
  const auto low = SpectrumParams::normalized(q("3/2"));
  const auto high = SpectrumParams::normalized(Rational(3));
  CHECK(eta(low, 3).level(Word(descendant_generator(2))) == Combination(orbits({2}), Rational(1)));
  CHECK(eta(high, 3).level(Word(descendant_generator(2))) == Combination(orbits({2}), Rational(2)));

  for (const auto& p : {low, high, SpectrumParams::normalized(Rational(2), Side::Minus)}) {
    const auto e = epsilon(p);
    const auto h = eta(p, 3);
    CHECK(linf::compare_morphisms(linf::compose(e, h, 3), linf::LinfMorphism::identity(descendant_generators()), 3,
                                  descendant_window(6))
              .ok);
    CHECK(linf::compare_morphisms(linf::compose(h, e, 3), linf::LinfMorphism::identity(e.source()), 3,
                                  orbit_window(6))
              .ok);
  }
}

TEST_CASE("cobordism maps") {
  const auto a = SpectrumParams::normalized(q("5/2"));
  CHECK(linf::compare_morphisms(xi(a, a, 3), linf::LinfMorphism::identity(ellipsoid_generators(a)), 3, orbit_window(6))
            .ok);

  const auto m = SpectrumParams::normalized(q("5/4"), Side::Minus);
  const auto p = SpectrumParams::normalized(q("5/4"), Side::Plus);
  CHECK(xi(m, p, 2).level(orbits({2, 8})).coefficient(orbit_generator(11)) == q("-1/4"));

  // Composition law and descendant compatibility on chained triples.
  const std::vector<std::array<SpectrumParams, 3>> triples{
      {SpectrumParams::normalized(q("3/2")), SpectrumParams::normalized(q("5/2")), SpectrumParams::normalized(Rational(4))},
      {m, p, SpectrumParams::normalized(Rational(2), Side::Plus)},
      {SpectrumParams::normalized(q("13/2"), Side::Minus), SpectrumParams::normalized(q("13/2"), Side::Plus),
       SpectrumParams::normalized(Rational(7))},
  };
  for (const auto& [a2, a1, a0] : triples) {
    const auto chained = linf::compose(xi(a1, a0, 3), xi(a2, a1, 3), 3);
    CHECK(linf::compare_morphisms(chained, xi(a2, a0, 3), 3, orbit_window(6)).ok);
    CHECK(linf::compare_morphisms(linf::compose(epsilon(a0), xi(a2, a0, 3), 3), epsilon(a2), 3, orbit_window(6)).ok);
  }
}

TEST_CASE("cobordism maps respect the index bookkeeping") {
  const auto from = SpectrumParams::normalized(q("3/2"));
  const auto to = SpectrumParams::normalized(q("11/2"));
  const auto map = xi(from, to, 3);
  for (const auto& w : linf::words_up_to(orbit_window(5), 3, map.source())) {
    int index = static_cast<int>(w.size()) - 1;
    for (const auto& g : w) index += g.i;
    for (const auto& [out, c] : map.level(w)) CHECK(out[0].i == index);
  }
}

TEST_CASE("Maurer-Cartan exponentials") {
  const CP2Target cp2;
  const auto p = SpectrumParams::normalized(q("3/2"));
  const MCFamily family = [&](const HomologyClass& A) {
    return MCElement{A, wt_T(cp2, A, p), static_cast<std::size_t>(cp2.c1(A) - 1)};
  };
  const Decomposer decompose = [&](const HomologyClass& A) { return cp2.decompositions(A); };

  const auto set = ellipsoid_generators(p);
  const Combination e1 = exp_mc(family, {1}, decompose, p);
  CHECK(e1 == Combination(orbits({2}), wt_T(cp2, {1}, p)));

  const Combination e2 = exp_mc(family, {2}, decompose, p);
  Combination expected(orbits({5}), wt_T(cp2, {2}, p));
  expected.add(orbits({2, 2}), wt_T(cp2, {1}, p) * wt_T(cp2, {1}, p) / Rational(2));
  CHECK(e2 == expected);

  const Combination e3 = exp_mc(family, {3}, decompose, p);
  CHECK(e3.coefficient(orbits({8})) == wt_T(cp2, {3}, p));
  CHECK(e3.coefficient(orbits({2, 2, 2})) == q("1/6"));
  CHECK(e3.coefficient(orbits({2, 5})) == wt_T(cp2, {2}, p));
}

TEST_CASE("augmentation of the exponential recovers the closed descendant") {
  const CP2Target cp2;
  for (const char* a : {"3/2", "5/2", "9/2", "13/2", "12"}) {
    const auto p = SpectrumParams::normalized(q(a));
    const MCFamily family = [&](const HomologyClass& A) {
      return MCElement{A, wt_T(cp2, A, p), static_cast<std::size_t>(cp2.c1(A) - 1)};
    };
    const Decomposer decompose = [&](const HomologyClass& A) { return cp2.decompositions(A); };
    for (int d = 1; d <= 4; ++d) {
      const Combination image = linf::project_length_one(
          linf::extend_morphism(epsilon(p), exp_mc(family, CP2Target::degree(d), decompose, p)));
      CHECK(image == Combination(Word(descendant_generator(3 * d - 1)), cp2.closed_descendant({d})));
    }
  }
}
