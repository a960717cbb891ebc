#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellipsoidal/errors.hpp"
#include "ellipsoidal/rounding.hpp"
#include "ellipsoidal/sft.hpp"

using namespace ellipsoidal;
using namespace ellipsoidal::rounding;
using linf::Combination;
using linf::Word;

namespace {

Rational q(const char* text) { return Rational::parse(text); }

Word word(std::initializer_list<linf::Generator> letters) {
  const auto w = linf::normalize(letters, v_generators());
  REQUIRE(w.sign == 1);
  return w.word;
}

Combination q_gen(int k, const Rational& c) { return {Word(sft::descendant_generator(k)), c}; }

}  // namespace

TEST_CASE("generators and degrees") {
  const auto set = v_generators();
  CHECK(set.degree(alpha(1, 1)) == -5);
  CHECK(set.degree(beta(1, 0)) == -4);
  CHECK(set.degree(beta(2, 3)) == -12);
  CHECK_THROWS_AS(set.degree(alpha(0, 2)), UnknownGenerator);
  CHECK_THROWS_AS(set.degree(beta(0, 0)), UnknownGenerator);
  CHECK(v_window(1).size() == 2);
  CHECK(v_window(2).size() == 6);
}

TEST_CASE("bracket examples") {
  Combination d;
  d.add(Word(beta(0, 1)), Rational(1));
  d.add(Word(beta(1, 0)), Rational(-1));
  CHECK(v_ell(Word(alpha(1, 1))) == d);

  CHECK(v_ell(word({alpha(1, 1), beta(1, 0)})) == Combination(Word(beta(2, 1)), Rational(-1)));
  CHECK(v_ell(word({alpha(1, 2), alpha(2, 1)})) == Combination(Word(alpha(3, 3)), Rational(-3)));
  CHECK(v_ell(word({beta(1, 0), beta(0, 1)})).is_zero());
  CHECK(v_ell(word({alpha(1, 1), beta(1, 0), beta(0, 1)})).is_zero());
  // An odd generator squared is not a word.
  CHECK(linf::normalize({alpha(2, 1), alpha(2, 1)}, v_generators()).sign == 0);
}

TEST_CASE("bracket outputs have degree one less than the input") {
  const auto set = v_generators();
  const auto window = v_window(3);
  for (const auto& w : linf::words_up_to(window, 2, set)) {
    int degree = 0;
    for (const auto& g : w) degree += set.degree(g);
    for (const auto& [out, c] : v_ell(w)) {
      int got = 0;
      for (const auto& g : out) got += set.degree(g);
      CHECK(got == degree + 1);
    }
  }
}

TEST_CASE("the rounding augmentation") {
  const auto e = tilde_epsilon();
  CHECK(e.level(Word(beta(1, 0))) == q_gen(1, Rational(1)));
  CHECK(e.level(Word(beta(1, 1))) == q_gen(2, Rational(1)));
  CHECK(e.level(Word(beta(2, 0))) == q_gen(2, q("1/2")));
  CHECK(e.level(word({beta(1, 0), beta(1, 0)})) == q_gen(3, q("1/2")));
  CHECK(e.level(word({beta(1, 1), beta(2, 0)})) == q_gen(5, q("1/6")));
  CHECK(e.level(Word(alpha(1, 1))).is_zero());
  CHECK(e.level(word({alpha(1, 1), beta(1, 0)})).is_zero());
}

TEST_CASE("the rounding augmentation is a homomorphism") {
  const auto report = verify_aug(6, 4);
  CHECK(report.ok);
  CHECK(report.words_checked > 10000);
  CHECK(report.structure_words_checked > 1000);

  // Flip the sign of ell^2 on mixed pairs: the map stops being a chain map.
  const linf::LinfStructure broken(v_generators(), [](const Word& w) {
    Combination c = v_ell(w);
    if (w.size() == 2 && w[0].family != w[1].family) c *= Rational(-1);
    return c;
  });
  const auto bad = verify_aug(4, 3, broken);
  CHECK_FALSE(bad.ok);
  CHECK(bad.witness.has_value());
}

TEST_CASE("rounding maps") {
  const auto low = psi_map(SpectrumParams::normalized(q("3/2")));
  CHECK(low.level(Word(sft::orbit_generator(2))) == Combination(Word(beta(1, 1)), Rational(1)));
  CHECK(low.level(Word(sft::orbit_generator(1))) == Combination(Word(beta(1, 0)), Rational(1)));
  const auto high = psi_map(SpectrumParams::normalized(Rational(3)));
  CHECK(high.level(Word(sft::orbit_generator(2))) == Combination(Word(beta(2, 0)), Rational(1)));
  CHECK(high.level(linf::normalize({sft::orbit_generator(1), sft::orbit_generator(2)}, high.source()).word).is_zero());
  CHECK_THROWS_AS(psi_map(SpectrumParams({Rational(1), Rational(2), Rational(3)})), InvalidInput);
}

TEST_CASE("rounding maps are strict homomorphisms") {
  // C_a is abelian, so every bracket of a Psi image must vanish.
  const auto psi = psi_map(SpectrumParams::normalized(q("5/2")));
  const auto v = v_algebra();
  for (int i = 1; i <= 6; ++i) {
    for (int j = i; j <= 6; ++j) {
      const auto w = linf::normalize({sft::orbit_generator(i), sft::orbit_generator(j)}, psi.source()).word;
      const Combination image = linf::extend_morphism(psi, w);
      CHECK(linf::extend_coderivation(v, image.is_zero() ? Word() : image.begin()->first).is_zero());
    }
  }
}

TEST_CASE("the augmentation factors through the rounding algebra") {
  for (const char* a : {"3/2", "3", "7/3", "19/4"}) {
    CHECK(check_psi_factorization(SpectrumParams::normalized(q(a)), 3, 8).ok);
  }
  for (Side side : {Side::Minus, Side::Plus}) {
    CHECK(check_psi_factorization(SpectrumParams::normalized(q("13/2"), side), 3, 8).ok);
  }
}
